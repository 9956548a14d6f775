#include "cliqster/baselines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "cliqster/decompose.hpp"

namespace cliqster {

std::vector<double> svd_spectrum(const Graph& g, int dense_cap) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("svd_spectrum requires n >= 1");
  if (n > dense_cap)
    throw std::runtime_error("graph exceeds the dense decomposition cap of " +
                             std::to_string(dense_cap) + " vertices");

  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    adj(u, v) = 1.0;
    adj(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("adjacency eigendecomposition failed");

  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()(i));
  std::sort(vals.begin(), vals.end(), std::greater<>());
  const double cutoff = 1e-9 * std::max(1.0, vals.empty() ? 0.0 : vals.front());
  for (double& v : vals)
    if (v < cutoff) v = 0.0;
  return vals;
}

std::vector<double> svd_feature_vector(const Graph& g, int top_k, int dense_cap) {
  if (top_k < 1) throw std::invalid_argument("top_k must be positive");
  auto spectrum = svd_spectrum(g, dense_cap);
  spectrum.resize(static_cast<std::size_t>(top_k), 0.0);
  return spectrum;
}

namespace {

class CliqsterDecomposer final : public Decomposer {
 public:
  std::string_view name() const override { return "cliqster"; }
  std::vector<double> features(const Graph& g, int top_k) const override {
    const auto d = decompose(g);
    return feature_vector(d.basis, d.coeffs, top_k);
  }
};

class SvdDecomposer final : public Decomposer {
 public:
  std::string_view name() const override { return "svd"; }
  std::vector<double> features(const Graph& g, int top_k) const override {
    return svd_feature_vector(g, top_k);
  }
};

}  // namespace

std::unique_ptr<Decomposer> make_decomposer(std::string_view name) {
  if (name == "cliqster") return std::make_unique<CliqsterDecomposer>();
  if (name == "svd") return std::make_unique<SvdDecomposer>();
  throw std::invalid_argument("unknown decomposition method '" +
                              std::string(name) + "'");
}

}  // namespace cliqster
