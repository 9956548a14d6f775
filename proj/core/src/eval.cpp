#include "cliqster/eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cliqster/rng.hpp"

namespace cliqster {

namespace {

// Runs fn(0..count-1) on a small worker pool. Work items write to
// preallocated per-index slots, so results do not depend on the job count.
void parallel_for(int jobs, int count, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

void l2_normalize(std::vector<double>& row) {
  double norm2 = 0.0;
  for (double v : row) norm2 += v * v;
  if (norm2 <= 0.0) return;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : row) v *= inv;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double mean_of(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

}  // namespace

SampleProtocolResult sample_protocol(const Graph& g, int sample_size,
                                     int repeats, const Decomposer& method,
                                     int top_k, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  SampleProtocolResult out;
  out.features.method = std::string(method.name());
  out.features.top_k = top_k;
  out.features.category_names = {"sample"};
  out.features.rows.reserve(static_cast<std::size_t>(repeats));
  for (int r = 0; r < repeats; ++r) {
    Graph s = sample_induced(g, sample_size, derive_seed(seed, {1, static_cast<std::uint64_t>(r)}));
    out.features.rows.push_back({0, method.features(s, top_k)});
  }

  const auto n = static_cast<double>(repeats);
  out.curves.mean.assign(static_cast<std::size_t>(top_k), 0.0);
  out.curves.lo.assign(static_cast<std::size_t>(top_k), 0.0);
  out.curves.hi.assign(static_cast<std::size_t>(top_k), 0.0);
  for (int p = 0; p < top_k; ++p) {
    double mean = 0.0;
    for (const auto& row : out.features.rows)
      mean += row.features[static_cast<std::size_t>(p)];
    mean /= n;
    double var = 0.0;
    for (const auto& row : out.features.rows) {
      const double d = row.features[static_cast<std::size_t>(p)] - mean;
      var += d * d;
    }
    var /= n;
    const double sigma = std::sqrt(var);
    out.curves.mean[static_cast<std::size_t>(p)] = mean;
    out.curves.lo[static_cast<std::size_t>(p)] = mean - 2.0 * sigma;
    out.curves.hi[static_cast<std::size_t>(p)] = mean + 2.0 * sigma;
  }
  return out;
}

std::vector<int> kmeans_cluster(const std::vector<std::vector<double>>& points,
                                int k, int restarts, std::uint64_t seed) {
  const auto n = points.size();
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (static_cast<std::size_t>(k) > n)
    throw std::invalid_argument("k exceeds the number of points");
  if (restarts < 1) throw std::invalid_argument("restarts must be positive");
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) throw std::invalid_argument("ragged feature rows");

  {
    auto distinct = points;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < static_cast<std::size_t>(k))
      throw std::runtime_error("fewer distinct points than clusters");
  }

  std::vector<int> best_assign;
  double best_wcss = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < restarts; ++restart) {
    Rng rng(derive_seed(seed, {7, static_cast<std::uint64_t>(restart)}));

    // k-means++ seeding.
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<std::size_t>(k));
    centers.push_back(points[rng.below(n)]);
    std::vector<double> d2(n);
    while (centers.size() < static_cast<std::size_t>(k)) {
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : centers)
          best = std::min(best, squared_distance(points[i], c));
        d2[i] = best;
        total += best;
      }
      if (total <= 0.0) {
        centers.push_back(points[rng.below(n)]);
        continue;
      }
      double x = rng.real() * total;
      std::size_t pick = n - 1;
      for (std::size_t i = 0; i < n; ++i) {
        x -= d2[i];
        if (x <= 0.0) {
          pick = i;
          break;
        }
      }
      centers.push_back(points[pick]);
    }

    std::vector<int> assign(n, -1);
    for (int iter = 0; iter < 200; ++iter) {
      bool changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        double bd = squared_distance(points[i], centers[0]);
        for (int c = 1; c < k; ++c) {
          const double d = squared_distance(points[i], centers[static_cast<std::size_t>(c)]);
          if (d < bd) {
            bd = d;
            best = c;
          }
        }
        if (assign[i] != best) {
          assign[i] = best;
          changed = true;
        }
      }
      if (!changed && iter > 0) break;

      std::vector<std::vector<double>> sums(
          static_cast<std::size_t>(k), std::vector<double>(dim, 0.0));
      std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
      for (std::size_t i = 0; i < n; ++i) {
        ++counts[static_cast<std::size_t>(assign[i])];
        for (std::size_t d = 0; d < dim; ++d)
          sums[static_cast<std::size_t>(assign[i])][d] += points[i][d];
      }
      for (int c = 0; c < k; ++c) {
        if (counts[static_cast<std::size_t>(c)] == 0) {
          // Reseat an empty cluster on the point farthest from its center.
          std::size_t far = 0;
          double fd = -1.0;
          for (std::size_t i = 0; i < n; ++i) {
            const double d = squared_distance(
                points[i], centers[static_cast<std::size_t>(assign[i])]);
            if (d > fd) {
              fd = d;
              far = i;
            }
          }
          centers[static_cast<std::size_t>(c)] = points[far];
        } else {
          for (std::size_t d = 0; d < dim; ++d)
            centers[static_cast<std::size_t>(c)][d] =
                sums[static_cast<std::size_t>(c)][d] /
                static_cast<double>(counts[static_cast<std::size_t>(c)]);
        }
      }
    }

    double wcss = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      wcss += squared_distance(points[i],
                               centers[static_cast<std::size_t>(assign[i])]);
    if (wcss < best_wcss) {
      best_wcss = wcss;
      best_assign = assign;
    }
  }
  return best_assign;
}

double clustering_error(std::span<const int> assignment,
                        std::span<const int> labels) {
  if (assignment.size() != labels.size())
    throw std::invalid_argument("assignment and label lengths differ");
  if (assignment.empty()) throw std::invalid_argument("empty assignment");
  int k = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] < 0 || labels[i] < 0)
      throw std::invalid_argument("negative cluster or label id");
    k = std::max({k, assignment[i] + 1, labels[i] + 1});
  }
  if (k > 8)
    throw std::invalid_argument("bijective matching supports at most 8 classes");

  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (perm[static_cast<std::size_t>(assignment[i])] == labels[i]) ++hits;
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 1.0 - static_cast<double>(best) / static_cast<double>(assignment.size());
}

double knn_classify(const FeatureMatrix& train, const FeatureMatrix& test,
                    int k) {
  if (train.rows.empty()) throw std::invalid_argument("empty training set");
  if (k < 1 || static_cast<std::size_t>(k) > train.rows.size())
    throw std::invalid_argument("k must be in [1, training size]");
  int label_count = 0;
  for (const auto& r : train.rows) label_count = std::max(label_count, r.category + 1);
  for (const auto& r : test.rows) label_count = std::max(label_count, r.category + 1);
  if (label_count == 2 && k % 2 == 0)
    throw std::invalid_argument("k must be odd for binary classification");

  std::size_t correct = 0;
  std::vector<std::pair<double, std::size_t>> order(train.rows.size());
  for (const auto& t : test.rows) {
    for (std::size_t i = 0; i < train.rows.size(); ++i)
      order[i] = {squared_distance(t.features, train.rows[i].features), i};
    std::sort(order.begin(), order.end());

    std::vector<int> votes(static_cast<std::size_t>(label_count), 0);
    for (int i = 0; i < k; ++i)
      ++votes[static_cast<std::size_t>(train.rows[order[static_cast<std::size_t>(i)].second].category)];
    const int top = *std::max_element(votes.begin(), votes.end());
    // Vote ties resolve to the tied label with the nearest neighbor.
    int winner = -1;
    for (int i = 0; i < k && winner < 0; ++i) {
      const int c = train.rows[order[static_cast<std::size_t>(i)].second].category;
      if (votes[static_cast<std::size_t>(c)] == top) winner = c;
    }
    if (winner == t.category) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(test.rows.size());
}

namespace {

struct RepeatResult {
  std::vector<double> error_per_method;
  std::vector<double> ms_per_method;
};

}  // namespace

ExperimentReport run_distinguishability(std::span<const CategorySource> categories,
                                        std::span<const Decomposer* const> methods,
                                        const DistinguishabilityParams& params) {
  if (categories.size() < 2)
    throw std::invalid_argument("need at least two categories");
  if (methods.empty()) throw std::invalid_argument("need at least one method");
  if (params.samples_per_category < 1 || params.repeats < 1)
    throw std::invalid_argument("samples and repeats must be positive");

  const auto cat_count = categories.size();
  const auto method_count = methods.size();
  std::vector<RepeatResult> results(static_cast<std::size_t>(params.repeats));

  parallel_for(params.jobs, params.repeats, [&](int r) {
    // Fresh samples per repeat, shared across methods.
    std::vector<Graph> samples;
    std::vector<int> labels;
    samples.reserve(cat_count * static_cast<std::size_t>(params.samples_per_category));
    for (std::size_t c = 0; c < cat_count; ++c) {
      for (int s = 0; s < params.samples_per_category; ++s) {
        samples.push_back(sample_induced(
            categories[c].graph, params.sample_size,
            derive_seed(params.seed, {11, static_cast<std::uint64_t>(r),
                                      static_cast<std::uint64_t>(c),
                                      static_cast<std::uint64_t>(s)})));
        labels.push_back(static_cast<int>(c));
      }
    }

    RepeatResult out;
    out.error_per_method.resize(method_count);
    out.ms_per_method.resize(method_count);
    for (std::size_t m = 0; m < method_count; ++m) {
      std::vector<std::vector<double>> rows;
      rows.reserve(samples.size());
      const auto t0 = std::chrono::steady_clock::now();
      for (const auto& g : samples) {
        auto f = methods[m]->features(g, params.top_k);
        if (params.normalize) l2_normalize(f);
        rows.push_back(std::move(f));
      }
      const auto t1 = std::chrono::steady_clock::now();
      out.ms_per_method[m] =
          std::chrono::duration<double, std::milli>(t1 - t0).count();

      const auto assign = kmeans_cluster(
          rows, static_cast<int>(cat_count), params.kmeans_restarts,
          derive_seed(params.seed, {13, static_cast<std::uint64_t>(r),
                                    static_cast<std::uint64_t>(m)}));
      out.error_per_method[m] = clustering_error(assign, labels);
    }
    results[static_cast<std::size_t>(r)] = std::move(out);
  });

  ExperimentReport report;
  for (std::size_t m = 0; m < method_count; ++m) {
    MethodClusteringResult mres;
    mres.method = std::string(methods[m]->name());
    mres.errors.reserve(results.size());
    double ms = 0.0;
    for (const auto& r : results) {
      mres.errors.push_back(r.error_per_method[m]);
      ms += r.ms_per_method[m];
    }
    mres.mean_error = mean_of(mres.errors);
    mres.std_error = sample_std(mres.errors, mres.mean_error);
    mres.mean_decompose_ms = ms / static_cast<double>(results.size());
    report.methods.push_back(std::move(mres));
  }
  return report;
}

AccuracyCurve run_classification(const CategorySource& a,
                                 const CategorySource& b,
                                 const Decomposer& method,
                                 const ClassificationParams& params) {
  if (params.train_sizes.empty())
    throw std::invalid_argument("no training sizes given");
  if (params.test_size < 1) throw std::invalid_argument("test size must be positive");
  if (params.repeats < 1) throw std::invalid_argument("repeats must be positive");

  const int max_train = *std::max_element(params.train_sizes.begin(),
                                          params.train_sizes.end());
  const int train_share = (max_train + 1) / 2;
  const int test_share = (params.test_size + 1) / 2;
  const int pool = params.samples_pool_per_category > 0
                       ? params.samples_pool_per_category
                       : train_share + test_share;
  if (train_share + test_share > pool)
    throw std::runtime_error(
        "training size covers the sample pool; disjoint test set impossible");

  const CategorySource* sources[2] = {&a, &b};
  std::vector<std::vector<double>> acc_by_size(
      params.train_sizes.size(),
      std::vector<double>(static_cast<std::size_t>(params.repeats), 0.0));

  parallel_for(params.jobs, params.repeats, [&](int r) {
    // Per-category pool; the test block is the tail, so training prefixes of
    // any admissible size stay disjoint from it.
    FeatureMatrix pool_rows[2];
    for (int c = 0; c < 2; ++c) {
      pool_rows[c].method = std::string(method.name());
      pool_rows[c].top_k = params.top_k;
      pool_rows[c].category_names = {a.name, b.name};
      for (int s = 0; s < pool; ++s) {
        Graph g = sample_induced(
            sources[c]->graph, params.sample_size,
            derive_seed(params.seed, {17, static_cast<std::uint64_t>(r),
                                      static_cast<std::uint64_t>(c),
                                      static_cast<std::uint64_t>(s)}));
        auto f = method.features(g, params.top_k);
        if (params.normalize) l2_normalize(f);
        pool_rows[c].rows.push_back({c, std::move(f)});
      }
    }

    FeatureMatrix test;
    test.method = pool_rows[0].method;
    test.top_k = params.top_k;
    test.category_names = pool_rows[0].category_names;
    for (int c = 0; c < 2; ++c) {
      const auto& rows = pool_rows[c].rows;
      const int want = c == 0 ? test_share : params.test_size - test_share;
      for (int s = 0; s < want; ++s)
        test.rows.push_back(rows[rows.size() - 1 - static_cast<std::size_t>(s)]);
    }

    for (std::size_t ti = 0; ti < params.train_sizes.size(); ++ti) {
      const int t = params.train_sizes[ti];
      FeatureMatrix train;
      train.method = test.method;
      train.top_k = params.top_k;
      train.category_names = test.category_names;
      const int ta = (t + 1) / 2;
      const int tb = t - ta;
      for (int s = 0; s < ta; ++s) train.rows.push_back(pool_rows[0].rows[static_cast<std::size_t>(s)]);
      for (int s = 0; s < tb; ++s) train.rows.push_back(pool_rows[1].rows[static_cast<std::size_t>(s)]);
      acc_by_size[ti][static_cast<std::size_t>(r)] =
          knn_classify(train, test, params.knn_k);
    }
  });

  AccuracyCurve curve;
  curve.train_sizes = params.train_sizes;
  curve.accuracy.reserve(params.train_sizes.size());
  for (const auto& accs : acc_by_size) curve.accuracy.push_back(mean_of(accs));
  return curve;
}

}  // namespace cliqster
