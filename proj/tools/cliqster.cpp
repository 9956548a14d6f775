// Command-line front end: stats, cliques, decompose, features, synth,
// sample, eval-cluster, eval-knn, bench. All randomness flows from --seed;
// outputs are CSV with 6 significant digits and reproduce byte-for-byte for
// a fixed seed (timing columns excepted).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliqster/baselines.hpp"
#include "cliqster/csv.hpp"
#include "cliqster/decompose.hpp"
#include "cliqster/eval.hpp"
#include "cliqster/graph.hpp"
#include "cliqster/netstats.hpp"
#include "cliqster/rng.hpp"
#include "cliqster/synth.hpp"

namespace {

using namespace cliqster;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << content;
}

Graph load_graph(const std::string& path, std::optional<int> vertices) {
  return from_edge_list_text(read_file(path), vertices);
}

std::string row(std::initializer_list<std::string> cells) {
  return csv_row(std::vector<std::string>(cells));
}

/// Clique rendered as its original tokens, token-sorted.
std::string clique_tokens(const Graph& g, const Clique& c) {
  std::vector<std::string> toks;
  toks.reserve(c.vertices.size());
  for (int v : c.vertices) toks.push_back(g.token(v));
  std::sort(toks.begin(), toks.end());
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += toks[i];
  }
  return out;
}

struct CommonOpts {
  std::uint64_t seed = 0;
  int top_k = 20;
  int sample_size = 1000;
  int jobs = 0;
  bool normalize = false;
  double sample_scale = 20.0;
  std::string out;
};

std::vector<CategorySource> make_sources(const std::vector<std::string>& profiles,
                                         const std::vector<std::string>& inputs,
                                         double sample_scale,
                                         std::uint64_t seed) {
  if (profiles.empty() == inputs.empty())
    throw std::runtime_error("give exactly one of --profiles or --inputs");
  std::vector<CategorySource> sources;
  if (!profiles.empty()) {
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      auto p = profile_by_name(profiles[i], sample_scale);
      sources.push_back({p.name, generate(p, derive_seed(seed, {99, i}))});
    }
  } else {
    for (const auto& path : inputs) {
      auto slash = path.find_last_of('/');
      std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
      sources.push_back({name, load_graph(path, std::nullopt)});
    }
  }
  return sources;
}

int run_stats(const std::string& input, std::optional<int> vertices,
              const std::string& out_path) {
  const Graph g = load_graph(input, vertices);
  if (g.edge_count() == 0) throw std::runtime_error("graph has no edges");
  const GraphSummary s = summarize(g);

  std::string alpha, x_min, n_tail, ks;
  std::vector<long long> degrees;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) degrees.push_back(g.degree(v));
  try {
    const auto fit = fit_power_law(degrees);
    alpha = format_double(fit.alpha);
    x_min = std::to_string(fit.x_min);
    n_tail = std::to_string(fit.n_tail);
    ks = format_double(fit.ks);
  } catch (const std::exception&) {
    // Degenerate degree distributions leave the fit columns empty.
  }

  std::string csv =
      row({"n", "m", "components", "density", "max_degree", "degeneracy",
           "maximal_cliques", "alpha", "x_min", "n_tail", "ks"});
  csv += row({std::to_string(s.n), std::to_string(s.m),
              std::to_string(s.components), format_double(s.density),
              std::to_string(s.max_degree), std::to_string(s.degeneracy),
              std::to_string(s.maximal_cliques), alpha, x_min, n_tail, ks});
  write_output(out_path, csv);
  return 0;
}

int run_cliques(const std::string& input, std::optional<int> vertices,
                const std::string& out_path) {
  const Graph g = load_graph(input, vertices);
  std::string out;
  for (const auto& c : enumerate_maximal_cliques(g)) {
    out += clique_tokens(g, c);
    out += '\n';
  }
  write_output(out_path, out);
  return 0;
}

int run_decompose(const std::string& input, std::optional<int> vertices,
                  const std::string& out_path) {
  const Graph g = load_graph(input, vertices);
  const auto d = decompose(g);
  std::string csv = row({"clique", "mu"});
  for (std::size_t k = 0; k < d.basis.basis_count(); ++k)
    csv += row({clique_tokens(g, d.basis.cliques[k]),
                format_double(d.coeffs.mu(static_cast<Eigen::Index>(k)))});
  write_output(out_path, csv);
  return 0;
}

int run_features(const std::vector<std::string>& inputs,
                 const std::string& method, int top_k,
                 const std::string& out_path) {
  const auto dec = make_decomposer(method);
  std::vector<std::string> header = {"input", "method"};
  for (int i = 1; i <= top_k; ++i) header.push_back("f" + std::to_string(i));
  std::string csv = csv_row(header);
  for (const auto& path : inputs) {
    const Graph g = load_graph(path, std::nullopt);
    const auto f = dec->features(g, top_k);
    std::vector<std::string> cells = {path, method};
    for (double v : f) cells.push_back(format_double(v));
    csv += csv_row(cells);
  }
  write_output(out_path, csv);
  return 0;
}

int run_synth(const std::string& profile_name, std::optional<int> n_override,
              std::uint64_t seed, double sample_scale,
              const std::string& out_path) {
  auto profile = profile_by_name(profile_name, sample_scale);
  if (n_override) profile.n = *n_override;
  const Graph g = generate(profile, seed);

  std::string out;
  out += "# profile " + profile.name + "\n";
  out += "# alpha " + format_double(profile.alpha) + "\n";
  out += "# density " + format_double(profile.density) + "\n";
  out += "# sample_scale " + format_double(profile.sample_scale) + "\n";
  out += "# effective_density " + format_double(profile.effective_density()) + "\n";
  out += "# n " + std::to_string(profile.n) + "\n";
  out += "# seed " + std::to_string(seed) + "\n";
  out += "# clique_boost count_per_1000 " + std::to_string(profile.boost.count_per_1000) +
         " sizes " + std::to_string(profile.boost.size_min) + ".." +
         std::to_string(profile.boost.size_max) + "\n";
  out += to_edge_list_text(g);
  write_output(out_path, out);
  return 0;
}

int run_sample(const std::string& input, std::optional<int> vertices,
               int sample_size, std::uint64_t seed,
               const std::string& out_path) {
  const Graph g = load_graph(input, vertices);
  const Graph s = sample_induced(g, sample_size, seed);
  write_output(out_path, to_edge_list_text(s));
  return 0;
}

int run_eval_cluster(const std::vector<std::string>& profiles,
                     const std::vector<std::string>& inputs,
                     const std::vector<std::string>& methods,
                     int samples_per_category, int repeats,
                     const CommonOpts& opts, const std::string& curves_out,
                     int curves_repeats) {
  const auto sources = make_sources(profiles, inputs, opts.sample_scale, opts.seed);

  std::vector<std::unique_ptr<Decomposer>> owned;
  std::vector<const Decomposer*> method_ptrs;
  for (const auto& m : methods) {
    owned.push_back(make_decomposer(m));
    method_ptrs.push_back(owned.back().get());
  }

  DistinguishabilityParams params;
  params.sample_size = opts.sample_size;
  params.samples_per_category = samples_per_category;
  params.repeats = repeats;
  params.top_k = opts.top_k;
  params.normalize = opts.normalize;
  params.jobs = opts.jobs;
  params.seed = opts.seed;

  const auto report = run_distinguishability(sources, method_ptrs, params);

  std::string csv = row({"method", "repeat", "error"});
  for (const auto& m : report.methods)
    for (std::size_t r = 0; r < m.errors.size(); ++r)
      csv += row({m.method, std::to_string(r), format_double(m.errors[r])});
  write_output(opts.out, csv);

  for (const auto& m : report.methods) {
    std::cerr << "method=" << m.method
              << " mean_error=" << format_double(m.mean_error)
              << " std_error=" << format_double(m.std_error)
              << " mean_decompose_ms=" << format_double(m.mean_decompose_ms)
              << "\n";
  }

  if (!curves_out.empty()) {
    std::string curves_csv =
        row({"method", "category", "position", "mean", "lo", "hi"});
    for (std::size_t mi = 0; mi < method_ptrs.size(); ++mi) {
      for (std::size_t ci = 0; ci < sources.size(); ++ci) {
        const auto res = sample_protocol(
            sources[ci].graph, opts.sample_size, curves_repeats,
            *method_ptrs[mi], opts.top_k,
            derive_seed(opts.seed, {23, mi, ci}));
        for (int p = 0; p < opts.top_k; ++p)
          curves_csv += row({std::string(method_ptrs[mi]->name()),
                             sources[ci].name, std::to_string(p + 1),
                             format_double(res.curves.mean[static_cast<std::size_t>(p)]),
                             format_double(res.curves.lo[static_cast<std::size_t>(p)]),
                             format_double(res.curves.hi[static_cast<std::size_t>(p)])});
      }
    }
    write_output(curves_out, curves_csv);
  }
  return 0;
}

int run_eval_knn(const std::vector<std::string>& profiles,
                 const std::vector<std::string>& inputs,
                 const std::string& method, std::vector<int> train_sizes,
                 int test_size, int knn_k, int repeats,
                 const CommonOpts& opts) {
  const auto sources = make_sources(profiles, inputs, opts.sample_scale, opts.seed);
  if (sources.size() != 2)
    throw std::runtime_error("eval-knn needs exactly two categories");

  const auto dec = make_decomposer(method);
  ClassificationParams params;
  params.train_sizes = std::move(train_sizes);
  params.test_size = test_size;
  params.knn_k = knn_k;
  params.repeats = repeats;
  params.sample_size = opts.sample_size;
  params.top_k = opts.top_k;
  params.normalize = opts.normalize;
  params.jobs = opts.jobs;
  params.seed = opts.seed;

  const auto curve = run_classification(sources[0], sources[1], *dec, params);

  std::string csv = row({"train_size", "accuracy"});
  for (std::size_t i = 0; i < curve.train_sizes.size(); ++i)
    csv += row({std::to_string(curve.train_sizes[i]),
                format_double(curve.accuracy[i])});
  write_output(opts.out, csv);
  return 0;
}

int run_bench(std::vector<int> sizes, const std::vector<std::string>& methods,
              const std::string& profile_name, std::optional<double> density,
              int runs, const CommonOpts& opts) {
  std::string csv = row({"method", "n", "mean_ms", "std_ms"});
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    auto profile = profile_by_name(profile_name, opts.sample_scale);
    profile.n = sizes[si];
    if (density) {
      profile.density = *density;
      profile.sample_scale = 1.0;
    }
    const Graph g = generate(profile, derive_seed(opts.seed, {31, si}));

    for (const auto& method : methods) {
      const auto dec = make_decomposer(method);
      std::vector<double> ms;
      for (int r = 0; r <= runs; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        volatile double sink = dec->features(g, opts.top_k)[0];
        (void)sink;
        const auto t1 = std::chrono::steady_clock::now();
        if (r > 0)  // first run is warm-up
          ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
      double mean = 0.0;
      for (double v : ms) mean += v;
      mean /= static_cast<double>(ms.size());
      double var = 0.0;
      for (double v : ms) var += (v - mean) * (v - mean);
      const double sd = ms.size() > 1 ? std::sqrt(var / static_cast<double>(ms.size() - 1)) : 0.0;
      csv += row({method, std::to_string(sizes[si]), format_double(mean),
                  format_double(sd)});
    }
  }
  write_output(opts.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cliqster: maximal-clique network decomposition toolkit"};
  app.require_subcommand(1);

  // stats
  std::string st_input, st_out;
  std::optional<int> st_vertices;
  auto* stats = app.add_subcommand("stats", "Structural summary and power-law fit as one CSV row");
  stats->add_option("input", st_input, "edge-list file")->required();
  stats->add_option("--vertices", st_vertices, "total vertex count incl. isolated vertices");
  stats->add_option("--out", st_out, "output file (default stdout)");

  // cliques
  std::string cq_input, cq_out;
  std::optional<int> cq_vertices;
  auto* cliques = app.add_subcommand("cliques", "List maximal cliques, one per line as sorted tokens");
  cliques->add_option("input", cq_input, "edge-list file")->required();
  cliques->add_option("--vertices", cq_vertices, "total vertex count");
  cliques->add_option("--out", cq_out, "output file (default stdout)");

  // decompose
  std::string dc_input, dc_out;
  std::optional<int> dc_vertices;
  auto* dec = app.add_subcommand("decompose", "Clique-basis coefficients as (clique, mu) CSV");
  dec->add_option("input", dc_input, "edge-list file")->required();
  dec->add_option("--vertices", dc_vertices, "total vertex count");
  dec->add_option("--out", dc_out, "output file (default stdout)");

  // features
  std::vector<std::string> ft_inputs;
  std::string ft_method = "cliqster", ft_out;
  int ft_top_k = 20;
  auto* features = app.add_subcommand("features", "Top-k feature vectors, one CSV row per input graph");
  features->add_option("inputs", ft_inputs, "edge-list files")->required();
  features->add_option("--method", ft_method, "cliqster|svd")->capture_default_str();
  features->add_option("--top-k", ft_top_k, "feature vector length")->capture_default_str();
  features->add_option("--out", ft_out, "output file (default stdout)");

  // synth
  std::string sy_profile, sy_out;
  std::optional<int> sy_n;
  std::uint64_t sy_seed = 0;
  double sy_scale = 20.0;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic category network as an edge list");
  synth->add_option("--profile", sy_profile, "SI|CI|LL|PEPS|ST")->required();
  synth->add_option("--n", sy_n, "vertex count override");
  synth->add_option("--seed", sy_seed, "random seed")->capture_default_str();
  synth->add_option("--sample-scale", sy_scale, "density multiplier for desk-scale runs")->capture_default_str();
  synth->add_option("--out", sy_out, "output file (default stdout)");

  // sample
  std::string sm_input, sm_out;
  std::optional<int> sm_vertices;
  int sm_size = 1000;
  std::uint64_t sm_seed = 0;
  auto* sample = app.add_subcommand("sample", "Uniform induced subgraph as an edge list");
  sample->add_option("input", sm_input, "edge-list file")->required();
  sample->add_option("--sample-size", sm_size, "vertices to keep")->capture_default_str();
  sample->add_option("--seed", sm_seed, "random seed")->capture_default_str();
  sample->add_option("--vertices", sm_vertices, "total vertex count");
  sample->add_option("--out", sm_out, "output file (default stdout)");

  // eval-cluster
  std::vector<std::string> ec_profiles, ec_inputs, ec_methods = {"cliqster", "svd"};
  int ec_samples = 20, ec_repeats = 100, ec_curves_repeats = 100;
  std::string ec_curves_out;
  CommonOpts ec_opts;
  auto* evalc = app.add_subcommand("eval-cluster", "K-means distinguishability experiment");
  evalc->add_option("--profiles", ec_profiles, "builtin profile names")->delimiter(',');
  evalc->add_option("--inputs", ec_inputs, "edge-list files, one per category")->delimiter(',');
  evalc->add_option("--methods", ec_methods, "decomposition methods")->delimiter(',')->capture_default_str();
  evalc->add_option("--samples-per-category", ec_samples, "samples drawn per category per repeat")->capture_default_str();
  evalc->add_option("--repeats", ec_repeats, "experiment repeats")->capture_default_str();
  evalc->add_option("--sample-size", ec_opts.sample_size, "induced sample size")->capture_default_str();
  evalc->add_option("--top-k", ec_opts.top_k, "feature vector length")->capture_default_str();
  evalc->add_option("--seed", ec_opts.seed, "master seed")->capture_default_str();
  evalc->add_option("--jobs", ec_opts.jobs, "worker threads (0 = cores)")->capture_default_str();
  evalc->add_flag("--normalize", ec_opts.normalize, "L2-normalize feature rows");
  evalc->add_option("--sample-scale", ec_opts.sample_scale, "profile density multiplier")->capture_default_str();
  evalc->add_option("--out", ec_opts.out, "report CSV (default stdout)");
  evalc->add_option("--curves-out", ec_curves_out, "coefficient mean/±2σ curves CSV");
  evalc->add_option("--curves-repeats", ec_curves_repeats, "samples per curve")->capture_default_str();

  // eval-knn
  std::vector<std::string> ek_profiles, ek_inputs;
  std::string ek_method = "cliqster";
  std::vector<int> ek_train_sizes = {10, 20, 40, 70, 100};
  int ek_test = 100, ek_k = 3, ek_repeats = 20;
  CommonOpts ek_opts;
  auto* evalk = app.add_subcommand("eval-knn", "k-NN classification accuracy vs training size");
  evalk->add_option("--profiles", ek_profiles, "two builtin profile names")->delimiter(',');
  evalk->add_option("--inputs", ek_inputs, "two edge-list files")->delimiter(',');
  evalk->add_option("--method", ek_method, "decomposition method")->capture_default_str();
  evalk->add_option("--train-sizes", ek_train_sizes, "training set sizes")->delimiter(',')->capture_default_str();
  evalk->add_option("--test-size", ek_test, "test set size")->capture_default_str();
  evalk->add_option("--knn-k", ek_k, "neighbor count")->capture_default_str();
  evalk->add_option("--repeats", ek_repeats, "experiment repeats")->capture_default_str();
  evalk->add_option("--sample-size", ek_opts.sample_size, "induced sample size")->capture_default_str();
  evalk->add_option("--top-k", ek_opts.top_k, "feature vector length")->capture_default_str();
  evalk->add_option("--seed", ek_opts.seed, "master seed")->capture_default_str();
  evalk->add_option("--jobs", ek_opts.jobs, "worker threads (0 = cores)")->capture_default_str();
  evalk->add_flag("--normalize", ek_opts.normalize, "L2-normalize feature rows");
  evalk->add_option("--sample-scale", ek_opts.sample_scale, "profile density multiplier")->capture_default_str();
  evalk->add_option("--out", ek_opts.out, "curve CSV (default stdout)");

  // bench
  std::vector<int> bn_sizes = {250, 500, 1000};
  std::vector<std::string> bn_methods = {"cliqster", "svd"};
  std::string bn_profile = "CI";
  std::optional<double> bn_density;
  int bn_runs = 5;
  CommonOpts bn_opts;
  auto* bench = app.add_subcommand("bench", "Decomposition wall-time comparison");
  bench->add_option("--sizes", bn_sizes, "graph sizes")->delimiter(',')->capture_default_str();
  bench->add_option("--methods", bn_methods, "decomposition methods")->delimiter(',')->capture_default_str();
  bench->add_option("--profile", bn_profile, "generator profile")->capture_default_str();
  bench->add_option("--density", bn_density, "density override (replaces profile density)");
  bench->add_option("--runs", bn_runs, "timed runs after one warm-up")->capture_default_str();
  bench->add_option("--seed", bn_opts.seed, "master seed")->capture_default_str();
  bench->add_option("--top-k", bn_opts.top_k, "feature vector length")->capture_default_str();
  bench->add_option("--sample-scale", bn_opts.sample_scale, "profile density multiplier")->capture_default_str();
  bench->add_option("--out", bn_opts.out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*stats) return run_stats(st_input, st_vertices, st_out);
    if (*cliques) return run_cliques(cq_input, cq_vertices, cq_out);
    if (*dec) return run_decompose(dc_input, dc_vertices, dc_out);
    if (*features) return run_features(ft_inputs, ft_method, ft_top_k, ft_out);
    if (*synth) return run_synth(sy_profile, sy_n, sy_seed, sy_scale, sy_out);
    if (*sample) return run_sample(sm_input, sm_vertices, sm_size, sm_seed, sm_out);
    if (*evalc)
      return run_eval_cluster(ec_profiles, ec_inputs, ec_methods, ec_samples,
                              ec_repeats, ec_opts, ec_curves_out,
                              ec_curves_repeats);
    if (*evalk)
      return run_eval_knn(ek_profiles, ek_inputs, ek_method, ek_train_sizes,
                          ek_test, ek_k, ek_repeats, ek_opts);
    if (*bench)
      return run_bench(bn_sizes, bn_methods, bn_profile, bn_density, bn_runs,
                       bn_opts);
  } catch (const std::exception& e) {
    std::cerr << "cliqster: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
