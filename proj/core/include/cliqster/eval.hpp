#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cliqster/baselines.hpp"
#include "cliqster/graph.hpp"

namespace cliqster {

struct FeatureRow {
  int category = 0;
  std::vector<double> features;
};

/// Fixed-width feature vectors labeled by category, produced by one method.
struct FeatureMatrix {
  std::string method;
  int top_k = 0;
  std::vector<std::string> category_names;
  std::vector<FeatureRow> rows;
};

/// Per-position mean and mean +/- 2 sigma curves over repeated samples.
struct CoefficientCurves {
  std::vector<double> mean;
  std::vector<double> lo;
  std::vector<double> hi;
};

struct SampleProtocolResult {
  FeatureMatrix features;
  CoefficientCurves curves;
};

/// Repeatedly samples an induced subgraph, decomposes it and keeps the top_k
/// features; also returns the per-position mean and +/- 2 sigma band.
SampleProtocolResult sample_protocol(const Graph& g, int sample_size,
                                     int repeats, const Decomposer& method,
                                     int top_k, std::uint64_t seed);

/// Lloyd's algorithm with k-means++ seeding, best of `restarts` by
/// within-cluster sum of squares, deterministic per seed. Requires at least
/// k distinct points.
std::vector<int> kmeans_cluster(const std::vector<std::vector<double>>& points,
                                int k, int restarts, std::uint64_t seed);

/// Minimum misclassification fraction over all bijections between cluster
/// ids and true labels.
double clustering_error(std::span<const int> assignment,
                        std::span<const int> labels);

/// Euclidean majority vote among the k nearest training rows; distance ties
/// break toward the earlier training index. Returns the fraction of correct
/// test labels. k must not exceed the training size and must be odd for
/// binary tasks.
double knn_classify(const FeatureMatrix& train, const FeatureMatrix& test,
                    int k);

/// A labeled source network samples are drawn from.
struct CategorySource {
  std::string name;
  Graph graph;
};

struct DistinguishabilityParams {
  int sample_size = 1000;
  int samples_per_category = 20;
  int repeats = 100;
  int top_k = 20;
  int kmeans_restarts = 8;
  bool normalize = false;
  int jobs = 0;  // 0 = hardware concurrency
  std::uint64_t seed = 0;
};

struct MethodClusteringResult {
  std::string method;
  std::vector<double> errors;  // one per repeat
  double mean_error = 0.0;
  double std_error = 0.0;
  double mean_decompose_ms = 0.0;
};

struct ExperimentReport {
  std::vector<MethodClusteringResult> methods;
};

/// The clustering experiment: per repeat, draw samples_per_category induced
/// subgraphs from every category, decompose them with each method, cluster
/// the combined feature matrix with k = category count and score the
/// assignment against the true labels. Repeats run on a worker pool; each
/// owns a seed derived from the master seed, so results are independent of
/// the job count.
ExperimentReport run_distinguishability(std::span<const CategorySource> categories,
                                        std::span<const Decomposer* const> methods,
                                        const DistinguishabilityParams& params);

struct ClassificationParams {
  std::vector<int> train_sizes;
  int test_size = 100;
  int knn_k = 3;
  int repeats = 20;
  int sample_size = 1000;
  int top_k = 20;
  int samples_pool_per_category = 0;  // 0 = sized to fit train + test
  bool normalize = false;
  int jobs = 0;
  std::uint64_t seed = 0;
};

struct AccuracyCurve {
  std::vector<int> train_sizes;
  std::vector<double> accuracy;  // mean over repeats
};

/// Binary k-NN accuracy as a function of training-set size. Train and test
/// rows are disjoint by construction (distinct draws from per-repeat pools);
/// a pool too small to keep them disjoint is an error.
AccuracyCurve run_classification(const CategorySource& a,
                                 const CategorySource& b,
                                 const Decomposer& method,
                                 const ClassificationParams& params);

}  // namespace cliqster
