#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vcc/testkit/generators.hpp"
#include "vcc/twovcc.hpp"

namespace vcc::bench {

struct BenchRecord {
  std::string algo;
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t nanos = 0;
  std::size_t components = 0;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  testkit::GenModel model = testkit::GenModel::Planted;
  std::vector<std::size_t> sizes{50, 100, 200};
  /// Target m = density * n.
  double density = 4.0;
  std::vector<TwoVccAlgorithm> algos{TwoVccAlgorithm::ErusalimskiiSvetlov, TwoVccAlgorithm::Split};
  std::size_t repetitions = 1;
  std::uint64_t seed = 1;
  /// Collapse repetitions into one row per (algo, n) holding the median time;
  /// m, components and seed are taken from the first repetition.
  bool median = false;
};

/// Graph for one family point. Planted families glue bidirected 4-cliques
/// over all n vertices and top up with noise edges to density * n.
testkit::GenSpec family_spec(const BenchOptions& opts, std::size_t n, std::uint64_t seed);

/// Times every algorithm on identical graphs, point by point. Throws
/// Error(MismatchedOutputs) as soon as two algorithms disagree on a graph.
std::vector<BenchRecord> run_bench(const BenchOptions& opts);

inline constexpr const char* kCsvHeader = "algo,n,m,nanos,components,seed";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

}  // namespace vcc::bench
