#include "vcc/tools/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>

#include "vcc/error.hpp"

namespace vcc::bench {

testkit::GenSpec family_spec(const BenchOptions& opts, std::size_t n, std::uint64_t seed) {
  testkit::GenSpec spec;
  spec.n = n;
  spec.m = std::min(static_cast<std::size_t>(opts.density * static_cast<double>(n)), n * (n - 1));
  spec.model = opts.model;
  spec.seed = seed;
  if (opts.model == testkit::GenModel::Planted) {
    // 4-cliques glued into a tree over all n vertices: about 4n edges on
    // their own, so the planted blocks survive the noise at density 4.
    const std::size_t cliques = n >= 4 ? (n - 1) / 3 : 1;
    spec.sizes.assign(cliques, n >= 4 ? 4 : std::max<std::size_t>(2, n));
  } else {
    spec.strong = spec.m >= n && n >= 2;
  }
  return spec;
}

namespace {

std::int64_t median(std::vector<std::int64_t> t) {
  std::sort(t.begin(), t.end());
  const std::size_t h = t.size() / 2;
  return t.size() % 2 ? t[h] : (t[h - 1] + t[h]) / 2;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& opts) {
  if (opts.algos.empty()) throw Error(Errc::InvalidSpec, "no algorithms selected");
  if (opts.repetitions == 0) throw Error(Errc::InvalidSpec, "repetitions must be positive");
  std::vector<BenchRecord> rows;
  for (std::size_t n : opts.sizes) {
    std::vector<BenchRecord> point;
    for (std::size_t rep = 0; rep < opts.repetitions; ++rep) {
      const std::uint64_t seed = opts.seed + rep;
      const DiGraph g = testkit::gen_random(family_spec(opts, n, seed));
      ComponentList reference;
      for (std::size_t i = 0; i < opts.algos.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        ComponentList comps = two_vccs(g, opts.algos[i]);
        const auto stop = std::chrono::steady_clock::now();
        if (i == 0) {
          reference = comps;
        } else if (comps != reference) {
          throw Error(Errc::MismatchedOutputs,
                      std::string(to_string(opts.algos[i])) + " disagrees with " +
                          std::string(to_string(opts.algos[0])) + " at n=" + std::to_string(n) +
                          " seed=" + std::to_string(seed));
        }
        point.push_back({std::string(to_string(opts.algos[i])), g.vertex_count(), g.edge_count(),
                         std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count(),
                         comps.size(), seed});
      }
    }
    if (!opts.median) {
      rows.insert(rows.end(), point.begin(), point.end());
      continue;
    }
    // point is rep-major; algorithm i sits at i, i + A, i + 2A, ...
    const std::size_t a = opts.algos.size();
    for (std::size_t i = 0; i < a; ++i) {
      std::vector<std::int64_t> t;
      for (std::size_t j = i; j < point.size(); j += a) t.push_back(point[j].nanos);
      BenchRecord r = point[i];
      r.nanos = median(std::move(t));
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.algo << ',' << r.n << ',' << r.m << ',' << r.nanos << ',' << r.components << ','
        << r.seed << '\n';
  }
}

}  // namespace vcc::bench
