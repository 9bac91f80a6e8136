#pragma once

#include <cstdint>
#include <vector>

#include "vcc/graph.hpp"

namespace vcc::testkit {

/// SplitMix64; `split()` derives an independent child stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  Rng split() { return Rng(next()); }

 private:
  std::uint64_t state_;
};

enum class GenModel { Uniform, Planted };

struct GenSpec {
  std::size_t n = 1;
  std::size_t m = 0;
  GenModel model = GenModel::Uniform;
  std::uint64_t seed = 0;
  /// Uniform model: lay down a random Hamiltonian cycle first.
  bool strong = false;
  /// Planted model: bidirected clique sizes, each glued to the earlier ones
  /// at a single shared vertex.
  std::vector<std::size_t> sizes;
};

/// Deterministic in spec.seed. Uniform: m distinct random pairs (after the
/// optional cycle). Planted: the cliques, then random noise edges up to m.
/// Throws Error(InvalidSpec).
DiGraph gen_random(const GenSpec& spec);

}  // namespace vcc::testkit
