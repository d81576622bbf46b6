#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spectight {

/// Deterministic random source. Doubles are derived from raw 64-bit output so
/// streams are identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  int uniform_int(int lo, int hi);  // inclusive range
  double normal();                  // Box-Muller
  std::vector<double> unit_vector(int dim);

 private:
  std::mt19937_64 gen_;
};

struct SamplingConfig {
  std::uint64_t seed = 42;
  int n_random = 1000;
  // Values of a sampled combination that differ by at most this (relative to
  // the sup norm) are treated as one level. Eigenvector entries that are
  // equal in exact arithmetic come out of the solver split by rounding, and
  // the exact level scan would otherwise report spurious cuts.
  double value_snap = 1e-9;
};

/// The direction set used by the tightness sampler and the two-piece check:
/// basis directions, normalized pairwise sums and differences, then
/// cfg.n_random uniform sphere samples. A one-dimensional space gets only
/// the single basis direction, where the test is exact.
std::vector<std::vector<double>> tightness_directions(int dim, const SamplingConfig& cfg);

}  // namespace spectight
