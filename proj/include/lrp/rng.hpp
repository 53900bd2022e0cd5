#pragma once

#include <cstdint>
#include <vector>

namespace lrp {

// Hierarchical stream address: a master seed plus a path of integers naming
// the task (run -> experiment -> replicate -> purpose). Distinct paths under
// one master seed give statistically independent streams; identical specs
// give bit-identical streams on every platform (integer arithmetic only).
struct SeedSpec {
  uint64_t master_seed = 0;
  std::vector<uint64_t> stream_id;

  SeedSpec() = default;
  explicit SeedSpec(uint64_t master) : master_seed(master) {}
  SeedSpec(uint64_t master, std::vector<uint64_t> path)
      : master_seed(master), stream_id(std::move(path)) {}

  SeedSpec child(uint64_t id) const {
    SeedSpec s = *this;
    s.stream_id.push_back(id);
    return s;
  }
};

// xoshiro256++ generator seeded through a SplitMix64 absorption chain over
// (master_seed, stream_id...). The exact scheme is pinned in the README.
// child(id) extends the absorption chain without retaining the path, so
// derivation is O(1); a SeedSpec and the equivalent child() chain yield
// bit-identical streams.
class RngStream {
 public:
  explicit RngStream(const SeedSpec& spec);

  RngStream child(uint64_t id) const;

  uint64_t next_u64();
  // 53-bit uniform in [0, 1).
  double uniform01();
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
  // Standard normal, Marsaglia polar method.
  double normal();
  // Exponential(rate 1) via inversion; never returns +inf.
  double exponential();
  // Gamma(shape 1/2, rate a) as N^2 / (2a).
  double gamma_half(double rate);
  // Gamma(shape 1/2, rate 1) by Ahrens-Dieter GS rejection; independent
  // algorithmic route kept as the oracle for gamma_half.
  double gamma_half_rejection();
  // Exact Poisson: inversion for small mean, PTRS transformed rejection above.
  uint64_t poisson(double mu);
  // Draw from density proportional to r^{c} on [lo, hi].
  double power_band(double lo, double hi, double c);
  // Geometric skip: number of failures before first success at prob p.
  uint64_t geometric_skips(double p);

 private:
  RngStream() = default;
  void seed_from_chain();
  uint64_t chain_ = 0;
  uint64_t s_[4] = {0, 0, 0, 0};
};

}  // namespace lrp
