#include "lrp/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lrp {

namespace {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline uint64_t sm_mix(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

void RngStream::seed_from_chain() {
  uint64_t z = chain_;
  for (int i = 0; i < 4; ++i) {
    z += 0x9E3779B97F4A7C15ULL;
    uint64_t t = z;
    t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9ULL;
    t = (t ^ (t >> 27)) * 0x94D049BB133111EBULL;
    s_[i] = t ^ (t >> 31);
  }
  // All-zero state is invalid for xoshiro; unreachable in practice but cheap
  // to rule out deterministically.
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
}

RngStream::RngStream(const SeedSpec& spec) {
  uint64_t h = sm_mix(spec.master_seed);
  for (uint64_t id : spec.stream_id) h = sm_mix(h ^ sm_mix(id));
  chain_ = h;
  seed_from_chain();
}

RngStream RngStream::child(uint64_t id) const {
  RngStream r;
  r.chain_ = sm_mix(chain_ ^ sm_mix(id));
  r.seed_from_chain();
  return r;
}

uint64_t RngStream::next_u64() {
  // xoshiro256++ (Blackman, Vigna 2019).
  const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::normal() {
  for (;;) {
    double u = 2.0 * uniform01() - 1.0;
    double v = 2.0 * uniform01() - 1.0;
    double q = u * u + v * v;
    if (q > 0.0 && q < 1.0) return u * std::sqrt(-2.0 * std::log(q) / q);
  }
}

double RngStream::exponential() {
  double u;
  do {
    u = uniform01();
  } while (u <= 0.0);
  return -std::log(u);
}

double RngStream::gamma_half(double rate) {
  if (rate <= 0.0) throw std::invalid_argument("gamma_half: rate must be > 0");
  double n = normal();
  return n * n / (2.0 * rate);
}

double RngStream::gamma_half_rejection() {
  // Ahrens-Dieter GS for Gamma(alpha, 1) with alpha = 1/2.
  const double alpha = 0.5;
  const double b = 1.0 + alpha / M_E;
  for (;;) {
    double u1 = uniform01();
    double u2 = uniform01();
    double p = b * u1;
    if (p <= 1.0) {
      double x = std::pow(p, 1.0 / alpha);
      if (u2 <= std::exp(-x)) return x;
    } else {
      double x = -std::log((b - p) / alpha);
      if (x > 0.0 && u2 <= std::pow(x, alpha - 1.0)) return x;
    }
  }
}

uint64_t RngStream::poisson(double mu) {
  if (!(mu >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
  if (mu == 0.0) return 0;
  if (mu < 10.0) {
    // Multiplicative inversion (Knuth).
    double limit = std::exp(-mu);
    double prod = uniform01();
    uint64_t k = 0;
    while (prod > limit) {
      prod *= uniform01();
      ++k;
    }
    return k;
  }
  // PTRS transformed rejection (Hormann 1993); exact for mu >= 10.
  const double b = 0.931 + 2.53 * std::sqrt(mu);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mu = std::log(mu);
  for (;;) {
    double u = uniform01() - 0.5;
    double v = uniform01();
    double us = 0.5 - std::fabs(u);
    double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    double k = kf;
    double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    double rhs = k * log_mu - mu - std::lgamma(k + 1.0);
    if (lhs <= rhs) return static_cast<uint64_t>(kf);
  }
}

double RngStream::power_band(double lo, double hi, double c) {
  // Inverse CDF for density prop. to r^c on [lo, hi].
  double p = c + 1.0;
  if (p == 0.0) {
    double u = uniform01();
    return lo * std::exp(u * std::log(hi / lo));
  }
  double a = std::pow(lo, p);
  double b = std::pow(hi, p);
  double u = uniform01();
  return std::pow(a + u * (b - a), 1.0 / p);
}

uint64_t RngStream::geometric_skips(double p) {
  if (p >= 1.0) return 0;
  if (p <= 0.0) throw std::invalid_argument("geometric_skips: p must be > 0");
  double u;
  do {
    u = uniform01();
  } while (u <= 0.0);
  // floor(log(U) / log(1-p)), stable for small p via log1p.
  double g = std::floor(std::log(u) / std::log1p(-p));
  if (g > 9.2e18) g = 9.2e18;
  return static_cast<uint64_t>(g);
}

}  // namespace lrp
