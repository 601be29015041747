#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace anomaly {

using cplx = std::complex<double>;

// SplitMix64: the single PRNG used everywhere.  64-bit state, one
// multiply-xor-shift chain per draw; deterministic across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [-amp, amp].
  double next_symmetric(double amp) { return amp * (2.0 * next_double() - 1.0); }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t state_;
};

// FNV-1a 64-bit hash; used to derive independent per-scenario RNG streams
// from (seed, scenario name).
std::uint64_t fnv1a64(std::string_view text);

// Process-wide parallel toggle (set from the CLI --parallel flag).  Results
// are bit-identical either way; the flag only changes wall time.
void set_parallel(bool on);
bool parallel_enabled();

// parallel_for over [0, n): OpenMP static schedule when enabled, plain loop
// otherwise.  The body must write to disjoint slots only.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Neumaier compensated summation (serial reference implementation).
double neumaier_sum(const double* x, std::size_t n);

class NeumaierAcc {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Deterministic reduction: terms are accumulated per fixed-size chunk
// (Neumaier within each chunk, chunk size independent of thread count), then
// the chunk partials are combined serially in ascending index order.  The
// result is bit-identical for any worker count, including serial runs.
inline constexpr std::size_t kReduceChunk = 1024;

double reduce_sum(std::size_t n, const std::function<double(std::size_t)>& term);
cplx reduce_sum_cplx(std::size_t n, const std::function<cplx(std::size_t)>& term);

// Plain single-pass serial reference used by tests and the benchmark to
// cross-check the chunked reduction.
double reduce_sum_serial(std::size_t n, const std::function<double(std::size_t)>& term);

}  // namespace anomaly
