#include "anomaly/common.hpp"

#include <atomic>
#include <cmath>

#ifdef ANOMALY_HAVE_OPENMP
#include <omp.h>
#endif

namespace anomaly {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {
std::atomic<bool> g_parallel{false};
}

void set_parallel(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
#ifdef ANOMALY_HAVE_OPENMP
  if (parallel_enabled()) {
    const std::int64_t m = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < m; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

double neumaier_sum(const double* x, std::size_t n) {
  NeumaierAcc acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(x[i]);
  return acc.value();
}

namespace {

// Chunk partials are fully determined by the chunk boundaries, never by the
// worker count: each chunk is reduced independently with compensated
// summation, and the partials are then folded serially in index order.
std::vector<double> chunk_partials(std::size_t n,
                                   const std::function<double(std::size_t)>& term) {
  const std::size_t nchunks = n == 0 ? 0 : (n - 1) / kReduceChunk + 1;
  std::vector<double> partial(nchunks, 0.0);
  parallel_for(nchunks, [&](std::size_t c) {
    const std::size_t lo = c * kReduceChunk;
    const std::size_t hi = std::min(n, lo + kReduceChunk);
    NeumaierAcc acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[c] = acc.value();
  });
  return partial;
}

}  // namespace

double reduce_sum(std::size_t n, const std::function<double(std::size_t)>& term) {
  const std::vector<double> partial = chunk_partials(n, term);
  NeumaierAcc acc;
  for (double p : partial) acc.add(p);
  return acc.value();
}

cplx reduce_sum_cplx(std::size_t n, const std::function<cplx(std::size_t)>& term) {
  // Cache one pass of terms per chunk would cost memory; instead reduce the
  // real and imaginary parts with two deterministic passes.
  const double re = reduce_sum(n, [&](std::size_t i) { return term(i).real(); });
  const double im = reduce_sum(n, [&](std::size_t i) { return term(i).imag(); });
  return {re, im};
}

double reduce_sum_serial(std::size_t n, const std::function<double(std::size_t)>& term) {
  NeumaierAcc acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(term(i));
  return acc.value();
}

}  // namespace anomaly
