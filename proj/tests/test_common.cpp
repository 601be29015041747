#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "anomaly/common.hpp"

using namespace anomaly;

TEST_SUITE("common") {

TEST_CASE("splitmix64 matches the published reference sequence") {
  // Reference outputs for seed 1234567 from an independent implementation
  // of the splitmix64 algorithm.
  SplitMix64 rng(1234567);
  CHECK(rng.next_u64() == 0x599ed017fb08fc85ull);
  CHECK(rng.next_u64() == 0x2c73f08458540fa5ull);
  CHECK(rng.next_u64() == 0x883ebce5a3f27c77ull);
  CHECK(rng.next_u64() == 0x3fbef740e9177b3full);
}

TEST_CASE("splitmix64 derived draws stay in range") {
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    const double s = rng.next_symmetric(0.7);
    CHECK(std::abs(s) <= 0.7);
    CHECK(rng.next_below(13) < 13);
  }
}

TEST_CASE("fnv1a64 matches published test vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("kac-moody") == 0xc69c6eebab2ad319ull);
}

TEST_CASE("neumaier summation survives catastrophic cancellation") {
  const double x[3] = {1e100, 1.0, -1e100};
  CHECK(neumaier_sum(x, 3) == 1.0);
  // Plain left-to-right addition loses the 1.0 entirely.
  CHECK((x[0] + x[1]) + x[2] == 0.0);
}

TEST_CASE("reduce_sum is exact on an exactly representable series") {
  const std::size_t n = 100000;
  const double expected = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  CHECK(reduce_sum(n, [](std::size_t i) { return static_cast<double>(i); }) == expected);
  CHECK(reduce_sum_serial(n, [](std::size_t i) { return static_cast<double>(i); }) ==
        expected);
}

TEST_CASE("reduce_sum agrees with the serial reference on an alternating series") {
  const std::size_t n = 50000;
  const auto term = [](std::size_t i) {
    const double k = static_cast<double>(i) + 1.0;
    return (i % 2 == 0 ? 1.0 : -1.0) / k;
  };
  const double chunked = reduce_sum(n, term);
  const double serial = reduce_sum_serial(n, term);
  CHECK(std::abs(chunked - serial) <= 1e-15);
}

TEST_CASE("reduce_sum is bit-identical across worker modes") {
  const std::size_t n = 123457;  // deliberately not a multiple of the chunk size
  const auto term = [](std::size_t i) {
    const double k = static_cast<double>(i) + 0.5;
    return std::sin(0.1 * k) / k;
  };
  const bool was = parallel_enabled();
  set_parallel(false);
  const double serial = reduce_sum(n, term);
  set_parallel(true);
  const double parallel = reduce_sum(n, term);
  set_parallel(was);
  CHECK(std::memcmp(&serial, &parallel, sizeof(double)) == 0);

  const auto cterm = [&term](std::size_t i) { return cplx(term(i), term(i) * 0.3); };
  set_parallel(false);
  const cplx cs = reduce_sum_cplx(n, cterm);
  set_parallel(true);
  const cplx cp = reduce_sum_cplx(n, cterm);
  set_parallel(was);
  CHECK(std::memcmp(&cs, &cp, sizeof(cplx)) == 0);
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (const bool par : {false, true}) {
    const bool was = parallel_enabled();
    set_parallel(par);
    std::vector<int> hits(10001, 0);
    parallel_for(hits.size(), [&hits](std::size_t i) { hits[i] += 1; });
    set_parallel(was);
    for (const int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("deterministic reduction chunk size is pinned") {
  CHECK(kReduceChunk == 1024);
}

}  // TEST_SUITE
