#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "anomaly/cech.hpp"
#include "anomaly/group_cohomology.hpp"

using namespace anomaly;

namespace {

GroupCochainTable random_normalized(const FiniteGroup& g, const GroupModule& a, int p,
                                    SplitMix64& rng) {
  GroupCochainTable t = GroupCochainTable::zero(g, a, p);
  std::vector<int> args(p, 0);
  for (std::size_t idx = 0; idx < t.values.size(); ++idx) {
    std::size_t rem = idx;
    bool unit = false;
    for (int i = p - 1; i >= 0; --i) {
      args[i] = static_cast<int>(rem % g.n);
      rem /= g.n;
      unit = unit || args[i] == 0;
    }
    if (!unit) t.set(args, static_cast<int>(rng.next_below(a.m)));
  }
  return t;
}

bool all_zero(const GroupCochainTable& t) {
  for (int v : t.values)
    if (v != 0) return false;
  return true;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("finite group tables are valid groups") {
  for (const FiniteGroup& g : {FiniteGroup::cyclic(6), FiniteGroup::klein4(),
                               FiniteGroup::symmetric3(),
                               FiniteGroup::product(FiniteGroup::cyclic(2),
                                                    FiniteGroup::cyclic(3))}) {
    CHECK(is_group_table(g));
    for (int a = 0; a < g.n; ++a) {
      CHECK(g.op(a, g.inv[a]) == 0);
      CHECK(g.op(0, a) == a);
    }
  }
  // S3 is non-abelian.
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  bool commutes = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) commutes = commutes && s3.op(a, b) == s3.op(b, a);
  CHECK(!commutes);
}

TEST_CASE("homomorphism detector") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  // The sign map: order-2 elements are odd.
  std::vector<int> sign(6, 0);
  for (int e = 1; e < 6; ++e)
    if (s3.op(e, e) == 0) sign[e] = 1;
  CHECK(is_homomorphism(s3, z2, sign));
  std::vector<int> broken = sign;
  broken[1] ^= 1;
  CHECK(!is_homomorphism(s3, z2, broken));
}

TEST_CASE("degree-1 coboundary matches the bar-resolution formula by hand") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const GroupModule z4 = GroupModule::trivial(s3, 4);
  SplitMix64 rng(1);
  const GroupCochainTable f = random_normalized(s3, z4, 1, rng);
  const GroupCochainTable df = group_coboundary(f);
  for (int g1 = 0; g1 < 6; ++g1)
    for (int g2 = 0; g2 < 6; ++g2) {
      const int expect =
          ((z4.act[g1][f.at({g2})] - f.at({s3.op(g1, g2)}) + f.at({g1})) % 4 + 4) % 4;
      CHECK(df.at({g1, g2}) == expect);
    }
  CHECK(df.normalized());
}

TEST_CASE("group coboundary squares to zero") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const GroupModule z4 = GroupModule::trivial(s3, 4);
  SplitMix64 rng(2);
  for (int p = 1; p <= 2; ++p)
    for (int t = 0; t < 5; ++t)
      CHECK(all_zero(group_coboundary(group_coboundary(random_normalized(s3, z4, p, rng)))));
}

TEST_CASE("coboundaries are cocycles") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const GroupModule z4 = GroupModule::trivial(s3, 4);
  SplitMix64 rng(3);
  const GroupCochainTable df = group_coboundary(random_normalized(s3, z4, 1, rng));
  CHECK(is_group_cocycle(df));
}

TEST_CASE("brute-force H2 counts match the classification of extensions") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const FiniteGroup k4 = FiniteGroup::klein4();
  // |H2(Z2, Z2)| = 2 (Z4 vs Z2 x Z2), |H2(Z2, Z3)| = 1, and for cyclic
  // groups |H2(Zn, Zm)| = gcd(n, m).
  CHECK(h2_brute_force(z2, GroupModule::trivial(z2, 2)).h2 == 2);
  CHECK(h2_brute_force(z2, GroupModule::trivial(z2, 3)).h2 == 1);
  CHECK(h2_brute_force(z4, GroupModule::trivial(z4, 2)).h2 == 2);
  CHECK(h2_brute_force(z2, GroupModule::trivial(z2, 4)).h2 == 2);
  // |H2(K4, Z2)| = 8: dim_F2 H^2(K4; F2) = 3 from the polynomial ring
  // F2[x, y] in degree 2.
  CHECK(h2_brute_force(k4, GroupModule::trivial(k4, 2)).h2 == 8);
  // Trivial group: everything collapses.
  const FiniteGroup e = FiniteGroup::cyclic(1);
  CHECK(h2_brute_force(e, GroupModule::trivial(e, 4)).h2 == 1);
  // Counting consistency: |Z2| = |H2| * |B2|.
  const H2Result r = h2_brute_force(z2, GroupModule::trivial(z2, 2));
  CHECK(r.z2 == r.h2 * r.b2);
}

TEST_CASE("twisted coefficients: negation action kills H2(Z2, Z3)") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  GroupModule m;
  m.m = 3;
  m.act = {{0, 1, 2}, {0, 2, 1}};  // the generator negates
  CHECK(h2_brute_force(z2, m).h2 == 1);
}

TEST_CASE("brute-force guard rejects oversized enumerations") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK_THROWS_AS((void)h2_brute_force(s3, GroupModule::trivial(s3, 8)),
                  std::invalid_argument);
}

TEST_CASE("cech full-simplex covers are downward closed") {
  const CechCover cover = CechCover::full_simplex(4, 4);
  CHECK(cover.downward_closed());
  CHECK(cover.is_declared({0, 2, 3}));
  CHECK(!cover.is_declared({0, 4}));
  CHECK(cover.tuples_of_size(2).size() == 6);
  CHECK(cover.tuples_of_size(3).size() == 4);
}

TEST_CASE("cech coboundary of a 0-cochain is a 1-cocycle") {
  const CechCover cover = CechCover::full_simplex(3, 3);
  CechCochainTable f = CechCochainTable::zero(cover, 0, 5);
  int k = 1;
  for (auto& [key, v] : f.values) v = (k++ * 3) % 5;
  const CechCochainTable df = cech_coboundary(f);
  CHECK(df.p == 1);
  CHECK(is_cech_cocycle(df));
  // And explicitly: (df)_{ij} + (df)_{jk} - (df)_{ik} = 0 mod 5.
  const int d01 = df.at({0, 1}), d12 = df.at({1, 2}), d02 = df.at({0, 2});
  CHECK((d01 + d12 - d02) % 5 == 0);
}

TEST_CASE("cech coboundary squares to zero") {
  const CechCover cover = CechCover::full_simplex(4, 4);
  SplitMix64 rng(9);
  for (int p = 0; p <= 1; ++p)
    for (int t = 0; t < 3; ++t) {
      CechCochainTable c = CechCochainTable::zero(cover, p, 6);
      for (auto& [key, v] : c.values) v = static_cast<int>(rng.next_below(6));
      const CechCochainTable dd = cech_coboundary(cech_coboundary(c));
      for (const auto& [key, v] : dd.values) CHECK(v == 0);
    }
}

TEST_CASE("cech detects non-cocycles and undeclared faces") {
  const CechCover cover = CechCover::full_simplex(3, 3);
  CechCochainTable bad = CechCochainTable::zero(cover, 1, 5);
  bad.values[{0, 1}] = 1;
  CHECK(!is_cech_cocycle(bad));

  CechCover holey;
  holey.n = 3;
  holey.declared = {{0}, {1}, {2}, {0, 1}, {0, 2}, {0, 1, 2}};  // {1,2} missing
  CHECK(!holey.downward_closed());
  CHECK_THROWS((void)cech_coboundary(CechCochainTable::zero(holey, 1, 5)));
}

}  // TEST_SUITE
