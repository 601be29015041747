#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anomaly/common.hpp"

namespace anomaly {

// Finite group as a multiplication table; element 0 is the identity.
struct FiniteGroup {
  int n = 0;
  std::vector<int> mul;  // n*n, row-major: mul[a*n+b] = a.b
  std::vector<int> inv;
  std::vector<std::string> names;

  int op(int a, int b) const { return mul[a * n + b]; }
  static FiniteGroup cyclic(int k);
  static FiniteGroup klein4();
  static FiniteGroup symmetric3();
  // Direct product a x b (used for trivial extensions).
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);
};

bool is_group_table(const FiniteGroup& g);
bool is_homomorphism(const FiniteGroup& h, const FiniteGroup& g, const std::vector<int>& f);

// Coefficient module: Z_m with a (possibly trivial) G-action by
// automorphisms.
struct GroupModule {
  int m = 0;
  std::vector<std::vector<int>> act;  // act[g][a]
  static GroupModule trivial(const FiniteGroup& g, int m);
};

// p-cochain table f: G^p -> Z_m, stored mixed-radix (first argument is the
// most significant digit).  Normalized cochains vanish whenever any argument
// is the identity.
struct GroupCochainTable {
  const FiniteGroup* g = nullptr;
  const GroupModule* a = nullptr;
  int p = 0;
  std::vector<int> values;  // size n^p

  static GroupCochainTable zero(const FiniteGroup& g, const GroupModule& a, int p);
  int at(const std::vector<int>& args) const;
  void set(const std::vector<int>& args, int v);
  bool normalized() const;
};

// Inhomogeneous bar-resolution coboundary:
//   (df)(g1..gp+1) = g1.f(g2..gp+1)
//                  + sum_{i=1..p} (-1)^i f(g1,..,g_i g_{i+1},..,gp+1)
//                  + (-1)^{p+1} f(g1..gp).
GroupCochainTable group_coboundary(const GroupCochainTable& f);

bool is_group_cocycle(const GroupCochainTable& f);

struct H2Result {
  std::uint64_t z2 = 0;  // normalized 2-cocycles
  std::uint64_t b2 = 0;  // normalized 2-coboundaries
  std::uint64_t h2 = 0;  // z2 / b2
};

// Exhaustive enumeration of normalized 2-cochains.  Guard: |G| <= 8,
// |A| <= 8 and |A|^((|G|-1)^2) <= 2^22 states; throws otherwise.
H2Result h2_brute_force(const FiniteGroup& g, const GroupModule& a);

}  // namespace anomaly
