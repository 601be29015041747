#pragma once

#include <map>
#include <set>
#include <vector>

namespace anomaly {

// Abstract open cover: patch index set {0..n-1} plus the declared nonempty
// intersections (sorted index tuples).  Downward closure is required so that
// every face referenced by a coboundary is declared.
struct CechCover {
  int n = 0;
  std::set<std::vector<int>> declared;

  static CechCover full_simplex(int n, int max_tuple);
  bool is_declared(const std::vector<int>& tuple) const;
  bool downward_closed() const;
  std::vector<std::vector<int>> tuples_of_size(int k) const;
};

// p-cochain: values in Z_modulus on declared (p+1)-tuples.
struct CechCochainTable {
  const CechCover* cover = nullptr;
  int p = 0;
  int modulus = 0;
  std::map<std::vector<int>, int> values;

  static CechCochainTable zero(const CechCover& cover, int p, int modulus);
  int at(const std::vector<int>& tuple) const;
};

// (d a)(i0..ip+1) = sum_k (-1)^k a(i0..\hat{i_k}..ip+1) on every declared
// (p+2)-tuple; throws if an omitted face is not declared.
CechCochainTable cech_coboundary(const CechCochainTable& a);

bool is_cech_cocycle(const CechCochainTable& a);

}  // namespace anomaly
