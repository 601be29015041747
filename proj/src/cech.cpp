#include "anomaly/cech.hpp"

#include <algorithm>
#include <stdexcept>

namespace anomaly {

CechCover CechCover::full_simplex(int n, int max_tuple) {
  CechCover c;
  c.n = n;
  // All sorted tuples of size 1..max_tuple.
  for (int k = 1; k <= max_tuple; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      c.declared.insert(idx);
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return c;
}

bool CechCover::is_declared(const std::vector<int>& tuple) const {
  return declared.count(tuple) > 0;
}

bool CechCover::downward_closed() const {
  for (const auto& t : declared) {
    if (t.size() == 1) continue;
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::vector<int> face;
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != k) face.push_back(t[j]);
      if (!is_declared(face)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> CechCover::tuples_of_size(int k) const {
  std::vector<std::vector<int>> out;
  for (const auto& t : declared)
    if (static_cast<int>(t.size()) == k) out.push_back(t);
  return out;
}

CechCochainTable CechCochainTable::zero(const CechCover& cover, int p, int modulus) {
  CechCochainTable t;
  t.cover = &cover;
  t.p = p;
  t.modulus = modulus;
  for (const auto& tuple : cover.tuples_of_size(p + 1)) t.values[tuple] = 0;
  return t;
}

int CechCochainTable::at(const std::vector<int>& tuple) const {
  const auto it = values.find(tuple);
  if (it == values.end())
    throw std::runtime_error("cech: undeclared intersection referenced");
  return it->second;
}

CechCochainTable cech_coboundary(const CechCochainTable& a) {
  const CechCover& cover = *a.cover;
  CechCochainTable out = CechCochainTable::zero(cover, a.p + 1, a.modulus);
  for (auto& [tuple, value] : out.values) {
    long acc = 0;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      std::vector<int> face;
      for (std::size_t j = 0; j < tuple.size(); ++j)
        if (j != k) face.push_back(tuple[j]);
      const int term = a.at(face);
      acc += (k % 2 == 0) ? term : -term;
    }
    value = static_cast<int>(((acc % a.modulus) + a.modulus) % a.modulus);
  }
  return out;
}

bool is_cech_cocycle(const CechCochainTable& a) {
  const CechCochainTable d = cech_coboundary(a);
  return std::all_of(d.values.begin(), d.values.end(),
                     [](const auto& kv) { return kv.second == 0; });
}

}  // namespace anomaly
