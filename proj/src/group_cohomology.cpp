#include "anomaly/group_cohomology.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace anomaly {

FiniteGroup FiniteGroup::cyclic(int k) {
  FiniteGroup g;
  g.n = k;
  g.mul.resize(static_cast<std::size_t>(k) * k);
  g.inv.resize(k);
  g.names.resize(k);
  for (int a = 0; a < k; ++a) {
    g.names[a] = std::to_string(a);
    g.inv[a] = (k - a) % k;
    for (int b = 0; b < k; ++b) g.mul[a * k + b] = (a + b) % k;
  }
  return g;
}

FiniteGroup FiniteGroup::klein4() {
  FiniteGroup g;
  g.n = 4;
  g.names = {"e", "a", "b", "ab"};
  g.mul.resize(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g.mul[a * 4 + b] = a ^ b;
  g.inv = {0, 1, 2, 3};
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} listed with the identity first.
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  FiniteGroup g;
  g.n = 6;
  g.names = {"e", "(012)", "(021)", "(12)", "(02)", "(01)"};
  g.mul.resize(36);
  auto find = [&](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    throw std::logic_error("symmetric3: permutation not found");
  };
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      // (a.b)(x) = a(b(x))
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      g.mul[a * 6 + b] = find(comp);
    }
  g.inv.resize(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (g.op(a, b) == 0) g.inv[a] = b;
  return g;
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  FiniteGroup g;
  g.n = a.n * b.n;
  g.mul.resize(static_cast<std::size_t>(g.n) * g.n);
  g.inv.resize(g.n);
  g.names.resize(g.n);
  auto enc = [&](int x, int y) { return x * b.n + y; };
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y) {
      const int e = enc(x, y);
      g.names[e] = "(" + a.names[x] + "," + b.names[y] + ")";
      g.inv[e] = enc(a.inv[x], b.inv[y]);
      for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v) g.mul[e * g.n + enc(u, v)] = enc(a.op(x, u), b.op(y, v));
    }
  return g;
}

bool is_group_table(const FiniteGroup& g) {
  for (int a = 0; a < g.n; ++a)
    if (g.op(0, a) != a || g.op(a, 0) != a || g.op(a, g.inv[a]) != 0) return false;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) return false;
  return true;
}

bool is_homomorphism(const FiniteGroup& h, const FiniteGroup& g, const std::vector<int>& f) {
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (f[h.op(a, b)] != g.op(f[a], f[b])) return false;
  return true;
}

GroupModule GroupModule::trivial(const FiniteGroup& g, int m) {
  GroupModule mod;
  mod.m = m;
  mod.act.assign(g.n, {});
  for (int e = 0; e < g.n; ++e) {
    mod.act[e].resize(m);
    for (int a = 0; a < m; ++a) mod.act[e][a] = a;
  }
  return mod;
}

GroupCochainTable GroupCochainTable::zero(const FiniteGroup& g, const GroupModule& a, int p) {
  GroupCochainTable t;
  t.g = &g;
  t.a = &a;
  t.p = p;
  std::size_t size = 1;
  for (int i = 0; i < p; ++i) size *= static_cast<std::size_t>(g.n);
  t.values.assign(size, 0);
  return t;
}

int GroupCochainTable::at(const std::vector<int>& args) const {
  std::size_t idx = 0;
  for (int v : args) idx = idx * g->n + static_cast<std::size_t>(v);
  return values[idx];
}

void GroupCochainTable::set(const std::vector<int>& args, int v) {
  std::size_t idx = 0;
  for (int x : args) idx = idx * g->n + static_cast<std::size_t>(x);
  values[idx] = v;
}

bool GroupCochainTable::normalized() const {
  std::vector<int> args(p, 0);
  const int n = g->n;
  const std::size_t total = values.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    bool has_identity = false;
    for (int i = p - 1; i >= 0; --i) {
      args[i] = static_cast<int>(rest % n);
      rest /= n;
      if (args[i] == 0) has_identity = true;
    }
    if (has_identity && values[idx] != 0) return false;
  }
  return true;
}

GroupCochainTable group_coboundary(const GroupCochainTable& f) {
  const FiniteGroup& g = *f.g;
  const GroupModule& mod = *f.a;
  GroupCochainTable out = GroupCochainTable::zero(g, mod, f.p + 1);
  const int p = f.p;
  std::vector<int> args(p + 1), sub(p);
  const std::size_t total = out.values.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int i = p; i >= 0; --i) {
      args[i] = static_cast<int>(rest % g.n);
      rest /= g.n;
    }
    long acc = 0;
    // g1 . f(g2..gp+1)
    for (int i = 0; i < p; ++i) sub[i] = args[i + 1];
    acc += mod.act[args[0]][f.at(sub)];
    // middle terms
    for (int i = 1; i <= p; ++i) {
      int k = 0;
      for (int j = 0; j <= p; ++j) {
        if (j == i) continue;
        sub[k] = (j == i - 1) ? g.op(args[i - 1], args[i]) : args[j];
        ++k;
      }
      const int term = f.at(sub);
      acc += (i % 2 == 0) ? term : -term;
    }
    // (-1)^{p+1} f(g1..gp)
    for (int i = 0; i < p; ++i) sub[i] = args[i];
    const int last = f.at(sub);
    acc += ((p + 1) % 2 == 0) ? last : -last;
    out.values[idx] = static_cast<int>(((acc % mod.m) + mod.m) % mod.m);
  }
  return out;
}

bool is_group_cocycle(const GroupCochainTable& f) {
  const GroupCochainTable d = group_coboundary(f);
  return std::all_of(d.values.begin(), d.values.end(), [](int v) { return v == 0; });
}

H2Result h2_brute_force(const FiniteGroup& g, const GroupModule& a) {
  if (g.n > 8 || a.m > 8) throw std::invalid_argument("h2_brute_force: group/module too large");
  const int free_args = (g.n - 1) * (g.n - 1);
  double states = 1.0;
  for (int i = 0; i < free_args; ++i) states *= a.m;
  if (states > static_cast<double>(1 << 22))
    throw std::invalid_argument("h2_brute_force: enumeration infeasible (guard)");

  // Free positions: pairs (x, y) with x, y != identity.
  std::vector<std::pair<int, int>> slots;
  for (int x = 1; x < g.n; ++x)
    for (int y = 1; y < g.n; ++y) slots.emplace_back(x, y);

  H2Result res;
  GroupCochainTable f = GroupCochainTable::zero(g, a, 2);
  std::vector<int> digits(slots.size(), 0);
  const std::uint64_t nstates = static_cast<std::uint64_t>(states);
  for (std::uint64_t s = 0; s < nstates; ++s) {
    std::uint64_t rest = s;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      digits[i] = static_cast<int>(rest % a.m);
      rest /= a.m;
      f.set({slots[i].first, slots[i].second}, digits[i]);
    }
    if (is_group_cocycle(f)) ++res.z2;
  }

  // Coboundaries of normalized 1-cochains, counted as distinct tables.
  std::vector<std::vector<int>> boundaries;
  GroupCochainTable h = GroupCochainTable::zero(g, a, 1);
  std::uint64_t n1 = 1;
  for (int i = 1; i < g.n; ++i) n1 *= static_cast<std::uint64_t>(a.m);
  for (std::uint64_t s = 0; s < n1; ++s) {
    std::uint64_t rest = s;
    for (int x = 1; x < g.n; ++x) {
      h.set({x}, static_cast<int>(rest % a.m));
      rest /= a.m;
    }
    const GroupCochainTable d = group_coboundary(h);
    if (std::find(boundaries.begin(), boundaries.end(), d.values) == boundaries.end())
      boundaries.push_back(d.values);
  }
  res.b2 = boundaries.size();
  if (res.b2 == 0 || res.z2 % res.b2 != 0)
    throw std::logic_error("h2_brute_force: cocycle count not divisible by coboundary count");
  res.h2 = res.z2 / res.b2;
  return res;
}

}  // namespace anomaly
