#include "ade/table_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ade/fourier.hpp"

namespace ade {

namespace {

std::vector<std::vector<int>> canonical_partition(std::vector<std::vector<int>> parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return parts;
}

}  // namespace

TableOracle brute_force_oracle(const Eigen::MatrixXi& mult) {
  const int n = static_cast<int>(mult.rows());

  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mult(e, x) == x && mult(x, e) == x;
    if (ok) id = e;
  }
  if (id < 0) throw std::invalid_argument("table has no identity");

  std::vector<int> inv(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (mult(g, h) == id) {
        inv[g] = h;
        break;
      }
  for (int g = 0; g < n; ++g)
    if (inv[g] < 0) throw std::invalid_argument("table element without inverse");

  TableOracle oracle;

  // classes: the (quadratic) orbit of every element under all conjugations
  std::vector<int> cls_of(n, -1);
  for (int g = 0; g < n; ++g) {
    if (cls_of[g] >= 0) continue;
    const int c = static_cast<int>(oracle.classes.size());
    std::vector<int> orbit;
    for (int h = 0; h < n; ++h) {
      const int k = mult(mult(inv[h], g), h);
      if (cls_of[k] < 0) {
        cls_of[k] = c;
        orbit.push_back(k);
      }
    }
    oracle.classes.push_back(std::move(orbit));
  }
  oracle.classes = canonical_partition(std::move(oracle.classes));

  for (int g = 0; g < n; ++g) {
    bool central = true;
    for (int h = 0; h < n && central; ++h) central = mult(g, h) == mult(h, g);
    if (central) oracle.center.push_back(g);
  }

  // derived subgroup from every commutator; the set of all commutators is
  // conjugation-stable, so plain product closure already gives a normal
  // subgroup
  std::vector<char> in_K(n, 0);
  std::vector<int> members;
  std::vector<int> work;
  auto add = [&](int e) {
    if (!in_K[e]) {
      in_K[e] = 1;
      members.push_back(e);
      work.push_back(e);
    }
  };
  add(id);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) add(mult(inv[mult(h, g)], mult(g, h)));
  while (!work.empty()) {
    const int e = work.back();
    work.pop_back();
    for (size_t i = 0; i < members.size(); ++i) add(mult(e, members[i]));
  }

  oracle.ab_order = n / static_cast<long>(members.size());
  oracle.ab_exponent = 1;
  for (int g = 0; g < n; ++g) {
    long m = 1;
    int p = g;
    while (!in_K[p]) {
      p = mult(p, g);
      ++m;
    }
    oracle.ab_exponent = std::lcm(oracle.ab_exponent, m);
  }
  return oracle;
}

OracleComparison compare_with_oracle(const FiniteSubgroup& G, long limit) {
  OracleComparison cmp{};
  cmp.applicable = G.order() <= limit;
  if (!cmp.applicable) return cmp;

  const TableOracle oracle = brute_force_oracle(G.mult);

  cmp.classes_match = canonical_partition(G.classes) == oracle.classes;

  std::vector<int> singletons;
  for (const auto& c : G.classes)
    if (c.size() == 1) singletons.push_back(c[0]);
  std::sort(singletons.begin(), singletons.end());
  cmp.center_matches = singletons == oracle.center;

  const auto [ab_order, ab_exponent] = abelianization_invariants(G);
  cmp.abelianization_matches = ab_order == oracle.ab_order && ab_exponent == oracle.ab_exponent;
  return cmp;
}

}  // namespace ade
