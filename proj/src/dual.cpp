#include "ade/dual.hpp"

#include <algorithm>
#include <stdexcept>

namespace ade {

int class_power(const FiniteSubgroup& G, int cls, long m) {
  return G.class_of[G.power(G.representative(cls), m)];
}

bool generates(const FiniteSubgroup& G, const std::vector<int>& gens) {
  std::vector<bool> seen(G.order(), false);
  std::vector<int> work{0};
  seen[0] = true;
  long count = 1;
  while (!work.empty()) {
    int g = work.back();
    work.pop_back();
    for (int h : gens) {
      int q = G.mult(g, h);
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        work.push_back(q);
      }
    }
  }
  return count == G.order();
}

namespace {

// 2 cos(pi / m) as an exact cyclotomic value
Cyclotomic branch_trace(int m) {
  return Cyclotomic::root_of_unity(2 * m, 1) + Cyclotomic::root_of_unity(2 * m, 2 * m - 1);
}

}  // namespace

SpecialTriple find_special_triple(const FiniteSubgroup& G, const Diagram& d) {
  if (d.type.family == Family::A) throw std::logic_error("A types have no branch triple");
  if (G.minus_identity < 0) throw std::logic_error("-I missing from a branched group");

  SpecialTriple t;
  t.m1 = static_cast<int>(d.branches[0].size());
  t.m2 = static_cast<int>(d.branches[1].size());
  t.m3 = static_cast<int>(d.branches[2].size());
  const Cyclotomic tx = branch_trace(t.m1), ty = branch_trace(t.m2), tz = branch_trace(t.m3);

  const long n = G.order();
  for (int x = 0; x < n; ++x) {
    if (G.trace(x) != tx) continue;
    for (int y = 0; y < n; ++y) {
      if (G.trace(y) != ty) continue;
      const int z = G.mult(G.inverse[G.mult(x, y)], G.minus_identity);
      if (G.trace(z) != tz) continue;
      if (G.power(x, t.m1) != G.minus_identity || G.power(y, t.m2) != G.minus_identity ||
          G.power(z, t.m3) != G.minus_identity)
        continue;
      if (!generates(G, {x, y, z})) continue;
      t.x = x;
      t.y = y;
      t.z = z;
      return t;
    }
  }
  throw std::runtime_error("no special triple found in " + d.type.name());
}

DualData build_dual(const FiniteSubgroup& G, const Diagram& d) {
  DualData out;
  out.vertex_class.assign(d.rank, -1);

  if (d.type.family == Family::A) {
    out.has_triple = false;
    const int x = G.generators[0];
    for (int v = 0; v < d.rank; ++v) out.vertex_class[v] = G.class_of[G.power(x, v + 1)];
  } else {
    out.has_triple = true;
    out.triple = find_special_triple(G, d);
    const int elems[3] = {out.triple.x, out.triple.y, out.triple.z};
    for (int b = 0; b < 3; ++b) {
      const auto& path = d.branches[b];  // end first, center last
      for (std::size_t k = 0; k + 1 < path.size(); ++k)
        out.vertex_class[path[k]] = G.class_of[G.power(elems[b], static_cast<long>(k) + 1)];
    }
    out.vertex_class[d.center] = G.central_class;
  }

  for (int e : d.ends) out.special_classes.push_back(out.vertex_class[e]);
  return out;
}

namespace {

bool commuting_pair_exists(const FiniteSubgroup& G, int ci, int cj) {
  for (int g : G.classes[ci])
    for (int h : G.classes[cj])
      if (G.mult(g, h) == G.mult(h, g)) return true;
  return false;
}

}  // namespace

StatementReport verify_statements(const FiniteSubgroup& G, const Diagram& d, const DualData& dual) {
  StatementReport r;
  const int n = d.rank;

  // (1) bijection onto the nontrivial classes
  std::vector<bool> hit(G.num_classes(), false);
  r.bijective = true;
  for (int v = 0; v < n; ++v) {
    const int c = dual.vertex_class[v];
    if (c <= 0 || hit[c]) r.bijective = false;  // class 0 is the identity class
    else hit[c] = true;
  }
  if (n != G.num_classes() - 1) r.bijective = false;

  // (2) ends carry the special classes, in order
  r.ends_special = true;
  for (std::size_t i = 0; i < d.ends.size(); ++i)
    if (dual.vertex_class[d.ends[i]] != dual.special_classes[i]) r.ends_special = false;

  // (3) the center carries {-I}
  if (d.type.family == Family::A) {
    r.center_minus_identity = true;
  } else {
    r.center_minus_identity = dual.vertex_class[d.center] == G.central_class &&
                              G.central_class >= 0 &&
                              G.classes[G.central_class].size() == 1 &&
                              G.classes[G.central_class][0] == G.minus_identity;
  }

  // (4) branches read g, g^2, ..., closing at -I
  r.branch_progressions = true;
  if (d.type.family == Family::A) {
    const int x0 = G.representative(dual.vertex_class[0]);
    for (int v = 0; v < n; ++v)
      if (dual.vertex_class[v] != G.class_of[G.power(x0, v + 1)]) r.branch_progressions = false;
  } else {
    for (const auto& path : d.branches) {
      const int g = G.representative(dual.vertex_class[path[0]]);
      const int m = static_cast<int>(path.size());
      for (int k = 1; k < m; ++k)
        if (dual.vertex_class[path[k - 1]] != G.class_of[G.power(g, k)]) r.branch_progressions = false;
      if (G.class_of[G.power(g, m)] != G.central_class) r.branch_progressions = false;
    }
  }

  // (5) same branch <=> commuting representatives exist (branched types)
  r.branch_commuting = true;
  if (d.type.family != Family::A) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool same = false;
        for (const auto& b : d.branches)
          if (std::count(b.begin(), b.end(), i) && std::count(b.begin(), b.end(), j)) same = true;
        const bool com = commuting_pair_exists(G, dual.vertex_class[i], dual.vertex_class[j]);
        if (same != com) {
          r.branch_commuting = false;
          r.commuting_violations.push_back({i, j});
        }
      }
  }

  // (6) translating by a commuting special element realizes exactly the edges
  std::vector<bool> special(G.order(), false);
  for (int c : dual.special_classes)
    for (int u : G.classes[c]) special[u] = true;
  std::vector<std::vector<bool>> pred(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool found = false;
      for (int g : G.classes[dual.vertex_class[i]]) {
        for (long u = 0; u < G.order() && !found; ++u) {
          if (!special[u]) continue;
          const int ug = G.mult(static_cast<int>(u), g);
          if (ug == G.mult(g, static_cast<int>(u)) && G.class_of[ug] == dual.vertex_class[j])
            found = true;
        }
        if (found) break;
      }
      pred[i][j] = found;
    }
  r.translate_symmetric = true;
  r.edge_translate = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (pred[i][j] != pred[j][i]) r.translate_symmetric = false;
      const bool edge = d.adjacency(i, j) != 0;
      if ((pred[i][j] || pred[j][i]) != edge) {
        r.edge_translate = false;
        if (i < j) r.translate_diff.push_back({i, j});
      }
    }
  return r;
}

MumfordResult find_mumford(const FiniteSubgroup& G, const Diagram& d, const DualData& dual,
                           const std::vector<int>& ordering) {
  const int n = d.rank;
  MumfordResult res;
  res.ordering = ordering;
  res.rep.assign(n, -1);
  res.nodes = 0;
  res.found = false;
  res.generates_group = false;

  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (d.adjacency(v, w)) nbrs[v].push_back(w);  // ascending, the product order

  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[ordering[p]] = p;
  // vertices whose own position and whole neighborhood are placed once
  // position p is filled; their relation can be checked right there
  std::vector<std::vector<int>> complete_at(n);
  for (int v = 0; v < n; ++v) {
    int p = pos[v];
    for (int w : nbrs[v]) p = std::max(p, pos[w]);
    complete_at[p].push_back(v);
  }

  auto relation_holds = [&](int v) {
    int prod = 0;
    for (int w : nbrs[v]) prod = G.mult(prod, res.rep[w]);
    return G.mult(res.rep[v], res.rep[v]) == prod;
  };

  auto search = [&](auto&& self, int p) -> bool {
    ++res.nodes;
    if (res.nodes > 2'000'000) throw std::runtime_error("representative search explosion");
    if (p == n) return true;
    const int v = ordering[p];
    for (int g : G.classes[dual.vertex_class[v]]) {
      bool ok = true;
      for (int w : nbrs[v])
        if (res.rep[w] >= 0 && G.mult(g, res.rep[w]) != G.mult(res.rep[w], g)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      res.rep[v] = g;
      ok = true;
      for (int u : complete_at[p])
        if (!relation_holds(u)) {
          ok = false;
          break;
        }
      if (ok && self(self, p + 1)) return true;
      res.rep[v] = -1;
    }
    return false;
  };

  res.found = search(search, 0);
  if (res.found) res.generates_group = generates(G, res.rep);
  return res;
}

PresentationReport verify_presentation(const FiniteSubgroup& G, const Diagram& d, const DualData& dual) {
  PresentationReport r;

  if (d.type.family == Family::A) {
    const int x = G.generators[0];
    r.relations_in_group = G.power(x, d.rank + 1) == 0;
    r.generates_group = generates(G, {x});
    // nothing to quotient: the labeling side never leaves the cyclic group
    r.relations_in_quotient = true;
    r.generates_quotient = true;
    r.pattern = "x^" + std::to_string(d.rank + 1) + "=1";
    return r;
  }

  const auto& t = dual.triple;
  const int c = G.mult(G.mult(t.x, t.y), t.z);
  r.relations_in_group = G.power(t.x, t.m1) == c && G.power(t.y, t.m2) == c &&
                         G.power(t.z, t.m3) == c && c == G.minus_identity &&
                         G.mult(c, c) == 0 && c != 0;
  r.generates_group = generates(G, {t.x, t.y, t.z});

  // central quotient: each element is identified with -I times it
  const long n = G.order();
  std::vector<int> coset(n);
  for (long e = 0; e < n; ++e)
    coset[e] = std::min(static_cast<int>(e), G.mult(G.minus_identity, static_cast<int>(e)));
  auto qmul = [&](int a, int b) { return coset[G.mult(a, b)]; };
  auto qpow = [&](int g, int m) {
    int r2 = coset[0];
    for (int k = 0; k < m; ++k) r2 = qmul(r2, g);
    return r2;
  };
  const int hx = coset[t.x], hy = coset[t.y], hz = coset[t.z];
  r.relations_in_quotient = qpow(hx, t.m1) == coset[0] && qpow(hy, t.m2) == coset[0] &&
                            qpow(hz, t.m3) == coset[0] &&
                            qmul(qmul(hx, hy), hz) == coset[0];
  std::vector<bool> seen(n, false);
  std::vector<int> work{coset[0]};
  seen[coset[0]] = true;
  long cnt = 1;
  while (!work.empty()) {
    int g = work.back();
    work.pop_back();
    for (int h : {hx, hy, hz}) {
      int q = qmul(g, h);
      if (!seen[q]) {
        seen[q] = true;
        ++cnt;
        work.push_back(q);
      }
    }
  }
  r.generates_quotient = cnt == n / 2;

  r.pattern = "x^" + std::to_string(t.m1) + "=y^" + std::to_string(t.m2) + "=z^" +
              std::to_string(t.m3) + "=xyz=-1";
  return r;
}

}  // namespace ade
