#include <algorithm>
#include <map>
#include <set>

#include "ade/dual.hpp"
#include "doctest.h"

using namespace ade;

namespace {

struct Bundle {
  FiniteSubgroup G;
  Diagram d;
  DualData dual;
};

const Bundle& bundle(Family f, int n) {
  static std::map<std::pair<int, int>, Bundle> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Bundle b{build_group({f, n}), make_diagram({f, n}), {}};
    b.dual = build_dual(b.G, b.d);
    it = cache.emplace(key, std::move(b)).first;
  }
  return it->second;
}

using Pairs = std::vector<std::array<int, 2>>;

}  // namespace

TEST_CASE("special triples match the known element orders") {
  {
    const auto& b = bundle(Family::E, 6);
    REQUIRE(b.dual.has_triple);
    CHECK(b.G.element_order(b.dual.triple.x) == 6);
    CHECK(b.G.element_order(b.dual.triple.y) == 6);
    CHECK(b.G.element_order(b.dual.triple.z) == 4);
    CHECK(b.dual.triple.m1 == 3);
    CHECK(b.dual.triple.m2 == 3);
    CHECK(b.dual.triple.m3 == 2);
  }
  {
    const auto& b = bundle(Family::E, 8);
    CHECK(b.G.element_order(b.dual.triple.x) == 10);
    CHECK(b.G.element_order(b.dual.triple.y) == 6);
    CHECK(b.G.element_order(b.dual.triple.z) == 4);
  }
  {
    const auto& b = bundle(Family::D, 5);
    CHECK(b.dual.triple.m1 == 3);
    CHECK(b.dual.triple.m2 == 2);
    CHECK(b.dual.triple.m3 == 2);
    CHECK(b.G.element_order(b.dual.triple.x) == 6);
  }
  for (int n = 4; n <= 12; ++n) {
    const auto& b = bundle(Family::D, n);
    const auto& t = b.dual.triple;
    CHECK(b.G.power(t.x, t.m1) == b.G.minus_identity);
    CHECK(b.G.power(t.y, 2) == b.G.minus_identity);
    CHECK(b.G.power(t.z, 2) == b.G.minus_identity);
    CHECK(b.G.mult(b.G.mult(t.x, t.y), t.z) == b.G.minus_identity);
  }
}

TEST_CASE("labeling statements: everything except the commuting dichotomy") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& b = bundle(type.family, type.rank);
    auto r = verify_statements(b.G, b.d, b.dual);
    CAPTURE(type.name());
    CHECK(r.bijective);
    CHECK(r.ends_special);
    CHECK(r.center_minus_identity);
    CHECK(r.branch_progressions);
    CHECK(r.translate_symmetric);
    CHECK(r.edge_translate);
    CHECK(r.translate_diff.empty());
  }
}

TEST_CASE("commuting dichotomy holds exactly where expected") {
  // the exceptions are stable: classes on distinct short branches can share
  // commuting members when one class is the inverse of the other
  std::map<std::string, Pairs> expected_violations{
      {"D5", {{3, 4}}},  {"D7", {{5, 6}}},   {"D9", {{7, 8}}},  {"D11", {{9, 10}}},
      {"E6", {{0, 3}, {0, 4}, {1, 3}, {1, 4}}}};
  for (auto type : standard_sweep(12, 12)) {
    const auto& b = bundle(type.family, type.rank);
    auto r = verify_statements(b.G, b.d, b.dual);
    CAPTURE(type.name());
    auto it = expected_violations.find(type.name());
    if (it == expected_violations.end()) {
      CHECK(r.branch_commuting);
      CHECK(r.commuting_violations.empty());
    } else {
      CHECK_FALSE(r.branch_commuting);
      CHECK(r.commuting_violations == it->second);
    }
  }
}

TEST_CASE("representatives exist, satisfy the relations, and generate") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& b = bundle(type.family, type.rank);
    auto m = find_mumford(b.G, b.d, b.dual, b.d.order);
    CAPTURE(type.name());
    REQUIRE(m.found);
    CHECK(m.generates_group);
    // the class-internal scan order makes the search backtrack-free
    CHECK(m.nodes == b.d.rank + 1);
    for (int v = 0; v < b.d.rank; ++v) {
      CHECK(b.G.class_of[m.rep[v]] == b.dual.vertex_class[v]);
      int prod = 0;
      for (int w = 0; w < b.d.rank; ++w)
        if (b.d.adjacency(v, w)) prod = b.G.mult(prod, m.rep[w]);
      CHECK(b.G.mult(m.rep[v], m.rep[v]) == prod);
      for (int w = v + 1; w < b.d.rank; ++w)
        if (b.d.adjacency(v, w))
          CHECK(b.G.mult(m.rep[v], m.rep[w]) == b.G.mult(m.rep[w], m.rep[v]));
    }
  }
}

TEST_CASE("search also succeeds from the opposite end of the diagram") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& b = bundle(type.family, type.rank);
    // greedy order rooted at the last vertex instead of the first
    std::vector<int> order{b.d.rank - 1};
    std::set<int> seen{b.d.rank - 1};
    while (static_cast<int>(order.size()) < b.d.rank) {
      for (int v = 0; v < b.d.rank; ++v) {
        if (seen.count(v)) continue;
        bool adj = false;
        for (int w : order)
          if (b.d.adjacency(v, w)) adj = true;
        if (adj) {
          order.push_back(v);
          seen.insert(v);
          break;
        }
      }
    }
    auto m = find_mumford(b.G, b.d, b.dual, order);
    CAPTURE(type.name());
    CHECK(m.found);
    CHECK(m.generates_group);
  }
}

TEST_CASE("presentation relations in the group and its central quotient") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& b = bundle(type.family, type.rank);
    auto p = verify_presentation(b.G, b.d, b.dual);
    CAPTURE(type.name());
    CHECK(p.relations_in_group);
    CHECK(p.relations_in_quotient);
    CHECK(p.generates_group);
    CHECK(p.generates_quotient);
  }
  CHECK(verify_presentation(bundle(Family::D, 6).G, bundle(Family::D, 6).d, bundle(Family::D, 6).dual)
            .pattern == "x^4=y^2=z^2=xyz=-1");
  CHECK(verify_presentation(bundle(Family::E, 8).G, bundle(Family::E, 8).d, bundle(Family::E, 8).dual)
            .pattern == "x^5=y^3=z^2=xyz=-1");
  CHECK(verify_presentation(bundle(Family::A, 3).G, bundle(Family::A, 3).d, bundle(Family::A, 3).dual)
            .pattern == "x^4=1");
}

TEST_CASE("class power map is well defined") {
  const auto& b = bundle(Family::E, 7);
  for (int c = 0; c < b.G.num_classes(); ++c)
    for (long m = 0; m <= 8; ++m) {
      const int expect = class_power(b.G, c, m);
      for (int g : b.G.classes[c]) CHECK(b.G.class_of[b.G.power(g, m)] == expect);
    }
}
