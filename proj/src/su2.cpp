#include "ade/su2.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace ade {

namespace {

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2 identity_matrix(long N) {
  Mat2 m;
  m(0, 0) = m(1, 1) = Cyclotomic(1).lifted_to(N);
  m(0, 1) = m(1, 0) = Cyclotomic(0).lifted_to(N);
  return m;
}

// det = 1, so the adjugate is the inverse
Mat2 su2_inverse(const Mat2& m) {
  Mat2 r;
  r(0, 0) = m(1, 1);
  r(1, 1) = m(0, 0);
  r(0, 1) = -m(0, 1);
  r(1, 0) = -m(1, 0);
  return r;
}

}  // namespace

std::string element_key(const Mat2& m) {
  return m(0, 0).key() + ";" + m(0, 1).key() + ";" + m(1, 0).key() + ";" + m(1, 1).key();
}

bool mat2_equal(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Mat2 quaternion_matrix(long N, const Cyclotomic& a, const Cyclotomic& b,
                       const Cyclotomic& c, const Cyclotomic& d) {
  if (N % 4 != 0) throw std::invalid_argument("quaternion_matrix: N must be divisible by 4");
  const Cyclotomic i = Cyclotomic::root_of_unity(N, N / 4);
  Mat2 m;
  m(0, 0) = (a + b * i).lifted_to(N);
  m(0, 1) = (c + d * i).lifted_to(N);
  m(1, 0) = (-c + d * i).lifted_to(N);
  m(1, 1) = (a - b * i).lifted_to(N);
  return m;
}

std::vector<Mat2> subgroup_generators(DiagramType type) {
  const long N = field_order(type);
  const Cyclotomic zero(0), one(1), half(Rational(1, 2));
  std::vector<Mat2> gens;

  auto diagonal = [&](long root_order) {
    const Cyclotomic z = Cyclotomic::root_of_unity(root_order, 1);
    Mat2 m;
    m(0, 0) = z.lifted_to(N);
    m(0, 1) = zero.lifted_to(N);
    m(1, 0) = zero.lifted_to(N);
    m(1, 1) = z.inverse().lifted_to(N);
    return m;
  };

  switch (type.family) {
    case Family::A:
      gens.push_back(diagonal(type.rank + 1));
      break;
    case Family::D:
      gens.push_back(diagonal(2L * (type.rank - 2)));
      gens.push_back(quaternion_matrix(N, zero, zero, one, zero));
      break;
    case Family::E:
      gens.push_back(quaternion_matrix(N, zero, one, zero, zero));
      gens.push_back(quaternion_matrix(N, zero, zero, one, zero));
      if (type.rank == 8) {
        // golden ratio inside Q(zeta_20): tau = -(zeta_5^2 + zeta_5^3)
        const Cyclotomic z5 = Cyclotomic::root_of_unity(20, 4);
        const Cyclotomic tau = -(z5 * z5) - (z5 * z5 * z5);
        const Cyclotomic tau_inv = tau - one;  // tau^2 = tau + 1
        gens.push_back(quaternion_matrix(N, tau_inv * half, tau * half, half, zero));
      } else {
        gens.push_back(quaternion_matrix(N, half, half, half, half));
        if (type.rank == 7) gens.push_back(diagonal(8));
      }
      break;
  }
  return gens;
}

int FiniteSubgroup::power(int g, long m) const {
  int r = 0;
  for (long k = 0; k < m; ++k) r = mult(r, g);
  return r;
}

long FiniteSubgroup::element_order(int g) const {
  int r = g;
  long m = 1;
  while (r != 0) {
    r = mult(r, g);
    ++m;
  }
  return m;
}

Cyclotomic FiniteSubgroup::trace(int g) const {
  return elements[g](0, 0) + elements[g](1, 1);
}

FiniteSubgroup build_group(DiagramType type, long max_order) {
  FiniteSubgroup G;
  G.type = type;
  G.field = field_order(type);

  std::unordered_map<std::string, int> index;
  auto intern = [&](const Mat2& m) {
    auto [it, fresh] = index.try_emplace(element_key(m), static_cast<int>(G.elements.size()));
    if (fresh) {
      G.elements.push_back(m);
      if (static_cast<long>(G.elements.size()) > max_order)
        throw std::runtime_error("group closure exceeded " + std::to_string(max_order) + " elements");
    }
    return it->second;
  };

  intern(identity_matrix(G.field));
  for (const Mat2& g : subgroup_generators(type)) G.generators.push_back(intern(g));

  // right-multiplication closure; remember how each element was first
  // reached so the full table can later be filled by lookups alone
  std::vector<std::pair<int, int>> parent(G.elements.size(), {-1, -1});  // (p, gen slot): j = p * gens[slot]
  for (std::size_t s = 0; s < G.generators.size(); ++s)
    if (G.generators[s] != 0 && parent[G.generators[s]].first < 0)
      parent[G.generators[s]] = {0, static_cast<int>(s)};
  std::vector<std::vector<int>> gen_column(G.generators.size());
  for (std::size_t i = 0; i < G.elements.size(); ++i)
    for (std::size_t s = 0; s < G.generators.size(); ++s) {
      const std::size_t before = G.elements.size();
      int k = intern(mul(G.elements[i], G.elements[G.generators[s]]));
      if (G.elements.size() > before) parent.push_back({static_cast<int>(i), static_cast<int>(s)});
      gen_column[s].push_back(k);  // gen_column[s][i] = i * gens[s]
    }

  const long n = G.order();
  G.mult.resize(n, n);
  // columns in discovery order: identity, then j = p * gens[s] with p < j,
  // so i*j = (i*p)*gens[s] reads two already-filled entries
  for (long i = 0; i < n; ++i) G.mult(i, 0) = static_cast<int>(i);
  for (long j = 1; j < n; ++j) {
    auto [p, s] = parent[j];
    if (p == 0) {
      for (long i = 0; i < n; ++i) G.mult(i, j) = gen_column[s][i];
    } else {
      for (long i = 0; i < n; ++i) G.mult(i, j) = gen_column[s][G.mult(i, p)];
    }
  }

  G.inverse.resize(n);
  for (long i = 0; i < n; ++i) {
    auto it = index.find(element_key(su2_inverse(G.elements[i])));
    if (it == index.end()) throw std::logic_error("inverse left the closed set");
    G.inverse[i] = it->second;
    if (G.mult(i, G.inverse[i]) != 0) throw std::logic_error("inverse table is wrong");
  }

  {
    Mat2 mi = identity_matrix(G.field);
    mi(0, 0) = -mi(0, 0);
    mi(1, 1) = -mi(1, 1);
    auto it = index.find(element_key(mi));
    G.minus_identity = it == index.end() ? -1 : it->second;
  }

  // conjugacy classes: orbit closure under conjugation by the generators
  G.class_of.assign(n, -1);
  for (long e = 0; e < n; ++e) {
    if (G.class_of[e] != -1) continue;
    const int cls = static_cast<int>(G.classes.size());
    std::vector<int> orbit;
    std::deque<int> todo{static_cast<int>(e)};
    G.class_of[e] = cls;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      orbit.push_back(x);
      for (int g : G.generators) {
        int y = G.mult(G.mult(G.inverse[g], x), g);
        if (G.class_of[y] == -1) {
          G.class_of[y] = cls;
          todo.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    G.classes.push_back(std::move(orbit));
  }
  G.central_class = G.minus_identity < 0 ? -1 : G.class_of[G.minus_identity];
  return G;
}

}  // namespace ade
