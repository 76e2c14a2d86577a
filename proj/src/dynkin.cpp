#include "ade/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ade {

std::string DiagramType::name() const {
  const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return f + std::to_string(rank);
}

DiagramType DiagramType::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("bad type '" + text + "', expected A:<n>, D:<n>, or E:6|7|8"); };
  if (text.size() < 3 || text[1] != ':') throw bad();
  int n;
  try {
    std::size_t used;
    n = std::stoi(text.substr(2), &used);
    if (used != text.size() - 2) throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  switch (text[0]) {
    case 'A':
      if (n < 1) throw bad();
      return {Family::A, n};
    case 'D':
      if (n < 4) throw bad();
      return {Family::D, n};
    case 'E':
      if (n < 6 || n > 8) throw bad();
      return {Family::E, n};
    default:
      throw bad();
  }
}

bool operator==(const DiagramType& a, const DiagramType& b) {
  return a.family == b.family && a.rank == b.rank;
}

namespace {

std::vector<int> greedy_order(const Eigen::MatrixXi& adj) {
  const int n = static_cast<int>(adj.rows());
  std::vector<int> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (seen[v]) continue;
      for (int w : order)
        if (adj(v, w)) {
          pick = v;
          break;
        }
    }
    if (pick < 0) throw std::logic_error("diagram is disconnected");
    seen[pick] = true;
    order.push_back(pick);
  }
  return order;
}

}  // namespace

Diagram make_diagram(DiagramType type) {
  const int n = type.rank;
  Diagram d;
  d.type = type;
  d.rank = n;
  d.adjacency = Eigen::MatrixXi::Zero(n, n);
  auto link = [&](int a, int b) { d.adjacency(a, b) = d.adjacency(b, a) = 1; };

  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      d.ends = n == 1 ? std::vector<int>{0} : std::vector<int>{0, n - 1};
      d.center = -1;
      break;
    case Family::D: {
      for (int i = 0; i + 1 <= n - 3; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      d.ends = {0, n - 2, n - 1};
      d.center = n - 3;
      std::vector<int> long_arm;
      for (int i = 0; i <= n - 3; ++i) long_arm.push_back(i);
      d.branches = {long_arm, {n - 2, n - 3}, {n - 1, n - 3}};
      break;
    }
    case Family::E: {
      const int c = n - 4;
      for (int i = 0; i + 1 <= c; ++i) link(i, i + 1);
      link(c, c + 2);
      link(c + 2, c + 1);
      link(c, n - 1);
      d.ends = {0, c + 1, n - 1};
      d.center = c;
      std::vector<int> long_arm;
      for (int i = 0; i <= c; ++i) long_arm.push_back(i);
      d.branches = {long_arm, {c + 1, c + 2, c}, {n - 1, c}};
      break;
    }
  }
  d.order = greedy_order(d.adjacency);
  return d;
}

CartanData make_cartan(const Diagram& d) {
  const int n = d.rank;
  CartanData out;
  out.cartan = 2 * Eigen::MatrixXi::Identity(n, n) - d.adjacency;

  IntMatrix ci(n, n);
  RationalMatrix cq(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ci(i, j) = Int(out.cartan(i, j));
      cq(i, j) = Rational(out.cartan(i, j));
    }
  out.determinant = determinant(ci);
  out.inverse = inverse(cq);

  // roots as coordinate vectors, closed under the simple reflections
  // s_i(x) = x - (Cx)_i e_i; the highest root is the one of maximal height
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (int i = 0; i < n; ++i) {
        long cx = 0;
        for (int j = 0; j < n; ++j) cx += out.cartan(i, j) * x[j];
        auto y = x;
        y[i] -= static_cast<int>(cx);
        if (roots.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  int best_h = -1;
  std::vector<int> theta;
  for (const auto& x : roots) {
    int h = std::accumulate(x.begin(), x.end(), 0);
    if (h > best_h) {
      best_h = h;
      theta = x;
    }
  }
  out.marks = theta;

  out.affine_adjacency = Eigen::MatrixXi::Zero(n + 1, n + 1);
  out.affine_adjacency.block(1, 1, n, n) = d.adjacency;
  for (int i = 0; i < n; ++i) {
    long m = 0;
    for (int j = 0; j < n; ++j) m += out.cartan(i, j) * theta[j];
    out.affine_adjacency(0, i + 1) = out.affine_adjacency(i + 1, 0) = static_cast<int>(m);
  }
  out.affine_marks.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) out.affine_marks[i + 1] = theta[i];
  return out;
}

std::vector<DiagramType> standard_sweep(int max_a, int max_d) {
  std::vector<DiagramType> out;
  for (int n = 1; n <= max_a; ++n) out.push_back({Family::A, n});
  for (int n = 4; n <= max_d; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  return out;
}

namespace {

void extend_automorphism(const Eigen::MatrixXi& adj, std::vector<int>& perm,
                         std::vector<bool>& used, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(adj.rows());
  const int v = static_cast<int>(perm.size());
  if (v == n) {
    out.push_back(perm);
    return;
  }
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += adj(i, j);
  for (int img = 0; img < n; ++img) {
    if (used[img] || deg[img] != deg[v]) continue;
    bool ok = true;
    for (int w = 0; w < v && ok; ++w)
      if (adj(v, w) != adj(img, perm[w])) ok = false;
    if (!ok) continue;
    perm.push_back(img);
    used[img] = true;
    extend_automorphism(adj, perm, used, out);
    used[img] = false;
    perm.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const Diagram& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm;
  std::vector<bool> used(d.rank, false);
  extend_automorphism(d.adjacency, perm, used, out);
  return out;
}

long field_order(DiagramType type) {
  switch (type.family) {
    case Family::A:
      return 2L * (type.rank + 1);
    case Family::D:
      return std::lcm(4L, 2L * (type.rank - 2));
    case Family::E:
      return type.rank == 8 ? 20 : 8;
  }
  throw std::logic_error("unreachable");
}

}  // namespace ade
