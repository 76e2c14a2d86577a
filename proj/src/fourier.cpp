#include "ade/fourier.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ade {

namespace {

constexpr std::complex<double> kTwoPiI{0.0, 2.0 * std::numbers::pi};

// unit circle point exp(-2 pi i t)
std::complex<double> phase(double t) { return std::exp(-kTwoPiI * t); }

// D(j, k) = det of the class of finite vertex j in the irrep of finite
// vertex k (affine index k+1)
Eigen::MatrixXcd det_matrix(const FiniteSubgroup& G, const CharacterTable& T, const DualData& dual,
                            const std::vector<int>& irrep_of) {
  const int r = static_cast<int>(dual.vertex_class.size());
  Eigen::MatrixXcd D(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      D(j, k) = det_character(G, T, irrep_of[k + 1], dual.vertex_class[j]);
  return D;
}

std::vector<int> graph_distances(const Eigen::MatrixXi& adj, int from) {
  const int n = static_cast<int>(adj.rows());
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w = 0; w < n; ++w)
      if (adj(v, w) != 0 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

std::vector<int> correspondence_map(const FiniteSubgroup& G, const CharacterTable& T,
                                    const Diagram& d, const CartanData& cartan,
                                    const McKayGraph& mckay, const DualData& dual) {
  if (d.type.family != Family::A) {
    AffineMatch m = match_affine(cartan, mckay, T);
    if (!m.found) throw std::logic_error("no affine match for " + d.type.name());
    return m.irrep_of;
  }

  // A types: orient by the labeling generator. Vertex v takes the unique
  // character with value zeta_{n+1}^v on the class of x; the generic match
  // would only determine the assignment up to reversing the path.
  const int n = d.rank;
  const int x_class = dual.vertex_class[0];
  std::vector<int> irrep_of(n + 1, -1);
  irrep_of[0] = T.trivial;
  for (int v = 1; v <= n; ++v) {
    const std::complex<double> want = phase(-static_cast<double>(v) / (n + 1));
    int hit = -1;
    for (int a = 0; a < T.num_irreps(); ++a) {
      if (std::abs(T.values(a, x_class) - want) < 1e-8) {
        if (hit >= 0) throw std::logic_error("ambiguous cyclic character match");
        hit = a;
      }
    }
    if (hit < 0) throw std::logic_error("no cyclic character match");
    irrep_of[v] = hit;
  }

  // the oriented assignment must still be the graph isomorphism
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      if (mckay.multiplicities(irrep_of[a], irrep_of[b]) != cartan.affine_adjacency(a, b))
        throw std::logic_error("oriented cyclic match is not an isomorphism");
  return irrep_of;
}

std::complex<double> det_character(const FiniteSubgroup& G, const CharacterTable& T, int irrep,
                                   int cls) {
  const int deg = T.dims[irrep];
  // power sums of the eigenvalues of the representing matrix are character
  // values at powers of the class
  std::vector<std::complex<double>> p(deg + 1), e(deg + 1);
  for (int m = 1; m <= deg; ++m) p[m] = T.values(irrep, class_power(G, cls, m));
  e[0] = 1.0;
  for (int m = 1; m <= deg; ++m) {
    std::complex<double> acc = 0.0;
    for (int i = 1; i <= m; ++i) {
      const std::complex<double> term = e[m - i] * p[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    e[m] = acc / static_cast<double>(m);
  }
  return e[deg];
}

HeadlineResult headline_identity(const FiniteSubgroup& G, const CharacterTable& T, const Diagram& d,
                                 const CartanData& cartan, const DualData& dual,
                                 const std::vector<int>& irrep_of, double tol) {
  const int r = d.rank;
  HeadlineResult res;
  res.dets = det_matrix(G, T, dual, irrep_of);
  res.target.resize(r, r);
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) res.target(j, k) = phase(to_double(cartan.inverse(j, k)));

  // both labelings are canonical only up to a symmetry of the diagram, so
  // the identity is off by one symmetry on each side; sweep all pairs
  const std::vector<std::vector<int>> auts = diagram_automorphisms(d);
  res.automorphisms = static_cast<long>(auts.size());
  res.deviation = -1.0;
  for (const auto& sigma : auts) {
    for (const auto& tau : auts) {
      double dev = 0.0;
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          dev = std::max(dev, std::abs(res.dets(sigma[j], tau[k]) - res.target(j, k)));
      if (res.deviation < 0 || dev < res.deviation) {
        res.deviation = dev;
        res.sigma = sigma;
        res.tau = tau;
      }
      if (&sigma == &auts.front() && &tau == &auts.front()) res.raw_deviation = dev;
    }
  }
  res.pass = res.deviation <= tol;
  return res;
}

double cyclic_fourier_deviation(const FiniteSubgroup& G, const CharacterTable& T, const Diagram& d,
                                const DualData& dual, const std::vector<int>& irrep_of) {
  if (d.type.family != Family::A)
    throw std::invalid_argument("cyclic matrix is defined for A types only");
  const int n = d.rank;
  // row j reads the path from the far end: the class of x^{-j}
  double dev = 0.0;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      const std::complex<double> got =
          det_character(G, T, irrep_of[k], dual.vertex_class[n - j]);
      dev = std::max(dev, std::abs(got - phase(static_cast<double>(j) * k / (n + 1))));
    }
  return dev;
}

double neumann_deviation(const Diagram& d, const CartanData& cartan, int terms) {
  const int r = d.rank;
  const Eigen::MatrixXd half = d.adjacency.cast<double>() / 2.0;
  Eigen::MatrixXd pow = Eigen::MatrixXd::Identity(r, r);
  Eigen::MatrixXd sum = pow;
  for (int k = 1; k < terms; ++k) {
    pow = pow * half;
    sum += pow;
  }
  sum /= 2.0;
  double dev = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) dev = std::max(dev, std::abs(sum(i, j) - to_double(cartan.inverse(i, j))));
  return dev;
}

BoundReport inverse_bound_report(const Diagram& d, const CartanData& cartan) {
  const int r = d.rank;
  BoundReport rep;
  rep.all_positive = true;
  rep.min_diagonal_slack = Rational(0);
  rep.min_offdiagonal_slack = Rational(0);
  bool have_off = false, have_diag = false;
  for (int i = 0; i < r; ++i) {
    const std::vector<int> dist = graph_distances(d.adjacency, i);
    for (int j = 0; j < r; ++j) {
      const Rational entry = cartan.inverse(i, j);
      if (entry <= 0) rep.all_positive = false;
      // claimed: entry >= 2^{1-n} / 3 with n the graph distance from i to j
      const Rational bound =
          Rational(2) / (Rational(3) * (Int(1) << dist[j]));
      const Rational slack = entry - bound;
      if (i == j) {
        if (!have_diag || slack < rep.min_diagonal_slack) rep.min_diagonal_slack = slack;
        have_diag = true;
      } else {
        if (!have_off || slack < rep.min_offdiagonal_slack) rep.min_offdiagonal_slack = slack;
        have_off = true;
      }
    }
  }
  rep.offdiagonal_pass = !have_off || rep.min_offdiagonal_slack >= 0;
  rep.sharp = have_off && rep.min_offdiagonal_slack == 0;
  return rep;
}

std::pair<long, long> abelianization_invariants(const FiniteSubgroup& G) {
  const long n = G.order();

  // derived subgroup: commutators of the generators, closed under
  // conjugation by generators and under products
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
  add(0);
  for (int a : G.generators)
    for (int b : G.generators) {
      const int ab = G.mult(a, b);
      const int ba = G.mult(b, a);
      add(G.mult(G.inverse[ba], ab));
    }
  while (!work.empty()) {
    const int e = work.back();
    work.pop_back();
    for (int s : G.generators) add(G.mult(G.mult(G.inverse[s], e), s));
    // members may grow during the loop; the later element of any pair sees
    // the earlier one already present when its own turn comes
    for (size_t i = 0; i < members.size(); ++i) add(G.mult(e, members[i]));
  }

  const long ab_order = n / static_cast<long>(members.size());
  long exponent = 1;
  for (int g = 0; g < n; ++g) {
    long m = 1;
    int p = g;
    while (!in_K[p]) {
      p = G.mult(p, g);
      ++m;
    }
    exponent = std::lcm(exponent, m);
  }
  return {ab_order, exponent};
}

AbelianizationReport abelianization_report(const FiniteSubgroup& G, const CartanData& cartan) {
  AbelianizationReport rep;
  const auto [order, exponent] = abelianization_invariants(G);
  rep.ab_order = order;
  rep.ab_exponent = exponent;
  rep.determinant = cartan.determinant;
  rep.order_matches = Int(rep.ab_order) == cartan.determinant;
  rep.exponent_matches = Int(rep.ab_exponent) == cartan.determinant;
  return rep;
}

ProbeResult transform_order_probe(const FiniteSubgroup& G, const CharacterTable& T, const Diagram& d,
                                  const DualData& dual, const std::vector<int>& irrep_of,
                                  long max_power) {
  const int r = d.rank;
  const double order = static_cast<double>(G.order());

  // rows: identity class then the vertex classes; cols: the matched irreps
  Eigen::MatrixXcd M(r + 1, r + 1);
  for (int j = 0; j <= r; ++j) {
    const int cls = (j == 0) ? 0 : dual.vertex_class[j - 1];
    const double w = std::sqrt(static_cast<double>(G.classes[cls].size()) / order);
    for (int a = 0; a <= r; ++a) M(j, a) = w * T.values(irrep_of[a], cls);
  }

  Eigen::MatrixXcd P = M;
  for (long p = 1; p <= max_power; ++p) {
    double off = 0.0, spread = 0.0;
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j) {
        if (i == j)
          spread = std::max(spread, std::abs(P(i, j) - P(0, 0)));
        else
          off = std::max(off, std::abs(P(i, j)));
      }
    if (off < 1e-6 && spread < 1e-6) return {true, p, std::abs(P(0, 0))};
    P = P * M;
  }
  return {false, -1, 0.0};
}

}  // namespace ade
