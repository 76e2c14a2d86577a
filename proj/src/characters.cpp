#include "ade/characters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace ade {

namespace {

// (A_i)_{jl} = a_{ijl}, the number of ways an element of class l splits as
// (element of class i) * (element of class j), counted per target element
std::vector<Eigen::MatrixXd> class_sum_matrices(const FiniteSubgroup& G) {
  const int k = G.num_classes();
  std::vector<Eigen::MatrixXd> A(k, Eigen::MatrixXd::Zero(k, k));
  std::vector<std::vector<long>> hits(k, std::vector<long>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (auto& row : hits) std::fill(row.begin(), row.end(), 0);
    for (int g : G.classes[i])
      for (int j = 0; j < k; ++j)
        for (int h : G.classes[j]) ++hits[j][G.class_of[G.mult(g, h)]];
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        const long size_l = static_cast<long>(G.classes[l].size());
        if (hits[j][l] % size_l != 0)
          throw std::logic_error("class sum constants are not integral");
        A[i](j, l) = static_cast<double>(hits[j][l] / size_l);
      }
  }
  return A;
}

}  // namespace

CharacterTable character_table(const FiniteSubgroup& G) {
  const int k = G.num_classes();
  const double n = static_cast<double>(G.order());
  const auto A = class_sum_matrices(G);

  std::mt19937 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXcd vectors;
  bool separated = false;
  for (int attempt = 0; attempt < 20 && !separated; ++attempt) {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k, k);
    for (int i = 0; i < k; ++i) M += gauss(rng) * A[i];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(M);
    if (solver.info() != Eigen::Success) continue;
    double gap = 1e300;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        gap = std::min(gap, std::abs(solver.eigenvalues()(a) - solver.eigenvalues()(b)));
    if (gap > 1e-6) {
      vectors = solver.eigenvectors();
      separated = true;
    }
  }
  if (!separated) throw std::runtime_error("no random class sum combination had simple spectrum");

  CharacterTable T;
  T.class_sizes.resize(k);
  for (int l = 0; l < k; ++l) T.class_sizes[l] = static_cast<long>(G.classes[l].size());

  Eigen::MatrixXcd rows(k, k);
  for (int a = 0; a < k; ++a) {
    Eigen::VectorXcd v = vectors.col(a);
    v /= v(0);  // class 0 is the identity class, where the eigenvector is 1
    double s = 0;
    for (int l = 0; l < k; ++l) s += std::norm(v(l)) / static_cast<double>(T.class_sizes[l]);
    const double d = std::sqrt(n / s);
    for (int l = 0; l < k; ++l) rows(a, l) = d * v(l) / static_cast<double>(T.class_sizes[l]);
  }

  // canonical row order: dimension first, then the rounded values
  std::vector<int> perm(k);
  for (int a = 0; a < k; ++a) perm[a] = a;
  auto sort_key = [&](int a) {
    std::vector<long> key{std::lround(rows(a, 0).real() * 1e6)};
    for (int l = 0; l < k; ++l) {
      key.push_back(std::lround(rows(a, l).real() * 1e6));
      key.push_back(std::lround(rows(a, l).imag() * 1e6));
    }
    return key;
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return sort_key(a) < sort_key(b); });

  T.values.resize(k, k);
  for (int a = 0; a < k; ++a) T.values.row(a) = rows.row(perm[a]);

  T.dims.resize(k);
  T.max_integrality_error = 0;
  for (int a = 0; a < k; ++a) {
    const std::complex<double> d = T.values(a, 0);
    T.dims[a] = static_cast<int>(std::lround(d.real()));
    T.max_integrality_error = std::max(T.max_integrality_error,
                                       std::abs(d - std::complex<double>(T.dims[a], 0)));
  }

  T.trivial = -1;
  for (int a = 0; a < k && T.trivial < 0; ++a) {
    double dev = 0;
    for (int l = 0; l < k; ++l) dev = std::max(dev, std::abs(T.values(a, l) - 1.0));
    if (dev < 1e-6) T.trivial = a;
  }
  if (T.trivial < 0) throw std::logic_error("no trivial character row");

  T.max_row_orthogonality_error = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::complex<double> s = 0;
      for (int l = 0; l < k; ++l)
        s += static_cast<double>(T.class_sizes[l]) * T.values(a, l) * std::conj(T.values(b, l));
      s /= n;
      T.max_row_orthogonality_error =
          std::max(T.max_row_orthogonality_error, std::abs(s - (a == b ? 1.0 : 0.0)));
    }

  T.max_col_orthogonality_error = 0;
  for (int l = 0; l < k; ++l)
    for (int m = 0; m < k; ++m) {
      std::complex<double> s = 0;
      for (int a = 0; a < k; ++a) s += T.values(a, l) * std::conj(T.values(a, m));
      s *= std::sqrt(static_cast<double>(T.class_sizes[l]) * static_cast<double>(T.class_sizes[m])) / n;
      T.max_col_orthogonality_error =
          std::max(T.max_col_orthogonality_error, std::abs(s - (l == m ? 1.0 : 0.0)));
    }

  return T;
}

}  // namespace ade
