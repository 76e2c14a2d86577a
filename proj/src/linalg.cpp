#include "ade/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ade {

Int determinant(const IntMatrix& a) {
  const long n = a.rows();
  if (n == 0) return Int(1);
  IntMatrix m = a;
  Int prev(1);
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      long p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Int(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j)
        // Bareiss: exact division by the previous pivot
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

RationalMatrix inverse(const RationalMatrix& a) {
  const long n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (long k = 0; k < n; ++k) {
    long p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != k) {
      m.row(k).swap(m.row(p));
      inv.row(k).swap(inv.row(p));
    }
    const Rational piv = m(k, k);
    for (long j = 0; j < n; ++j) {
      m(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (long i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k);
      for (long j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const long n = a.rows(), k = a.cols(), m = b.cols();
  RationalMatrix out(n, m);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < m; ++j) {
      Rational s(0);
      for (long l = 0; l < k; ++l) s += a(i, l) * b(l, j);
      out(i, j) = s;
    }
  return out;
}

}  // namespace ade
