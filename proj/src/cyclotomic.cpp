#include "ade/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ade {

namespace {

using Poly = std::vector<Rational>;  // dense, index = degree

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact quotient a / b in Q[x]; remainder is asserted zero
Poly poly_div_exact(Poly a, const Poly& b) {
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 1, Rational(0));
  trim(a);
  const long db = static_cast<long>(b.size()) - 1;
  while (static_cast<long>(a.size()) - 1 >= db) {
    const long da = static_cast<long>(a.size()) - 1;
    Rational f = a[da] / b[db];
    q[da - db] = f;
    for (long i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
    trim(a);
    if (a.empty()) break;
  }
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

// Phi_N by the recursion  x^N - 1 = prod_{d | N} Phi_d
Poly cyclotomic_poly(long n) {
  static std::map<long, Poly> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [&](auto&& self, long m) -> const Poly& {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    Poly p(m + 1, Rational(0));
    p[0] = -1;
    p[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) p = poly_div_exact(std::move(p), self(self, d));
    return memo.emplace(m, std::move(p)).first->second;
  };
  return compute(compute, n);
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(long N, long k) {
  if (N < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
  Cyclotomic z;
  z.n_ = N;
  z.c_.assign(N, Rational(0));
  long e = ((k % N) + N) % N;
  z.c_[e] = 1;
  z.reduce_();
  return z;
}

void Cyclotomic::reduce_() {
  const Poly phi = cyclotomic_poly(n_);
  const long dphi = static_cast<long>(phi.size()) - 1;
  for (long d = n_ - 1; d >= dphi; --d) {
    if (c_[d] == 0) continue;
    Rational f = c_[d];  // phi is monic
    c_[d] = 0;
    for (long i = 0; i < dphi; ++i) c_[d - dphi + i] -= f * phi[i];
  }
}

Cyclotomic Cyclotomic::lifted_(long M) const {
  if (M == n_) return *this;
  const long s = M / n_;
  Cyclotomic r;
  r.n_ = M;
  r.c_.assign(M, Rational(0));
  for (long k = 0; k < n_; ++k)
    if (c_[k] != 0) r.c_[k * s] += c_[k];
  r.reduce_();
  return r;
}

long Cyclotomic::lcm_(long a, long b) { return a / std::gcd(a, b) * b; }

Cyclotomic Cyclotomic::lifted_to(long M) const {
  if (M < 1 || M % n_ != 0) throw std::invalid_argument("lifted_to: order must be a multiple of the current order");
  return lifted_(M);
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value: not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const long M = lcm_(n_, o.n_);
  Cyclotomic a = lifted_(M), b = o.lifted_(M);
  for (long k = 0; k < M; ++k) a.c_[k] += b.c_[k];
  // sum of canonical representatives stays below deg Phi_M: already canonical
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  const long M = lcm_(n_, o.n_);
  Cyclotomic a = lifted_(M), b = o.lifted_(M);
  for (long k = 0; k < M; ++k) a.c_[k] -= b.c_[k];
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const long M = lcm_(n_, o.n_);
  Cyclotomic a = lifted_(M), b = o.lifted_(M);
  std::vector<Rational> prod(M, Rational(0));
  for (long i = 0; i < M; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < M; ++j) {
      if (b.c_[j] == 0) continue;
      long e = i + j;
      if (e >= M) e -= M;  // zeta_M^M = 1
      prod[e] += a.c_[i] * b.c_[j];
    }
  }
  a.c_ = std::move(prod);
  a.reduce_();
  *this = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::conjugate() const {
  Cyclotomic r;
  r.n_ = n_;
  r.c_.assign(n_, Rational(0));
  for (long k = 0; k < n_; ++k)
    if (c_[k] != 0) r.c_[(n_ - k) % n_] += c_[k];
  r.reduce_();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: division by zero");
  // extended Euclid in Q[x]: u * rep + v * Phi_n = gcd = nonzero constant
  Poly r0 = cyclotomic_poly(n_);
  Poly r1(c_);
  trim(r1);
  Poly u0(1, Rational(0)), u1(1, Rational(1));  // coefficients of rep
  while (true) {
    if (r1.size() == 1) break;  // nonzero constant: rep invertible mod Phi
    // r0 = q * r1 + r2
    Poly q(r0.size() - r1.size() + 1, Rational(0));
    Poly r2 = r0;
    const long d1 = static_cast<long>(r1.size()) - 1;
    while (static_cast<long>(r2.size()) - 1 >= d1 && !r2.empty()) {
      const long d2 = static_cast<long>(r2.size()) - 1;
      Rational f = r2[d2] / r1[d1];
      q[d2 - d1] = f;
      for (long i = 0; i <= d1; ++i) r2[d2 - d1 + i] -= f * r1[i];
      trim(r2);
    }
    // u2 = u0 - q * u1
    Poly u2(std::max(u0.size(), q.size() + u1.size()), Rational(0));
    for (std::size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
    trim(u2);
    if (u2.empty()) u2.assign(1, Rational(0));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    if (r1.empty()) throw std::logic_error("Cyclotomic::inverse: rep shares a factor with Phi");
  }
  Rational g = r1[0];
  Cyclotomic inv;
  inv.n_ = n_;
  inv.c_.assign(n_, Rational(0));
  for (std::size_t i = 0; i < u1.size(); ++i) inv.c_[i] = u1[i] / g;
  inv.reduce_();
  return inv;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> s(0.0, 0.0);
  const double w = 2.0 * 3.14159265358979323846 / static_cast<double>(n_);
  for (long k = 0; k < n_; ++k) {
    if (c_[k] == 0) continue;
    double x = to_double(c_[k]);
    s += std::complex<double>(x * std::cos(w * k), x * std::sin(w * k));
  }
  return s;
}

std::string Cyclotomic::key() const {
  std::ostringstream os;
  os << n_;
  for (const auto& x : c_) os << '|' << x;
  return os.str();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  const long M = Cyclotomic::lcm_(a.n_, b.n_);
  Cyclotomic la = a.lifted_(M), lb = b.lifted_(M);
  return la.c_ == lb.c_;  // canonical form is unique per order
}

}  // namespace ade
