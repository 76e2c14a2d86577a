#ifndef ADE_CYCLOTOMIC_HPP
#define ADE_CYCLOTOMIC_HPP

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value of order N is stored as a length-N coefficient vector c with
// value = sum_k c[k] * zeta_N^k, kept in canonical form: the polynomial
// sum c[k] x^k is the remainder modulo the N-th cyclotomic polynomial
// Phi_N, so deg < phi(N) and the representative is unique. Two values of
// the same order are equal iff their coefficient vectors are equal;
// mixed-order operands are first lifted to the lcm order.
//
// All operations are pure and never round. Values are immutable after
// construction apart from assignment.

#include <complex>
#include <string>
#include <vector>

#include "ade/rational.hpp"

namespace ade {

class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rational(0)) {}
  Cyclotomic(const Rational& r) : n_(1), c_(1, r) {}
  Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}
  Cyclotomic(int v) : n_(1), c_(1, Rational(v)) {}

  // zeta_N^k; throws std::invalid_argument unless N >= 1
  static Cyclotomic root_of_unity(long N, long k);

  long order() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;        // lies in Q (canonical degree 0)
  Rational rational_value() const; // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o); // throws std::domain_error on zero divisor

  Cyclotomic conjugate() const;    // complex conjugate: zeta^k -> zeta^(N-k)
  Cyclotomic inverse() const;      // throws std::domain_error on zero

  std::complex<double> to_complex() const;

  // Image of this value in Q(zeta_M); throws std::invalid_argument unless
  // order() divides M. Useful to put a whole matrix over one field so that
  // key() strings become comparable.
  Cyclotomic lifted_to(long M) const;

  // canonical key, suitable for exact deduplication of same-order values
  std::string key() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  long n_;                   // field order N
  std::vector<Rational> c_;  // length N, canonical (reduced mod Phi_N)

  void reduce_();                       // remainder mod Phi_n_, in place
  Cyclotomic lifted_(long M) const;     // image in Q(zeta_M), n_ | M
  static long lcm_(long a, long b);
};

inline Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
inline Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
inline Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
inline Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
inline bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

inline Cyclotomic conj(const Cyclotomic& a) { return a.conjugate(); }

}  // namespace ade

// Minimal scalar traits so Eigen can host dense cyclotomic matrices.
// IsComplex is deliberately 0: Eigen's own conj/adjoint would be the identity
// and are never used on these matrices; conjugation goes through ade::conj.
namespace Eigen {
template <>
struct NumTraits<ade::Cyclotomic> {
  typedef ade::Cyclotomic Real;
  typedef ade::Cyclotomic NonInteger;
  typedef ade::Cyclotomic Nested;
  typedef ade::Cyclotomic Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
  static inline ade::Cyclotomic epsilon() { return ade::Cyclotomic(0); }
  static inline ade::Cyclotomic dummy_precision() { return ade::Cyclotomic(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // ADE_CYCLOTOMIC_HPP
