#ifndef ADE_FOURIER_HPP
#define ADE_FOURIER_HPP

// Identities tying the two vertex labelings together: determinants of class
// representatives in the matched irreps against the inverse Cartan matrix,
// the cyclic Fourier matrix, the geometric series for the Cartan inverse,
// the distance bound on its entries, the abelianization invariants, and a
// finite-order probe of the unitarized character pairing.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "ade/characters.hpp"
#include "ade/dual.hpp"
#include "ade/dynkin.hpp"
#include "ade/mckay.hpp"
#include "ade/su2.hpp"

namespace ade {

// Affine vertex -> irrep map used by the identities. For D and E this is
// the backtracking match. For A the map is oriented: finite vertex v goes
// to the character sending the labeling generator to zeta_{n+1}^v, which
// fixes the one degree of freedom the backtracking match leaves open.
// Throws std::logic_error when the group and diagram disagree.
std::vector<int> correspondence_map(const FiniteSubgroup& G, const CharacterTable& T,
                                    const Diagram& d, const CartanData& cartan,
                                    const McKayGraph& mckay, const DualData& dual);

// determinant of the representing matrix of the given class in the given
// irrep, from the character row alone (power sums, then elementary
// symmetric functions)
std::complex<double> det_character(const FiniteSubgroup& G, const CharacterTable& T, int irrep,
                                   int cls);

struct HeadlineResult {
  Eigen::MatrixXcd dets;    // row j: class of finite vertex j; col k: irrep of finite vertex k
  Eigen::MatrixXcd target;  // exp(-2 pi i (C^-1)_{jk})
  double raw_deviation;     // identity alignment
  double deviation;         // best over diagram symmetry pairs
  std::vector<int> sigma;   // class-side vertex permutation achieving it
  std::vector<int> tau;     // irrep-side vertex permutation achieving it
  long automorphisms;       // |Aut| of the finite diagram
  bool pass;
};

// max_jk | det(class_j rep in irrep_k) - exp(-2 pi i (C^-1)_{jk}) |, with the
// vertex labels on both sides allowed to move by a diagram symmetry: the
// two correspondences are each canonical only up to Aut of the diagram
HeadlineResult headline_identity(const FiniteSubgroup& G, const CharacterTable& T, const Diagram& d,
                                 const CartanData& cartan, const DualData& dual,
                                 const std::vector<int>& irrep_of, double tol);

// A types: the same determinants against F_{jk} = exp(-2 pi i jk/(n+1)),
// with the class row read from the opposite end of the path
double cyclic_fourier_deviation(const FiniteSubgroup& G, const CharacterTable& T, const Diagram& d,
                                const DualData& dual, const std::vector<int>& irrep_of);

// entrywise deviation of (1/2) sum_{k<terms} (M/2)^k from the exact inverse
double neumann_deviation(const Diagram& d, const CartanData& cartan, int terms);

struct BoundReport {
  bool all_positive;            // every entry of C^-1 > 0, exactly
  Rational min_offdiagonal_slack;  // min over i != j of (C^-1)_{ij} - 2^{1-dist}/3
  bool offdiagonal_pass;           // slack >= 0
  bool sharp;                      // slack == 0 attained
  Rational min_diagonal_slack;     // same at distance 0; informational only
};

BoundReport inverse_bound_report(const Diagram& d, const CartanData& cartan);

// |G / [G,G]| and the exponent of that quotient, with the derived subgroup
// grown from generator commutators by normal and product closure
std::pair<long, long> abelianization_invariants(const FiniteSubgroup& G);

struct AbelianizationReport {
  long ab_order;      // |G / [G,G]|
  long ab_exponent;   // exponent of the quotient
  Int determinant;    // det C
  bool order_matches;
  bool exponent_matches;
};

AbelianizationReport abelianization_report(const FiniteSubgroup& G, const CartanData& cartan);

struct ProbeResult {
  bool finite;
  long order;              // least p with T^p scalar, when finite
  double scalar_magnitude; // |diagonal| at that p
};

// powers of the (r+1)x(r+1) unitarized table restricted to the two vertex
// labelings (identity row prepended), looking for a scalar multiple of I
ProbeResult transform_order_probe(const FiniteSubgroup& G, const CharacterTable& T, const Diagram& d,
                                  const DualData& dual, const std::vector<int>& irrep_of,
                                  long max_power);

}  // namespace ade

#endif  // ADE_FOURIER_HPP
