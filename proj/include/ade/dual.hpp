#ifndef ADE_DUAL_HPP
#define ADE_DUAL_HPP

// The dual side of the correspondence: every finite diagram vertex is
// labeled with one nontrivial conjugacy class, built from a special
// generating triple (D, E) or from the cyclic generator (A). The verify
// functions check the labeling statements, the neighbor-product relations
// of the chosen representatives, and the presentation relations in the
// group and its central quotient.

#include <array>
#include <string>
#include <vector>

#include "ade/dynkin.hpp"
#include "ade/su2.hpp"

namespace ade {

// class of g^m, independent of the representative g of cls
int class_power(const FiniteSubgroup& G, int cls, long m);

// closure of the given elements under multiplication equals the whole group
bool generates(const FiniteSubgroup& G, const std::vector<int>& gens);

struct SpecialTriple {
  int x, y, z;        // element indices
  int m1, m2, m3;     // branch orders: path lengths from each end to the
                      // center, counted in vertices including the center
};

struct DualData {
  std::vector<int> vertex_class;     // finite vertex -> class index
  std::vector<int> special_classes;  // classes of the end labels, in end order
  bool has_triple;                   // false for A types
  SpecialTriple triple;
};

// Exhaustive search in element order. x and y are pinned to the classes
// whose eigenvalue angle is exactly pi/m (trace = zeta_2m + zeta_2m^-1,
// compared exactly); z := (xy)^-1 * (-I) must be pinned the same way and
// the triple must generate. The angle pinning matters: some groups contain
// triples satisfying all power relations whose classes are not related to
// the pinned ones by any diagram symmetry.
SpecialTriple find_special_triple(const FiniteSubgroup& G, const Diagram& d);

// A: vertex v -> class(x^{v+1}); D/E: powers of the triple elements along
// their branches, -I at the center
DualData build_dual(const FiniteSubgroup& G, const Diagram& d);

struct StatementReport {
  bool bijective;              // onto the nontrivial classes
  bool ends_special;           // ends carry the special classes
  bool center_minus_identity;  // D/E center class = {-I}; vacuous for A
  bool branch_progressions;    // branch k-th vertex = class(g^k), closing at -I
  bool branch_commuting;       // same branch <=> commuting representatives exist
  std::vector<std::array<int, 2>> commuting_violations;
  bool translate_symmetric;    // the edge predicate below is symmetric
  bool edge_translate;         // {i,j} adjacent <=> exists g in C_i and
                               // special u with ug = gu and ug in C_j
  std::vector<std::array<int, 2>> translate_diff;

  bool all_pass() const {
    return bijective && ends_special && center_minus_identity && branch_progressions &&
           branch_commuting && translate_symmetric && edge_translate;
  }
};

StatementReport verify_statements(const FiniteSubgroup& G, const Diagram& d, const DualData& dual);

struct MumfordResult {
  bool found;
  std::vector<int> ordering;  // vertex visit order used by the search
  std::vector<int> rep;       // vertex -> element index
  long nodes;                 // backtracking nodes visited
  bool generates_group;
};

// Backtracking in the given prefix-connected ordering. Each placed element
// must commute with its already placed neighbors; as soon as a vertex has
// its whole neighborhood placed, rep(v)^2 must equal the product of the
// neighbor reps taken in vertex index order. The index order matters: with
// three mutually non-commuting neighbors the product can differ by a sign
// between orderings, so one order is fixed and used consistently.
MumfordResult find_mumford(const FiniteSubgroup& G, const Diagram& d, const DualData& dual,
                           const std::vector<int>& ordering);

struct PresentationReport {
  bool relations_in_group;      // x^m1 = y^m2 = z^m3 = xyz = c, c^2 = 1, c != 1
  bool relations_in_quotient;   // images in G/{+-I} satisfy h^m = 1, h1 h2 h3 = 1
  bool generates_group;
  bool generates_quotient;
  std::string pattern;          // realized exponent pattern, e.g. "x^3=y^2=z^2=xyz=-1"

  bool all_pass() const {
    return relations_in_group && relations_in_quotient && generates_group && generates_quotient;
  }
};

PresentationReport verify_presentation(const FiniteSubgroup& G, const Diagram& d, const DualData& dual);

}  // namespace ade

#endif  // ADE_DUAL_HPP
