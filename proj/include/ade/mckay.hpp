#ifndef ADE_MCKAY_HPP
#define ADE_MCKAY_HPP

// The tensor-decomposition graph: vertices are the irreducible characters,
// and the edge multiplicity between a and b counts copies of irrep b inside
// (irrep a) tensor (defining 2-dim representation). Matching this graph
// against the affine diagram of the same type, with dimensions equal to
// marks and the added vertex on the trivial character, is the direct
// correspondence.

#include <vector>

#include "ade/characters.hpp"
#include "ade/dynkin.hpp"
#include "ade/su2.hpp"

namespace ade {

struct McKayGraph {
  Eigen::MatrixXi multiplicities;  // irreps x irreps
  double max_integrality_error;    // distance of raw inner products from integers
  bool symmetric;
};

McKayGraph mckay_graph(const FiniteSubgroup& G, const CharacterTable& T);

struct AffineMatch {
  bool found;
  std::vector<int> irrep_of;  // affine vertex -> irrep row; vertex 0 -> trivial
};

// graph isomorphism from the affine diagram (with edge multiplicities) onto
// the tensor graph, forced to send vertex 0 to the trivial character and
// each vertex to an irrep whose dimension is the vertex mark
AffineMatch match_affine(const CartanData& cartan, const McKayGraph& mckay, const CharacterTable& T);

}  // namespace ade

#endif  // ADE_MCKAY_HPP
