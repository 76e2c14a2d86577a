#ifndef ADE_DYNKIN_HPP
#define ADE_DYNKIN_HPP

// Simply laced Dynkin diagrams, their Cartan matrices, and the affine
// extension by the highest root.
//
// Vertex numbering (0-based) is fixed once and used everywhere:
//   A_n: path 0 - 1 - ... - (n-1)
//   D_n: chain 0 - ... - (n-3), fork tips n-2 and n-1 both attached to n-3
//   E_n: chain 0 - ... - c with c = n-4, then c - (n-1) and the short arm
//        c - (c+2) - (c+1)
// For D and E the vertex c (resp. n-3) is the unique degree-3 vertex.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ade/linalg.hpp"
#include "ade/rational.hpp"

namespace ade {

enum class Family { A, D, E };

struct DiagramType {
  Family family;
  int rank;

  std::string name() const;  // "A3", "D4", "E8"

  // accepts "A:<n>" (n >= 1), "D:<n>" (n >= 4), "E:6|7|8";
  // throws std::invalid_argument otherwise
  static DiagramType parse(const std::string& text);
};

bool operator==(const DiagramType& a, const DiagramType& b);

struct Diagram {
  DiagramType type;
  int rank;
  Eigen::MatrixXi adjacency;  // rank x rank, 0/1, zero diagonal

  // degree-1 vertices, canonical order: A {0, n-1}; D {0, n-2, n-1};
  // E {0, c+1, n-1}
  std::vector<int> ends;

  // the degree-3 vertex for D and E, -1 for A
  int center;

  // for D and E: one path per arm, listed end first, center last
  std::vector<std::vector<int>> branches;

  // visit order that keeps every prefix connected: start at 0, repeatedly
  // take the smallest unvisited vertex adjacent to the visited set
  std::vector<int> order;
};

struct CartanData {
  Eigen::MatrixXi cartan;       // 2I - adjacency
  RationalMatrix inverse;       // exact
  Int determinant;
  std::vector<int> marks;       // coordinates of the highest root
  Eigen::MatrixXi affine_adjacency;  // (rank+1)^2; vertex 0 is the added
                                     // node, finite vertex i sits at i+1
  std::vector<int> affine_marks;     // length rank+1, leading entry 1
};

Diagram make_diagram(DiagramType type);
CartanData make_cartan(const Diagram& d);

// enumerate {A:1..max_a, D:4..max_d, E:6,7,8}
std::vector<DiagramType> standard_sweep(int max_a = 12, int max_d = 12);

// all adjacency-preserving vertex permutations of the finite diagram
std::vector<std::vector<int>> diagram_automorphisms(const Diagram& d);

// ambient cyclotomic order used for the matrix group of this type
long field_order(DiagramType type);

}  // namespace ade

#endif  // ADE_DYNKIN_HPP
