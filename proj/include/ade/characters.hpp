#ifndef ADE_CHARACTERS_HPP
#define ADE_CHARACTERS_HPP

// Complex character tables of finite groups, computed from the class
// multiplication constants: the class-sum matrices commute, a random real
// combination separates their common eigenvectors, and each eigenvector
// rescales to one irreducible character row.

#include <vector>

#include <Eigen/Dense>

#include "ade/su2.hpp"

namespace ade {

struct CharacterTable {
  // rows: irreducible characters, sorted by (dimension, rounded values);
  // cols: conjugacy classes in group order (class 0 is the identity class)
  Eigen::MatrixXcd values;
  std::vector<int> dims;        // values(i, 0), rounded
  std::vector<long> class_sizes;
  int trivial;                  // row index of the all-ones character

  double max_row_orthogonality_error;  // vs delta_ab, rows a, b
  double max_col_orthogonality_error;  // vs unitarity of the weighted table
  double max_integrality_error;        // dimensions vs nearest integers

  int num_irreps() const { return static_cast<int>(values.rows()); }
  int num_classes() const { return static_cast<int>(values.cols()); }
};

// throws std::runtime_error if no random combination separates the
// eigenvalues after a bounded number of draws
CharacterTable character_table(const FiniteSubgroup& G);

}  // namespace ade

#endif  // ADE_CHARACTERS_HPP
