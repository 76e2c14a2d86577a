#ifndef ADE_TABLE_ORACLE_HPP
#define ADE_TABLE_ORACLE_HPP

// Brute-force recomputation of class data from a raw multiplication table,
// with none of the shortcuts the main path takes (generator-orbit classes,
// generator-seeded derived subgroup). Used to cross-check the main path on
// the small groups, where the quadratic scans are affordable.

#include <vector>

#include <Eigen/Dense>

#include "ade/su2.hpp"

namespace ade {

struct TableOracle {
  std::vector<std::vector<int>> classes;  // full-conjugation partition; each
                                          // class sorted, classes sorted by
                                          // first element
  std::vector<int> center;                // elements commuting with everything
  long ab_order;                          // |G / [G,G]| from all commutators
  long ab_exponent;
};

// derives everything from the table alone (the identity is found by
// scanning, not assumed to sit at index 0)
TableOracle brute_force_oracle(const Eigen::MatrixXi& mult);

struct OracleComparison {
  bool applicable;      // group small enough for the quadratic oracle
  bool classes_match;   // same partition as the generator-orbit classes
  bool center_matches;  // center == union of singleton classes
  bool abelianization_matches;  // same (order, exponent) as the main path

  bool all_pass() const { return classes_match && center_matches && abelianization_matches; }
};

// main-path data vs. the oracle; limit guards the quadratic cost
OracleComparison compare_with_oracle(const FiniteSubgroup& G, long limit = 48);

}  // namespace ade

#endif  // ADE_TABLE_ORACLE_HPP
