#ifndef ADE_SU2_HPP
#define ADE_SU2_HPP

// Finite subgroups of SU(2), one per simply laced diagram, built exactly.
//
// Elements are 2x2 cyclotomic matrices. Every entry of every element lives
// in one ambient field Q(zeta_N) with N = field_order(type), so the string
// keys of the four entries identify an element uniquely and the group can
// be closed by plain hashing, with no floating point anywhere.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ade/cyclotomic.hpp"
#include "ade/dynkin.hpp"

namespace ade {

using Mat2 = Eigen::Matrix<Cyclotomic, 2, 2>;

// [[a+bi, c+di], [-c+di, a-bi]] for the quaternion a + bi + cj + dk;
// unit quaternions land in SU(2). N must be divisible by 4.
Mat2 quaternion_matrix(long N, const Cyclotomic& a, const Cyclotomic& b,
                       const Cyclotomic& c, const Cyclotomic& d);

// generators of the finite subgroup attached to the diagram type, with all
// entries lifted to Q(zeta_N), N = field_order(type)
std::vector<Mat2> subgroup_generators(DiagramType type);

struct FiniteSubgroup {
  DiagramType type;
  long field;                    // ambient cyclotomic order N
  std::vector<Mat2> elements;    // index 0 is the identity
  std::vector<int> generators;   // indices into elements
  Eigen::MatrixXi mult;          // mult(i, j) = index of elements[i] * elements[j]
  std::vector<int> inverse;      // index of the inverse of each element
  int minus_identity;            // index of -I, or -1 when -I is not in the group

  std::vector<std::vector<int>> classes;  // conjugacy classes; classes[0] = {0}
  std::vector<int> class_of;              // element index -> class index
  int central_class;                      // class_of[minus_identity], or -1

  long order() const { return static_cast<long>(elements.size()); }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int representative(int cls) const { return classes[cls][0]; }

  // g^m through the multiplication table (m >= 0)
  int power(int g, long m) const;
  // multiplicative order of the element
  long element_order(int g) const;
  Cyclotomic trace(int g) const;
};

// closes the generators under multiplication and fills every table;
// throws std::runtime_error if the closure exceeds max_order elements
FiniteSubgroup build_group(DiagramType type, long max_order = 2000);

std::string element_key(const Mat2& m);
bool mat2_equal(const Mat2& a, const Mat2& b);

}  // namespace ade

#endif  // ADE_SU2_HPP
