#include "ade/mckay.hpp"

#include <cmath>
#include <complex>

namespace ade {

McKayGraph mckay_graph(const FiniteSubgroup& G, const CharacterTable& T) {
  const int k = T.num_irreps();
  const double n = static_cast<double>(G.order());
  McKayGraph out;
  out.multiplicities.resize(k, k);
  out.max_integrality_error = 0;

  std::vector<double> natural(k);
  for (int l = 0; l < k; ++l) natural[l] = G.trace(G.representative(l)).to_complex().real();

  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::complex<double> s = 0;
      for (int l = 0; l < k; ++l)
        s += static_cast<double>(T.class_sizes[l]) * T.values(a, l) * natural[l] *
             std::conj(T.values(b, l));
      s /= n;
      const long m = std::lround(s.real());
      out.multiplicities(a, b) = static_cast<int>(m);
      out.max_integrality_error =
          std::max(out.max_integrality_error, std::abs(s - std::complex<double>(static_cast<double>(m), 0)));
    }

  out.symmetric = out.multiplicities == out.multiplicities.transpose();
  return out;
}

namespace {

bool extend(const Eigen::MatrixXi& affine, const std::vector<int>& affine_marks,
            const Eigen::MatrixXi& mult, const std::vector<int>& dims, std::vector<int>& img,
            std::vector<bool>& used) {
  const int r1 = static_cast<int>(affine.rows());
  const int v = static_cast<int>(img.size());
  if (v == r1) return true;
  for (int a = 0; a < static_cast<int>(dims.size()); ++a) {
    if (used[a] || dims[a] != affine_marks[v]) continue;
    bool ok = true;
    for (int w = 0; w < v && ok; ++w)
      if (affine(v, w) != mult(a, img[w])) ok = false;
    if (!ok) continue;
    img.push_back(a);
    used[a] = true;
    if (extend(affine, affine_marks, mult, dims, img, used)) return true;
    used[a] = false;
    img.pop_back();
  }
  return false;
}

}  // namespace

AffineMatch match_affine(const CartanData& cartan, const McKayGraph& mckay, const CharacterTable& T) {
  AffineMatch out;
  out.found = false;
  const int r1 = static_cast<int>(cartan.affine_adjacency.rows());
  if (r1 != T.num_irreps()) return out;

  std::vector<int> img{T.trivial};
  if (T.dims[T.trivial] != cartan.affine_marks[0]) return out;
  std::vector<bool> used(T.num_irreps(), false);
  used[T.trivial] = true;
  if (extend(cartan.affine_adjacency, cartan.affine_marks, mckay.multiplicities, T.dims, img, used)) {
    out.found = true;
    out.irrep_of = img;
  }
  return out;
}

}  // namespace ade
