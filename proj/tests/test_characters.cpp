#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "ade/characters.hpp"
#include "doctest.h"

using namespace ade;

namespace {

const CharacterTable& table(Family f, int n) {
  static std::map<std::pair<int, int>, CharacterTable> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, character_table(build_group({f, n}))).first;
  return it->second;
}

std::vector<int> dim_multiset(const CharacterTable& T) {
  auto d = T.dims;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("dimension multisets of the binary polyhedral groups") {
  CHECK(dim_multiset(table(Family::E, 6)) == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
  CHECK(dim_multiset(table(Family::E, 7)) == std::vector<int>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(dim_multiset(table(Family::E, 8)) == std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6});
  for (int n = 4; n <= 12; ++n) {
    std::vector<int> expect(4, 1);
    expect.resize(n + 1, 2);
    CHECK(dim_multiset(table(Family::D, n)) == expect);
  }
  for (int n = 1; n <= 12; ++n)
    CHECK(dim_multiset(table(Family::A, n)) == std::vector<int>(n + 1, 1));
}

TEST_CASE("sum of squared dimensions is the group order") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& T = table(type.family, type.rank);
    long s = 0;
    for (int d : T.dims) s += static_cast<long>(d) * d;
    long n = 0;
    for (long c : T.class_sizes) n += c;
    CHECK(s == n);
  }
}

TEST_CASE("orthogonality and integrality within tolerance") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& T = table(type.family, type.rank);
    CAPTURE(type.name());
    CHECK(T.max_row_orthogonality_error <= 1e-9);
    CHECK(T.max_col_orthogonality_error <= 1e-9);
    CHECK(T.max_integrality_error <= 1e-6);
  }
}

TEST_CASE("trivial character and row order") {
  for (auto type : standard_sweep(12, 12)) {
    const auto& T = table(type.family, type.rank);
    REQUIRE(T.trivial >= 0);
    CHECK(T.dims[T.trivial] == 1);
    for (int l = 0; l < T.num_classes(); ++l)
      CHECK(std::abs(T.values(T.trivial, l) - 1.0) < 1e-9);
    for (int a = 1; a < T.num_irreps(); ++a) CHECK(T.dims[a - 1] <= T.dims[a]);
  }
}

TEST_CASE("character values agree with exact element traces") {
  // the defining representation is irreducible for D and E, so its trace
  // vector must appear among the degree-2 rows
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::D, 4}, {Family::D, 9}, {Family::E, 6}, {Family::E, 7}, {Family::E, 8}}) {
    const auto G = build_group({f, n});
    const auto& T = table(f, n);
    bool found = false;
    for (int a = 0; a < T.num_irreps() && !found; ++a) {
      if (T.dims[a] != 2) continue;
      double dev = 0;
      for (int l = 0; l < T.num_classes(); ++l)
        dev = std::max(dev, std::abs(T.values(a, l) - G.trace(G.representative(l)).to_complex()));
      found = dev < 1e-9;
    }
    CHECK(found);
  }
}

TEST_CASE("cyclic tables are permuted discrete Fourier matrices") {
  for (int n : {1, 2, 3, 7, 12}) {
    const auto G = build_group({Family::A, n});
    const auto& T = table(Family::A, n);
    const int k = n + 1;
    // column j is the class of g^j for the generator g
    const int g = G.generators[0];
    std::vector<int> col_of_power(k);
    for (int j = 0; j < k; ++j) col_of_power[j] = G.class_of[G.power(g, j)];
    std::vector<bool> used(k, false);
    for (int a = 0; a < k; ++a) {
      int match = -1;
      for (int m = 0; m < k && match < 0; ++m) {
        if (used[m]) continue;
        double dev = 0;
        for (int j = 0; j < k; ++j) {
          std::complex<double> w = std::polar(1.0, 2 * M_PI * m * j / k);
          dev = std::max(dev, std::abs(T.values(a, col_of_power[j]) - w));
        }
        if (dev < 1e-9) match = m;
      }
      REQUIRE(match >= 0);
      used[match] = true;
    }
  }
}
