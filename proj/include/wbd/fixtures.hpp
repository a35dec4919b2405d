#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "wbd/baric.hpp"

// Small hand-built algebras used by tests, demos and the fixture files.

namespace wbd {

template <ExactField K>
class TableBuilder {
 public:
  std::size_t add(std::string label) {
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
  }
  void set(std::size_t i, std::size_t j, std::size_t k, long c = 1) { triples_.push_back({i, j, k, K(c)}); }

  /// u acts as a two-sided identity on everything added so far.
  void unit(std::size_t u) {
    for (std::size_t b = 0; b < labels_.size(); ++b) {
      set(u, b, b);
      if (b != u) set(b, u, b);
    }
  }

  /// Matrix units e_ij = idx[i][j] with e_ij e_jl = e_il.
  void matrix_block(const std::vector<std::vector<std::size_t>>& idx) {
    const std::size_t t = idx.size();
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j)
        for (std::size_t l = 0; l < t; ++l) set(idx[i][j], idx[j][l], idx[i][l]);
  }

  std::vector<std::vector<std::size_t>> add_matrix_units(std::size_t t, const std::string& prefix = "e") {
    std::vector<std::vector<std::size_t>> idx(t, std::vector<std::size_t>(t));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) idx[i][j] = add(prefix + std::to_string(i + 1) + std::to_string(j + 1));
    return idx;
  }

  std::size_t size() const { return labels_.size(); }

  Algebra<K> build() const { return Algebra<K>::from_triples(labels_.size(), labels_, triples_); }

  /// Weight that is 1 on `one` and 0 elsewhere.
  Vec<K> point_weight(std::size_t one) const { return unit_vector<K>(labels_.size(), one); }

 private:
  std::vector<std::string> labels_;
  std::vector<Triple<K>> triples_;
};

namespace detail {

using Mat2 = std::array<long, 4>;  // row-major 2x2

inline Mat2 mul2(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
inline Mat2 add2(const Mat2& a, const Mat2& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }
/// Symplectic involution on 2x2 matrices (the adjugate).
inline Mat2 iota2(const Mat2& m) { return {m[3], -m[1], -m[2], m[0]}; }

}  // namespace detail

/// Split Cayley algebra M2 + wM2 with (a + wb)(c + wd) = (ac + d iota(b)) + w(iota(a) d + cb).
/// Basis order: e11, e12, e21, e22, w.e11, w.e12, w.e21, w.e22; coordinates start at `offset`.
template <ExactField K>
void add_zorn_block(TableBuilder<K>& tb, const std::string& prefix = "") {
  const std::size_t offset = tb.size();
  const char* names[8] = {"e11", "e12", "e21", "e22", "we11", "we12", "we21", "we22"};
  for (const char* n : names) tb.add(prefix + n);
  auto split = [](std::size_t idx) {
    detail::Mat2 a{0, 0, 0, 0}, b{0, 0, 0, 0};
    (idx < 4 ? a : b)[idx % 4] = 1;
    return std::pair{a, b};
  };
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      auto [a, b] = split(x);
      auto [c, d] = split(y);
      const detail::Mat2 m = detail::add2(detail::mul2(a, c), detail::mul2(d, detail::iota2(b)));
      const detail::Mat2 w = detail::add2(detail::mul2(detail::iota2(a), d), detail::mul2(c, b));
      for (std::size_t k = 0; k < 4; ++k) {
        if (m[k] != 0) tb.set(offset + x, offset + y, offset + k, m[k]);
        if (w[k] != 0) tb.set(offset + x, offset + y, offset + 4 + k, w[k]);
      }
    }
}

template <ExactField K>
Algebra<K> zorn_algebra() {
  TableBuilder<K> tb;
  add_zorn_block(tb);
  return tb.build();
}

/// T1: the field itself.
template <ExactField K>
BaricAlgebra<K> fixture_t1() {
  TableBuilder<K> tb;
  tb.add("1");
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T2: F1 + M2.
template <ExactField K>
BaricAlgebra<K> fixture_t2() {
  TableBuilder<K> tb;
  tb.add("1");
  tb.matrix_block(tb.add_matrix_units(2));
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T3: F1 + upper triangular 2x2 (basis 1, e11, e12, e22).
template <ExactField K>
BaricAlgebra<K> fixture_t3() {
  TableBuilder<K> tb;
  tb.add("1");
  const auto e11 = tb.add("e11"), e12 = tb.add("e12"), e22 = tb.add("e22");
  tb.set(e11, e11, e11);
  tb.set(e11, e12, e12);
  tb.set(e12, e22, e12);
  tb.set(e22, e22, e22);
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T4: F[x]/(x^8). rad = (x^2) has nilpotency index 4.
template <ExactField K>
BaricAlgebra<K> fixture_t4() {
  TableBuilder<K> tb;
  tb.add("1");
  for (int k = 1; k < 8; ++k) tb.add("x" + std::to_string(k));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (i + j < 8) tb.set(i, j, i + j);
  return {tb.build(), tb.point_weight(0)};
}

/// T5: F1 + M2 + Fn with n annihilated by M2 and n^2 = 0.
template <ExactField K>
BaricAlgebra<K> fixture_t5() {
  TableBuilder<K> tb;
  tb.add("1");
  tb.matrix_block(tb.add_matrix_units(2));
  tb.add("n");
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T6: F1 + M2 + (column module F^2) + (row module F^2), the modules square to zero.
template <ExactField K>
BaricAlgebra<K> fixture_t6() {
  TableBuilder<K> tb;
  tb.add("1");
  const auto e = tb.add_matrix_units(2);
  tb.matrix_block(e);
  const std::size_t c[2] = {tb.add("c1"), tb.add("c2")};
  const std::size_t r[2] = {tb.add("r1"), tb.add("r2")};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      tb.set(e[i][j], c[j], c[i]);
      tb.set(r[i], e[i][j], r[j]);
    }
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T6u: F1 + M2(F[eps]/eps^2). Its bar ideal is unital.
template <ExactField K>
BaricAlgebra<K> fixture_t6u() {
  TableBuilder<K> tb;
  tb.add("1");
  const auto e = tb.add_matrix_units(2);
  const auto f = tb.add_matrix_units(2, "eps.e");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t l = 0; l < 2; ++l) {
        tb.set(e[i][j], e[j][l], e[i][l]);
        tb.set(e[i][j], f[j][l], f[i][l]);
        tb.set(f[i][j], e[j][l], f[i][l]);
      }
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T7: span{c, n} with c^2 = c, cn = n, nc = 0, n^2 = 0; no identity.
template <ExactField K>
BaricAlgebra<K> fixture_t7() {
  TableBuilder<K> tb;
  const auto c = tb.add("c"), n = tb.add("n");
  tb.set(c, c, c);
  tb.set(c, n, n);
  return {tb.build(), tb.point_weight(c)};
}

/// T8: F1 + Zorn (x) F[eps]/eps^2, dimension 17.
template <ExactField K>
BaricAlgebra<K> fixture_t8() {
  TableBuilder<K> tb;
  tb.add("1");
  add_zorn_block(tb);
  const Algebra<K> z = zorn_algebra<K>();
  for (std::size_t i = 0; i < 8; ++i) tb.add("eps." + z.label(i));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (const auto& [k, c] : z.basis_product_terms(i, j)) {
        const long v = c == K(1) ? 1 : -1;
        tb.set(9 + i, 1 + j, 9 + k, v);
        tb.set(1 + i, 9 + j, 9 + k, v);
      }
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T9: inside 4x4 matrices, c = E11 + E22 + E33, the M2 on indices 1, 2, and
/// E14, E24, E34. No identity; c acts on E34 from the left only.
template <ExactField K>
BaricAlgebra<K> fixture_t9() {
  TableBuilder<K> tb;
  const auto c = tb.add("c");
  const auto e = tb.add_matrix_units(2);
  tb.matrix_block(e);
  const std::size_t col[2] = {tb.add("e14"), tb.add("e24")};
  const auto e34 = tb.add("e34");
  tb.set(c, c, c);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      tb.set(c, e[i][j], e[i][j]);
      tb.set(e[i][j], c, e[i][j]);
      tb.set(e[i][j], col[j], col[i]);
    }
  tb.set(c, col[0], col[0]);
  tb.set(c, col[1], col[1]);
  tb.set(c, e34, e34);
  return {tb.build(), tb.point_weight(c)};
}

/// T10: F1 + M2(F[x]/x^3); rad = x M2 + x^2 M2 with nonzero square.
template <ExactField K>
BaricAlgebra<K> fixture_t10() {
  TableBuilder<K> tb;
  tb.add("1");
  std::vector<std::vector<std::vector<std::size_t>>> e;
  e.push_back(tb.add_matrix_units(2));
  e.push_back(tb.add_matrix_units(2, "x.e"));
  e.push_back(tb.add_matrix_units(2, "x2.e"));
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t q = 0; p + q < 3; ++q)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t l = 0; l < 2; ++l) tb.set(e[p][i][j], e[q][j][l], e[p + q][i][l]);
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T11: F1 + M2 + M2.
template <ExactField K>
BaricAlgebra<K> fixture_t11() {
  TableBuilder<K> tb;
  tb.add("1");
  tb.matrix_block(tb.add_matrix_units(2, "a"));
  tb.matrix_block(tb.add_matrix_units(2, "b"));
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// T12: F1 + block upper triangular 3x3 [[A, b], [0, c]] with A in M2.
template <ExactField K>
BaricAlgebra<K> fixture_t12() {
  TableBuilder<K> tb;
  tb.add("1");
  const auto e = tb.add_matrix_units(2);
  tb.matrix_block(e);
  const std::size_t col[2] = {tb.add("e13"), tb.add("e23")};
  const auto e33 = tb.add("e33");
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) tb.set(e[i][j], col[j], col[i]);
    tb.set(col[i], e33, col[i]);
  }
  tb.set(e33, e33, e33);
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

/// ZB: F1 + Zorn.
template <ExactField K>
BaricAlgebra<K> fixture_zb() {
  TableBuilder<K> tb;
  tb.add("1");
  add_zorn_block(tb);
  tb.unit(0);
  return {tb.build(), tb.point_weight(0)};
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"t1", "t2", "t3",  "t4",  "t5",  "t6",  "t6u",
                                                 "t7", "t8", "t9", "t10", "t11", "t12", "zb"};
  return names;
}

template <ExactField K>
BaricAlgebra<K> fixture(std::string_view name) {
  if (name == "t1") return fixture_t1<K>();
  if (name == "t2") return fixture_t2<K>();
  if (name == "t3") return fixture_t3<K>();
  if (name == "t4") return fixture_t4<K>();
  if (name == "t5") return fixture_t5<K>();
  if (name == "t6") return fixture_t6<K>();
  if (name == "t6u") return fixture_t6u<K>();
  if (name == "t7") return fixture_t7<K>();
  if (name == "t8") return fixture_t8<K>();
  if (name == "t9") return fixture_t9<K>();
  if (name == "t10") return fixture_t10<K>();
  if (name == "t11") return fixture_t11<K>();
  if (name == "t12") return fixture_t12<K>();
  if (name == "zb") return fixture_zb<K>();
  fail(ErrorKind::invalid_input, "unknown fixture '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Seeded conjugates

/// Permutation times unit lower times unit upper triangular, off-diagonal
/// entries in {-1, 0, 1}: integral with integral inverse.
template <ExactField K>
Matrix<K> random_unimodular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto entry = [&] { return K(static_cast<long>(rng() % 3) - 1); };
  Matrix<K> l = Matrix<K>::identity(n), u = Matrix<K>::identity(n), p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = entry();
      u(j, i) = entry();
    }
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = K(1);
  return p * l * u;
}

/// Conjugate of a fixture together with the matrix that produced it.
template <ExactField K>
struct Conjugate {
  BaricAlgebra<K> algebra;
  Matrix<K> p;          ///< new basis b'_i = sum_j p_ij b_j
  Matrix<K> to_new;     ///< old coordinates -> new coordinates

  Vec<K> map(const Vec<K>& old_coords) const { return to_new.apply(old_coords); }
  Subspace<K> map(const Subspace<K>& s) const {
    std::vector<Vec<K>> v;
    for (const auto& x : s.vectors()) v.push_back(map(x));
    return Subspace<K>::span(s.ambient_dim(), v);
  }
};

template <ExactField K>
Conjugate<K> conjugate(const BaricAlgebra<K>& u, std::uint64_t seed) {
  Matrix<K> p = random_unimodular<K>(u.dim(), seed);
  Matrix<K> to_new = inverse(p)->transpose();
  return {change_basis(u, p), p, std::move(to_new)};
}

}  // namespace wbd
