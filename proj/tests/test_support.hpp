#pragma once

// Independent oracles shared by the test binaries.

#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbd/fixtures.hpp"

namespace wbd::testing {

using Q = Rational;

inline Vec<Q> random_element(std::mt19937_64& rng, std::size_t n, int bound = 3) {
  Vec<Q> v(n);
  for (auto& c : v) c = Q(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  return v;
}

inline Matrix<Q> unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix<Q> m(n, n);
  m(i, j) = Q(1);
  return m;
}

/// [[X, m], [0, X]] realises a trivial extension A + M with M^2 = 0.
inline Matrix<Q> extension_block(const Matrix<Q>& x, const Matrix<Q>& m) {
  const std::size_t n = x.rows();
  Matrix<Q> out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = x(i, j);
      out(n + i, n + j) = x(i, j);
      out(i, n + j) = m(i, j);
    }
  return out;
}

/// Faithful matrix images of the basis of a matrix-built fixture; the
/// returned map sends coordinates to the matrix sum_i x_i M_i.
inline std::function<Matrix<Q>(const Vec<Q>&)> matrix_representation(const std::string& name) {
  std::vector<Matrix<Q>> images;
  auto E = unit_matrix;
  if (name == "t2") {
    images = {Matrix<Q>::identity(3), E(3, 0, 0), E(3, 0, 1), E(3, 1, 0), E(3, 1, 1)};
  } else if (name == "t3") {
    images = {Matrix<Q>::identity(3), E(3, 0, 0), E(3, 0, 1), E(3, 1, 1)};
  } else if (name == "t6") {
    const Matrix<Q> z(3, 3);
    images = {extension_block(Matrix<Q>::identity(3), z),
              extension_block(E(3, 0, 0), z),
              extension_block(E(3, 0, 1), z),
              extension_block(E(3, 1, 0), z),
              extension_block(E(3, 1, 1), z),
              extension_block(z, E(3, 0, 2)),
              extension_block(z, E(3, 1, 2)),
              extension_block(z, E(3, 2, 0)),
              extension_block(z, E(3, 2, 1))};
  } else if (name == "t9") {
    images = {E(4, 0, 0) + E(4, 1, 1) + E(4, 2, 2), E(4, 0, 0), E(4, 0, 1), E(4, 1, 0), E(4, 1, 1),
              E(4, 0, 3), E(4, 1, 3), E(4, 2, 3)};
  } else if (name == "t12") {
    images = {Matrix<Q>::identity(4), E(4, 0, 0), E(4, 0, 1), E(4, 1, 0), E(4, 1, 1),
              E(4, 0, 2), E(4, 1, 2), E(4, 2, 2)};
  }
  return [images](const Vec<Q>& x) {
    Matrix<Q> m(images.front().rows(), images.front().cols());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) m = m + x[i] * images[i];
    return m;
  };
}

/// Split Cayley product written directly on pairs of 2x2 matrices:
/// (a + wb)(c + wd) = (ac + d adj(b)) + w(adj(a) d + cb).
inline Vec<Q> zorn_product(const Vec<Q>& x, const Vec<Q>& y) {
  auto m = [](const Vec<Q>& v, std::size_t off) {
    Matrix<Q> r(2, 2);
    for (std::size_t k = 0; k < 4; ++k) r(k / 2, k % 2) = v[off + k];
    return r;
  };
  auto adj = [](const Matrix<Q>& a) {
    Matrix<Q> r(2, 2);
    r(0, 0) = a(1, 1);
    r(0, 1) = -a(0, 1);
    r(1, 0) = -a(1, 0);
    r(1, 1) = a(0, 0);
    return r;
  };
  const Matrix<Q> a = m(x, 0), b = m(x, 4), c = m(y, 0), d = m(y, 4);
  const Matrix<Q> lo = a * c + d * adj(b), hi = adj(a) * d + c * b;
  Vec<Q> out(8);
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = lo(k / 2, k % 2);
    out[4 + k] = hi(k / 2, k % 2);
  }
  return out;
}

/// Zorn tensor with one coefficient increased by 1, chosen by the seed.
inline Algebra<Q> perturbed_zorn(std::uint64_t seed) {
  const auto z = zorn_algebra<Q>();
  std::mt19937_64 rng(seed);
  std::vector<Q> t = z.tensor();
  t[rng() % t.size()] += Q(1);
  return Algebra<Q>(8, z.labels(), t);
}

}  // namespace wbd::testing

namespace wbd::testing {

inline std::size_t label_index(const Algebra<Q>& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.label(i) == label) return i;
  throw std::out_of_range("no basis label " + label);
}

inline Vec<Q> basis_by_label(const Algebra<Q>& a, const std::string& label) {
  return a.basis_vector(label_index(a, label));
}

/// Span of the named basis vectors.
inline Subspace<Q> labels_span(const Algebra<Q>& a, const std::vector<std::string>& labels) {
  std::vector<Vec<Q>> v;
  for (const auto& l : labels) v.push_back(basis_by_label(a, l));
  return Subspace<Q>::span(a.dim(), v);
}

/// Span of the basis vectors whose label starts with the prefix.
inline Subspace<Q> prefix_span(const Algebra<Q>& a, const std::string& prefix) {
  std::vector<Vec<Q>> v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.label(i).rfind(prefix, 0) == 0) v.push_back(a.basis_vector(i));
  return Subspace<Q>::span(a.dim(), v);
}

/// Radical of a faithfully represented associative algebra through the trace
/// of the representation: {x : tr rho(xy) = 0 for all y}. In characteristic 0
/// this is a nil ideal containing every nilpotent ideal.
inline Subspace<Q> representation_radical(std::size_t n, const std::function<Matrix<Q>(const Vec<Q>&)>& rho) {
  Matrix<Q> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix<Q> m = rho(unit_vector<Q>(n, i)) * rho(unit_vector<Q>(n, j));
      Q t(0);
      for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
      g(i, j) = t;
    }
  return Subspace<Q>::from_matrix(nullspace_basis(g));
}

inline bool matrix_nilpotent(const Matrix<Q>& m) {
  Matrix<Q> p = m;
  for (std::size_t k = 0; k < m.rows(); ++k) p = p * m;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) return false;
  return true;
}

}  // namespace wbd::testing
