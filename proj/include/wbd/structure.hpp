#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wbd/lifting.hpp"
#include "wbd/polynomial.hpp"

namespace wbd {

template <ExactField K>
struct SemisimpleSplit {
  Subspace<K> semisimple_part;  ///< C = bar^2
  Subspace<K> trivial_part;     ///< N = R(bar)
};

/// bar = C + N for a b-semisimple baric algebra, with N bar = bar N = 0.
template <ExactField K>
SemisimpleSplit<K> split_semisimple_bar(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  const Algebra<K>& a = u.algebra();
  if (!b_radical(u, opts).is_zero()) fail(ErrorKind::invalid_input, "split_semisimple_bar: algebra is not b-semisimple");
  const Subspace<K> bar = bar_ideal(u);
  SemisimpleSplit<K> s;
  s.semisimple_part = product_space(a, bar, bar);
  if (bar.is_zero()) {
    s.trivial_part = bar;
    return s;
  }
  const Subalgebra<K> sub = subalgebra(a, bar);
  s.trivial_part = sub.embed(nilradical(sub.algebra, opts).radical);
  if (!intersection(s.semisimple_part, s.trivial_part).is_zero() ||
      !(subspace_sum(s.semisimple_part, s.trivial_part) == bar))
    fail(ErrorKind::verification_failure, "split_semisimple_bar: C + N is not a direct decomposition of bar");
  if (!products_vanish(a, s.trivial_part, bar) || !products_vanish(a, bar, s.trivial_part))
    fail(ErrorKind::verification_failure, "split_semisimple_bar: N does not annihilate bar");
  return s;
}

/// Operators on C (in C's canonical coordinates) commuting with every L_x and
/// R_x, x in C. A unital C reduces to T = L_c with c ranging over C.
template <ExactField K>
std::vector<Matrix<K>> centroid(const Algebra<K>& a, const Subspace<K>& c) {
  if (c.is_zero()) return {};
  const Subalgebra<K> sub = subalgebra(a, c);
  const Algebra<K>& b = sub.algebra;
  const std::size_t n = b.dim();
  std::vector<Matrix<K>> left(n), right(n);
  for (std::size_t x = 0; x < n; ++x) {
    left[x] = b.left(b.basis_vector(x));
    right[x] = b.right(b.basis_vector(x));
  }
  std::vector<Matrix<K>> out;
  if (find_identity(b)) {
    // column a holds the flattened commutators of L_{b_a} with all L_x, R_x
    Matrix<K> sys(2 * n * n * n, n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t x = 0; x < n; ++x) {
        const Matrix<K> cl = left[col] * left[x] - left[x] * left[col];
        const Matrix<K> cr = left[col] * right[x] - right[x] * left[col];
        for (std::size_t e = 0; e < n * n; ++e) {
          sys((2 * x) * n * n + e, col) = cl.entries()[e];
          sys((2 * x + 1) * n * n + e, col) = cr.entries()[e];
        }
      }
    const Matrix<K> ker = nullspace_basis(sys);
    for (std::size_t r = 0; r < ker.rows(); ++r) out.push_back(b.left(ker.row(r)));
    return out;
  }
  // General case: n^2 unknowns T_ij, reduced batch by batch.
  Matrix<K> acc(0, n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Matrix<K> batch(2 * n * n, n * n);
    for (int side = 0; side < 2; ++side) {
      const Matrix<K>& m = side == 0 ? left[x] : right[x];
      // (T m - m T)_ik = sum_j T_ij m_jk - m_ij T_jk
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t row = side * n * n + i * n + k;
          for (std::size_t j = 0; j < n; ++j) {
            batch(row, i * n + j) += m(j, k);
            batch(row, j * n + k) -= m(i, j);
          }
        }
    }
    auto rr = rref(vstack(acc, batch));
    Matrix<K> kept(0, n * n);
    for (std::size_t r = 0; r < rr.rank; ++r) kept.append_row(rr.reduced.row(r));
    acc = std::move(kept);
  }
  const Matrix<K> ker = nullspace_basis(acc.rows() ? acc : Matrix<K>(1, n * n));
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Matrix<K> t(n, n);
    for (std::size_t e = 0; e < n * n; ++e) t(e / n, e % n) = ker(r, e);
    out.push_back(std::move(t));
  }
  return out;
}

namespace detail {

/// Matrix of T restricted to the invariant subspace W (W-coordinates).
template <ExactField K>
Matrix<K> restrict_operator(const Matrix<K>& t, const Subspace<K>& w) {
  Matrix<K> m(w.dim(), w.dim());
  for (std::size_t r = 0; r < w.dim(); ++r) {
    auto c = w.coordinates(t.apply(w.vector(r)));
    if (!c) fail(ErrorKind::verification_failure, "centroid operator does not preserve a component");
    for (std::size_t s = 0; s < w.dim(); ++s) m(s, r) = (*c)[s];
  }
  return m;
}

template <ExactField K>
bool is_associative(const Algebra<K>& b) {
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (!is_zero(associator(b, b.basis_vector(i), b.basis_vector(j), b.basis_vector(k)))) return false;
  return true;
}

}  // namespace detail

/// Common eigenspaces of the centroid operators, mapped back to ambient
/// coordinates. Every component is checked to be an ideal of C with a
/// one-dimensional centroid.
template <ExactField K>
std::vector<Subspace<K>> simple_components(const Algebra<K>& a, const Subspace<K>& c) {
  if (c.is_zero()) return {};
  const Subalgebra<K> sub = subalgebra(a, c);
  const std::size_t n = c.dim();
  std::vector<Subspace<K>> parts{Subspace<K>::full(n)};
  for (const Matrix<K>& t : centroid(a, c)) {
    std::vector<Subspace<K>> next;
    for (const auto& w : parts) {
      const Matrix<K> tw = detail::restrict_operator(t, w);
      const auto info = split_info(minimal_polynomial(tw));
      std::size_t covered = 0;
      for (const K& lambda : info.distinct_roots) {
        const Matrix<K> shifted = tw - lambda * Matrix<K>::identity(w.dim());
        std::vector<Vec<K>> vecs;
        for (const auto& k : nullspace_basis(shifted).row_vectors()) vecs.push_back(w.embed(k));
        covered += vecs.size();
        next.push_back(Subspace<K>::span(n, vecs));
      }
      if (covered != w.dim())
        fail(ErrorKind::non_split, "simple_components: a centroid element has eigenvalues outside the field");
    }
    parts = std::move(next);
  }
  std::vector<Subspace<K>> out;
  for (const auto& w : parts) {
    if (!is_ideal(sub.algebra, w)) fail(ErrorKind::verification_failure, "simple_components: component is not an ideal");
    if (centroid(sub.algebra, w).size() != 1)
      fail(ErrorKind::non_split, "simple_components: component centroid is larger than the field");
    out.push_back(sub.embed(w));
  }
  std::vector<std::vector<Vec<K>>> spans;
  for (const auto& w : out) spans.push_back(w.vectors());
  if (!blocks_annihilate(a, spans)) fail(ErrorKind::verification_failure, "simple_components: components do not annihilate");
  return out;
}

enum class ComponentKind { matrix, cayley };

template <ExactField K>
struct SimpleComponent {
  Subspace<K> subspace;
  ComponentKind kind = ComponentKind::matrix;
  std::size_t degree = 0;  ///< t for M_t, 2 for a Cayley component
  std::optional<MatrixUnits<K>> units;
  std::optional<CayleyFrame<K>> frame;
};

template <ExactField K>
ComponentKind classify_component(const Algebra<K>& a, const Subspace<K>& comp) {
  const Subalgebra<K> sub = subalgebra(a, comp);
  if (detail::is_associative(sub.algebra)) return ComponentKind::matrix;
  if (comp.dim() != 8) fail(ErrorKind::non_split, "non-associative simple component of dimension " + std::to_string(comp.dim()));
  return ComponentKind::cayley;
}

namespace detail {

/// Solves sum_s alpha_s lhs_s = rhs for the coefficients alpha.
template <ExactField K>
std::optional<Vec<K>> combine_to(const std::vector<Vec<K>>& lhs, const Vec<K>& rhs) {
  Matrix<K> m(rhs.size(), lhs.size());
  for (std::size_t s = 0; s < lhs.size(); ++s)
    for (std::size_t k = 0; k < rhs.size(); ++k) m(k, s) = lhs[s][k];
  return solve(m, rhs).particular;
}

/// Left identity of a right ideal R: some f in R with f r = r on R. For a
/// right ideal eB of a matrix algebra every such f is an idempotent with fB = R.
template <ExactField K>
std::optional<Vec<K>> left_identity(const Algebra<K>& b, const Subspace<K>& r) {
  const std::size_t n = b.dim();
  const auto rb = r.vectors();
  Matrix<K> sys(rb.size() * n, rb.size());
  Vec<K> rhs(rb.size() * n, K(0));
  for (std::size_t s = 0; s < rb.size(); ++s) {
    const Matrix<K> l = b.left(rb[s]);
    for (std::size_t q = 0; q < rb.size(); ++q) {
      const Vec<K> p = l.apply(rb[q]);
      for (std::size_t k = 0; k < n; ++k) sys(q * n + k, s) = p[k];
    }
  }
  for (std::size_t q = 0; q < rb.size(); ++q)
    for (std::size_t k = 0; k < n; ++k) rhs[q * n + k] = rb[q][k];
  auto sol = solve(sys, rhs);
  if (!sol.particular) return std::nullopt;
  Vec<K> f = r.embed(*sol.particular);
  if (!is_idempotent(b, f)) return std::nullopt;
  return f;
}

/// Primitive idempotent of a split simple associative algebra B of degree t.
/// For a candidate x with eigenvalue lambda, z = x - lambda 1 is a zero
/// divisor and zB a proper right ideal. Right ideals of M_t are subspaces of
/// the column space, so intersecting them lowers the rank; a right ideal of
/// dimension t is minimal and its left identity is primitive.
template <ExactField K>
std::optional<Vec<K>> primitive_idempotent(const Algebra<K>& b, const Vec<K>& one, std::size_t t,
                                           std::vector<Vec<K>> generators, const SearchOptions& opts) {
  const std::size_t n = b.dim();
  if (t == 1) return one;
  Subspace<K> r = Subspace<K>::full(n);
  CandidateStream<K> stream(std::move(generators), opts);
  while (auto x = stream.next()) {
    const auto info = split_info(minimal_polynomial(b.left(*x)));
    for (const K& lambda : info.distinct_roots) {
      const Vec<K> z = *x - lambda * one;
      if (is_zero(z)) continue;
      const Subspace<K> zb = Subspace<K>::from_matrix(b.left(z).transpose());
      const Subspace<K> meet = intersection(r, zb);
      if (meet.is_zero() || meet.dim() >= r.dim()) continue;
      r = meet;
      if (r.dim() == t) return left_identity(b, r);
    }
  }
  return std::nullopt;
}

/// Search generators for a component W with identity e: the corners e a_i e
/// of the ambient basis vectors, in W coordinates, when they span W. An RREF
/// basis of W can carry large denominators that hide rational eigenvalues;
/// the corners stay small integer combinations whenever the ambient basis is.
template <ExactField K>
std::vector<Vec<K>> corner_generators(const Algebra<K>& a, const Subalgebra<K>& sub, const Vec<K>& one) {
  const Vec<K> e = sub.embed(one);
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec<K> y = a.multiply(a.multiply(e, a.basis_vector(i)), e);
    if (is_zero(y)) continue;
    if (auto c = sub.try_coordinates(y)) gens.push_back(*c);
  }
  const std::size_t n = sub.algebra.dim();
  if (Subspace<K>::span(n, gens).dim() == n) return gens;
  return Subspace<K>::full(n).vectors();
}

/// Integer tuples in [-bound, bound]^m ordered by max-norm, then
/// lexicographically; the zero tuple is skipped.
inline std::vector<std::vector<long>> integer_tuples(std::size_t m, int bound) {
  std::vector<std::vector<long>> out;
  for (long norm = 1; norm <= bound; ++norm) {
    std::vector<long> t(m, -norm);
    for (;;) {
      long mx = 0;
      for (long c : t) mx = std::max(mx, c < 0 ? -c : c);
      if (mx == norm) out.push_back(t);
      std::size_t pos = m;
      while (pos > 0 && t[pos - 1] == norm) t[--pos] = -norm;
      if (pos == 0) break;
      ++t[pos - 1];
    }
  }
  return out;
}

}  // namespace detail

/// Matrix units of an associative simple component, in ambient coordinates.
template <ExactField K>
MatrixUnits<K> matrix_units_of_simple(const Algebra<K>& a, const Subspace<K>& comp, const SearchOptions& opts = {}) {
  const Subalgebra<K> sub = subalgebra(a, comp, true);
  const Algebra<K>& b = sub.algebra;
  const std::size_t n = b.dim();
  std::size_t t = 0;
  while ((t + 1) * (t + 1) <= n) ++t;
  if (t * t != n || n == 0) fail(ErrorKind::invalid_input, "matrix_units_of_simple: dimension is not a perfect square");
  if (!detail::is_associative(b)) fail(ErrorKind::invalid_input, "matrix_units_of_simple: component is not associative");
  const auto one = find_identity(b);
  if (!one) fail(ErrorKind::no_identity, "matrix_units_of_simple: component has no identity");

  // f_11 primitive, f_1j and f_j1 dual bases of f B (1 - f) and (1 - f) B f
  // under x y = <x, y> f_11, then f_ij = f_i1 f_1j.
  const auto f11 = detail::primitive_idempotent(b, *one, t, detail::corner_generators(a, sub, *one), opts);
  if (!f11) fail(ErrorKind::non_split, "matrix_units_of_simple: no primitive idempotent within the search bound");
  MatrixUnits<K> f{t, std::vector<Vec<K>>(t * t)};
  f.unit(0, 0) = *f11;
  if (t > 1) {
    const PeirceSystem<K> sys = peirce_single(b, *f11);
    const auto xs = sys.component(1, 0).vectors();
    const auto ys = sys.component(0, 1).vectors();
    if (xs.size() != t - 1 || ys.size() != t - 1)
      fail(ErrorKind::non_split, "matrix_units_of_simple: off-diagonal corners have the wrong dimension");
    // pairing matrix g(i, j) with x_i y_j = g(i, j) f_11
    Matrix<K> g(t - 1, t - 1);
    for (std::size_t i = 0; i + 1 < t; ++i)
      for (std::size_t j = 0; j + 1 < t; ++j) {
        const Vec<K> p = b.multiply(xs[i], ys[j]);
        auto c = detail::combine_to(std::vector<Vec<K>>{*f11}, p);
        if (!c) fail(ErrorKind::verification_failure, "matrix_units_of_simple: x y is not a multiple of f_11");
        g(i, j) = (*c)[0];
      }
    const auto ginv = inverse(g);
    if (!ginv) fail(ErrorKind::non_split, "matrix_units_of_simple: degenerate pairing of off-diagonal corners");
    for (std::size_t j = 1; j < t; ++j) {
      f.unit(0, j) = xs[j - 1];
      Vec<K> y = zero_vector<K>(n);
      for (std::size_t k = 0; k + 1 < t; ++k)
        if (!(*ginv)(k, j - 1).is_zero()) y = y + (*ginv)(k, j - 1) * ys[k];
      f.unit(j, 0) = y;
    }
    for (std::size_t i = 1; i < t; ++i)
      for (std::size_t j = 1; j < t; ++j) f.unit(i, j) = b.multiply(f.unit(i, 0), f.unit(0, j));
  }
  if (auto bad = check_matrix_units(b, f)) fail(ErrorKind::verification_failure, "matrix_units_of_simple: " + *bad);
  for (auto& u : f.units) u = sub.embed(u);
  return f;
}

/// Split Cayley frame of an 8-dimensional non-associative component.
template <ExactField K>
CayleyFrame<K> zorn_frame_of_cayley(const Algebra<K>& a, const Subspace<K>& comp, const SearchOptions& opts = {}) {
  const Subalgebra<K> sub = subalgebra(a, comp);
  const Algebra<K>& b = sub.algebra;
  if (b.dim() != 8) fail(ErrorKind::invalid_input, "zorn_frame_of_cayley: component must have dimension 8");
  if (detail::is_associative(b)) fail(ErrorKind::invalid_input, "zorn_frame_of_cayley: component is associative");
  const auto one = find_identity(b);
  if (!one) fail(ErrorKind::no_identity, "zorn_frame_of_cayley: component has no identity");

  // e1 from an element with quadratic minimal polynomial and distinct roots
  std::optional<Vec<K>> e1;
  CandidateStream<K> stream(Subspace<K>::full(8).vectors(), opts);
  while (!e1) {
    auto x = stream.next();
    if (!x) break;
    const Vec<K> x2 = b.multiply(*x, *x);
    auto coeff = detail::combine_to(std::vector<Vec<K>>{*one, *x}, x2);
    if (!coeff) continue;
    // x^2 = c0 + c1 x, so the roots solve t^2 - c1 t - c0
    const auto roots = split_info(Polynomial<K>({-(*coeff)[0], -(*coeff)[1], K(1)})).distinct_roots;
    if (roots.size() != 2) continue;
    const Vec<K> cand = (K(1) / (roots[0] - roots[1])) * (*x - roots[1] * *one);
    if (!is_idempotent(b, cand)) continue;
    const PeirceSystem<K> p = peirce_single(b, cand);
    if (p.component(1, 1).dim() == 1 && p.component(1, 0).dim() == 3 && p.component(0, 1).dim() == 3 &&
        p.component(0, 0).dim() == 1)
      e1 = cand;
  }
  if (!e1) fail(ErrorKind::search_exhausted, "zorn_frame_of_cayley: no idempotent with corner dims (1,3,3,1)");
  const Vec<K> e2 = *one - *e1;
  const PeirceSystem<K> p = peirce_single(b, *e1);

  MatrixUnits<K> units{2, std::vector<Vec<K>>(4)};
  bool found = false;
  for (const auto& x : p.component(1, 0).vectors()) {
    std::vector<Vec<K>> prods;
    for (const auto& y : p.component(0, 1).vectors()) prods.push_back(b.multiply(x, y));
    auto alpha = detail::combine_to(prods, *e1);
    if (!alpha) continue;
    const Vec<K> y = p.component(0, 1).embed(*alpha);
    if (b.multiply(y, x) != e2) continue;
    units.units = {*e1, x, y, e2};
    if (!check_matrix_units(b, units)) {
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorKind::non_split, "zorn_frame_of_cayley: no 2x2 matrix units through e1");

  CayleyFrame<K> frame{units, {}};
  // x v = v iota(x) for the four units, as one linear system in v
  Matrix<K> sys(4 * 8, 8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Matrix<K> m = b.left(units.unit(i, j)) - b.right(frame.iota(i, j));
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) sys((i * 2 + j) * 8 + r, c) = m(r, c);
    }
  const auto sol = nullspace_basis(sys).row_vectors();
  const auto tuples = detail::integer_tuples(sol.size(), opts.bound);
  // first pass: v^2 a nonzero square; second pass: any nonzero v^2
  for (int pass = 0; pass < 2; ++pass)
  for (const auto& coeffs : tuples) {
    Vec<K> v = zero_vector<K>(8);
    for (std::size_t r = 0; r < sol.size(); ++r)
      if (coeffs[r] != 0) v = v + K(coeffs[r]) * sol[r];
    const Vec<K> v2 = b.multiply(v, v);
    auto q = detail::combine_to(std::vector<Vec<K>>{*one}, v2);
    if (!q || (*q)[0] == K(0)) continue;
    // v^2 = c with c not a square: multiplying by d = c^{-1} e11 + e22 (norm
    // 1/c) on either side gives norm 1; every try is checked exactly.
    const K c = (*q)[0];
    std::vector<Vec<K>> tries;
    if (auto root = exact_sqrt(c)) tries.push_back((K(1) / *root) * v);
    else if (pass == 0) continue;
    const Vec<K> d = (K(1) / c) * units.unit(0, 0) + units.unit(1, 1);
    tries.push_back(b.multiply(v, d));
    tries.push_back(b.multiply(d, v));
    for (const auto& t : tries) {
      frame.v = t;
      if (check_cayley_frame(b, frame)) continue;
      for (auto& u : frame.units.units) u = sub.embed(u);
      frame.v = sub.embed(frame.v);
      if (auto bad = check_cayley_frame(a, frame)) fail(ErrorKind::verification_failure, "zorn_frame_of_cayley: " + *bad);
      return frame;
    }
  }
  fail(ErrorKind::search_exhausted, "zorn_frame_of_cayley: no v with v^2 = 1 within the search bound");
}

/// Components of C with their presentations.
template <ExactField K>
std::vector<SimpleComponent<K>> present_components(const Algebra<K>& a, const Subspace<K>& c, const SearchOptions& opts = {}) {
  std::vector<SimpleComponent<K>> out;
  for (const auto& w : simple_components(a, c)) {
    SimpleComponent<K> sc;
    sc.subspace = w;
    sc.kind = classify_component(a, w);
    if (sc.kind == ComponentKind::matrix) {
      sc.units = matrix_units_of_simple(a, w, opts);
      sc.degree = sc.units->degree;
    } else {
      sc.frame = zorn_frame_of_cayley(a, w, opts);
      sc.degree = 2;
    }
    out.push_back(std::move(sc));
  }
  return out;
}

}  // namespace wbd
