#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wbd/matrix.hpp"

namespace wbd {

/// Linear subspace of K^n, stored as its unique RREF basis. Two subspaces are
/// equal exactly when their RREF bases are equal.
template <ExactField K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return from_matrix(Matrix<K>::identity(n)); }

  static Subspace span(std::size_t n, const std::vector<Vec<K>>& vectors) {
    if (vectors.empty()) return Subspace(n);
    return from_matrix(Matrix<K>::from_rows(vectors, n));
  }

  /// Row space of m.
  static Subspace from_matrix(const Matrix<K>& m) {
    Subspace s(m.cols());
    if (m.rows() == 0) return s;
    auto rr = rref(m);
    for (std::size_t r = 0; r < rr.rank; ++r) s.basis_.append_row(rr.reduced.row(r));
    s.pivots_ = std::move(rr.pivots);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix<K>& basis() const { return basis_; }
  std::vector<Vec<K>> vectors() const { return basis_.row_vectors(); }
  Vec<K> vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// x minus its projection along the pivot coordinates; zero iff x lies in
  /// the subspace.
  Vec<K> reduce(Vec<K> x) const {
    check_length(x);
    for (std::size_t r = 0; r < dim(); ++r) {
      const K f = x[pivots_[r]];
      if (f.is_zero()) continue;
      auto row = basis_.row_span(r);
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!row[j].is_zero()) x[j] -= f * row[j];
    }
    return x;
  }

  bool contains(const Vec<K>& x) const { return wbd::is_zero(reduce(x)); }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.vector(r))) return false;
    return true;
  }

  /// Coordinates of x on the RREF basis, or nullopt if x is outside.
  std::optional<Vec<K>> coordinates(const Vec<K>& x) const {
    if (!contains(x)) return std::nullopt;
    Vec<K> c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = x[pivots_[r]];
    return c;
  }

  /// Inverse of coordinates().
  Vec<K> embed(const Vec<K>& coords) const {
    if (coords.size() != dim()) fail(ErrorKind::dimension_mismatch, "coordinate vector has wrong length");
    return basis_.apply_left(coords);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_length(const Vec<K>& x) const {
    if (x.size() != ambient_)
      fail(ErrorKind::dimension_mismatch,
           "vector of length " + std::to_string(x.size()) + " in ambient dimension " + std::to_string(ambient_));
  }
  void check_ambient(const Subspace& o) const {
    if (o.ambient_ != ambient_) fail(ErrorKind::dimension_mismatch, "subspaces live in different ambient spaces");
  }

  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental span: each added vector is reduced against the rows kept so
/// far, so long generator lists never enter one large elimination.
template <ExactField K>
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t n) : n_(n) {}

  /// True when x enlarged the span.
  bool add(Vec<K> x) {
    if (x.size() != n_) fail(ErrorKind::dimension_mismatch, "span generator has wrong length");
    if (full()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const K f = x[pivots_[r]];
      if (f.is_zero()) continue;
      const Vec<K>& row = rows_[r];
      for (std::size_t j = 0; j < n_; ++j)
        if (!row[j].is_zero()) x[j] -= f * row[j];
    }
    std::size_t p = 0;
    while (p < n_ && x[p].is_zero()) ++p;
    if (p == n_) return false;
    const K inv = K(1) / x[p];
    for (std::size_t j = p; j < n_; ++j)
      if (!x[j].is_zero()) x[j] *= inv;
    rows_.push_back(std::move(x));
    pivots_.push_back(p);
    return true;
  }
  bool full() const { return rows_.size() == n_; }
  std::size_t dim() const { return rows_.size(); }
  const Vec<K>& last() const { return rows_.back(); }
  Subspace<K> result() const {
    if (full()) return Subspace<K>::full(n_);
    return Subspace<K>::span(n_, rows_);
  }

 private:
  std::size_t n_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim()) fail(ErrorKind::dimension_mismatch, "sum of subspaces in different ambients");
  return Subspace<K>::from_matrix(vstack(a.basis(), b.basis()));
}

template <ExactField K>
Subspace<K> subspace_sum(const std::vector<Subspace<K>>& parts, std::size_t ambient) {
  Matrix<K> m(0, ambient);
  for (const auto& p : parts) {
    if (p.ambient_dim() != ambient) fail(ErrorKind::dimension_mismatch, "sum of subspaces in different ambients");
    m = vstack(m, p.basis());
  }
  return Subspace<K>::from_matrix(m);
}

/// Intersection via the nullspace of [A; -B]^T: alpha A = beta B.
template <ExactField K>
Subspace<K> intersection(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorKind::dimension_mismatch, "intersection of subspaces in different ambients");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace<K>(n);
  Matrix<K> stacked = vstack(a.basis(), K(-1) * b.basis());
  Matrix<K> kernel = nullspace_basis(stacked.transpose());
  std::vector<Vec<K>> vecs;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Vec<K> alpha(kernel.row_span(r).begin(), kernel.row_span(r).begin() + a.dim());
    vecs.push_back(a.basis().apply_left(alpha));
  }
  return Subspace<K>::span(n, vecs);
}

template <ExactField K>
struct SubspaceOps {
  Subspace<K> sum;
  Subspace<K> intersection;
  bool contains;  ///< first operand contains the second
};

template <ExactField K>
SubspaceOps<K> subspace_ops(const Subspace<K>& s1, const Subspace<K>& s2) {
  return {subspace_sum(s1, s2), intersection(s1, s2), s1.contains(s2)};
}

/// Deterministic complement of `inner` inside `outer`: rows of outer's RREF
/// basis, in index order, are kept whenever they enlarge the running span.
template <ExactField K>
Subspace<K> complement(const Subspace<K>& inner, const Subspace<K>& outer) {
  if (!outer.contains(inner)) fail(ErrorKind::containment_violated, "complement: inner is not contained in outer");
  Subspace<K> running = inner;
  std::vector<Vec<K>> chosen;
  for (std::size_t r = 0; r < outer.dim() && running.dim() < outer.dim(); ++r) {
    Vec<K> v = outer.vector(r);
    if (running.contains(v)) continue;
    chosen.push_back(v);
    running = subspace_sum(running, Subspace<K>::span(outer.ambient_dim(), {v}));
  }
  return Subspace<K>::span(outer.ambient_dim(), chosen);
}

// ---------------------------------------------------------------------------
// Linear systems

template <ExactField K>
struct SolveResult {
  std::optional<Vec<K>> particular;  ///< absent when a x = b is inconsistent
  Subspace<K> kernel;                ///< full nullspace of a
};

template <ExactField K>
SolveResult<K> solve(const Matrix<K>& a, const Vec<K>& b) {
  if (a.rows() != b.size()) fail(ErrorKind::dimension_mismatch, "solve: right-hand side has wrong length");
  const std::size_t n = a.cols();
  Matrix<K> aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto rr = rref(std::move(aug));
  SolveResult<K> out{std::nullopt, Subspace<K>::from_matrix(nullspace_basis(a))};
  if (rr.rank > 0 && rr.pivots.back() == n) return out;
  Vec<K> x(n, K(0));
  for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.reduced(r, n);
  out.particular = std::move(x);
  return out;
}

}  // namespace wbd
