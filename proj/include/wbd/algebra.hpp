#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbd/matrix.hpp"
#include "wbd/lattice.hpp"
#include "wbd/subspace.hpp"

namespace wbd {

/// One nonzero structure constant: b_i * b_j has coefficient `value` on b_k.
template <ExactField K>
struct Triple {
  std::size_t i, j, k;
  K value;
};

/// Finite-dimensional algebra given by structure constants c_ij^k, stored
/// densely at (i*d + j)*d + k together with a sparse index per basis pair.
template <ExactField K>
class Algebra {
 public:
  Algebra() = default;

  Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<K> tensor)
      : dim_(dim), labels_(std::move(labels)), tensor_(std::move(tensor)) {
    require_admissible_characteristic(K::characteristic());
    if (labels_.empty())
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    if (labels_.size() != dim_) fail(ErrorKind::dimension_mismatch, "basis label count differs from dimension");
    if (tensor_.size() != dim_ * dim_ * dim_) fail(ErrorKind::dimension_mismatch, "structure tensor has wrong size");
    index();
  }

  static Algebra from_triples(std::size_t dim, std::vector<std::string> labels, const std::vector<Triple<K>>& triples) {
    std::vector<K> t(dim * dim * dim, K(0));
    for (const auto& tr : triples) {
      if (tr.i >= dim || tr.j >= dim || tr.k >= dim)
        fail(ErrorKind::dimension_mismatch, "structure triple index out of range");
      t[(tr.i * dim + tr.j) * dim + tr.k] += tr.value;
    }
    return Algebra(dim, std::move(labels), std::move(t));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<K>& tensor() const { return tensor_; }
  const K& constant(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * dim_ + j) * dim_ + k]; }

  /// Nonzero (k, c_ij^k) for a basis pair.
  const std::vector<std::pair<std::size_t, K>>& basis_product_terms(std::size_t i, std::size_t j) const {
    return sparse_[i * dim_ + j];
  }

  std::vector<Triple<K>> triples() const {
    std::vector<Triple<K>> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, c] : sparse_[i * dim_ + j]) out.push_back({i, j, k, c});
    return out;
  }

  Vec<K> basis_vector(std::size_t i) const { return unit_vector<K>(dim_, i); }
  Vec<K> zero() const { return zero_vector<K>(dim_); }

  Vec<K> basis_product(std::size_t i, std::size_t j) const {
    Vec<K> z(dim_, K(0));
    for (const auto& [k, c] : sparse_[i * dim_ + j]) z[k] = c;
    return z;
  }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    Vec<K> z(dim_, K(0));
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        const auto& terms = sparse_[i * dim_ + j];
        if (terms.empty()) continue;
        const K xy = x[i] * y[j];
        for (const auto& [k, c] : terms) z[k] += xy * c;
      }
    }
    return z;
  }

  /// L_x, acting on column coordinate vectors: L_x y = x*y.
  Matrix<K> left(const Vec<K>& x) const {
    check(x);
    Matrix<K> m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [k, c] : sparse_[i * dim_ + j]) m(k, j) += x[i] * c;
    }
    return m;
  }

  /// R_x: R_x y = y*x.
  Matrix<K> right(const Vec<K>& x) const {
    check(x);
    Matrix<K> m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < dim_; ++i)
        for (const auto& [k, c] : sparse_[i * dim_ + j]) m(k, i) += x[j] * c;
    }
    return m;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
  }

 private:
  void check(const Vec<K>& x) const {
    if (x.size() != dim_)
      fail(ErrorKind::dimension_mismatch,
           "element of length " + std::to_string(x.size()) + " in algebra of dimension " + std::to_string(dim_));
  }

  void index() {
    sparse_.assign(dim_ * dim_, {});
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const K& c = tensor_[(i * dim_ + j) * dim_ + k];
          if (!c.is_zero()) sparse_[i * dim_ + j].emplace_back(k, c);
        }
  }

  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<K> tensor_;
  std::vector<std::vector<std::pair<std::size_t, K>>> sparse_;
};

template <ExactField K>
Vec<K> multiply(const Algebra<K>& a, const Vec<K>& x, const Vec<K>& y) {
  return a.multiply(x, y);
}

/// (xy)z - x(yz)
template <ExactField K>
Vec<K> associator(const Algebra<K>& a, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
  return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
}

/// x^n with left bracketing x^{k+1} = x * x^k.
template <ExactField K>
Vec<K> power(const Algebra<K>& a, const Vec<K>& x, std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_input, "power: exponent must be at least 1");
  Vec<K> p = x;
  for (std::size_t k = 1; k < n; ++k) p = a.multiply(x, p);
  return p;
}

/// Right-bracketed power x^{k+1} = x^k * x, used to cross-check power associativity.
template <ExactField K>
Vec<K> power_right(const Algebra<K>& a, const Vec<K>& x, std::size_t n) {
  if (n == 0) fail(ErrorKind::invalid_input, "power: exponent must be at least 1");
  Vec<K> p = x;
  for (std::size_t k = 1; k < n; ++k) p = a.multiply(p, x);
  return p;
}

// ---------------------------------------------------------------------------
// Alternative law

template <ExactField K>
struct AlternativeWitness {
  Vec<K> x, y;
  std::string identity;  ///< "(x,x,y)" or "(y,x,x)"
  Vec<K> value;          ///< the nonzero associator
};

/// Complete test of (x,x,y) = (y,x,x) = 0 through the linearized identities
/// on basis triples. Returns nullopt when the algebra is alternative.
template <ExactField K>
std::optional<AlternativeWitness<K>> check_alternative(const Algebra<K>& a) {
  const std::size_t d = a.dim();
  // assoc[(i*d+j)*d+k] = (b_i, b_j, b_k)
  std::vector<Vec<K>> prod(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) prod[i * d + j] = a.basis_product(i, j);
  std::vector<Matrix<K>> left(d), right(d);
  for (std::size_t i = 0; i < d; ++i) {
    left[i] = a.left(a.basis_vector(i));
    right[i] = a.right(a.basis_vector(i));
  }
  std::vector<Vec<K>> assoc(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        assoc[(i * d + j) * d + k] = right[k].apply(prod[i * d + j]) - left[i].apply(prod[j * d + k]);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec<K>& { return assoc[(i * d + j) * d + k]; };
  auto witness = [&](Vec<K> x, Vec<K> y, const char* id) {
    Vec<K> value = std::string(id) == "(x,x,y)" ? associator(a, x, x, y) : associator(a, y, x, x);
    return AlternativeWitness<K>{std::move(x), std::move(y), id, std::move(value)};
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (!is_zero(at(i, i, j))) return witness(a.basis_vector(i), a.basis_vector(j), "(x,x,y)");
      if (!is_zero(at(j, i, i))) return witness(a.basis_vector(i), a.basis_vector(j), "(y,x,x)");
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        // (x,x,b_k) with x = b_i + b_j expands to the left-linearized sum.
        if (!is_zero(at(i, j, k) + at(j, i, k)))
          return witness(a.basis_vector(i) + a.basis_vector(j), a.basis_vector(k), "(x,x,y)");
        if (!is_zero(at(k, i, j) + at(k, j, i)))
          return witness(a.basis_vector(i) + a.basis_vector(j), a.basis_vector(k), "(y,x,x)");
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Identity, subspace products, ideals

/// Solves e*b_i = b_i*e = b_i for all i.
template <ExactField K>
std::optional<Vec<K>> find_identity(const Algebra<K>& a) {
  const std::size_t d = a.dim();
  if (d == 0) return std::nullopt;
  Matrix<K> m(2 * d * d, d);
  Vec<K> rhs(2 * d * d, K(0));
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& [k, c] : a.basis_product_terms(t, i)) m(i * d + k, t) += c;
      for (const auto& [k, c] : a.basis_product_terms(i, t)) m(d * d + i * d + k, t) += c;
      rhs[i * d + i] = K(1);
      rhs[d * d + i * d + i] = K(1);
    }
  auto sol = solve(m, rhs);
  if (!sol.particular) return std::nullopt;
  return sol.particular;
}

/// span{ s t : s in basis(S), t in basis(T) }
template <ExactField K>
Subspace<K> product_space(const Algebra<K>& a, const Subspace<K>& s, const Subspace<K>& t) {
  SpanBuilder<K> span(a.dim());
  const auto tv = t.vectors();
  for (std::size_t r = 0; r < s.dim() && !span.full(); ++r) {
    const Matrix<K> l = a.left(s.vector(r));
    for (const auto& y : tv) {
      span.add(l.apply(y));
      if (span.full()) break;
    }
  }
  return span.result();
}

/// Square-zero test without building the product span.
template <ExactField K>
bool products_vanish(const Algebra<K>& a, const Subspace<K>& s, const Subspace<K>& t) {
  const auto tv = t.vectors();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Matrix<K> l = a.left(s.vector(r));
    for (const auto& y : tv)
      if (!is_zero(l.apply(y))) return false;
  }
  return true;
}

template <ExactField K>
bool is_subalgebra(const Algebra<K>& a, const Subspace<K>& s) {
  const auto sv = s.vectors();
  for (const auto& x : sv) {
    const Matrix<K> l = a.left(x);
    for (const auto& y : sv)
      if (!s.contains(l.apply(y))) return false;
  }
  return true;
}

/// Two-sided ideal test against all basis vectors of the algebra.
template <ExactField K>
bool is_ideal(const Algebra<K>& a, const Subspace<K>& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec<K> v = s.vector(r);
    const Matrix<K> l = a.left(v), rt = a.right(v);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(l.column(i)) || !s.contains(rt.column(i))) return false;
  }
  return true;
}

/// Smallest two-sided ideal containing gens: each new vector is multiplied on
/// both sides by every basis vector until nothing new appears.
template <ExactField K>
Subspace<K> ideal_generated(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
  const std::size_t d = a.dim();
  SpanBuilder<K> span(d);
  std::vector<Vec<K>> pending;
  auto add = [&](Vec<K> v) {
    if (span.add(std::move(v))) pending.push_back(span.last());
  };
  for (const auto& g : gens) add(g);
  while (!pending.empty() && !span.full()) {
    Vec<K> v = std::move(pending.back());
    pending.pop_back();
    const Matrix<K> l = a.left(v), rt = a.right(v);
    for (std::size_t i = 0; i < d; ++i) {
      add(l.column(i));
      add(rt.column(i));
    }
  }
  return span.result();
}

template <ExactField K>
Subspace<K> ideal_generated(const Algebra<K>& a, const Subspace<K>& s) {
  return ideal_generated(a, s.vectors());
}

// ---------------------------------------------------------------------------
// Quotients and subalgebras

/// Quotient U/I on the non-pivot coordinates of I's canonical basis.
template <ExactField K>
struct Quotient {
  Algebra<K> algebra;
  Subspace<K> ideal;
  std::vector<std::size_t> kept;  ///< ambient coordinate of each quotient basis vector
  std::size_t ambient_dim = 0;

  Vec<K> project(const Vec<K>& x) const {
    Vec<K> r = ideal.reduce(x);
    Vec<K> q(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) q[a] = r[kept[a]];
    return q;
  }
  Vec<K> section(const Vec<K>& q) const {
    if (q.size() != kept.size()) fail(ErrorKind::dimension_mismatch, "quotient element has wrong length");
    Vec<K> x(ambient_dim, K(0));
    for (std::size_t a = 0; a < kept.size(); ++a) x[kept[a]] = q[a];
    return x;
  }
  /// Image of an ambient subspace.
  Subspace<K> project(const Subspace<K>& s) const {
    std::vector<Vec<K>> v;
    for (const auto& x : s.vectors()) v.push_back(project(x));
    return Subspace<K>::span(kept.size(), v);
  }
  /// Full preimage of a quotient subspace.
  Subspace<K> preimage(const Subspace<K>& s) const {
    std::vector<Vec<K>> v = ideal.vectors();
    for (const auto& q : s.vectors()) v.push_back(section(q));
    return Subspace<K>::span(ambient_dim, v);
  }
};

template <ExactField K>
Quotient<K> quotient(const Algebra<K>& a, const Subspace<K>& ideal) {
  if (ideal.ambient_dim() != a.dim()) fail(ErrorKind::dimension_mismatch, "quotient: ideal in wrong ambient space");
  if (!is_ideal(a, ideal)) fail(ErrorKind::not_an_ideal, "quotient: subspace is not a two-sided ideal");
  Quotient<K> q;
  q.ideal = ideal;
  q.ambient_dim = a.dim();
  std::vector<bool> pivot(a.dim(), false);
  for (std::size_t p : ideal.pivots()) pivot[p] = true;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!pivot[i]) {
      q.kept.push_back(i);
      labels.push_back(a.label(i));
    }
  const std::size_t n = q.kept.size();
  std::vector<K> t(n * n * n, K(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec<K> p = q.project(a.basis_product(q.kept[x], q.kept[y]));
      for (std::size_t z = 0; z < n; ++z) t[(x * n + y) * n + z] = p[z];
    }
  q.algebra = Algebra<K>(n, std::move(labels), std::move(t));
  return q;
}

/// A subalgebra realised as an algebra on a basis of the subspace: the RREF
/// basis, or a reduced integral one (see reduced_basis) when requested.
template <ExactField K>
struct Subalgebra {
  Algebra<K> algebra;
  Subspace<K> space;
  std::vector<Vec<K>> basis;
  std::optional<Matrix<K>> to_local;  ///< RREF coordinates -> basis coordinates

  Vec<K> embed(const Vec<K>& local) const {
    Vec<K> x = zero_vector<K>(space.ambient_dim());
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (!local[r].is_zero()) x = x + local[r] * basis[r];
    return x;
  }
  std::optional<Vec<K>> try_coordinates(const Vec<K>& x) const {
    auto c = space.coordinates(x);
    if (c && to_local) return to_local->apply(*c);
    return c;
  }
  Vec<K> coordinates(const Vec<K>& x) const {
    auto c = try_coordinates(x);
    if (!c) fail(ErrorKind::containment_violated, "element lies outside the subalgebra");
    return *c;
  }
  Subspace<K> embed(const Subspace<K>& local) const {
    std::vector<Vec<K>> v;
    for (const auto& x : local.vectors()) v.push_back(embed(x));
    return Subspace<K>::span(space.ambient_dim(), v);
  }
  Subspace<K> coordinates(const Subspace<K>& s) const {
    std::vector<Vec<K>> v;
    for (const auto& x : s.vectors()) v.push_back(coordinates(x));
    return Subspace<K>::span(space.dim(), v);
  }
};

/// Subalgebra on s. With reduce set, the basis is reduced_basis(s), which over
/// Q keeps structure constants small for the bounded candidate searches.
template <ExactField K>
Subalgebra<K> subalgebra(const Algebra<K>& a, const Subspace<K>& s, bool reduce = false) {
  const std::size_t n = s.dim();
  Subalgebra<K> sub;
  sub.space = s;
  sub.basis = reduce ? reduced_basis(s) : s.vectors();
  if (reduce) {
    Matrix<K> m(n, n);  // column r: RREF coordinates of basis r
    for (std::size_t r = 0; r < n; ++r) {
      const Vec<K> c = *s.coordinates(sub.basis[r]);
      for (std::size_t q = 0; q < n; ++q) m(q, r) = c[q];
    }
    auto inv = inverse(m);
    if (!inv) fail(ErrorKind::verification_failure, "subalgebra: reduced basis is not a basis");
    sub.to_local = std::move(*inv);
  }
  std::vector<K> t(n * n * n, K(0));
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix<K> l = a.left(sub.basis[x]);
    for (std::size_t y = 0; y < n; ++y) {
      auto c = sub.try_coordinates(l.apply(sub.basis[y]));
      if (!c) fail(ErrorKind::not_a_subalgebra, "subspace is not closed under multiplication");
      for (std::size_t z = 0; z < n; ++z) t[(x * n + y) * n + z] = (*c)[z];
    }
  }
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < n; ++r) labels.push_back("s" + std::to_string(r));
  sub.algebra = Algebra<K>(n, std::move(labels), std::move(t));
  return sub;
}

// ---------------------------------------------------------------------------
// Change of basis

/// New basis b'_i = sum_j p_ij b_j. Coordinates transform as x = p^T x'.
template <ExactField K>
Algebra<K> change_basis(const Algebra<K>& a, const Matrix<K>& p) {
  const std::size_t d = a.dim();
  if (p.rows() != d || p.cols() != d) fail(ErrorKind::dimension_mismatch, "change_basis: matrix has wrong size");
  auto pinv = inverse(p);
  if (!pinv) fail(ErrorKind::singular_matrix, "change_basis: matrix is singular");
  // new coordinates of a vector x: x' = (p^T)^{-1} x = pinv^T x
  const Matrix<K> to_new = pinv->transpose();
  std::vector<K> t(d * d * d, K(0));
  std::vector<Vec<K>> nb(d);
  for (std::size_t i = 0; i < d; ++i) nb[i] = p.row(i);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix<K> l = a.left(nb[i]);
    for (std::size_t j = 0; j < d; ++j) {
      Vec<K> c = to_new.apply(l.apply(nb[j]));
      for (std::size_t k = 0; k < d; ++k) t[(i * d + j) * d + k] = c[k];
    }
  }
  // Rows that are unit vectors keep the old label; mixed rows get a fresh one.
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t j = 0; j < d; ++j)
      if (!p(i, j).is_zero()) ++nonzero, at = j;
    labels.push_back(nonzero == 1 && p(i, at) == K(1) ? a.label(at) : "b" + std::to_string(i));
  }
  return Algebra<K>(d, std::move(labels), std::move(t));
}

}  // namespace wbd
