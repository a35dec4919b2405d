#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbd/algebra.hpp"

namespace wbd {

/// Outcome of testing a weight row against the multiplication table.
struct WeightCheck {
  bool ok = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< failing basis pair, if any
  std::string message;
};

/// omega(b_i b_j) = omega(b_i) omega(b_j) on all basis pairs, and omega != 0.
template <ExactField K>
WeightCheck check_weight(const Algebra<K>& a, const Vec<K>& w) {
  if (w.size() != a.dim()) fail(ErrorKind::dimension_mismatch, "weight has wrong length");
  if (is_zero(w)) return {false, std::nullopt, "weight must be a nonzero homomorphism; got the zero functional"};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      K lhs(0);
      for (const auto& [k, c] : a.basis_product_terms(i, j)) lhs += c * w[k];
      if (lhs != w[i] * w[j])
        return {false, std::make_pair(i, j),
                "weight is not multiplicative on (" + a.label(i) + ", " + a.label(j) + "): omega(b_i b_j) = " +
                    lhs.str() + " but omega(b_i) omega(b_j) = " + (w[i] * w[j]).str()};
    }
  return {true, std::nullopt, "ok"};
}

template <ExactField K>
class BaricAlgebra {
 public:
  BaricAlgebra() = default;
  BaricAlgebra(Algebra<K> a, Vec<K> w) : algebra_(std::move(a)), weight_(std::move(w)) {
    auto chk = check_weight(algebra_, weight_);
    if (!chk.ok) fail(ErrorKind::invalid_weight, chk.message);
  }

  const Algebra<K>& algebra() const { return algebra_; }
  const Vec<K>& weight() const { return weight_; }
  std::size_t dim() const { return algebra_.dim(); }

  K weight_of(const Vec<K>& x) const { return dot(weight_, x); }

  /// Some element of weight 1: the first basis vector with nonzero weight, rescaled.
  Vec<K> weight_one_element() const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!weight_[i].is_zero()) return (K(1) / weight_[i]) * algebra_.basis_vector(i);
    fail(ErrorKind::invalid_weight, "zero weight");
  }

 private:
  Algebra<K> algebra_;
  Vec<K> weight_;
};

/// bar(U) = ker(omega), of codimension one.
template <ExactField K>
Subspace<K> bar_ideal(const BaricAlgebra<K>& u) {
  Matrix<K> row = Matrix<K>::from_rows({u.weight()}, u.dim());
  Subspace<K> bar = Subspace<K>::from_matrix(nullspace_basis(row));
  if (bar.dim() + 1 != u.dim()) fail(ErrorKind::invalid_weight, "bar ideal does not have codimension 1");
  return bar;
}

template <ExactField K>
bool is_b_ideal(const BaricAlgebra<K>& u, const Subspace<K>& i) {
  return bar_ideal(u).contains(i) && is_ideal(u.algebra(), i);
}

template <ExactField K>
struct BaricQuotient {
  BaricAlgebra<K> algebra;
  Quotient<K> map;

  Vec<K> project(const Vec<K>& x) const { return map.project(x); }
  Vec<K> section(const Vec<K>& q) const { return map.section(q); }
};

/// U/I with the induced weight omega(u + I) = omega(u).
template <ExactField K>
BaricQuotient<K> quotient_baric(const BaricAlgebra<K>& u, const Subspace<K>& i) {
  if (!bar_ideal(u).contains(i)) fail(ErrorKind::not_a_b_ideal, "quotient_baric: subspace is not inside bar(U)");
  if (!is_ideal(u.algebra(), i)) fail(ErrorKind::not_a_b_ideal, "quotient_baric: subspace is not an ideal");
  Quotient<K> q = quotient(u.algebra(), i);
  Vec<K> w(q.kept.size());
  for (std::size_t a = 0; a < q.kept.size(); ++a) w[a] = u.weight()[q.kept[a]];
  BaricAlgebra<K> qa(q.algebra, std::move(w));
  return {std::move(qa), std::move(q)};
}

template <ExactField K>
struct BaricSubalgebra {
  BaricAlgebra<K> algebra;
  Subalgebra<K> sub;

  Vec<K> embed(const Vec<K>& local) const { return sub.embed(local); }
  Vec<K> coordinates(const Vec<K>& x) const { return sub.coordinates(x); }
  Subspace<K> embed(const Subspace<K>& local) const { return sub.embed(local); }
  Subspace<K> coordinates(const Subspace<K>& s) const { return sub.coordinates(s); }
};

/// Restriction of (U, omega) to a subalgebra on which omega does not vanish.
template <ExactField K>
BaricSubalgebra<K> baric_subalgebra(const BaricAlgebra<K>& u, const Subspace<K>& s, bool reduce = false) {
  Subalgebra<K> sub = subalgebra(u.algebra(), s, reduce);
  Vec<K> w(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) w[r] = dot(u.weight(), sub.basis[r]);
  if (is_zero(w)) fail(ErrorKind::invalid_weight, "weight vanishes on the subalgebra");
  BaricAlgebra<K> b(sub.algebra, std::move(w));
  return {std::move(b), std::move(sub)};
}

/// Conjugate (U, omega) by the basis change b'_i = sum_j p_ij b_j.
template <ExactField K>
BaricAlgebra<K> change_basis(const BaricAlgebra<K>& u, const Matrix<K>& p) {
  return BaricAlgebra<K>(change_basis(u.algebra(), p), p.apply(u.weight()));
}

}  // namespace wbd
