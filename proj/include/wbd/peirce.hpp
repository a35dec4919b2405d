#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wbd/radical.hpp"

namespace wbd {

template <ExactField K>
bool is_idempotent(const Algebra<K>& a, const Vec<K>& e) {
  return !is_zero(e) && a.multiply(e, e) == e;
}

/// Peirce decomposition relative to orthogonal idempotents e_1..e_t. Index 0
/// stands for "annihilated by every e_k"; component (i, j) collects x with
/// e_k x = [k = i] x and x e_k = [k = j] x.
template <ExactField K>
class PeirceSystem {
 public:
  PeirceSystem() = default;
  PeirceSystem(std::vector<Vec<K>> idempotents, std::vector<Subspace<K>> components)
      : idempotents_(std::move(idempotents)), components_(std::move(components)) {
    const std::size_t n = components_.empty() ? 0 : components_.front().ambient_dim();
    Matrix<K> stacked(0, n);
    for (const auto& c : components_) {
      offsets_.push_back(stacked.rows());
      stacked = vstack(stacked, c.basis());
    }
    offsets_.push_back(stacked.rows());
    if (stacked.rows() != n) fail(ErrorKind::verification_failure, "Peirce components do not add up to the algebra");
    auto inv = inverse(stacked.transpose());
    if (!inv) fail(ErrorKind::verification_failure, "Peirce components are not independent");
    stacked_ = std::move(stacked);
    to_coords_ = std::move(*inv);
  }

  std::size_t size() const { return idempotents_.size(); }
  const std::vector<Vec<K>>& idempotents() const { return idempotents_; }
  const Subspace<K>& component(std::size_t i, std::size_t j) const { return components_.at(i * (size() + 1) + j); }

  /// Component of x in U_ij along the direct sum.
  Vec<K> project(const Vec<K>& x, std::size_t i, std::size_t j) const {
    const std::size_t idx = i * (size() + 1) + j;
    const Vec<K> c = to_coords_.apply(x);
    Vec<K> out(x.size(), K(0));
    for (std::size_t r = offsets_[idx]; r < offsets_[idx + 1]; ++r)
      if (!c[r].is_zero()) out = out + c[r] * stacked_.row(r);
    return out;
  }

 private:
  std::vector<Vec<K>> idempotents_;
  std::vector<Subspace<K>> components_;
  std::vector<std::size_t> offsets_;
  Matrix<K> stacked_;
  Matrix<K> to_coords_;
};

template <ExactField K>
PeirceSystem<K> peirce_set(const Algebra<K>& a, const std::vector<Vec<K>>& es) {
  const std::size_t d = a.dim(), t = es.size();
  for (const auto& e : es)
    if (!is_idempotent(a, e)) fail(ErrorKind::not_idempotent, "Peirce decomposition needs idempotents");
  for (std::size_t p = 0; p < t; ++p)
    for (std::size_t q = 0; q < t; ++q)
      if (p != q && !is_zero(a.multiply(es[p], es[q])))
        fail(ErrorKind::not_orthogonal, "idempotents " + std::to_string(p + 1) + " and " + std::to_string(q + 1) +
                                            " are not orthogonal");
  std::vector<Matrix<K>> left, right;
  for (const auto& e : es) {
    left.push_back(a.left(e));
    right.push_back(a.right(e));
  }
  const Matrix<K> id = Matrix<K>::identity(d);
  std::vector<Subspace<K>> comps;
  for (std::size_t i = 0; i <= t; ++i)
    for (std::size_t j = 0; j <= t; ++j) {
      Matrix<K> sys(0, d);
      for (std::size_t k = 1; k <= t; ++k) {
        sys = vstack(sys, k == i ? left[k - 1] - id : left[k - 1]);
        sys = vstack(sys, k == j ? right[k - 1] - id : right[k - 1]);
      }
      comps.push_back(t == 0 ? Subspace<K>::full(d) : Subspace<K>::from_matrix(nullspace_basis(sys)));
    }
  return PeirceSystem<K>(es, std::move(comps));
}

/// U = U_11 + U_10 + U_01 + U_00 for one idempotent.
template <ExactField K>
PeirceSystem<K> peirce_single(const Algebra<K>& a, const Vec<K>& e) {
  return peirce_set(a, std::vector<Vec<K>>{e});
}

struct PeirceRelationCheck {
  bool ok = true;
  std::string witness;  ///< first violated relation, e.g. "U_10 U_10 not in U_01"
};

/// U_ij U_jl in U_il; U_ij U_ij in U_ji; every other product of components is zero.
template <ExactField K>
PeirceRelationCheck verify_peirce_relations(const Algebra<K>& a, const PeirceSystem<K>& p) {
  const std::size_t n = p.size() + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const auto& x = p.component(i, j);
          const auto& y = p.component(k, l);
          if (x.is_zero() || y.is_zero()) continue;
          const Subspace<K> prod = product_space(a, x, y);
          std::string target;
          bool ok;
          if (j == k) {
            ok = p.component(i, l).contains(prod);
            target = "U_" + std::to_string(i) + std::to_string(l);
          } else if (i == k && j == l) {
            ok = p.component(j, i).contains(prod);
            target = "U_" + std::to_string(j) + std::to_string(i);
          } else {
            ok = prod.is_zero();
            target = "0";
          }
          if (!ok)
            return {false, "U_" + std::to_string(i) + std::to_string(j) + " U_" + std::to_string(k) +
                               std::to_string(l) + " not in " + target};
        }
  return {};
}

// ---------------------------------------------------------------------------
// Idempotents

template <ExactField K>
struct IdempotentResult {
  Vec<K> element;
  std::size_t steps = 0;   ///< Hensel iterations; 0 for the Fitting route
  bool hensel = false;
};

/// ceil(log2(n + 1))
inline std::size_t hensel_step_bound(std::size_t n) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < n + 1) ++b;
  return b;
}

/// e <- 3e^2 - 2e^3. Needs x^2 - x nilpotent; the defect index at least
/// doubles each step.
template <ExactField K>
IdempotentResult<K> hensel_idempotent(const Algebra<K>& a, const Vec<K>& x) {
  if (!is_nilpotent_element(a, a.multiply(x, x) - x).nilpotent)
    fail(ErrorKind::not_idempotent, "Hensel iteration needs a nilpotent defect x^2 - x");
  IdempotentResult<K> r{x, 0, true};
  const std::size_t cap = hensel_step_bound(a.dim()) + 2;
  for (;;) {
    const Vec<K> e2 = a.multiply(r.element, r.element);
    if (e2 == r.element) break;
    if (r.steps >= cap) fail(ErrorKind::not_idempotent, "Hensel iteration did not converge");
    const Vec<K> e3 = a.multiply(r.element, e2);
    r.element = K(3) * e2 - K(2) * e3;
    ++r.steps;
  }
  if (is_zero(r.element)) fail(ErrorKind::not_idempotent, "Hensel iteration collapsed to zero");
  return r;
}

/// Identity element of x^N F[x] (N = dim + 1): the idempotent of F[x]
/// supported where x is invertible. Empty when x is nilpotent.
template <ExactField K>
std::optional<Vec<K>> fitting_unit(const Algebra<K>& a, const Vec<K>& x) {
  const std::size_t d = a.dim();
  Vec<K> p = power(a, x, d + 1);
  if (is_zero(p)) return std::nullopt;
  std::vector<Vec<K>> pw{p};
  for (std::size_t k = 0; k < d; ++k) pw.push_back(a.multiply(x, pw.back()));
  const Subspace<K> span = Subspace<K>::span(d, pw);
  const auto basis = span.vectors();
  const std::size_t m = basis.size();
  Matrix<K> sys(m * d, m);
  Vec<K> rhs(m * d, K(0));
  for (std::size_t s = 0; s < m; ++s) {
    const Matrix<K> l = a.left(basis[s]);
    for (std::size_t r = 0; r < m; ++r) {
      const Vec<K> prod = l.apply(basis[r]);
      for (std::size_t k = 0; k < d; ++k) sys(r * d + k, s) = prod[k];
    }
  }
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < d; ++k) rhs[r * d + k] = basis[r][k];
  auto sol = solve(sys, rhs);
  if (!sol.particular) fail(ErrorKind::verification_failure, "Fitting component has no identity");
  Vec<K> e = span.embed(*sol.particular);
  if (!is_idempotent(a, e)) fail(ErrorKind::verification_failure, "Fitting unit is not idempotent");
  return e;
}

/// Idempotent in F[x] for a non-nilpotent x: Hensel when x^2 - x is
/// nilpotent, the Fitting unit otherwise.
template <ExactField K>
IdempotentResult<K> idempotent_from(const Algebra<K>& a, const Vec<K>& x) {
  if (is_nilpotent_element(a, a.multiply(x, x) - x).nilpotent) return hensel_idempotent(a, x);
  auto e = fitting_unit(a, x);
  if (!e) fail(ErrorKind::not_idempotent, "element is nilpotent; no idempotent in F[x]");
  return {*e, 0, false};
}

template <ExactField K>
IdempotentResult<K> find_weight_one_idempotent(const BaricAlgebra<K>& u) {
  auto r = idempotent_from(u.algebra(), u.weight_one_element());
  if (u.weight_of(r.element) != K(1)) fail(ErrorKind::verification_failure, "idempotent lost weight 1");
  return r;
}

template <ExactField K>
struct PrincipalIdempotent {
  Vec<K> element;
  std::size_t rounds = 0;  ///< orthogonal idempotents added after the first
};

/// Weight-1 idempotent whose U_00 corner is nil. Non-nilpotent elements of a
/// non-nil U_00 contribute further orthogonal idempotents; dim U_00 drops each round.
template <ExactField K>
PrincipalIdempotent<K> principal_idempotent(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  const Algebra<K>& a = u.algebra();
  PrincipalIdempotent<K> out{find_weight_one_idempotent(u).element, 0};
  for (;;) {
    const PeirceSystem<K> sys = peirce_single(a, out.element);
    const Subspace<K>& u00 = sys.component(0, 0);
    if (u00.is_zero() || power_chain(a, u00).nilpotent) return out;
    CandidateStream<K> stream(u00.vectors(), opts);
    std::optional<Vec<K>> found;
    while (auto y = stream.next())
      if (!is_nilpotent_element(a, *y).nilpotent) {
        found = std::move(y);
        break;
      }
    if (!found) fail(ErrorKind::search_exhausted, "principal_idempotent: no non-nilpotent element found in U_00");
    out.element = out.element + idempotent_from(a, *found).element;
    ++out.rounds;
    if (out.rounds > a.dim()) fail(ErrorKind::verification_failure, "principal_idempotent: U_00 failed to shrink");
  }
}

// ---------------------------------------------------------------------------
// Radical of Peirce corners

template <ExactField K>
struct CornerRadicalCheck {
  bool ok = true;
  std::string detail;
};

/// R(U_ii) = R(U) ∩ U_ii for i = 0, 1.
template <ExactField K>
CornerRadicalCheck<K> peirce_radical_check(const Algebra<K>& a, const Vec<K>& e, const SearchOptions& opts = {}) {
  const PeirceSystem<K> sys = peirce_single(a, e);
  const Subspace<K> r = nilradical(a, opts).radical;
  for (std::size_t i : {std::size_t{1}, std::size_t{0}}) {
    const Subspace<K>& corner = sys.component(i, i);
    Subspace<K> lhs(a.dim());
    if (!corner.is_zero()) {
      const Subalgebra<K> sub = subalgebra(a, corner);
      lhs = sub.embed(nilradical(sub.algebra, opts).radical);
    }
    if (!(lhs == intersection(r, corner)))
      return {false, "R(U_" + std::to_string(i) + std::to_string(i) + ") differs from R(U) ∩ U_" + std::to_string(i) +
                         std::to_string(i)};
  }
  return {true, "ok"};
}

}  // namespace wbd
