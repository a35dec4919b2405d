#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wbd/baric.hpp"
#include "wbd/search.hpp"

namespace wbd {

struct NilpotencyResult {
  bool nilpotent = false;
  std::size_t index = 0;  ///< least n with x^n = 0 when nilpotent
};

/// Powers up to dim + 1.
template <ExactField K>
NilpotencyResult is_nilpotent_element(const Algebra<K>& a, const Vec<K>& x) {
  Vec<K> p = x;
  for (std::size_t n = 1; n <= a.dim() + 1; ++n) {
    if (is_zero(p)) return {true, n};
    p = a.multiply(x, p);
  }
  return {false, 0};
}

template <ExactField K>
struct NilCertificate {
  Subspace<K> ideal;
  std::vector<Subspace<K>> chain;  ///< I, I^2, ... ; ends in {0} when nilpotent
  bool nilpotent = false;
  std::size_t nil_index = 0;       ///< least k with I^k = 0
};

/// I^{k+1} = I^k I + I I^k until {0} or a nonzero fixed point. Works for any
/// subalgebra; ideal_power_chain adds the ideal precondition.
template <ExactField K>
NilCertificate<K> power_chain(const Algebra<K>& a, const Subspace<K>& i) {
  NilCertificate<K> cert;
  cert.ideal = i;
  Subspace<K> cur = i;
  cert.chain.push_back(cur);
  while (!cur.is_zero()) {
    Subspace<K> next = subspace_sum(product_space(a, cur, i), product_space(a, i, cur));
    if (next == cur) return cert;
    cur = std::move(next);
    cert.chain.push_back(cur);
  }
  cert.nilpotent = true;
  cert.nil_index = cert.chain.size();
  return cert;
}

template <ExactField K>
NilCertificate<K> ideal_power_chain(const Algebra<K>& a, const Subspace<K>& i) {
  if (!is_ideal(a, i)) fail(ErrorKind::not_an_ideal, "ideal_power_chain: subspace is not an ideal");
  return power_chain(a, i);
}

/// Radical of the form B(x, y) = tr(L_xy + R_xy).
template <ExactField K>
Subspace<K> trace_form_radical(const Algebra<K>& a) {
  const std::size_t d = a.dim();
  Vec<K> t(d, K(0));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      t[k] += a.constant(k, j, j);
      t[k] += a.constant(j, k, j);
    }
  Matrix<K> g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : a.basis_product_terms(i, j)) g(i, j) += c * t[k];
  return Subspace<K>::from_matrix(nullspace_basis(vstack(g, g.transpose())));
}

template <ExactField K>
struct NilradicalResult {
  Subspace<K> radical;
  NilCertificate<K> chain;
  bool ideal = false;     ///< (a) closed under multiplication by U
  bool maximal = false;   ///< (c) every basis vector outside breaks nilpotency
  std::string method;     ///< "trace-form" or "search"
  std::string detail;

  bool certified() const { return ideal && chain.nilpotent && maximal; }
};

/// (c): for each basis vector v outside N, the ideal generated by N and v is not nilpotent.
template <ExactField K>
std::pair<bool, std::string> maximality_oracle(const Algebra<K>& a, const Subspace<K>& n) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec<K> v = a.basis_vector(i);
    if (n.contains(v)) continue;
    std::vector<Vec<K>> gens = n.vectors();
    gens.push_back(v);
    const Subspace<K> ideal = ideal_generated(a, gens);
    // a non-nilpotent basis vector already rules the ideal out
    bool witness = false;
    for (const auto& x : ideal.vectors())
      if (!is_nilpotent_element(a, x).nilpotent) {
        witness = true;
        break;
      }
    if (!witness && power_chain(a, ideal).nilpotent)
      return {false, "ideal generated with " + a.label(i) + " is still nilpotent"};
  }
  return {true, "ok"};
}

template <ExactField K>
NilradicalResult<K> certify_nilradical(const Algebra<K>& a, const Subspace<K>& n, std::string method) {
  NilradicalResult<K> r;
  r.radical = n;
  r.method = std::move(method);
  r.ideal = is_ideal(a, n);
  r.chain = power_chain(a, n);
  if (r.ideal && r.chain.nilpotent) {
    auto [ok, detail] = maximality_oracle(a, n);
    r.maximal = ok;
    r.detail = detail;
  } else {
    r.detail = r.ideal ? "candidate is not nilpotent" : "candidate is not an ideal";
  }
  return r;
}

/// Maximal nil ideal R(U). The trace-form radical is tried first; the result
/// is always certified (ideal, nilpotent chain, maximality oracle). When the
/// certificate fails, nilpotent ideals inside the trace-form radical are
/// grown greedily from candidate generators.
template <ExactField K>
NilradicalResult<K> nilradical(const Algebra<K>& a, const SearchOptions& opts = {}) {
  const Subspace<K> t = trace_form_radical(a);
  auto r = certify_nilradical(a, t, "trace-form");
  if (r.certified()) return r;

  Subspace<K> n(a.dim());
  CandidateStream<K> stream(t.vectors(), opts);
  while (auto v = stream.next()) {
    if (n.contains(*v)) continue;
    std::vector<Vec<K>> gens = n.vectors();
    gens.push_back(*v);
    Subspace<K> cand = ideal_generated(a, gens);
    if (power_chain(a, cand).nilpotent) n = std::move(cand);
    if (n == t) break;
  }
  r = certify_nilradical(a, n, "search");
  if (!r.certified()) fail(ErrorKind::verification_failure, "nilradical: no candidate passes certification (" + r.detail + ")");
  return r;
}

template <ExactField K>
struct RadicalReport {
  Subspace<K> nilradical;
  Subspace<K> b_radical;
  bool semisimple = false;
  bool b_semisimple = false;
};

/// bar(U)^2 as the span of all products of bar basis pairs.
template <ExactField K>
Subspace<K> bar_square(const BaricAlgebra<K>& u) {
  const Subspace<K> bar = bar_ideal(u);
  return product_space(u.algebra(), bar, bar);
}

/// rad(U) = bar(U)^2 ∩ R(U).
template <ExactField K>
Subspace<K> b_radical(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  const Subspace<K> r = nilradical(u.algebra(), opts).radical;
  Subspace<K> rad = intersection(bar_square(u), r);
  if (!is_b_ideal(u, rad)) fail(ErrorKind::verification_failure, "b_radical: result is not a b-ideal");
  return rad;
}

template <ExactField K>
RadicalReport<K> radical_report(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  RadicalReport<K> rep;
  rep.nilradical = nilradical(u.algebra(), opts).radical;
  rep.b_radical = intersection(bar_square(u), rep.nilradical);
  rep.semisimple = rep.nilradical.is_zero();
  rep.b_semisimple = rep.b_radical.is_zero();
  return rep;
}

template <ExactField K>
bool is_b_semisimple(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  return b_radical(u, opts).is_zero();
}

}  // namespace wbd
