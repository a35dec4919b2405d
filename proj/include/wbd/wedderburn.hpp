#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wbd/structure.hpp"

namespace wbd {

/// Which branches a decomposition went through.
struct DecompositionTrace {
  std::size_t depth = 0;            ///< nested decompose_unital levels (1 = base case only)
  std::size_t square_zero_lifts = 0;  ///< base cases with a nonzero trivial part N
  std::size_t matrix_blocks = 0;
  std::size_t cayley_blocks = 0;
  bool principal_path = false;      ///< decompose ran on a proper corner U_11
};

template <ExactField K>
struct Decomposition {
  Subspace<K> s;
  Subspace<K> v;
  Subspace<K> rad;
  DecompositionTrace trace;
};

struct Check {
  std::string name;
  bool passed = false;
  bool required = true;  ///< informative checks do not affect acceptance
  std::string detail;
};

struct Certificate {
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.required && !c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (c.required && !c.passed) out.push_back(c.name);
    return out;
  }
};

namespace detail {

template <ExactField K>
Decomposition<K> decompose_unital_impl(const BaricAlgebra<K>& u, const SearchOptions& opts) {
  const Algebra<K>& a = u.algebra();
  const auto one = find_identity(a);
  if (!one) fail(ErrorKind::no_identity, "decompose_unital: algebra has no identity");
  Decomposition<K> d;
  d.rad = b_radical(u, opts);
  const Subspace<K> k2 = product_space(a, d.rad, d.rad);

  if (!k2.is_zero()) {
    // Reduce modulo rad^2, then decompose the preimage of S'.
    const BaricQuotient<K> q = quotient_baric(u, k2);
    const Decomposition<K> top = decompose_unital_impl(q.algebra, opts);
    std::vector<Vec<K>> pre = k2.vectors();
    for (const auto& x : top.s.vectors()) pre.push_back(q.section(x));
    const Subspace<K> p = Subspace<K>::span(a.dim(), pre);
    if (p.dim() >= a.dim()) fail(ErrorKind::verification_failure, "decompose_unital: preimage of S' did not shrink");
    const BaricSubalgebra<K> ps = baric_subalgebra(u, p, true);
    const Decomposition<K> inner = decompose_unital_impl(ps.algebra, opts);
    // V_P and rad(P) both lie in rad^2, so only S_P is kept.
    d.s = ps.embed(inner.s);
    std::vector<Vec<K>> vv;
    for (const auto& x : top.v.vectors()) vv.push_back(q.section(x));
    d.v = Subspace<K>::span(a.dim(), vv);
    d.trace = top.trace;
    d.trace.square_zero_lifts += inner.trace.square_zero_lifts;
    d.trace.matrix_blocks = inner.trace.matrix_blocks;
    d.trace.cayley_blocks = inner.trace.cayley_blocks;
    d.trace.depth = std::max(top.trace.depth, inner.trace.depth) + 1;
    return d;
  }

  const LiftContext<K> ctx = make_lift_context(u, d.rad);
  const BaricAlgebra<K>& ub = ctx.quotient.algebra;
  const SemisimpleSplit<K> split = split_semisimple_bar(ub, opts);
  const std::vector<SimpleComponent<K>> comps = present_components(ub.algebra(), split.semisimple_part, opts);

  std::vector<Vec<K>> s_vecs{*one};
  if (!comps.empty()) {
    std::vector<Vec<K>> ids;
    for (const auto& c : comps) ids.push_back(c.units ? c.units->identity() : c.frame->units.identity());
    const LiftedSet<K> anchors = lift_orthogonal_set(ctx, ids);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].units) {
        const MatrixUnits<K> m = lift_matrix_units(ctx, *comps[i].units, std::optional<Vec<K>>(anchors.members[i]));
        s_vecs.insert(s_vecs.end(), m.units.begin(), m.units.end());
        ++d.trace.matrix_blocks;
      } else {
        const LiftedCayley<K> c = lift_cayley(ctx, *comps[i].frame, std::optional<Vec<K>>(anchors.members[i]));
        const auto span = c.frame.spanning_set(a);
        s_vecs.insert(s_vecs.end(), span.begin(), span.end());
        ++d.trace.cayley_blocks;
      }
    }
  }
  d.s = Subspace<K>::span(a.dim(), s_vecs);
  if (!split.trivial_part.is_zero()) {
    d.v = lift_trivial_part(ctx, {split.trivial_part});
    ++d.trace.square_zero_lifts;
  } else {
    d.v = Subspace<K>(a.dim());
  }
  d.trace.depth = 1;
  return d;
}

}  // namespace detail

/// Independent checks of a claimed decomposition U = S + V + rad.
template <ExactField K>
Certificate verify_decomposition(const BaricAlgebra<K>& u, const Decomposition<K>& d, const SearchOptions& opts = {}) {
  const Algebra<K>& a = u.algebra();
  const std::size_t n = a.dim();
  Certificate cert;
  auto add = [&](std::string name, bool ok, std::string detail, bool required = true) {
    cert.checks.push_back({std::move(name), ok, required, ok ? "ok" : std::move(detail)});
  };
  if (d.s.ambient_dim() != n || d.v.ambient_dim() != n || d.rad.ambient_dim() != n) {
    for (const char* name : {"spanning-direct", "s-subalgebra", "s-b-semisimple", "v-in-bar", "v-square-in-rad",
                             "rad-matches", "nil-ideal"})
      add(name, false, "subspace lives in the wrong ambient dimension");
    return cert;
  }

  const Subspace<K> total = subspace_sum(std::vector<Subspace<K>>{d.s, d.v, d.rad}, n);
  {
    const std::size_t sum = d.s.dim() + d.v.dim() + d.rad.dim();
    add("spanning-direct", sum == n && total.dim() == n,
        "dim S + dim V + dim rad = " + std::to_string(sum) + ", span has dim " + std::to_string(total.dim()) +
            ", dim U = " + std::to_string(n));
  }

  const bool closed = !d.s.is_zero() && is_subalgebra(a, d.s);
  bool has_weight_one = false;
  for (const auto& x : d.s.vectors())
    if (u.weight_of(x) != K(0)) has_weight_one = true;
  add("s-subalgebra", closed && has_weight_one,
      !closed ? "S is not closed under multiplication" : "S contains no vector of weight 1");

  if (closed && has_weight_one) {
    const BaricSubalgebra<K> sb = baric_subalgebra(u, d.s);
    const Subspace<K> r = b_radical(sb.algebra, opts);
    add("s-b-semisimple", r.is_zero(), "b-radical of S has dimension " + std::to_string(r.dim()));
  } else {
    add("s-b-semisimple", false, "S is not a baric subalgebra");
  }

  const Subspace<K> bar = bar_ideal(u);
  add("v-in-bar", bar.contains(d.v), "V has a vector of nonzero weight");

  const Subspace<K> rad = b_radical(u, opts);
  {
    std::string bad;
    const auto vb = d.v.vectors();
    for (std::size_t i = 0; i < vb.size() && bad.empty(); ++i)
      for (std::size_t j = 0; j < vb.size() && bad.empty(); ++j)
        if (!rad.contains(a.multiply(vb[i], vb[j])))
          bad = "v" + std::to_string(i + 1) + " v" + std::to_string(j + 1) + " lies outside rad(U)";
    add("v-square-in-rad", bad.empty(), bad);
  }

  add("rad-matches", rad == d.rad,
      "claimed rad has dimension " + std::to_string(d.rad.dim()) + ", b-radical has dimension " + std::to_string(rad.dim()));

  {
    const bool unital = find_identity(a).has_value();
    const Subspace<K> vr = subspace_sum(d.v, d.rad);
    std::string bad;
    if (!bar.contains(vr)) bad = "V + rad is not inside bar(U)";
    if (bad.empty() && !vr.is_zero()) {
      const Subalgebra<K> sub = subalgebra(a, bar);
      if (!is_ideal(sub.algebra, sub.coordinates(vr))) bad = "V + rad is not an ideal of bar(U)";
    }
    if (bad.empty())
      for (const auto& x : vr.vectors())
        if (!is_nilpotent_element(a, x).nilpotent) {
          bad = "a basis vector of V + rad is not nilpotent";
          break;
        }
    if (bad.empty() && !power_chain(a, vr).nilpotent) bad = "V + rad is not nilpotent";
    add("nil-ideal", bad.empty(), unital ? bad : bad + " (informative: U has no identity)", unital);
  }
  return cert;
}

/// U = S + V + rad(U) for a unital baric algebra, reducing to rad^2 = 0.
template <ExactField K>
Decomposition<K> decompose_unital(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  Decomposition<K> d = detail::decompose_unital_impl(u, opts);
  const Certificate c = verify_decomposition(u, d, opts);
  if (!c.passed()) fail(ErrorKind::verification_failure, "decompose_unital: certificate check " + c.failing().front() + " failed");
  return d;
}

/// General case through a principal idempotent e: S and W_11 come from the
/// unital corner U_11, the rest of V from complements of rad(U) in each Peirce
/// component.
template <ExactField K>
Decomposition<K> decompose(const BaricAlgebra<K>& u, const SearchOptions& opts = {}) {
  const Algebra<K>& a = u.algebra();
  const Vec<K> e = principal_idempotent(u, opts).element;
  const PeirceSystem<K> sys = peirce_single(a, e);
  const Subspace<K> r = nilradical(a, opts).radical;
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 0}, {0, 1}, {0, 0}})
    if (!r.contains(sys.component(i, j)))
      fail(ErrorKind::containment_violated,
           "decompose: U_" + std::to_string(i) + std::to_string(j) + " is not inside R(U)");

  const Subspace<K>& u11 = sys.component(1, 1);
  const BaricSubalgebra<K> corner = baric_subalgebra(u, u11);
  const Decomposition<K> inner = detail::decompose_unital_impl(corner.algebra, opts);

  Decomposition<K> d;
  d.trace = inner.trace;
  d.trace.principal_path = u11.dim() != a.dim();
  d.rad = b_radical(u, opts);
  d.s = corner.embed(inner.s);
  const Subspace<K> w11 = subspace_sum(corner.embed(inner.v), corner.embed(inner.rad));
  const Subspace<K> rad11 = intersection(d.rad, u11);
  if (!w11.contains(rad11)) fail(ErrorKind::verification_failure, "decompose: rad(U) ∩ U_11 is not inside W_11 + rad(U_11)");
  std::vector<Subspace<K>> parts{complement(rad11, w11)};
  for (auto [i, j] : {std::pair<std::size_t, std::size_t>{1, 0}, {0, 1}, {0, 0}}) {
    const Subspace<K>& c = sys.component(i, j);
    parts.push_back(complement(intersection(d.rad, c), c));
  }
  d.v = subspace_sum(parts, a.dim());

  const Certificate c = verify_decomposition(u, d, opts);
  if (!c.passed()) fail(ErrorKind::verification_failure, "decompose: certificate check " + c.failing().front() + " failed");
  return d;
}

}  // namespace wbd
