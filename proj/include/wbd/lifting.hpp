#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wbd/peirce.hpp"

namespace wbd {

/// Matrix units f_ij (0-based, row-major t x t) with f_ij f_kl = [j = k] f_il.
template <ExactField K>
struct MatrixUnits {
  std::size_t degree = 0;
  std::vector<Vec<K>> units;

  const Vec<K>& unit(std::size_t i, std::size_t j) const { return units.at(i * degree + j); }
  Vec<K>& unit(std::size_t i, std::size_t j) { return units.at(i * degree + j); }
  Vec<K> identity() const {
    Vec<K> s = zero_vector<K>(units.front().size());
    for (std::size_t i = 0; i < degree; ++i) s = s + unit(i, i);
    return s;
  }
  std::vector<Vec<K>> diagonal() const {
    std::vector<Vec<K>> d;
    for (std::size_t i = 0; i < degree; ++i) d.push_back(unit(i, i));
    return d;
  }
};

/// First failing product of the matrix-unit table, or empty.
template <ExactField K>
std::optional<std::string> check_matrix_units(const Algebra<K>& a, const MatrixUnits<K>& m) {
  const std::size_t t = m.degree;
  if (m.units.size() != t * t) return "wrong number of units";
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (is_zero(m.unit(i, j))) return "unit " + std::to_string(i + 1) + std::to_string(j + 1) + " is zero";
      for (std::size_t k = 0; k < t; ++k)
        for (std::size_t l = 0; l < t; ++l) {
          const Vec<K> p = a.multiply(m.unit(i, j), m.unit(k, l));
          const bool ok = j == k ? p == m.unit(i, l) : is_zero(p);
          if (!ok)
            return "f" + std::to_string(i + 1) + std::to_string(j + 1) + " f" + std::to_string(k + 1) +
                   std::to_string(l + 1) + " breaks the table";
        }
    }
  return std::nullopt;
}

/// 2x2 matrix units plus v with v^2 = 1 and x v = v iota(x) on the units.
template <ExactField K>
struct CayleyFrame {
  MatrixUnits<K> units;
  Vec<K> v;

  /// iota(e11) = e22, iota(e22) = e11, iota(e12) = -e12, iota(e21) = -e21.
  Vec<K> iota(std::size_t i, std::size_t j) const {
    if (i == j) return units.unit(1 - i, 1 - i);
    return -units.unit(i, j);
  }
  /// span{e_ij} + span{v e_ij}
  std::vector<Vec<K>> spanning_set(const Algebra<K>& a) const {
    std::vector<Vec<K>> s = units.units;
    for (const auto& u : units.units) s.push_back(a.multiply(v, u));
    return s;
  }
};

template <ExactField K>
std::optional<std::string> check_cayley_frame(const Algebra<K>& a, const CayleyFrame<K>& f) {
  if (f.units.degree != 2) return "Cayley frame needs 2x2 units";
  if (auto bad = check_matrix_units(a, f.units)) return bad;
  const Vec<K> one = f.units.identity();
  if (a.multiply(f.v, f.v) != one) return "v^2 is not the frame identity";
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (a.multiply(f.units.unit(i, j), f.v) != a.multiply(f.v, f.iota(i, j)))
        return "x v != v iota(x) for x = e" + std::to_string(i + 1) + std::to_string(j + 1);
  if (Subspace<K>::span(a.dim(), f.units.units).contains(f.v)) return "v lies in the span of the units";
  return std::nullopt;
}

// ---------------------------------------------------------------------------

/// Lifting through a b-ideal J inside R(U).
template <ExactField K>
struct LiftContext {
  BaricAlgebra<K> ambient;
  Subspace<K> ideal;
  BaricQuotient<K> quotient;

  const Algebra<K>& algebra() const { return ambient.algebra(); }
  const Algebra<K>& quotient_algebra() const { return quotient.algebra.algebra(); }
  Vec<K> project(const Vec<K>& x) const { return quotient.project(x); }
  Vec<K> section(const Vec<K>& q) const { return quotient.section(q); }
};

/// Checks that J is a b-ideal inside R(U). Pass the nilradical when known.
template <ExactField K>
LiftContext<K> make_lift_context(const BaricAlgebra<K>& u, const Subspace<K>& j,
                                 const std::optional<Subspace<K>>& known_nilradical = std::nullopt) {
  if (!is_b_ideal(u, j)) fail(ErrorKind::not_a_b_ideal, "lift context: J is not a b-ideal");
  const Subspace<K> r = known_nilradical ? *known_nilradical : nilradical(u.algebra()).radical;
  if (!r.contains(j)) fail(ErrorKind::containment_violated, "lift context: J is not inside R(U)");
  return {u, j, quotient_baric(u, j)};
}

/// e in F[section(u_bar)] with e^2 = e and projection(e) = u_bar (Hensel).
template <ExactField K>
IdempotentResult<K> lift_idempotent(const LiftContext<K>& ctx, const Vec<K>& u_bar) {
  if (!is_idempotent(ctx.quotient_algebra(), u_bar))
    fail(ErrorKind::not_idempotent, "lift_idempotent: element is not idempotent in the quotient");
  auto r = hensel_idempotent(ctx.algebra(), ctx.section(u_bar));
  if (ctx.project(r.element) != u_bar) fail(ErrorKind::verification_failure, "lift_idempotent: projection changed");
  return r;
}

template <ExactField K>
struct LiftedSet {
  std::vector<Vec<K>> members;
  std::vector<std::size_t> steps;  ///< Hensel steps per member
};

/// Pairwise orthogonal idempotents lifting the quotient set. Each
/// representative is pushed into U_00 of the running sum (and into U_11 of the
/// anchor) before the Hensel iteration; with an anchor the last member is
/// anchor minus the others, so the sum is exact.
template <ExactField K>
LiftedSet<K> lift_orthogonal_set(const LiftContext<K>& ctx, const std::vector<Vec<K>>& quotient_set,
                                 const std::optional<Vec<K>>& anchor = std::nullopt) {
  const Algebra<K>& a = ctx.algebra();
  const Algebra<K>& qa = ctx.quotient_algebra();
  const std::size_t t = quotient_set.size();
  for (std::size_t i = 0; i < t; ++i) {
    if (!is_idempotent(qa, quotient_set[i])) fail(ErrorKind::not_idempotent, "lift_orthogonal_set: member is not idempotent");
    for (std::size_t j = 0; j < t; ++j)
      if (i != j && !is_zero(qa.multiply(quotient_set[i], quotient_set[j])))
        fail(ErrorKind::not_orthogonal, "lift_orthogonal_set: quotient members are not orthogonal");
  }
  std::optional<PeirceSystem<K>> anchor_sys;
  if (anchor) {
    if (!is_idempotent(a, *anchor)) fail(ErrorKind::not_idempotent, "lift_orthogonal_set: anchor is not idempotent");
    Vec<K> total = zero_vector<K>(qa.dim());
    for (const auto& q : quotient_set) total = total + q;
    if (ctx.project(*anchor) != total) fail(ErrorKind::invalid_input, "lift_orthogonal_set: anchor does not lift the sum");
    anchor_sys = peirce_single(a, *anchor);
  }
  LiftedSet<K> out;
  Vec<K> running = zero_vector<K>(a.dim());
  for (std::size_t k = 0; k < t; ++k) {
    if (anchor && k + 1 == t) {
      Vec<K> last = *anchor - running;
      if (!is_idempotent(a, last)) fail(ErrorKind::verification_failure, "lift_orthogonal_set: anchor remainder is not idempotent");
      out.members.push_back(std::move(last));
      out.steps.push_back(0);
      break;
    }
    Vec<K> r = ctx.section(quotient_set[k]);
    if (anchor_sys) r = anchor_sys->project(r, 1, 1);
    if (!is_zero(running)) r = peirce_single(a, running).project(r, 0, 0);
    auto lifted = hensel_idempotent(a, r);
    running = running + lifted.element;
    out.members.push_back(std::move(lifted.element));
    out.steps.push_back(lifted.steps);
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (ctx.project(out.members[i]) != quotient_set[i])
      fail(ErrorKind::verification_failure, "lift_orthogonal_set: projection of a member changed");
    for (std::size_t j = 0; j < t; ++j)
      if (i != j && !is_zero(a.multiply(out.members[i], out.members[j])))
        fail(ErrorKind::verification_failure, "lift_orthogonal_set: lifted members are not orthogonal");
  }
  return out;
}

/// Nilpotency index m of x (x^m = 0), or empty.
template <ExactField K>
std::optional<std::size_t> nil_index(const Algebra<K>& a, const Vec<K>& x) {
  auto r = is_nilpotent_element(a, x);
  if (!r.nilpotent) return std::nullopt;
  return r.index;
}

/// Matrix units of the quotient lifted to U. Diagonal via the orthogonal-set
/// lift, first row corrected by b_j = sum_{i=1}^{m-1} (-a_j)^i where
/// u_1j u_j1 = f_11 + a_j, then f_ij = f_i1 f_1j.
template <ExactField K>
MatrixUnits<K> lift_matrix_units(const LiftContext<K>& ctx, const MatrixUnits<K>& quotient_units,
                                 const std::optional<Vec<K>>& anchor = std::nullopt) {
  const Algebra<K>& a = ctx.algebra();
  if (auto bad = check_matrix_units(ctx.quotient_algebra(), quotient_units))
    fail(ErrorKind::invalid_input, "lift_matrix_units: quotient table violated (" + *bad + ")");
  const std::size_t t = quotient_units.degree;
  const LiftedSet<K> diag = lift_orthogonal_set(ctx, quotient_units.diagonal(), anchor);
  MatrixUnits<K> f{t, std::vector<Vec<K>>(t * t)};
  for (std::size_t i = 0; i < t; ++i) f.unit(i, i) = diag.members[i];
  if (t > 1) {
    const PeirceSystem<K> sys = peirce_set(a, diag.members);
    const Vec<K>& f11 = f.unit(0, 0);
    for (std::size_t j = 1; j < t; ++j) {
      // Peirce indices are 1-based; 0 is the complement.
      const Vec<K> u1j = sys.project(ctx.section(quotient_units.unit(0, j)), 1, j + 1);
      const Vec<K> uj1 = sys.project(ctx.section(quotient_units.unit(j, 0)), j + 1, 1);
      const Vec<K> aj = a.multiply(u1j, uj1) - f11;
      auto m = nil_index(a, aj);
      if (!m) fail(ErrorKind::verification_failure, "lift_matrix_units: defect is not nilpotent (J not inside R(U)?)");
      Vec<K> bj = zero_vector<K>(a.dim());
      Vec<K> term = -aj;
      for (std::size_t i = 1; i + 1 <= *m; ++i) {
        bj = bj + term;
        term = a.multiply(-aj, term);
      }
      f.unit(0, j) = a.multiply(f11 + bj, u1j);
      f.unit(j, 0) = uj1;
    }
    for (std::size_t i = 1; i < t; ++i)
      for (std::size_t j = 1; j < t; ++j) f.unit(i, j) = a.multiply(f.unit(i, 0), f.unit(0, j));
  }
  if (auto bad = check_matrix_units(a, f)) fail(ErrorKind::verification_failure, "lift_matrix_units: " + *bad);
  for (std::size_t k = 0; k < t * t; ++k)
    if (ctx.project(f.units[k]) != quotient_units.units[k])
      fail(ErrorKind::verification_failure, "lift_matrix_units: projection of a unit changed");
  return f;
}

/// All products between different blocks vanish.
template <ExactField K>
bool blocks_annihilate(const Algebra<K>& a, const std::vector<std::vector<Vec<K>>>& blocks) {
  for (std::size_t p = 0; p < blocks.size(); ++p)
    for (std::size_t q = 0; q < blocks.size(); ++q) {
      if (p == q) continue;
      for (const auto& x : blocks[p])
        for (const auto& y : blocks[q])
          if (!is_zero(a.multiply(x, y))) return false;
    }
  return true;
}

/// Lifts block identities as one orthogonal set, then each block against its
/// lifted identity.
template <ExactField K>
std::vector<MatrixUnits<K>> lift_matrix_algebra_sum(const LiftContext<K>& ctx, const std::vector<MatrixUnits<K>>& blocks) {
  std::vector<Vec<K>> ids;
  for (const auto& b : blocks) ids.push_back(b.identity());
  const LiftedSet<K> lifted = lift_orthogonal_set(ctx, ids);
  std::vector<MatrixUnits<K>> out;
  std::vector<std::vector<Vec<K>>> spans;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out.push_back(lift_matrix_units(ctx, blocks[b], std::optional<Vec<K>>(lifted.members[b])));
    spans.push_back(out.back().units);
  }
  if (!blocks_annihilate(ctx.algebra(), spans))
    fail(ErrorKind::verification_failure, "lift_matrix_algebra_sum: lifted blocks do not annihilate each other");
  return out;
}

/// V = span of sections of the quotient ideals J_i (each with J_i^2 = 0).
template <ExactField K>
Subspace<K> lift_trivial_part(const LiftContext<K>& ctx, const std::vector<Subspace<K>>& trivial_ideals) {
  const Algebra<K>& qa = ctx.quotient_algebra();
  std::vector<Vec<K>> vecs;
  std::size_t expected = 0;
  for (const auto& j : trivial_ideals) {
    if (!products_vanish(qa, j, j)) fail(ErrorKind::invalid_input, "lift_trivial_part: quotient ideal has nonzero square");
    expected += j.dim();
    for (const auto& x : j.vectors()) vecs.push_back(ctx.section(x));
  }
  Subspace<K> v = Subspace<K>::span(ctx.algebra().dim(), vecs);
  if (v.dim() != expected) fail(ErrorKind::verification_failure, "lift_trivial_part: lifted basis is dependent");
  for (const auto& x : vecs)
    for (const auto& y : vecs)
      if (!ctx.ideal.contains(ctx.algebra().multiply(x, y)))
        fail(ErrorKind::verification_failure, "lift_trivial_part: product leaves the ideal");
  return v;
}

template <ExactField K>
struct LiftedCayley {
  CayleyFrame<K> frame;
  Vec<K> a1;                   ///< defect h12 h21 - e11
  std::vector<Vec<K>> h;       ///< h12, h21 after the correction
};

/// Lift of a Cayley frame through a square-zero J: units via lift_matrix_units,
/// representatives f_ij of w e_jj in U_ij, c_j = e_ji f_ij, h_ij = f_ij - e_ij c_j,
/// a_1 = h_12 h_21 - e_11, v = (e_11 - a_1) h_12 + h_21.
template <ExactField K>
LiftedCayley<K> lift_cayley(const LiftContext<K>& ctx, const CayleyFrame<K>& frame_bar,
                            const std::optional<Vec<K>>& anchor = std::nullopt) {
  const Algebra<K>& a = ctx.algebra();
  if (!products_vanish(a, ctx.ideal, ctx.ideal)) fail(ErrorKind::invalid_input, "lift_cayley: J^2 != 0");
  if (auto bad = check_cayley_frame(ctx.quotient_algebra(), frame_bar))
    fail(ErrorKind::invalid_input, "lift_cayley: quotient frame invalid (" + *bad + ")");
  const MatrixUnits<K> e = lift_matrix_units(ctx, frame_bar.units, anchor);
  const PeirceSystem<K> sys = peirce_set(a, e.diagonal());
  const Algebra<K>& qa = ctx.quotient_algebra();
  LiftedCayley<K> out;
  Vec<K> h[2][2];
  for (std::size_t i = 0; i < 2; ++i) {
    const std::size_t j = 1 - i;
    const Vec<K> wejj = qa.multiply(frame_bar.v, frame_bar.units.unit(j, j));
    const Vec<K> fij = sys.project(ctx.section(wejj), i + 1, j + 1);
    const Vec<K> cj = a.multiply(e.unit(j, i), fij);
    h[i][j] = fij - a.multiply(e.unit(i, j), cj);
  }
  const Vec<K>& e11 = e.unit(0, 0);
  out.a1 = a.multiply(h[0][1], h[1][0]) - e11;
  const Vec<K> p12 = a.multiply(e11 - out.a1, h[0][1]);
  const Vec<K> p21 = h[1][0];
  out.frame = {e, p12 + p21};
  out.h = {h[0][1], h[1][0]};
  if (auto bad = check_cayley_frame(a, out.frame)) fail(ErrorKind::verification_failure, "lift_cayley: " + *bad);
  if (ctx.project(out.frame.v) != frame_bar.v) fail(ErrorKind::verification_failure, "lift_cayley: projection of v changed");
  return out;
}

}  // namespace wbd
