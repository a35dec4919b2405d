#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wbd/scalar.hpp"
#include "wbd/subspace.hpp"

namespace wbd {

/// Small bases of rational subspaces. Over Q a subspace W of Q^n gets an
/// LLL-reduced Z-basis of W ∩ Z^n instead of its RREF basis, whose entries
/// can carry large denominators. Other fields keep the RREF basis.
namespace lattice {

using IntVec = std::vector<mpz_class>;

/// Z-basis of {x in Z^n : c x = 0} for integer rows c, by unimodular column
/// operations on c tracked in u.
inline std::vector<IntVec> integer_kernel(std::vector<IntVec> c, std::size_t n) {
  std::vector<IntVec> u(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  // columns are stored as u[col], entries of c addressed as c[row][col]
  auto axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (auto& row : c) row[dst] -= q * row[src];
    for (std::size_t k = 0; k < n; ++k) u[dst][k] -= q * u[src][k];
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : c) std::swap(row[x], row[y]);
    std::swap(u[x], u[y]);
  };
  std::size_t r = 0;
  for (std::size_t i = 0; i < c.size() && r < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = r; j < n; ++j)
        if (sgn(c[i][j]) != 0 && (best == n || abs(c[i][j]) < abs(c[i][best]))) best = j;
      if (best == n) break;
      bool reduced = false;
      for (std::size_t j = r; j < n; ++j) {
        if (j == best || sgn(c[i][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), c[i][j].get_mpz_t(), c[i][best].get_mpz_t());
        axpy(j, best, q);
        reduced = true;
      }
      if (!reduced) {
        swap_cols(r, best);
        ++r;
        break;
      }
    }
  }
  return {u.begin() + static_cast<std::ptrdiff_t>(r), u.end()};
}

/// LLL reduction (delta = 3/4) of linearly independent integer vectors, with
/// exact Gram-Schmidt data.
inline std::vector<IntVec> lll(std::vector<IntVec> b) {
  const std::size_t k = b.size();
  if (k < 2) return b;
  std::vector<std::vector<mpq_class>> mu(k, std::vector<mpq_class>(k, 0));
  std::vector<mpq_class> norm(k, 0);
  auto gram_schmidt = [&] {
    std::vector<std::vector<mpq_class>> star(k);
    for (std::size_t i = 0; i < k; ++i) {
      star[i].assign(b[i].begin(), b[i].end());
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class d = 0;
        for (std::size_t t = 0; t < b[i].size(); ++t) d += mpq_class(b[i][t]) * star[j][t];
        mu[i][j] = d / norm[j];
        for (std::size_t t = 0; t < b[i].size(); ++t) star[i][t] -= mu[i][j] * star[j][t];
      }
      norm[i] = 0;
      for (const auto& x : star[i]) norm[i] += x * x;
    }
  };
  gram_schmidt();
  const mpq_class delta(3, 4);
  std::size_t i = 1;
  while (i < k) {
    for (std::size_t j = i; j-- > 0;) {
      mpq_class m = mu[i][j];
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * m.get_num() + m.get_den()).get_mpz_t(),
                 mpz_class(2 * m.get_den()).get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t t = 0; t < b[i].size(); ++t) b[i][t] -= q * b[j][t];
      for (std::size_t l = 0; l <= j; ++l) mu[i][l] -= q * (l == j ? mpq_class(1) : mu[j][l]);
    }
    if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
      ++i;
    } else {
      std::swap(b[i], b[i - 1]);
      gram_schmidt();
      i = i > 1 ? i - 1 : 1;
    }
  }
  return b;
}

}  // namespace lattice

/// Basis of s used for subalgebra coordinates. Over Q: reduced basis of the
/// integer points of s; otherwise the RREF basis.
template <ExactField K>
std::vector<Vec<K>> reduced_basis(const Subspace<K>& s) {
  if constexpr (!std::is_same_v<K, Rational>) {
    return s.vectors();
  } else {
    const std::size_t n = s.ambient_dim();
    if (s.dim() == 0 || s.dim() == n) return s.vectors();
    // integer rows spanning the orthogonal complement of s
    std::vector<lattice::IntVec> c;
    for (const auto& row : nullspace_basis(Matrix<K>::from_rows(s.vectors(), n)).row_vectors()) {
      mpz_class den = 1;
      for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
      lattice::IntVec r(n);
      for (std::size_t t = 0; t < n; ++t) r[t] = mpz_class(row[t].value() * den);
      c.push_back(std::move(r));
    }
    auto basis = lattice::lll(lattice::integer_kernel(std::move(c), n));
    std::vector<Vec<K>> out;
    for (const auto& v : basis) {
      Vec<K> x(n);
      for (std::size_t t = 0; t < n; ++t) x[t] = Rational(mpq_class(v[t]));
      out.push_back(std::move(x));
    }
    if (out.size() != s.dim()) fail(ErrorKind::verification_failure, "reduced_basis: lattice rank differs from dimension");
    return out;
  }
}

}  // namespace wbd
