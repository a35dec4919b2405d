#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wbd/matrix.hpp"
#include "wbd/subspace.hpp"

namespace wbd {

/// Univariate polynomial, coefficients low degree first. The zero polynomial
/// has no coefficients; otherwise the leading coefficient is nonzero.
template <ExactField K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, K coeff = K(1)) {
    std::vector<K> c(degree + 1, K(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }
  /// x - root
  static Polynomial linear(const K& root) { return Polynomial({-root, K(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<K>& coefficients() const { return c_; }
  K coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const K inv = K(1) / leading();
    std::vector<K> c = c_;
    for (K& x : c) x *= inv;
    return Polynomial(std::move(c));
  }

  K operator()(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Evaluate on a square matrix (Horner).
  Matrix<K> operator()(const Matrix<K>& m) const {
    if (!m.square()) fail(ErrorKind::dimension_mismatch, "polynomial of a non-square matrix");
    Matrix<K> acc(m.rows(), m.cols());
    const Matrix<K> id = Matrix<K>::identity(m.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m + (*it) * id;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of Euclidean division by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) fail(ErrorKind::invalid_input, "polynomial division by zero");
    std::vector<K> r = c_;
    if (degree() < d.degree()) return {Polynomial(), *this};
    std::vector<K> q(c_.size() - d.c_.size() + 1, K(0));
    const K inv = K(1) / d.leading();
    for (std::size_t k = q.size(); k-- > 0;) {
      const K f = r[k + d.c_.size() - 1] * inv;
      q[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].str() + ")";
      if (i > 0) s += i == 1 ? "*x" : "*x^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

template <ExactField K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic polynomial of least degree annihilating a square matrix, found by
/// iterating powers I, A, A^2, ... until the first linear dependence.
template <ExactField K>
Polynomial<K> minimal_polynomial(const Matrix<K>& op) {
  if (!op.square()) fail(ErrorKind::dimension_mismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = op.rows();
  // Rows of `powers` are the flattened powers; reduced copy tracks the span.
  std::vector<Vec<K>> powers;
  Matrix<K> current = Matrix<K>::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec<K> flat = current.entries();
    if (!powers.empty()) {
      // Solve sum_i c_i P_i = flat over the previous powers.
      Matrix<K> a = Matrix<K>::from_rows(powers, n * n).transpose();
      auto sol = solve(a, flat);
      if (sol.particular) {
        std::vector<K> c(k + 1, K(0));
        for (std::size_t i = 0; i < k; ++i) c[i] = -(*sol.particular)[i];
        c[k] = K(1);
        return Polynomial<K>(std::move(c));
      }
    } else if (n == 0) {
      return Polynomial<K>({K(1)});
    }
    powers.push_back(std::move(flat));
    current = current * op;
  }
  fail(ErrorKind::verification_failure, "minimal polynomial: no dependence found within n+1 powers");
}

// ---------------------------------------------------------------------------
// Roots in the base field

namespace detail {

inline void collect_prime_factors(mpz_class n, std::map<mpz_class, unsigned>& out);

inline mpz_class pollard_rho(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      mpz_class diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

inline void collect_prime_factors(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (unsigned long p = 2; p < 10000 && mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  collect_prime_factors(d, out);
  collect_prime_factors(mpz_class(n / d), out);
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, unsigned> factors;
  collect_prime_factors(n, factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Strip all factors (x - r) for r in `roots` out of p, recording multiplicity.
template <ExactField K>
std::vector<K> with_multiplicity(Polynomial<K> p, const std::vector<K>& distinct) {
  std::vector<K> out;
  for (const K& r : distinct) {
    const auto lin = Polynomial<K>::linear(r);
    while (p.degree() >= 1) {
      auto [q, rem] = p.divmod(lin);
      if (!rem.is_zero()) break;
      out.push_back(r);
      p = std::move(q);
    }
  }
  return out;
}

template <ExactField K>
Polynomial<K> powmod(Polynomial<K> base, mpz_class e, const Polynomial<K>& m) {
  Polynomial<K> acc({K(1)});
  base = base.divmod(m).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = (acc * base).divmod(m).second;
    base = (base * base).divmod(m).second;
    e >>= 1;
  }
  return acc;
}

}  // namespace detail

/// All roots of p lying in Q, with multiplicity, in increasing order.
/// Candidates are +-r/s with r | a_0 and s | a_n of the primitive integer form.
inline std::vector<Rational> rational_roots(const Polynomial<Rational>& p) {
  if (p.is_zero()) fail(ErrorKind::invalid_input, "roots of the zero polynomial");
  // Clear denominators.
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p.coefficients()) ints.push_back(mpz_class(c.numerator() * (lcm / c.denominator())));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;  // x^low divides p
  std::vector<Rational> distinct;
  if (low > 0) distinct.push_back(Rational(0));
  if (ints.size() - low >= 2) {
    const mpz_class a0 = ints[low], an = ints.back();
    const auto num_divs = detail::positive_divisors(a0);
    const auto den_divs = detail::positive_divisors(an);
    std::vector<Rational> found;
    for (const auto& r : num_divs)
      for (const auto& s : den_divs) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          Rational cand(mpq_class(mpz_class(sign * r), s));
          if (p(cand).is_zero()) found.push_back(cand);
        }
      }
    distinct.insert(distinct.end(), found.begin(), found.end());
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  auto roots = detail::with_multiplicity(p, distinct);
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// All roots of p in F_p, with multiplicity, in increasing residue order.
/// Small fields are scanned exhaustively; large ones split gcd(p, x^q - x)
/// with Cantor-Zassenhaus under a fixed seed.
inline std::vector<ModP> rational_roots(const Polynomial<ModP>& p) {
  if (p.is_zero()) fail(ErrorKind::invalid_input, "roots of the zero polynomial");
  const std::uint64_t q = ModP::modulus();
  std::vector<ModP> distinct;
  if (q <= (1u << 16)) {
    for (std::uint64_t r = 0; r < q; ++r)
      if (p(ModP::from_residue(r)).is_zero()) distinct.push_back(ModP::from_residue(r));
  } else {
    const Polynomial<ModP> x = Polynomial<ModP>::monomial(1);
    Polynomial<ModP> f = p.monic();
    if (f.coefficient(0).is_zero()) distinct.push_back(ModP(0));
    Polynomial<ModP> xq = detail::powmod(x, mpz_class(std::to_string(q), 10), f);
    Polynomial<ModP> g = gcd(f, xq - x);
    std::vector<Polynomial<ModP>> work{g};
    std::mt19937_64 rng(0x5eed);
    while (!work.empty()) {
      Polynomial<ModP> h = work.back();
      work.pop_back();
      if (h.degree() <= 0) continue;
      if (h.degree() == 1) {
        ModP r = -h.monic().coefficient(0);
        if (!r.is_zero()) distinct.push_back(r);
        continue;
      }
      for (;;) {
        ModP a = ModP::from_residue(rng() % q);
        Polynomial<ModP> s = detail::powmod(Polynomial<ModP>({a, ModP(1)}), mpz_class(std::to_string((q - 1) / 2), 10), h);
        Polynomial<ModP> d = gcd(h, s - Polynomial<ModP>({ModP(1)}));
        if (d.degree() > 0 && d.degree() < h.degree()) {
          work.push_back(d);
          work.push_back(h.divmod(d).first);
          break;
        }
      }
    }
    std::sort(distinct.begin(), distinct.end(),
              [](const ModP& a, const ModP& b) { return a.residue() < b.residue(); });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  }
  return detail::with_multiplicity(p, distinct);
}

/// Distinct roots, and whether p splits into linear factors over the field.
template <ExactField K>
struct SplitInfo {
  std::vector<K> distinct_roots;
  bool splits = false;
};

template <ExactField K>
SplitInfo<K> split_info(const Polynomial<K>& p) {
  SplitInfo<K> info;
  auto roots = rational_roots(p);
  info.splits = static_cast<long>(roots.size()) == p.degree();
  for (const K& r : roots)
    if (std::find(info.distinct_roots.begin(), info.distinct_roots.end(), r) == info.distinct_roots.end())
      info.distinct_roots.push_back(r);
  return info;
}

}  // namespace wbd
