#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "wbd/error.hpp"

namespace wbd {

/// Exact field element concept shared by every algorithm in the library.
/// Models: Rational (characteristic 0) and ModP (prime p >= 7).
template <class K>
concept ExactField = std::regular<K> && std::constructible_from<K, long> &&
    requires(const K a, const K b) {
      { a + b } -> std::same_as<K>;
      { a - b } -> std::same_as<K>;
      { a * b } -> std::same_as<K>;
      { a / b } -> std::same_as<K>;
      { -a } -> std::same_as<K>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.str() } -> std::convertible_to<std::string>;
      { K::characteristic() } -> std::convertible_to<std::uint64_t>;
      { K::parse(std::string_view{}) } -> std::same_as<K>;
    };

// ---------------------------------------------------------------------------
// Rational

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(long num, long den) : q_(mpz_class(num), mpz_class(den)) {
    if (den == 0) fail(ErrorKind::invalid_input, "zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "n", "-n", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto slash = text.find('/');
    std::string num(trim(text.substr(0, slash)));
    std::string den = slash == std::string_view::npos
                          ? std::string("1")
                          : std::string(trim(text.substr(slash + 1)));
    auto valid = [](const std::string& s) {
      if (s.empty()) return false;
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    if (!valid(num) || !valid(den))
      fail(ErrorKind::parse_error, "malformed rational '" + std::string(text) + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
    if (d == 0) fail(ErrorKind::parse_error, "zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    return Rational(std::move(q));
  }

  static constexpr std::uint64_t characteristic() { return 0; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  std::string str() const { return q_.get_str(10); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::invalid_input, "division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

// ---------------------------------------------------------------------------
// ModP

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n), 10);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

/// Residue modulo a runtime prime. The modulus lives in a thread-local scope
/// (see ModP::Scope); every element created while a scope is active belongs
/// to that field.
class ModP {
 public:
  class Scope {
   public:
    explicit Scope(std::uint64_t p) : previous_(current()) {
      if (!is_prime_u64(p)) fail(ErrorKind::invalid_field, "modulus " + std::to_string(p) + " is not prime");
      if (p >= (std::uint64_t{1} << 62)) fail(ErrorKind::invalid_field, "modulus too large");
      current() = p;
    }
    ~Scope() { current() = previous_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint64_t previous_;
  };

  ModP() = default;
  template <std::integral I>
  ModP(I n) {  // NOLINT(implicit)
    const std::uint64_t p = checked_modulus();
    if constexpr (std::is_signed_v<I>) {
      long long m = static_cast<long long>(n) % static_cast<long long>(p);
      v_ = static_cast<std::uint64_t>(m < 0 ? m + static_cast<long long>(p) : m);
    } else {
      v_ = static_cast<std::uint64_t>(n) % p;
    }
  }

  static std::uint64_t modulus() { return current(); }
  static std::uint64_t characteristic() { return current(); }

  static ModP from_residue(std::uint64_t r) {
    ModP x;
    x.v_ = r % checked_modulus();
    return x;
  }

  static ModP parse(std::string_view text) {
    Rational r = Rational::parse(text);
    const std::uint64_t p = checked_modulus();
    mpz_class pz(std::to_string(p), 10);
    mpz_class num = r.numerator() % pz;
    if (num < 0) num += pz;
    mpz_class den = r.denominator() % pz;
    if (den == 0)
      fail(ErrorKind::parse_error, "denominator of '" + std::string(text) + "' vanishes mod " + std::to_string(p));
    return from_residue(num.get_ui()) / from_residue(den.get_ui());
  }

  std::uint64_t residue() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::string str() const { return std::to_string(v_); }

  ModP operator-() const {
    ModP r;
    r.v_ = v_ == 0 ? 0 : checked_modulus() - v_;
    return r;
  }
  ModP& operator+=(const ModP& o) {
    const std::uint64_t p = checked_modulus();
    v_ += o.v_;
    if (v_ >= p) v_ -= p;
    return *this;
  }
  ModP& operator-=(const ModP& o) { return *this += -o; }
  ModP& operator*=(const ModP& o) {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % checked_modulus());
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  ModP pow(std::uint64_t e) const {
    ModP base = *this, acc = from_residue(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  ModP inverse() const {
    if (is_zero()) fail(ErrorKind::invalid_input, "division by zero");
    return pow(checked_modulus() - 2);
  }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.str(); }

 private:
  static std::uint64_t& current() {
    thread_local std::uint64_t p = 0;
    return p;
  }
  static std::uint64_t checked_modulus() {
    const std::uint64_t p = current();
    if (p == 0) fail(ErrorKind::invalid_field, "ModP used outside of a ModP::Scope");
    return p;
  }

  std::uint64_t v_ = 0;
};

/// Characteristics 2, 3 and 5 are excluded throughout.
inline void require_admissible_characteristic(std::uint64_t p) {
  if (p == 2 || p == 3 || p == 5)
    fail(ErrorKind::invalid_field, "characteristic " + std::to_string(p) + " is not supported (need 0 or p >= 7)");
}

// ---------------------------------------------------------------------------
// Square roots

inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.numerator(), d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

/// Tonelli-Shanks.
inline std::optional<ModP> exact_sqrt(const ModP& a) {
  if (a.is_zero()) return a;
  const std::uint64_t p = ModP::modulus();
  if (a.pow((p - 1) / 2) != ModP(1)) return std::nullopt;
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  ModP z(2);
  while (z.pow((p - 1) / 2) == ModP(1)) z += ModP(1);
  std::uint64_t m = s;
  ModP c = z.pow(q), t = a.pow(q), r = a.pow((q + 1) / 2);
  while (t != ModP(1)) {
    std::uint64_t i = 0;
    ModP tt = t;
    while (tt != ModP(1)) {
      tt *= tt;
      ++i;
    }
    ModP b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return r;
}

}  // namespace wbd
