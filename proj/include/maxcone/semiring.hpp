#pragma once

// Scalar arithmetic for the max-times semiring and its max-plus (log) image.
//
// Three numeric backends share one interface:
//   MaxPlusFloat   log-domain doubles, -inf is the semiring zero. This is the
//                  default backend for both max-times and max-plus input; a
//                  max-times value a is stored as log(a).
//   MaxTimesExact  nonnegative rationals under (max, *).
//   MaxPlusExact   rationals with -inf under (max, +).
//
// Every backend also carries a top element (+inf of the min-times dual) so
// that Cuninghame-Green inverses and residuation can be written uniformly,
// with the convention zero (x) top = zero.
//
// A backend instance holds the comparator tolerance; exact backends compare
// exactly. All "is this equal to one" decisions in the library go through
// Semiring::compare.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace maxcone {

enum class View { MaxTimes, MaxPlus };

inline constexpr double kDefaultTolerance = 1e-9;

// Rational extended by -inf and +inf.
struct ExtRational {
  enum class Kind : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };

  Kind kind = Kind::Finite;
  mpq_class q{0};

  ExtRational() = default;
  explicit ExtRational(mpq_class v) : q(std::move(v)) { q.canonicalize(); }
  static ExtRational neg_inf() {
    ExtRational r;
    r.kind = Kind::NegInf;
    return r;
  }
  static ExtRational pos_inf() {
    ExtRational r;
    r.kind = Kind::PosInf;
    return r;
  }

  bool finite() const { return kind == Kind::Finite; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Kind::Finite || a.q == b.q;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    if (a.kind != Kind::Finite) return std::strong_ordering::equal;
    int c = cmp(a.q, b.q);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

namespace detail {

// Natural logarithm of a positive rational without overflowing a double.
inline double log_of(const mpq_class& q) {
  long en = 0;
  long ed = 0;
  double dn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  double dd = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(dn) - std::log(dd) + static_cast<double>(en - ed) * std::log(2.0);
}

inline std::optional<mpz_class> exact_root(const mpz_class& z, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

inline mpq_class rational_pow(const mpq_class& q, unsigned long k) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

// Rational close to a double; exact for dyadic values.
inline mpq_class rational_from_double(double d) {
  mpq_class r(d);
  r.canonicalize();
  return r;
}

}  // namespace detail

template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& a,
                            const typename S::value_type& b, unsigned k) {
  { s.zero() } -> std::same_as<typename S::value_type>;
  { s.one() } -> std::same_as<typename S::value_type>;
  { s.top() } -> std::same_as<typename S::value_type>;
  { s.add(a, b) } -> std::same_as<typename S::value_type>;
  { s.mul(a, b) } -> std::same_as<typename S::value_type>;
  { s.inv(a) } -> std::same_as<typename S::value_type>;
  { s.min(a, b) } -> std::same_as<typename S::value_type>;
  { s.pow(a, k) } -> std::same_as<typename S::value_type>;
  { s.compare(a, b) } -> std::same_as<int>;
  { s.to_log(a) } -> std::same_as<double>;
  { s.is_zero(a) } -> std::same_as<bool>;
  { s.is_top(a) } -> std::same_as<bool>;
  { S::exact } -> std::convertible_to<bool>;
};

class MaxPlusFloat {
 public:
  using value_type = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "float64";

  MaxPlusFloat() = default;
  explicit MaxPlusFloat(double tolerance) : tol_(tolerance) {}

  double tolerance() const { return tol_; }

  double zero() const { return -std::numeric_limits<double>::infinity(); }
  double one() const { return 0.0; }
  double top() const { return std::numeric_limits<double>::infinity(); }
  bool is_zero(double a) const { return a == zero(); }
  bool is_top(double a) const { return a == top(); }

  double add(double a, double b) const { return std::max(a, b); }
  double min(double a, double b) const { return std::min(a, b); }
  double mul(double a, double b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    return a + b;
  }
  double inv(double a) const { return -a; }
  double div(double a, double b) const { return mul(a, inv(b)); }
  double pow(double a, unsigned k) const {
    if (k == 0) return one();
    if (is_zero(a)) return zero();
    return a * static_cast<double>(k);
  }
  // Exact k-th root when representable; always representable in the log domain.
  std::optional<double> root(double a, unsigned k) const {
    if (is_zero(a) || is_top(a)) return a;
    return a / static_cast<double>(k);
  }
  // Some x with x^k >= a, and x <= one whenever a <= one.
  double upper_root(double a, unsigned k) const { return *root(a, k); }

  // Relative comparator on log values: |a-b| <= tol * max(1,|a|,|b|).
  int compare(double a, double b) const {
    if (a == b) return 0;
    if (std::isinf(a) || std::isinf(b)) return a < b ? -1 : 1;
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    if (std::fabs(a - b) <= tol_ * scale) return 0;
    return a < b ? -1 : 1;
  }

  double to_log(double a) const { return a; }
  double from_log(double l) const { return l; }
  bool is_integral(double a) const {
    return std::isfinite(a) && std::fabs(a - std::round(a)) <= tol_ * std::max(1.0, std::fabs(a));
  }

 private:
  double tol_ = kDefaultTolerance;
};

class MaxTimesExact {
 public:
  using value_type = ExtRational;
  static constexpr bool exact = true;
  static constexpr const char* name = "exact-maxtimes";
  static constexpr View view = View::MaxTimes;

  MaxTimesExact() = default;
  explicit MaxTimesExact(double /*tolerance*/) {}
  double tolerance() const { return 0.0; }

  value_type zero() const { return ExtRational(mpq_class(0)); }
  value_type one() const { return ExtRational(mpq_class(1)); }
  value_type top() const { return ExtRational::pos_inf(); }
  bool is_zero(const value_type& a) const { return a.finite() && sgn(a.q) == 0; }
  bool is_top(const value_type& a) const { return a.kind == ExtRational::Kind::PosInf; }

  value_type add(const value_type& a, const value_type& b) const { return a < b ? b : a; }
  value_type min(const value_type& a, const value_type& b) const { return b < a ? b : a; }
  value_type mul(const value_type& a, const value_type& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    if (is_top(a) || is_top(b)) return top();
    return ExtRational(mpq_class(a.q * b.q));
  }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) return top();
    if (is_top(a)) return zero();
    return ExtRational(mpq_class(1 / a.q));
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type pow(const value_type& a, unsigned k) const {
    if (k == 0) return one();
    if (!a.finite()) return a;
    return ExtRational(detail::rational_pow(a.q, k));
  }
  std::optional<value_type> root(const value_type& a, unsigned k) const {
    if (!a.finite() || is_zero(a) || k == 1) return a;
    auto n = detail::exact_root(a.q.get_num(), k);
    auto d = detail::exact_root(a.q.get_den(), k);
    if (!n || !d) return std::nullopt;
    return ExtRational(mpq_class(*n, *d));
  }
  value_type upper_root(const value_type& a, unsigned k) const {
    if (auto r = root(a, k)) return *r;
    const bool below_one = compare(a, one()) <= 0;
    value_type x(detail::rational_from_double(std::exp(to_log(a) / k)));
    if (below_one && compare(x, one()) > 0) x = one();
    // Bisect towards one (or double) until x^k >= a; one^k >= a when a <= one.
    while (compare(pow(x, k), a) < 0) {
      x = below_one ? ExtRational(mpq_class((x.q + 1) / 2)) : ExtRational(mpq_class(x.q * 2));
    }
    return x;
  }

  int compare(const value_type& a, const value_type& b) const {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  double to_log(const value_type& a) const {
    if (is_zero(a)) return -std::numeric_limits<double>::infinity();
    if (is_top(a)) return std::numeric_limits<double>::infinity();
    return detail::log_of(a.q);
  }
  bool is_integral(const value_type&) const { return false; }
};

class MaxPlusExact {
 public:
  using value_type = ExtRational;
  static constexpr bool exact = true;
  static constexpr const char* name = "exact-maxplus";
  static constexpr View view = View::MaxPlus;

  MaxPlusExact() = default;
  explicit MaxPlusExact(double /*tolerance*/) {}
  double tolerance() const { return 0.0; }

  value_type zero() const { return ExtRational::neg_inf(); }
  value_type one() const { return ExtRational(mpq_class(0)); }
  value_type top() const { return ExtRational::pos_inf(); }
  bool is_zero(const value_type& a) const { return a.kind == ExtRational::Kind::NegInf; }
  bool is_top(const value_type& a) const { return a.kind == ExtRational::Kind::PosInf; }

  value_type add(const value_type& a, const value_type& b) const { return a < b ? b : a; }
  value_type min(const value_type& a, const value_type& b) const { return b < a ? b : a; }
  value_type mul(const value_type& a, const value_type& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    if (is_top(a) || is_top(b)) return top();
    return ExtRational(mpq_class(a.q + b.q));
  }
  value_type inv(const value_type& a) const {
    if (is_zero(a)) return top();
    if (is_top(a)) return zero();
    return ExtRational(mpq_class(-a.q));
  }
  value_type div(const value_type& a, const value_type& b) const { return mul(a, inv(b)); }
  value_type pow(const value_type& a, unsigned k) const {
    if (k == 0) return one();
    if (!a.finite()) return a;
    return ExtRational(mpq_class(a.q * k));
  }
  std::optional<value_type> root(const value_type& a, unsigned k) const {
    if (!a.finite()) return a;
    return ExtRational(mpq_class(a.q / k));
  }
  value_type upper_root(const value_type& a, unsigned k) const { return *root(a, k); }

  int compare(const value_type& a, const value_type& b) const {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }

  double to_log(const value_type& a) const {
    if (is_zero(a)) return -std::numeric_limits<double>::infinity();
    if (is_top(a)) return std::numeric_limits<double>::infinity();
    return a.q.get_d();
  }
  bool is_integral(const value_type& a) const { return a.finite() && a.q.get_den() == 1; }
};

static_assert(Semiring<MaxPlusFloat>);
static_assert(Semiring<MaxTimesExact>);
static_assert(Semiring<MaxPlusExact>);

// Comparator shorthands.
template <Semiring S>
bool eq(const S& s, const typename S::value_type& a, const typename S::value_type& b) {
  return s.compare(a, b) == 0;
}
template <Semiring S>
bool lt(const S& s, const typename S::value_type& a, const typename S::value_type& b) {
  return s.compare(a, b) < 0;
}
template <Semiring S>
bool le(const S& s, const typename S::value_type& a, const typename S::value_type& b) {
  return s.compare(a, b) <= 0;
}

}  // namespace maxcone
