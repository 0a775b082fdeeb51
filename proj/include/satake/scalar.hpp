#ifndef SATAKE_SCALAR_HPP
#define SATAKE_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace satake {

/// Raised on arithmetic that has no value in the field (division by zero,
/// sign of a non-real number, malformed text).
class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element a + b*r3 + (c + d*r3)*i of Q(sqrt 3, i).
///
/// Components are GMP rationals kept in canonical (reduced) form, so two
/// scalars are equal exactly when their components are equal.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class a, mpq_class b = 0, mpq_class c = 0,
                  mpq_class d = 0);

  static Scalar rational(long num, long den);
  static Scalar sqrt3() { return Scalar(0, 1); }
  static Scalar imag() { return Scalar(0, 0, 1); }
  /// Primitive cube root of unity -1/2 + (sqrt3/2) i.
  static Scalar omega();

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }
  const mpq_class& d() const { return d_; }

  bool is_zero() const {
    return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(d_) == 0;
  }
  bool is_real() const { return sgn(c_) == 0 && sgn(d_) == 0; }
  bool is_rational() const { return is_real() && sgn(b_) == 0; }
  bool is_one() const { return is_rational() && a_ == 1; }

  Scalar real_part() const { return Scalar(a_, b_); }
  Scalar imag_part() const { return Scalar(c_, d_); }

  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  /// y += x * z without a temporary when the factors are rational.
  void add_product(const Scalar& x, const Scalar& z);

  Scalar inverse() const;

  /// Text form "a/b + c/d*r3 + (e/f + g/h*r3)*i", zero terms omitted.
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  mpq_class a_, b_, c_, d_;
};

Scalar conj(const Scalar& x);

/// Exact sign of a real scalar; throws ScalarError on non-real input.
int sign(const Scalar& x);

/// Total order on components (a, b, c, d); used only for deterministic
/// sorting, not as a numeric comparison.
std::strong_ordering lex_compare(const Scalar& x, const Scalar& y);

/// Rational upper bound on |x| (no floating point).
mpq_class magnitude_bound(const Scalar& x);

/// Simplicity rank of a pivot: 0 for +-1, 1 for +-1/2, 2 for other small
/// rationals, larger for irrational or large-height entries.
int pivot_cost(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace satake

#endif  // SATAKE_SCALAR_HPP
