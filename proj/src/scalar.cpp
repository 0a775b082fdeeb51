#include "satake/scalar.hpp"

#include <cctype>
#include <ostream>
#include <vector>

namespace satake {

namespace {

// Multiply (a + b r3)(c + d r3) into (ra, rb).
void q3_mul(const mpq_class& a, const mpq_class& b, const mpq_class& c,
            const mpq_class& d, mpq_class& ra, mpq_class& rb) {
  if (sgn(b) == 0 && sgn(d) == 0) {
    ra = a * c;
    rb = 0;
    return;
  }
  mpq_class t0 = a * c + 3 * b * d;
  mpq_class t1 = a * d + b * c;
  ra = std::move(t0);
  rb = std::move(t1);
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

std::vector<std::string> q3_terms(const mpq_class& a, const mpq_class& b) {
  std::vector<std::string> terms;
  if (sgn(a) != 0) terms.push_back(a.get_str());
  if (sgn(b) != 0) {
    if (b == 1) {
      terms.push_back("r3");
    } else if (b == -1) {
      terms.push_back("-r3");
    } else {
      terms.push_back(b.get_str() + "*r3");
    }
  }
  return terms;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ScalarError("cannot parse scalar '" + std::string(text_) +
                      "': " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      size_t end = pos_ + w.size();
      if (end < text_.size() &&
          std::isalnum(static_cast<unsigned char>(text_[end]))) {
        return false;
      }
      pos_ = end;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Scalar primary() {
    skip_ws();
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (accept_word("sqrt3") || accept_word("r3")) return Scalar::sqrt3();
    if (accept_word("i")) return Scalar::imag();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number, r3, i or '('");
    mpz_class n(std::string(text_.substr(start, pos_ - start)));
    return Scalar(mpq_class(n));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Scalar::Scalar(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  d_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ScalarError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::omega() {
  return Scalar(mpq_class(-1, 2), 0, 0, mpq_class(1, 2));
}

Scalar& Scalar::operator+=(const Scalar& y) {
  a_ += y.a_;
  if (sgn(y.b_) != 0) b_ += y.b_;
  if (sgn(y.c_) != 0) c_ += y.c_;
  if (sgn(y.d_) != 0) d_ += y.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  a_ -= y.a_;
  if (sgn(y.b_) != 0) b_ -= y.b_;
  if (sgn(y.c_) != 0) c_ -= y.c_;
  if (sgn(y.d_) != 0) d_ -= y.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& y) {
  if (is_rational() && y.is_rational()) {
    a_ *= y.a_;
    return *this;
  }
  if (is_real() && y.is_real()) {
    q3_mul(a_, b_, y.a_, y.b_, a_, b_);
    return *this;
  }
  // (r1 + s1 i)(r2 + s2 i) = (r1 r2 - s1 s2) + (r1 s2 + s1 r2) i
  mpq_class r1r2a, r1r2b, s1s2a, s1s2b, r1s2a, r1s2b, s1r2a, s1r2b;
  q3_mul(a_, b_, y.a_, y.b_, r1r2a, r1r2b);
  q3_mul(c_, d_, y.c_, y.d_, s1s2a, s1s2b);
  q3_mul(a_, b_, y.c_, y.d_, r1s2a, r1s2b);
  q3_mul(c_, d_, y.a_, y.b_, s1r2a, s1r2b);
  a_ = r1r2a - s1s2a;
  b_ = r1r2b - s1s2b;
  c_ = r1s2a + s1r2a;
  d_ = r1s2b + s1r2b;
  return *this;
}

void Scalar::add_product(const Scalar& x, const Scalar& z) {
  if (x.is_rational() && z.is_rational()) {
    if (sgn(x.a_) == 0 || sgn(z.a_) == 0) return;
    mpq_class t = x.a_ * z.a_;
    a_ += t;
    return;
  }
  *this += x * z;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("division by zero");
  if (is_rational()) return Scalar(1 / a_);
  // N = r^2 + s^2 in Q(r3), then 1/(r + s i) = (r - s i) / N.
  mpq_class ra, rb, sa, sb;
  q3_mul(a_, b_, a_, b_, ra, rb);
  q3_mul(c_, d_, c_, d_, sa, sb);
  mpq_class na = ra + sa;
  mpq_class nb = rb + sb;
  mpq_class norm = na * na - 3 * nb * nb;  // nonzero: Q(r3) is a field
  mpq_class ia = na / norm;
  mpq_class ib = -nb / norm;
  mpq_class oa, ob, pa, pb;
  q3_mul(a_, b_, ia, ib, oa, ob);
  q3_mul(c_, d_, ia, ib, pa, pb);
  return Scalar(oa, ob, -pa, -pb);
}

Scalar& Scalar::operator/=(const Scalar& y) {
  if (y.is_zero()) throw ScalarError("division by zero");
  if (y.is_rational()) {
    a_ /= y.a_;
    if (sgn(b_) != 0) b_ /= y.a_;
    if (sgn(c_) != 0) c_ /= y.a_;
    if (sgn(d_) != 0) d_ /= y.a_;
    return *this;
  }
  return *this *= y.inverse();
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, -c_, -d_); }

std::string Scalar::str() const {
  std::string out;
  for (const auto& t : q3_terms(a_, b_)) append_term(out, t);
  auto im = q3_terms(c_, d_);
  if (im.size() == 1) {
    std::string t = im.front();
    if (t == "1") {
      t = "i";
    } else if (t == "-1") {
      t = "-i";
    } else {
      t += "*i";
    }
    append_term(out, t);
  } else if (im.size() == 2) {
    std::string inner;
    for (const auto& t : im) append_term(inner, t);
    append_term(out, "(" + inner + ")*i");
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text) { return Parser(text).parse(); }

Scalar conj(const Scalar& x) { return Scalar(x.a(), x.b(), -x.c(), -x.d()); }

int sign(const Scalar& x) {
  if (!x.is_real()) throw ScalarError("sign of non-real scalar " + x.str());
  int sa = sgn(x.a());
  int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and 3 b^2 wins.
  int cmp_ = cmp(x.a() * x.a(), 3 * x.b() * x.b());
  return cmp_ > 0 ? sa : sb;
}

std::strong_ordering lex_compare(const Scalar& x, const Scalar& y) {
  for (auto [p, q] : {std::pair{&x.a(), &y.a()}, std::pair{&x.b(), &y.b()},
                      std::pair{&x.c(), &y.c()}, std::pair{&x.d(), &y.d()}}) {
    int c = cmp(*p, *q);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

mpq_class magnitude_bound(const Scalar& x) {
  // sqrt3 < 2 and |u + v i| <= |u| + |v|.
  return abs(x.a()) + 2 * abs(x.b()) + abs(x.c()) + 2 * abs(x.d());
}

int pivot_cost(const Scalar& x) {
  if (x.is_rational()) {
    const mpq_class& q = x.a();
    if (q.get_den() == 1 && abs(q.get_num()) == 1) return 0;
    if (q.get_den() == 2 && abs(q.get_num()) == 1) return 1;
    if (abs(q.get_num()) < 64 && q.get_den() < 64) return 2;
    return 3;
  }
  return 4;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.str();
}

}  // namespace satake
