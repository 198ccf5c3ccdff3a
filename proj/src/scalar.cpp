#include "llv/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <string>

#include "llv/errors.hpp"

namespace llv {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 x) { return x <= kMax64 && x >= -kMax64; }

mpz_class mpz_from(i128 x) {
  bool neg = x < 0;
  u128 u = uabs(x);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {
  if (n == std::numeric_limits<long long>::min()) set_big(mpq_class(mpz_from(n)));
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw MathError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  set_big(std::move(c));
}

void Rational::set_big(mpq_class q) {
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_shared<const mpq_class>(std::move(q));
}

Rational Rational::from_reduced(i128 num, i128 den) {
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from(num), mpz_from(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(uabs(num), u128(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  return from_reduced(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  std::string ns = trim(s.substr(0, slash));
  std::string ds = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
  if (!valid_integer(ns) || !valid_integer(ds) || ds[0] == '-' || ds[0] == '+')
    throw ParseError("", 0, "malformed rational '" + s + "'");
  mpz_class n(ns[0] == '+' ? ns.substr(1) : ns, 10);
  mpz_class d(ds, 10);
  if (d == 0) throw ParseError("", 0, "zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  mpq_class q = to_mpq();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

std::optional<Rational> Rational::root_exact(int k) const {
  if (k < 1) throw MathError("root_exact needs k >= 1");
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  mpq_class q = to_mpq();
  mpz_class num = q.get_num(), n, d;
  bool neg = num < 0;
  if (neg) num = -num;
  if (!mpz_root(n.get_mpz_t(), num.get_mpz_t(), k) || !mpz_root(d.get_mpz_t(), q.get_den_mpz_t(), k))
    return std::nullopt;
  if (neg) n = -n;
  return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = i128(num_) + o.num_;
      *this = from_reduced(s, 1);
      return *this;
    }
    i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    *this = from_wide(n, d);
    return *this;
  }
  set_big(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = i128(num_) - o.num_;
      *this = from_reduced(s, 1);
      return *this;
    }
    i128 n = i128(num_) * o.den_ - i128(o.num_) * den_;
    i128 d = i128(den_) * o.den_;
    *this = from_wide(n, d);
    return *this;
  }
  set_big(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      *this = Rational();
      return *this;
    }
    // cross-cancel first so the products stay small
    u128 g1 = gcd128(uabs(num_), u128(o.den_));
    u128 g2 = gcd128(uabs(o.num_), u128(den_));
    i128 n = (i128(num_) / i128(g1)) * (i128(o.num_) / i128(g2));
    i128 d = (i128(den_) / i128(g2)) * (i128(o.den_) / i128(g1));
    *this = from_reduced(n, d);
    return *this;
  }
  set_big(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (!big_ && !o.big_) {
    if (num_ == 0) return *this;
    u128 g1 = gcd128(uabs(num_), uabs(o.num_));
    u128 g2 = gcd128(u128(den_), u128(o.den_));
    i128 n = (i128(num_) / i128(g1)) * (i128(o.den_) / i128(g2));
    i128 d = (i128(den_) / i128(g2)) * (i128(o.num_) / i128(g1));
    if (d < 0) {
      n = -n;
      d = -d;
    }
    *this = from_reduced(n, d);
    return *this;
  }
  set_big(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = i128(a.num_) * b.den_;
    i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Gaussian Gaussian::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("", 0, "empty coefficient");
  if (s.back() != 'i') return Gaussian(Rational::parse(s));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not at position 0 and not right after '/'
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im == "" || im == "+") im = "1";
  if (im == "-") im = "-1";
  return Gaussian(Rational::parse(re), Rational::parse(im));
}

std::string Gaussian::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string ims = im_.to_string();
  if (re_.is_zero()) return ims + " i";
  if (im_.sign() < 0) return re_.to_string() + "-" + ims.substr(1) + " i";
  return re_.to_string() + "+" + ims + " i";
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& x) { return os << x.to_string(); }

}  // namespace llv
