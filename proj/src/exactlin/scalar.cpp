#include "tannakit/exactlin/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "tannakit/error.hpp"

namespace tannakit::exactlin {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if ((e & 1U) != 0) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(std::to_string(p));
  if (m < 0) m += mpz_class(std::to_string(p));
  return std::stoull(m.get_str());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62U)) throw InputError("field modulus too large");
  return Field{p};
}

std::string Field::str() const { return is_rational() ? "Q" : "F_" + std::to_string(modulus); }

Scalar::Scalar(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  q_.canonicalize();
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::residue(std::int64_t value, std::uint64_t p) {
  Scalar s;
  s.mod_ = p;
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  s.r_ = static_cast<std::uint64_t>(r);
  return s;
}

Scalar Scalar::zero(Field f) { return f.is_rational() ? Scalar() : residue(0, f.modulus); }
Scalar Scalar::one(Field f) { return f.is_rational() ? Scalar(1) : residue(1, f.modulus); }

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string t(text);
  auto bad = [&] { return InputError("malformed rational \"" + t + "\""); };
  if (t.empty()) throw bad();
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto digits = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num);
  mpz_class d(den);
  if (d == 0) throw InputError("zero denominator in \"" + t + "\"");
  Scalar s(mpq_class(n, d));
  return s.in(f);
}

Scalar Scalar::in(Field f) const {
  if (f.modulus == mod_) return *this;
  if (!f.is_rational() && mod_ == 0) {
    std::uint64_t num = reduce_mpz(q_.get_num(), f.modulus);
    std::uint64_t den = reduce_mpz(q_.get_den(), f.modulus);
    if (den == 0) {
      throw MathError("denominator of " + str() + " vanishes in " + f.str());
    }
    Scalar s;
    s.mod_ = f.modulus;
    s.r_ = mulmod(num, powmod(den, f.modulus - 2, f.modulus), f.modulus);
    return s;
  }
  throw std::invalid_argument("cannot move scalar from " + field().str() + " to " + f.str());
}

void Scalar::align(Scalar& other) {
  if (other.mod_ == mod_) return;
  if (mod_ == 0) {
    *this = in(other.field());
  } else {
    other = other.in(field());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (mod_ == 0) return Scalar(1 / q_);
  Scalar s = *this;
  s.r_ = powmod(r_, mod_ - 2, mod_);
  return s;
}

std::string Scalar::str() const { return mod_ == 0 ? q_.get_str() : std::to_string(r_); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (mod_ == 0) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = mod_ - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.mod_ != mod_) {
    Scalar tmp = o;
    align(tmp);
    return *this += tmp;
  }
  if (mod_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= mod_) r_ -= mod_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.mod_ != mod_) {
    Scalar tmp = o;
    align(tmp);
    return *this *= tmp;
  }
  if (mod_ == 0) {
    q_ *= o.q_;
  } else {
    r_ = mulmod(r_, o.r_, mod_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::sub_mul(const Scalar& f, const Scalar& b) {
  if (mod_ == 0 && f.mod_ == 0 && b.mod_ == 0) {
    mpq_class t = f.q_ * b.q_;
    q_ -= t;
    return;
  }
  if (mod_ != 0 && f.mod_ == mod_ && b.mod_ == mod_) {
    std::uint64_t t = mulmod(f.r_, b.r_, mod_);
    r_ = r_ >= t ? r_ - t : r_ + mod_ - t;
    return;
  }
  *this -= f * b;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ == b.mod_) return a.mod_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
  Scalar x = a;
  Scalar y = b;
  x.align(y);
  return x == y;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tannakit::exactlin
