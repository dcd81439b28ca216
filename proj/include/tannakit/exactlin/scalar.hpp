#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tannakit::exactlin {

/// The ground field: the rationals (modulus 0) or a prime field F_p.
struct Field {
  std::uint64_t modulus = 0;

  static constexpr Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return modulus == 0; }
  std::string str() const;

  friend constexpr bool operator==(Field, Field) = default;
};

/// Default small prime for rank pre-checks.
inline constexpr std::uint64_t kDefaultPrime = 32003;

/// Exact scalar: a reduced rational, or a residue modulo a prime.
///
/// Arithmetic between a rational and a residue promotes the rational into
/// the prime field (its denominator must be invertible there). Mixing two
/// different primes throws std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class q);

  static Scalar residue(std::int64_t value, std::uint64_t p);
  static Scalar zero(Field f);
  static Scalar one(Field f);

  /// Parses "p/q", "p" or "-p/q". Denominators must be nonzero; the result is
  /// canonicalized. Throws tannakit::InputError on malformed text.
  static Scalar parse(std::string_view text, Field f = Field::rationals());

  Field field() const { return Field{mod_}; }
  bool is_zero() const { return mod_ == 0 ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return mod_ == 0 ? q_ == 1 : r_ == 1; }

  /// Rational value; only meaningful when field().is_rational().
  const mpq_class& rational() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  /// Converts into the given field (identity when already there).
  Scalar in(Field f) const;

  Scalar inverse() const;

  /// "-3/7", "5", or a residue in [0, p).
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// `a -= f * b` without temporaries in the rational case.
  void sub_mul(const Scalar& f, const Scalar& b);

 private:
  void align(Scalar& other);

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t mod_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tannakit::exactlin
