#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace resint {

/// Coefficient field tag: the rationals or a prime field Z/p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p = kDefaultPrime);
  /// Parses "Q", "QQ", "Fp", "Fp:<p>", "ZZ/<p>" or a bare prime.
  static Field parse(const std::string& text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact coefficient. Rationals are kept canonical (reduced, positive
/// denominator); residues live in [0, p).
class Scalar {
 public:
  struct ModP {
    std::uint32_t residue;
    std::uint32_t p;
  };

  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_rational(const Field& f, const mpz_class& num, const mpz_class& den);

  Field field() const noexcept;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(value_); }

  /// Rational value; throws IncompatibleField for residues.
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Reduced fraction ("-3/2") for rationals, symmetric residue for Z/p.
  std::string to_string() const;

 private:
  explicit Scalar(ModP v) : value_(v) {}
  explicit Scalar(mpq_class v) : value_(std::move(v)) {}

  std::variant<ModP, mpq_class> value_;
};

}  // namespace resint
