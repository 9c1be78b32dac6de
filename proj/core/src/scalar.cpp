#include "resint/scalar.hpp"

#include <stdexcept>

#include "resint/errors.hpp"

namespace resint {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Fp") return prime();
  std::string digits = text;
  if (text.rfind("Fp(", 0) == 0 && text.back() == ')') return parse(text.substr(3, text.size() - 4));
  for (const char* prefix : {"Fp:", "ZZ/", "F"}) {
    std::string pre(prefix);
    if (text.rfind(pre, 0) == 0) {
      digits = text.substr(pre.size());
      break;
    }
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("unrecognised field '" + text + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Field::name() const {
  return is_rational() ? "QQ" : "ZZ/" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("division by zero in " + Field::prime(p).name());
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) {
  if (f.is_rational()) return Scalar(mpq_class(v));
  return Scalar(ModP{reduce(v, f.characteristic()), f.characteristic()});
}

Scalar Scalar::from_rational(const Field& f, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (f.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const std::uint32_t p = f.characteristic();
  std::uint32_t d = reduce(den, p);
  std::uint32_t n = reduce(num, p);
  return Scalar(ModP{static_cast<std::uint32_t>(
                         static_cast<std::uint64_t>(n) * inverse_mod(d, p) % p),
                     p});
}

Field Scalar::field() const noexcept {
  if (const auto* m = std::get_if<ModP>(&value_)) return Field(m->p);
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* m = std::get_if<ModP>(&value_)) return m->residue == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* m = std::get_if<ModP>(&value_)) return m->residue == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw IncompatibleField("residue requested as a rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* m = std::get_if<ModP>(&value_)) return m->residue;
  throw IncompatibleField("rational requested as a residue");
}

namespace {

template <class ModOp, class QOp>
void combine(std::variant<Scalar::ModP, mpq_class>& lhs,
             const std::variant<Scalar::ModP, mpq_class>& rhs, ModOp mod_op, QOp q_op) {
  if (auto* a = std::get_if<Scalar::ModP>(&lhs)) {
    const auto* b = std::get_if<Scalar::ModP>(&rhs);
    if (b == nullptr || b->p != a->p)
      throw IncompatibleField("mixed coefficient fields in arithmetic");
    a->residue = mod_op(a->residue, b->residue, a->p);
    return;
  }
  const auto* b = std::get_if<mpq_class>(&rhs);
  if (b == nullptr) throw IncompatibleField("mixed coefficient fields in arithmetic");
  q_op(std::get<mpq_class>(lhs), *b);
}

}  // namespace

Scalar Scalar::operator-() const {
  if (const auto* m = std::get_if<ModP>(&value_))
    return Scalar(ModP{m->residue == 0 ? 0 : m->p - m->residue, m->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(
      value_, o.value_,
      [](std::uint32_t a, std::uint32_t b, std::uint32_t p) {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
      },
      [](mpq_class& a, const mpq_class& b) { a += b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(
      value_, o.value_,
      [](std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; },
      [](mpq_class& a, const mpq_class& b) { a -= b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(
      value_, o.value_,
      [](std::uint32_t a, std::uint32_t b, std::uint32_t p) {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
      },
      [](mpq_class& a, const mpq_class& b) { a *= b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  combine(
      value_, o.value_,
      [](std::uint32_t a, std::uint32_t b, std::uint32_t p) {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * inverse_mod(b, p) % p);
      },
      [](mpq_class& a, const mpq_class& b) { a /= b; });
  return *this;
}

Scalar Scalar::inverse() const { return one(field()) / *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  if (const auto* x = std::get_if<Scalar::ModP>(&a.value_)) {
    const auto* y = std::get_if<Scalar::ModP>(&b.value_);
    return y != nullptr && x->p == y->p && x->residue == y->residue;
  }
  const auto* y = std::get_if<mpq_class>(&b.value_);
  return y != nullptr && std::get<mpq_class>(a.value_) == *y;
}

std::string Scalar::to_string() const {
  if (const auto* m = std::get_if<ModP>(&value_)) {
    long v = m->residue;
    if (v > static_cast<long>(m->p / 2)) v -= m->p;
    return std::to_string(v);
  }
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace resint
