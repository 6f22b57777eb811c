#include "kuni/field.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "kuni/errors.hpp"

namespace kuni {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw InvalidInput("modulus " + std::to_string(p) + " exceeds the supported bound 2^20");
  }
  if (!is_prime(p)) {
    throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
  }
}

FieldElement PrimeField::element(std::int64_t value) const { return FieldElement(*this, value); }
FieldElement PrimeField::zero() const { return FieldElement(*this, 0); }
FieldElement PrimeField::one() const { return FieldElement(*this, 1); }

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidInput("zero has no multiplicative inverse");
  // Fermat: a^(p-2) = a^-1.
  return pow(a, p_ - 2);
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (p_ != other.p_) {
    throw FieldMismatch("cannot combine elements of GF(" + std::to_string(p_) + ") and GF(" +
                        std::to_string(other.p_) + ")");
  }
}

FieldElement FieldElement::operator-() const {
  const PrimeField f(p_);
  return FieldElement(f, f.neg(value_));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = PrimeField(p_).add(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = PrimeField(p_).sub(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  value_ = PrimeField(p_).mul(value_, rhs.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  const PrimeField f(p_);
  value_ = f.mul(value_, f.inv(rhs.value_));
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value() << " (mod " << e.modulus() << ")";
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }

FieldElement mul_inv(const FieldElement& a) {
  const PrimeField f(a.modulus());
  return FieldElement(f, f.inv(a.value()));
}

FieldElement power(const FieldElement& a, std::uint64_t e) {
  const PrimeField f(a.modulus());
  return FieldElement(f, f.pow(a.value(), e));
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::uint64_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) throw InvalidInput("zero has no multiplicative order");
  const PrimeField f(a.modulus());
  // Strip prime factors from p - 1 while the power stays 1.
  std::uint64_t order = f.modulus() - 1;
  for (auto r : prime_factors(order)) {
    while (order % r == 0 && f.pow(a.value(), order / r) == 1) order /= r;
  }
  return order;
}

bool is_primitive(const FieldElement& a) {
  return !a.is_zero() && multiplicative_order(a) == a.modulus() - 1;
}

FieldElement find_primitive(const PrimeField& field) {
  for (std::uint32_t g = 1; g < field.modulus(); ++g) {
    if (is_primitive(field.element(g))) return field.element(g);
  }
  throw InvalidInput("no primitive element found");  // unreachable for prime p
}

FieldElement find_largest_primitive(const PrimeField& field) {
  for (std::uint32_t g = field.modulus() - 1; g >= 1; --g) {
    if (is_primitive(field.element(g))) return field.element(g);
  }
  throw InvalidInput("no primitive element found");
}

}  // namespace kuni
