#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace kuni {

class FieldElement;

/// The prime field GF(p). Only moduli below 2^20 are accepted.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 20;

  /// Throws InvalidInput if p is not a prime below kMaxModulus.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t size() const noexcept { return p_; }

  /// Reduces any integer (negative values included) into [0, p).
  FieldElement element(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Raw arithmetic on already-reduced representatives. Hot loops in the
  // matrix and stabilizer code work on these directly.
  std::uint32_t reduce(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<std::uint32_t>(r < 0 ? r + m : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws InvalidInput for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// An element of a PrimeField. Mixing elements of different fields throws
/// FieldMismatch.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::int64_t value)
      : value_(field.reduce(value)), p_(field.modulus()) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Equality compares field and value; comparing across fields is false,
  /// not an error.
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void require_same_field(const FieldElement& other) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

bool is_prime(std::uint64_t n);

FieldElement add(const FieldElement& a, const FieldElement& b);
/// Multiplicative inverse. Throws InvalidInput for zero.
FieldElement mul_inv(const FieldElement& a);
FieldElement power(const FieldElement& a, std::uint64_t e);

/// Multiplicative order of a nonzero element (divides p - 1).
std::uint64_t multiplicative_order(const FieldElement& a);
bool is_primitive(const FieldElement& a);

/// Smallest primitive element by value; 1 for GF(2).
FieldElement find_primitive(const PrimeField& field);
/// Largest primitive element by value; 1 for GF(2).
FieldElement find_largest_primitive(const PrimeField& field);

}  // namespace kuni
