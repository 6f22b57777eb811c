#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kuni/field.hpp"
#include "kuni/json.hpp"
#include "kuni/matrix.hpp"

namespace kuni {

/// Largest message count accepted by codeword enumeration (q^k).
inline constexpr std::uint64_t kMaxEnumeratedCodewords = std::uint64_t{1} << 24;

struct Codeword {
  std::vector<std::uint32_t> symbols;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

std::size_t hamming_weight(std::span<const std::uint32_t> word);

/// A linear [n, k]_p code given by a full-rank k x n generator matrix.
///
/// Codes built from an A block carry the standard-form generator [1_k | A];
/// dual codes keep the literal parity-check generator [-A^T | 1_{n-k}],
/// which is generally not in standard form.
class LinearCode {
 public:
  /// [k + A.cols, k]_p code with generator [1_k | A], k = A.rows >= 1.
  static LinearCode from_a_matrix(const MatrixGF& a);

  /// Any full-rank generator with at least one row. Throws InvalidInput
  /// otherwise.
  explicit LinearCode(MatrixGF generator);

  std::size_t n() const noexcept { return generator_.cols(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  const PrimeField& field() const noexcept { return generator_.field(); }
  const MatrixGF& generator() const noexcept { return generator_; }

  bool is_standard_form() const;
  /// The k x (n - k) block A of a standard-form generator. Throws
  /// InvalidInput if the generator is not of the form [1_k | A].
  MatrixGF a_matrix() const;

  /// x G for a length-k message.
  Codeword encode(std::span<const std::uint32_t> message) const;

 private:
  MatrixGF generator_;
};

/// All q^k codewords, ordered by message read as a base-q number with the
/// first symbol most significant. Throws ResourceLimit beyond 2^24 words.
std::vector<Codeword> enumerate_codewords(const LinearCode& code);

/// Minimum Hamming weight over nonzero codewords (brute force).
std::size_t min_distance(const LinearCode& code);

/// The dual code. For standard-form codes its generator is [-A^T | 1_{n-k}].
/// Throws InvalidInput when k == n (the dual is the zero code).
LinearCode dual_code(const LinearCode& code);

/// Triangular Singleton array over GF(p): row r has p - r entries, the first
/// row and column are all ones, and entry (i, j) with i, j >= 1 is
/// 1 / (1 - gamma^(i + j - 1)).
class SingletonArray {
 public:
  SingletonArray(const PrimeField& field, const FieldElement& gamma);

  const PrimeField& field() const noexcept { return field_; }
  const FieldElement& gamma() const noexcept { return gamma_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const std::vector<std::vector<std::uint32_t>>& rows() const noexcept { return rows_; }
  /// a_i = 1 / (1 - gamma^i) for 1 <= i <= p - 2.
  std::uint32_t a(std::size_t i) const;
  /// Top-left k x m rectangle. Throws InvalidInput if it does not fit.
  MatrixGF rectangle(std::size_t k, std::size_t m) const;

 private:
  PrimeField field_;
  FieldElement gamma_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

/// Throws InvalidInput if gamma is not primitive.
SingletonArray singleton_array(const PrimeField& field, const FieldElement& gamma);

/// A k x m block whose square minors are all nonsingular, taken from the
/// top-left corner of the Singleton array. Without an explicit gamma the
/// largest primitive element is used (gamma = 3 for GF(5)). The result is
/// checked before it is returned.
MatrixGF mds_a_matrix(const PrimeField& field, std::size_t k, std::size_t m,
                      std::optional<FieldElement> gamma = std::nullopt);

/// Longest MDS length guaranteed by the array construction: q + 2 for
/// k in {3, q - 1} with q even, q + 1 otherwise.
std::size_t mds_length_bound(std::uint32_t q, std::size_t k);

/// Warnings for a standard-form code (length beyond mds_length_bound).
std::vector<std::string> code_warnings(const LinearCode& code);

/// {"p", "n", "k", "A"} for standard-form codes, {"p", "n", "k", "G"}
/// otherwise.
Json to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

}  // namespace kuni
