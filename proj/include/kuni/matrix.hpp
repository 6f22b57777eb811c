#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kuni/json.hpp"

#include "kuni/field.hpp"

namespace kuni {

/// Dense row-major matrix over GF(p). Zero-sized dimensions are allowed so
/// that a [n, n] code can carry an empty k x 0 block.
class MatrixGF {
 public:
  MatrixGF(const PrimeField& field, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p. All rows must have equal length.
  MatrixGF(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows);

  static MatrixGF identity(const PrimeField& field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  /// Raw representative in [0, p).
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t value);
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<std::vector<std::int64_t>> to_rows() const;

  MatrixGF transpose() const;
  MatrixGF negated() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend MatrixGF operator+(const MatrixGF& a, const MatrixGF& b);
  friend MatrixGF operator*(const MatrixGF& a, const MatrixGF& b);
  friend bool operator==(const MatrixGF&, const MatrixGF&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Rank over GF(p) by Gaussian elimination.
std::size_t rank(const MatrixGF& m);

/// Determinant of a square matrix. Throws InvalidInput if not square.
FieldElement determinant(const MatrixGF& m);

/// The minor selected by row_idx x col_idx, in the given order. Throws
/// InvalidInput for empty, out-of-range, or duplicated indices.
MatrixGF submatrix(const MatrixGF& m, std::span<const std::size_t> row_idx,
                   std::span<const std::size_t> col_idx);

/// True iff every t x t minor (1 <= t <= min(rows, cols)) is nonsingular.
/// Exhaustive; intended for the small blocks used to build MDS codes.
bool all_square_submatrices_nonsingular(const MatrixGF& m);

/// Basis of {x : m x = 0}, one vector per row of the result.
MatrixGF null_space(const MatrixGF& m);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  MatrixGF reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(const MatrixGF& m);

Json to_json(const MatrixGF& m);
/// Parses {"p", "rows", "cols", "entries"}; validates shape.
MatrixGF matrix_from_json(const Json& j);

}  // namespace kuni
