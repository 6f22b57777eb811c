#include "kuni/matrix.hpp"

#include <algorithm>
#include <string>

#include "kuni/combinatorics.hpp"
#include "kuni/errors.hpp"

namespace kuni {

MatrixGF::MatrixGF(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixGF::MatrixGF(const PrimeField& field, const std::vector<std::vector<std::int64_t>>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix rows");
    for (auto v : r) data_.push_back(field_.reduce(v));
  }
}

MatrixGF MatrixGF::identity(const PrimeField& field, std::size_t n) {
  MatrixGF m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FieldElement MatrixGF::at(std::size_t r, std::size_t c) const {
  return field_.element((*this)(r, c));
}

void MatrixGF::set(std::size_t r, std::size_t c, std::int64_t value) {
  data_.at(r * cols_ + c) = field_.reduce(value);
}

void MatrixGF::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (value.modulus() != field_.modulus()) throw FieldMismatch("matrix entry from another field");
  data_.at(r * cols_ + c) = value.value();
}

std::vector<std::vector<std::int64_t>> MatrixGF::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  return out;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

MatrixGF MatrixGF::negated() const {
  MatrixGF n = *this;
  for (auto& v : n.data_) v = field_.neg(v);
  return n;
}

bool MatrixGF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t v) { return v == 0; });
}

bool MatrixGF::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

MatrixGF operator+(const MatrixGF& a, const MatrixGF& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix sum across fields");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum shape mismatch");
  MatrixGF s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return s;
}

MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
  const auto& f = a.field_;
  MatrixGF p(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t l = 0; l < a.cols_; ++l) acc += static_cast<std::uint64_t>(a(i, l)) * b(l, j);
      p.data_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc % f.modulus());
    }
  return p;
}

RowEchelon row_reduce(const MatrixGF& m) {
  MatrixGF r = m;
  const auto& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < r.rows() && r(piv, c) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) {
        const auto tmp = r(piv, j);
        r.set(piv, j, r(lead, j));
        r.set(lead, j, tmp);
      }
    }
    const auto scale = f.inv(r(lead, c));
    for (std::size_t j = 0; j < r.cols(); ++j) r.set(lead, j, f.mul(r(lead, j), scale));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, c) == 0) continue;
      const auto factor = r(i, c);
      for (std::size_t j = 0; j < r.cols(); ++j)
        r.set(i, j, f.sub(r(i, j), f.mul(factor, r(lead, j))));
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const MatrixGF& m) { return row_reduce(m).pivots.size(); }

FieldElement determinant(const MatrixGF& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const auto& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::uint32_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c] == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = f.neg(det);
    }
    const auto pv = a[c * n + c];
    det = f.mul(det, pv);
    const auto pinv = f.inv(pv);
    for (std::size_t i = c + 1; i < n; ++i) {
      const auto factor = f.mul(a[i * n + c], pinv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
    }
  }
  return f.element(det);
}

namespace {

void check_indices(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
  if (idx.empty()) throw InvalidInput(std::string("empty ") + what + " selection");
  std::vector<bool> seen(bound, false);
  for (auto i : idx) {
    if (i >= bound) throw InvalidInput(std::string(what) + " index " + std::to_string(i) + " out of range");
    if (seen[i]) throw InvalidInput(std::string("duplicate ") + what + " index " + std::to_string(i));
    seen[i] = true;
  }
}

}  // namespace

MatrixGF submatrix(const MatrixGF& m, std::span<const std::size_t> row_idx,
                   std::span<const std::size_t> col_idx) {
  check_indices(row_idx, m.rows(), "row");
  check_indices(col_idx, m.cols(), "column");
  MatrixGF s(m.field(), row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s.set(i, j, static_cast<std::int64_t>(m(row_idx[i], col_idx[j])));
  return s;
}

bool all_square_submatrices_nonsingular(const MatrixGF& m) {
  const std::size_t tmax = std::min(m.rows(), m.cols());
  for (std::size_t t = 1; t <= tmax; ++t) {
    const bool ok = for_each_combination(m.rows(), t, [&](const std::vector<std::size_t>& rs) {
      return for_each_combination(m.cols(), t, [&](const std::vector<std::size_t>& cs) {
        return !determinant(submatrix(m, rs, cs)).is_zero();
      });
    });
    if (!ok) return false;
  }
  return true;
}

MatrixGF null_space(const MatrixGF& m) {
  const auto& f = m.field();
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  MatrixGF basis(f, free_cols.size(), m.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    basis.set(b, free_cols[b], 1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis.set(b, ech.pivots[r], static_cast<std::int64_t>(f.neg(ech.reduced(r, free_cols[b]))));
  }
  return basis;
}

Json to_json(const MatrixGF& m) {
  Json j;
  j["p"] = m.field().modulus();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.to_rows();
  return j;
}

MatrixGF matrix_from_json(const Json& j) {
  try {
    const PrimeField f(j.at("p").get<std::uint32_t>());
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto entries = j.at("entries").get<std::vector<std::vector<std::int64_t>>>();
    if (entries.size() != rows) throw InvalidInput("matrix JSON: row count mismatch");
    MatrixGF m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries[r].size() != cols) throw InvalidInput("matrix JSON: column count mismatch");
      for (std::size_t c = 0; c < cols; ++c) {
        if (entries[r][c] < 0 || entries[r][c] >= f.modulus())
          throw InvalidInput("matrix JSON: entry outside [0, p)");
        m.set(r, c, entries[r][c]);
      }
    }
    return m;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("matrix JSON: ") + e.what());
  }
}

}  // namespace kuni
