#include "kuni/codes.hpp"

#include <algorithm>
#include <limits>

#include "kuni/combinatorics.hpp"
#include "kuni/errors.hpp"

namespace kuni {

std::size_t hamming_weight(std::span<const std::uint32_t> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](std::uint32_t s) { return s != 0; }));
}

LinearCode LinearCode::from_a_matrix(const MatrixGF& a) {
  const auto& f = a.field();
  const std::size_t k = a.rows();
  if (k == 0) throw InvalidInput("code dimension k must be at least 1");
  MatrixGF g(f, k, k + a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    g.set(i, i, 1);
    for (std::size_t j = 0; j < a.cols(); ++j) g.set(i, k + j, static_cast<std::int64_t>(a(i, j)));
  }
  return LinearCode(std::move(g));
}

LinearCode::LinearCode(MatrixGF generator) : generator_(std::move(generator)) {
  if (generator_.rows() == 0) throw InvalidInput("code dimension k must be at least 1");
  if (generator_.rows() > generator_.cols()) throw InvalidInput("code dimension exceeds length");
  if (rank(generator_) != generator_.rows()) throw InvalidInput("generator matrix is not full rank");
}

bool LinearCode::is_standard_form() const {
  for (std::size_t i = 0; i < k(); ++i)
    for (std::size_t j = 0; j < k(); ++j)
      if (generator_(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

MatrixGF LinearCode::a_matrix() const {
  if (!is_standard_form()) throw InvalidInput("generator is not in standard form [1 | A]");
  MatrixGF a(field(), k(), n() - k());
  for (std::size_t i = 0; i < k(); ++i)
    for (std::size_t j = 0; j < n() - k(); ++j) a.set(i, j, static_cast<std::int64_t>(generator_(i, k() + j)));
  return a;
}

Codeword LinearCode::encode(std::span<const std::uint32_t> message) const {
  if (message.size() != k()) throw InvalidInput("message length differs from code dimension");
  const auto& f = field();
  Codeword c{std::vector<std::uint32_t>(n(), 0)};
  for (std::size_t i = 0; i < k(); ++i) {
    const auto x = f.reduce(message[i]);
    if (x == 0) continue;
    for (std::size_t j = 0; j < n(); ++j) c.symbols[j] = f.add(c.symbols[j], f.mul(x, generator_(i, j)));
  }
  return c;
}

namespace {

std::uint64_t guarded_message_count(const LinearCode& code) {
  const auto count = checked_power(code.field().modulus(), code.k(), kMaxEnumeratedCodewords);
  if (count == 0) throw ResourceLimit("q^k exceeds the 2^24 codeword enumeration guard");
  return count;
}

// Calls fn(codeword) for every message in lexicographic order, updating the
// codeword incrementally as the message odometer advances.
template <typename Fn>
void walk_codewords(const LinearCode& code, Fn&& fn) {
  const auto total = guarded_message_count(code);
  const auto& f = code.field();
  const auto& g = code.generator();
  std::vector<std::uint32_t> msg(code.k(), 0);
  std::vector<std::uint32_t> word(code.n(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    fn(static_cast<const std::vector<std::uint32_t>&>(word));
    // Increment the least significant (last) message symbol with carry; each
    // touched digit moves by +1 mod q, so the word gains one copy of its row.
    for (std::size_t d = code.k(); d-- > 0;) {
      msg[d] = msg[d] + 1 == f.modulus() ? 0 : msg[d] + 1;
      for (std::size_t j = 0; j < code.n(); ++j) word[j] = f.add(word[j], g(d, j));
      if (msg[d] != 0) break;
    }
  }
}

}  // namespace

std::vector<Codeword> enumerate_codewords(const LinearCode& code) {
  std::vector<Codeword> out;
  out.reserve(guarded_message_count(code));
  walk_codewords(code, [&](const std::vector<std::uint32_t>& w) { out.push_back(Codeword{w}); });
  return out;
}

std::size_t min_distance(const LinearCode& code) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bool first = true;
  walk_codewords(code, [&](const std::vector<std::uint32_t>& w) {
    if (first) {  // the zero message
      first = false;
      return;
    }
    best = std::min(best, hamming_weight(w));
  });
  return best;
}

LinearCode dual_code(const LinearCode& code) {
  if (code.k() == code.n()) throw InvalidInput("dual of a [n, n] code is the zero code");
  if (code.is_standard_form()) {
    const auto a = code.a_matrix();
    const std::size_t k = code.k();
    const std::size_t r = code.n() - k;
    MatrixGF h(code.field(), r, code.n());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < k; ++j) h.set(i, j, -static_cast<std::int64_t>(a(j, i)));
      h.set(i, k + i, 1);
    }
    return LinearCode(std::move(h));
  }
  return LinearCode(null_space(code.generator()));
}

SingletonArray::SingletonArray(const PrimeField& field, const FieldElement& gamma)
    : field_(field), gamma_(gamma) {
  if (gamma.modulus() != field.modulus()) throw FieldMismatch("gamma belongs to another field");
  if (!is_primitive(gamma)) throw InvalidInput("gamma is not a primitive element");
  const std::uint32_t q = field.modulus();
  rows_.resize(q);
  for (std::uint32_t r = 0; r < q; ++r) {
    rows_[r].resize(q - r);
    for (std::uint32_t c = 0; c < q - r; ++c) {
      if (r == 0 || c == 0) {
        rows_[r][c] = 1;
      } else {
        const auto g = field.pow(gamma.value(), r + c - 1);
        rows_[r][c] = field.inv(field.sub(1, g));
      }
    }
  }
}

std::uint32_t SingletonArray::a(std::size_t i) const {
  if (i < 1 || i + 2 > field_.modulus()) throw InvalidInput("Singleton array index out of range");
  return rows_[1][i];
}

MatrixGF SingletonArray::rectangle(std::size_t k, std::size_t m) const {
  if (k == 0 || m == 0) throw InvalidInput("empty rectangle requested");
  if (k > rows_.size() || rows_[k - 1].size() < m) {
    throw InvalidInput("a " + std::to_string(k) + "x" + std::to_string(m) +
                       " block does not fit in the Singleton array of GF(" +
                       std::to_string(field_.modulus()) + ") (needs k + m <= p + 1)");
  }
  MatrixGF a(field_, k, m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < m; ++j) a.set(i, j, static_cast<std::int64_t>(rows_[i][j]));
  return a;
}

SingletonArray singleton_array(const PrimeField& field, const FieldElement& gamma) {
  return SingletonArray(field, gamma);
}

MatrixGF mds_a_matrix(const PrimeField& field, std::size_t k, std::size_t m,
                      std::optional<FieldElement> gamma) {
  const auto g = gamma.value_or(find_largest_primitive(field));
  auto a = singleton_array(field, g).rectangle(k, m);
  if (!all_square_submatrices_nonsingular(a)) {
    throw InvalidInput("Singleton rectangle failed the nonsingular-minor check");
  }
  return a;
}

std::size_t mds_length_bound(std::uint32_t q, std::size_t k) {
  const bool even = q % 2 == 0;
  if (even && (k == 3 || k + 1 == q)) return q + 2;
  return q + 1;
}

std::vector<std::string> code_warnings(const LinearCode& code) {
  std::vector<std::string> out;
  const auto bound = mds_length_bound(code.field().modulus(), code.k());
  if (code.n() > bound) {
    out.push_back("length n=" + std::to_string(code.n()) + " exceeds the MDS length bound " +
                  std::to_string(bound) + "; properties were checked explicitly");
  }
  return out;
}

Json to_json(const LinearCode& code) {
  Json j;
  j["p"] = code.field().modulus();
  j["n"] = code.n();
  j["k"] = code.k();
  if (code.is_standard_form()) {
    j["A"] = code.a_matrix().to_rows();
  } else {
    j["G"] = code.generator().to_rows();
  }
  return j;
}

LinearCode code_from_json(const Json& j) {
  try {
    const PrimeField f(j.at("p").get<std::uint32_t>());
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    if (k < 1 || k > n) throw InvalidInput("code JSON: need 1 <= k <= n");
    const bool has_a = j.contains("A");
    const auto rows = j.at(has_a ? "A" : "G").get<std::vector<std::vector<std::int64_t>>>();
    const std::size_t want_cols = has_a ? n - k : n;
    if (rows.size() != k) throw InvalidInput("code JSON: matrix must have k rows");
    for (const auto& r : rows) {
      if (r.size() != want_cols) throw InvalidInput("code JSON: matrix has the wrong column count");
      for (auto v : r)
        if (v < 0 || v >= f.modulus()) throw InvalidInput("code JSON: entry outside [0, p)");
    }
    MatrixGF m(f, k, want_cols);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < want_cols; ++c) m.set(r, c, rows[r][c]);
    return has_a ? LinearCode::from_a_matrix(m) : LinearCode(m);
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("code JSON: ") + e.what());
  }
}

}  // namespace kuni
