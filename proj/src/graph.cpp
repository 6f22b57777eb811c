#include "kuni/graph.hpp"

#include <charconv>
#include <random>
#include <sstream>

#include "kuni/errors.hpp"

namespace kuni {

Adjacency::Adjacency(MatrixGF gamma) : gamma_(std::move(gamma)) {
  if (gamma_.rows() != gamma_.cols()) throw InvalidInput("adjacency matrix must be square");
  if (!gamma_.is_symmetric()) throw InvalidInput("adjacency matrix must be symmetric");
  for (std::size_t i = 0; i < gamma_.rows(); ++i)
    if (gamma_(i, i) != 0) throw InvalidInput("adjacency matrix must have a zero diagonal");
}

std::size_t Adjacency::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j)
      if (gamma_(i, j) != 0) ++count;
  return count;
}

namespace {

// Writes the [[0, -A], [-A^T, 0]] pattern of `a` into `g` with its top-left
// corner at (offset, offset).
void place_bipartite_block(MatrixGF& g, const MatrixGF& a, std::size_t offset) {
  const auto& f = g.field();
  const std::size_t k = a.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto w = static_cast<std::int64_t>(f.neg(a(i, j)));
      g.set(offset + i, offset + k + j, w);
      g.set(offset + k + j, offset + i, w);
    }
}

}  // namespace

Adjacency bipartite_adjacency(const LinearCode& code) {
  MatrixGF g(code.field(), code.n(), code.n());
  place_bipartite_block(g, code.a_matrix(), 0);
  return Adjacency(std::move(g));
}

Adjacency general_adjacency(const LinearCode& code, const MatrixGF& b) {
  const auto a = code.a_matrix();
  const std::size_t k = code.k();
  const std::size_t r = code.n() - k;
  if (b.field() != code.field()) throw FieldMismatch("B and the code live in different fields");
  if (b.rows() != r || b.cols() != r) throw InvalidInput("B must be (n-k) x (n-k)");
  if (!b.is_symmetric()) throw InvalidInput("B must be symmetric");
  for (std::size_t i = 0; i < r; ++i)
    if (b(i, i) != 0) throw InvalidInput("B must have a zero diagonal");
  if (!all_square_submatrices_nonsingular(a)) throw InvalidInput("A has a singular square submatrix");

  MatrixGF g(code.field(), code.n(), code.n());
  place_bipartite_block(g, a, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g.set(k + i, k + j, static_cast<std::int64_t>(b(i, j)));
  return Adjacency(std::move(g));
}

void HierarchySpec::validate() const {
  if (levels.empty()) throw InvalidInput("hierarchy needs at least one level");
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto& lv = levels[l];
    const auto where = "level " + std::to_string(l) + " (" + std::to_string(lv.n) + ":" + std::to_string(lv.k) + ")";
    if (lv.n < 2) throw InvalidInput(where + ": needs n >= 2");
    if (lv.k < 1 || lv.k >= lv.n) throw InvalidInput(where + ": needs 1 <= k < n");
    if (require_half_rate && 2 * lv.k > lv.n) throw InvalidInput(where + ": needs k <= n/2");
    if (l > 0) {
      const auto& prev = levels[l - 1];
      if (lv.n > prev.n - prev.k) {
        throw InvalidInput(where + ": needs n <= " + std::to_string(prev.n - prev.k) +
                           " to fit the previous level's zero block");
      }
    }
  }
}

std::vector<LinearCode> hierarchy_codes(const HierarchySpec& spec) {
  spec.validate();
  std::vector<LinearCode> codes;
  codes.reserve(spec.levels.size());
  for (const auto& lv : spec.levels) {
    codes.push_back(LinearCode::from_a_matrix(mds_a_matrix(spec.field, lv.k, lv.n - lv.k)));
  }
  return codes;
}

MatrixGF hierarchy_b_block(const HierarchySpec& spec) {
  const auto codes = hierarchy_codes(spec);
  const std::size_t outer = spec.levels[0].n;
  const std::size_t r = outer - spec.levels[0].k;
  MatrixGF b(spec.field, r, r);
  for (std::size_t l = 1; l < codes.size(); ++l) {
    place_bipartite_block(b, codes[l].a_matrix(), r - spec.levels[l].n);
  }
  return b;
}

Adjacency hierarchy_adjacency(const HierarchySpec& spec) {
  const auto codes = hierarchy_codes(spec);
  const std::size_t n = spec.levels[0].n;
  MatrixGF g(spec.field, n, n);
  for (std::size_t l = 0; l < codes.size(); ++l) {
    place_bipartite_block(g, codes[l].a_matrix(), n - spec.levels[l].n);
  }
  return Adjacency(std::move(g));
}

std::vector<HierarchyLevel> parse_levels(std::string_view text) {
  std::vector<HierarchyLevel> out;
  auto parse_num = [&](std::string_view s) {
    std::size_t v = 0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != end) {
      throw InvalidInput("malformed level list '" + std::string(text) + "'");
    }
    return v;
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw InvalidInput("level '" + std::string(item) + "' is not of the form n:k");
    out.push_back({parse_num(item.substr(0, colon)), parse_num(item.substr(colon + 1))});
    pos = comma + 1;
  }
  return out;
}

std::string format_levels(const std::vector<HierarchyLevel>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(levels[i].n) + ':' + std::to_string(levels[i].k);
  }
  return s;
}

std::string export_dot(const Adjacency& adj) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t i = 0; i < adj.n(); ++i) os << "  " << i + 1 << ";\n";
  for (std::size_t i = 0; i < adj.n(); ++i)
    for (std::size_t j = i + 1; j < adj.n(); ++j)
      if (adj.weight(i, j) != 0) os << "  " << i + 1 << " -- " << j + 1 << " [label=" << adj.weight(i, j) << "];\n";
  os << "}\n";
  return os.str();
}

MatrixGF random_symmetric_zero_diagonal(const PrimeField& field, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MatrixGF b(field, size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      const auto v = static_cast<std::int64_t>(rng() % field.modulus());
      b.set(i, j, v);
      b.set(j, i, v);
    }
  return b;
}

Json to_json(const Adjacency& adj) {
  Json j;
  j["p"] = adj.field().modulus();
  j["n"] = adj.n();
  j["gamma"] = adj.gamma().to_rows();
  return j;
}

Adjacency adjacency_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    Json m;
    m["p"] = j.at("p");
    m["rows"] = n;
    m["cols"] = n;
    m["entries"] = j.at("gamma");
    return Adjacency(matrix_from_json(m));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("adjacency JSON: ") + e.what());
  }
}

}  // namespace kuni
