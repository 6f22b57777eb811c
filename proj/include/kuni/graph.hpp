#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kuni/codes.hpp"
#include "kuni/field.hpp"
#include "kuni/json.hpp"
#include "kuni/matrix.hpp"

namespace kuni {

/// Weighted graph on n qudits: symmetric adjacency matrix over GF(p) with a
/// zero diagonal.
class Adjacency {
 public:
  /// Throws InvalidInput unless gamma is square, symmetric and has a zero
  /// diagonal.
  explicit Adjacency(MatrixGF gamma);

  std::size_t n() const noexcept { return gamma_.rows(); }
  const PrimeField& field() const noexcept { return gamma_.field(); }
  const MatrixGF& gamma() const noexcept { return gamma_; }
  std::uint32_t weight(std::size_t i, std::size_t j) const { return gamma_(i, j); }
  /// Number of nonzero entries strictly above the diagonal.
  std::size_t edge_count() const;

  friend bool operator==(const Adjacency&, const Adjacency&) = default;

 private:
  MatrixGF gamma_;
};

/// Complete bipartite graph [[0, -A], [-A^T, 0]] of a standard-form code.
Adjacency bipartite_adjacency(const LinearCode& code);

/// [[0, -A], [-A^T, B]]. B must be (n-k) x (n-k), symmetric, zero diagonal,
/// and A must pass all_square_submatrices_nonsingular.
Adjacency general_adjacency(const LinearCode& code, const MatrixGF& b);

struct HierarchyLevel {
  std::size_t n = 0;
  std::size_t k = 0;
  friend bool operator==(const HierarchyLevel&, const HierarchyLevel&) = default;
};

/// Nested complete bipartite blocks. Level 0 is the outer (n, k) code; each
/// further level embeds a smaller code graph flush in the bottom-right corner
/// of the previous level's lower zero block.
struct HierarchySpec {
  PrimeField field;
  std::vector<HierarchyLevel> levels;
  /// Enforce k_l <= n_l / 2 on every level.
  bool require_half_rate = true;

  /// Throws InvalidInput naming the first violated constraint.
  void validate() const;
};

/// Standard-form code for each level, A blocks from mds_a_matrix.
std::vector<LinearCode> hierarchy_codes(const HierarchySpec& spec);

/// The lower-right (n-k) x (n-k) block produced by levels 1.. of the spec.
MatrixGF hierarchy_b_block(const HierarchySpec& spec);

Adjacency hierarchy_adjacency(const HierarchySpec& spec);

/// Parses "6:2,2:1" into levels. Throws InvalidInput on malformed text.
std::vector<HierarchyLevel> parse_levels(std::string_view text);
std::string format_levels(const std::vector<HierarchyLevel>& levels);

/// Undirected DOT graph with vertices 1..n and the weight as edge label.
std::string export_dot(const Adjacency& adj);

/// Uniformly random symmetric zero-diagonal matrix of the given size.
/// Draws come straight from mt19937_64 so the output is identical on every
/// platform for a fixed seed.
MatrixGF random_symmetric_zero_diagonal(const PrimeField& field, std::size_t size, std::uint64_t seed);

Json to_json(const Adjacency& adj);
Adjacency adjacency_from_json(const Json& j);

}  // namespace kuni
