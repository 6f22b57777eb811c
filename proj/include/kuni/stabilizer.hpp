#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kuni/codes.hpp"
#include "kuni/field.hpp"
#include "kuni/graph.hpp"
#include "kuni/json.hpp"
#include "kuni/matrix.hpp"

namespace kuni {

/// Largest q^n the exhaustive stabilizer sweep accepts.
inline constexpr std::uint64_t kMaxStabilizerSweep = std::uint64_t{1} << 26;

/// omega^phase X_1^{x_1} Z_1^{z_1} (x) ... (x) X_n^{x_n} Z_n^{z_n}.
class PauliProduct {
 public:
  /// Identity on n qudits.
  PauliProduct(const PrimeField& field, std::size_t n);
  PauliProduct(const PrimeField& field, std::uint32_t phase, std::vector<std::uint32_t> x_exp,
               std::vector<std::uint32_t> z_exp);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return x_.size(); }
  std::uint32_t phase() const noexcept { return phase_; }
  const std::vector<std::uint32_t>& x_exp() const noexcept { return x_; }
  const std::vector<std::uint32_t>& z_exp() const noexcept { return z_; }

  /// True iff both exponent vectors vanish (phase is ignored).
  bool is_identity() const;
  /// Number of qudits carrying a non-identity factor.
  std::size_t weight() const;

  /// Operator product this * rhs, with Z^a X^b = omega^{ab} X^b Z^a folded
  /// into the phase.
  PauliProduct operator*(const PauliProduct& rhs) const;
  PauliProduct pow(std::uint64_t e) const;

  friend bool operator==(const PauliProduct&, const PauliProduct&) = default;

 private:
  PrimeField field_;
  std::uint32_t phase_;
  std::vector<std::uint32_t> x_;
  std::vector<std::uint32_t> z_;
};

/// x . z' - z . x' (mod q). Zero iff the two products commute.
std::uint32_t symplectic_product(const PauliProduct& a, const PauliProduct& b);

/// n pairwise commuting, independent generators of a stabilizer group.
class StabilizerGroupDesc {
 public:
  /// Throws InvalidInput if the generators do not commute pairwise, are not
  /// n in number, or the n x 2n matrix [X | Z] is rank deficient.
  StabilizerGroupDesc(const PrimeField& field, std::vector<PauliProduct> generators);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return generators_.size(); }
  const std::vector<PauliProduct>& generators() const noexcept { return generators_; }

  /// S_1^{w_1} ... S_n^{w_n}.
  PauliProduct element(std::span<const std::uint32_t> w) const;

 private:
  PrimeField field_;
  std::vector<PauliProduct> generators_;
};

/// S_i = X_i prod_j Z_j^{Gamma_ij}, phase 0.
StabilizerGroupDesc graph_generators(const Adjacency& adj);

/// Weight of S_1^{w_1} ... S_n^{w_n} for a graph state:
/// |supp(w) u supp(Gamma w)|.
std::size_t support_weight(std::span<const std::uint32_t> w, const Adjacency& adj);

struct UniformityResult {
  /// Largest k for which the graph state is k-uniform.
  std::size_t k = 0;
  /// Minimum weight over nonzero group elements, k + 1.
  std::size_t min_weight = 0;
  /// Lexicographically first w attaining min_weight; its element has
  /// identities on n - k - 1 qudits, showing the state is not (k+1)-uniform.
  std::vector<std::uint32_t> witness;
};

/// Exhaustive sweep over all q^n - 1 nonzero exponent vectors. The sweep is
/// split by leading symbol across worker threads; the result does not
/// depend on scheduling. threads = 0 picks a default (KUNI_THREADS, then
/// hardware concurrency). Throws ResourceLimit beyond 2^26 vectors.
UniformityResult uniformity_index(const Adjacency& adj, unsigned threads = 0);

/// First (lexicographic) nonzero w with support_weight <= max_weight, if any.
std::optional<std::vector<std::uint32_t>> find_low_weight_element(const Adjacency& adj, std::size_t max_weight);

/// True iff the graph of [[0, -A], [-A^T, B]] is at least k-uniform.
/// Builder errors from general_adjacency propagate.
bool verify_theorem1(const LinearCode& code, const MatrixGF& b);

/// Worker count used when a sweep is asked for threads = 0.
unsigned default_thread_count();

Json to_json(const PauliProduct& p);

}  // namespace kuni
