#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kuni/codes.hpp"
#include "kuni/graph.hpp"
#include "kuni/json.hpp"
#include "kuni/stabilizer.hpp"

namespace kuni {

using Amplitude = std::complex<double>;

/// Largest q^n a dense state may have (about 256 MB of amplitudes).
inline constexpr std::uint64_t kMaxAmplitudes = std::uint64_t{1} << 24;

/// Dense amplitudes of n qudits of dimension q. Qudit 0 is the most
/// significant base-q digit of the index, matching codeword symbol order.
class StateVector {
 public:
  /// Throws InvalidInput if the length is not q^n, ResourceLimit beyond the
  /// amplitude guard.
  StateVector(std::size_t n, std::uint32_t q, std::vector<Amplitude> amplitudes);

  /// |digits>. Digits are reduced mod q.
  static StateVector basis(std::size_t n, std::uint32_t q, std::span<const std::uint32_t> digits);

  std::size_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }
  Amplitude amplitude(std::size_t index) const { return amps_.at(index); }

  /// q^(n - 1 - qudit).
  std::size_t stride(std::size_t qudit) const noexcept { return strides_[qudit]; }
  std::uint32_t digit(std::size_t index, std::size_t qudit) const noexcept {
    return static_cast<std::uint32_t>(index / strides_[qudit] % q_);
  }

  double norm() const;
  /// Scaled to unit norm. Throws InvalidInput for the zero vector.
  StateVector normalized() const;

 private:
  std::size_t n_;
  std::uint32_t q_;
  std::vector<std::size_t> strides_;
  std::vector<Amplitude> amps_;
};

/// Equal superposition of all codewords, amplitude q^(-k/2) each.
StateVector state_from_code(const LinearCode& code);

/// CZ^{Gamma_ij} for every pair i < j applied to |+>^n, where
/// CZ|a, b> = omega^{ab}|a, b>.
StateVector graph_state(const Adjacency& adj);

enum class LocalOp { X, Z, F, FInverse };

/// X^power, Z^power, or power-fold F / F^-1. F|i> = q^(-1/2) sum_j omega^{ij}|j>.
struct LocalGate {
  LocalOp op;
  std::uint32_t power = 1;
};

StateVector apply_local(const StateVector& state, std::size_t qudit, LocalGate gate);

/// CZ^power between two distinct qudits.
StateVector apply_controlled_phase(const StateVector& state, std::size_t a, std::size_t b, std::uint32_t power);

/// omega^phase (x)_i X^{x_i} Z^{z_i}.
StateVector apply_pauli(const StateVector& state, const PauliProduct& pauli);

struct OperatorOutcome {
  StateVector state;
  /// Norm of the state right after the operator, before rescaling to 1.
  double normalization;
};

/// Replaces the last n* qudits: a basis label (i_1, ..., i_{n*}) becomes
/// Z^{-i_1} (x) ... (x) Z^{-i_{k*}} (x) X^{i_{k*+1}} (x) ... (x) X^{i_{n*}}
/// applied to the code state of `sub_code` (an [n*, k*] code), extended
/// linearly. The result is renormalized.
OperatorOutcome apply_O(const StateVector& state, std::size_t n_star, const LinearCode& sub_code);

/// apply_O(state_from_code(base), sub.n(), sub) after checking
/// 2 <= n* <= n - k.
StateVector first_level_state(const LinearCode& base, const LinearCode& sub);

struct ReducedDensity {
  std::vector<std::size_t> subset;  // sorted, 0-based
  Eigen::MatrixXcd matrix;
};

/// Partial trace over the complement of `subset` (sorted, distinct, 0-based).
ReducedDensity reduced_density(const StateVector& state, std::span<const std::size_t> subset);

/// max |rho - 1/dim| entrywise.
double deviation_from_maximally_mixed(const ReducedDensity& rho);

struct OracleUniformity {
  std::size_t k = 0;
  std::size_t subsets_checked = 0;
  /// Worst deviation seen for each subset size 1, 2, ... that was examined.
  std::vector<double> max_deviation_by_size;
};

/// Largest k with every reduction of size <= k maximally mixed within tol.
OracleUniformity uniformity_by_oracle(const StateVector& state, double tol = 1e-8);

/// Number of eigenvalues of rho_S above rel_tol times the largest.
std::size_t rank_of_reduction(const StateVector& state, std::span<const std::size_t> subset, double rel_tol = 1e-8);

/// Amplitudes with modulus above tol.
std::size_t support_count(const StateVector& state, double tol = 1e-9);

Amplitude inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>| >= 1 - tol for unit vectors.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol = 1e-8);

/// Max over generators of || S_i psi - psi ||_inf.
double max_stabilizer_residual(const StateVector& state, const StabilizerGroupDesc& group);

/// {"q", "n", "amplitudes": [[re, im], ...]} or, when sparse, [[index, re, im], ...]
/// for amplitudes above 1e-12 plus "sparse": true.
Json to_json(const StateVector& state, bool sparse = false);
StateVector state_from_json(const Json& j);

}  // namespace kuni
