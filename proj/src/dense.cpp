#include "kuni/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kuni/combinatorics.hpp"
#include "kuni/errors.hpp"

namespace kuni {

namespace {

std::size_t checked_dimension(std::uint32_t q, std::size_t n) {
  if (q < 2) throw InvalidInput("qudit dimension must be at least 2");
  const std::uint64_t dim = checked_power(q, n, kMaxAmplitudes);
  if (dim == 0) {
    throw ResourceLimit("state of " + std::to_string(n) + " qudits of dimension " + std::to_string(q) +
                        " exceeds the dense limit of 2^24 amplitudes");
  }
  return static_cast<std::size_t>(dim);
}

// Table of omega^j, omega = exp(2 pi i / q).
std::vector<Amplitude> roots_of_unity(std::uint32_t q) {
  std::vector<Amplitude> w(q);
  for (std::uint32_t j = 0; j < q; ++j) {
    w[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q));
  }
  return w;
}

void check_qudit(const StateVector& s, std::size_t qudit) {
  if (qudit >= s.n()) throw InvalidInput("qudit index " + std::to_string(qudit) + " out of range");
}

void check_subset(const StateVector& s, std::span<const std::size_t> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    check_qudit(s, subset[i]);
    if (i > 0 && subset[i] <= subset[i - 1]) throw InvalidInput("subset must be sorted and distinct");
  }
}

// Offsets sum_t digit_t * stride(qudits[t]) for every digit tuple over the
// given qudits, first qudit most significant.
std::vector<std::size_t> digit_offsets(const StateVector& s, std::span<const std::size_t> qudits) {
  std::vector<std::size_t> out{0};
  for (std::size_t qd : qudits) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * s.q());
    for (std::size_t base : out) {
      for (std::uint32_t d = 0; d < s.q(); ++d) next.push_back(base + d * s.stride(qd));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

StateVector::StateVector(std::size_t n, std::uint32_t q, std::vector<Amplitude> amplitudes)
    : n_(n), q_(q), amps_(std::move(amplitudes)) {
  const std::size_t dim = checked_dimension(q, n);
  if (amps_.size() != dim) {
    throw InvalidInput("expected " + std::to_string(dim) + " amplitudes, got " + std::to_string(amps_.size()));
  }
  strides_.assign(n, 1);
  for (std::size_t i = n; i-- > 1;) strides_[i - 1] = strides_[i] * q;
}

StateVector StateVector::basis(std::size_t n, std::uint32_t q, std::span<const std::uint32_t> digits) {
  if (digits.size() != n) throw InvalidInput("basis label length must equal n");
  std::vector<Amplitude> amps(checked_dimension(q, n));
  std::size_t index = 0;
  for (std::uint32_t d : digits) index = index * q + d % q;
  amps[index] = 1.0;
  return StateVector(n, q, std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw InvalidInput("cannot normalize the zero vector");
  std::vector<Amplitude> amps = amps_;
  for (Amplitude& a : amps) a /= nrm;
  return StateVector(n_, q_, std::move(amps));
}

StateVector state_from_code(const LinearCode& code) {
  const std::uint32_t q = code.field().modulus();
  std::vector<Amplitude> amps(checked_dimension(q, code.n()));
  const double amp = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(code.k()));
  for (const Codeword& c : enumerate_codewords(code)) {
    std::size_t index = 0;
    for (std::uint32_t s : c.symbols) index = index * q + s;
    amps[index] = amp;
  }
  return StateVector(code.n(), q, std::move(amps));
}

StateVector graph_state(const Adjacency& adj) {
  const std::uint32_t q = adj.field().modulus();
  const std::size_t dim = checked_dimension(q, adj.n());
  StateVector s(adj.n(), q, std::vector<Amplitude>(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
  for (std::size_t i = 0; i < adj.n(); ++i) {
    for (std::size_t j = i + 1; j < adj.n(); ++j) {
      if (adj.weight(i, j) != 0) s = apply_controlled_phase(s, i, j, adj.weight(i, j));
    }
  }
  return s;
}

StateVector apply_local(const StateVector& state, std::size_t qudit, LocalGate gate) {
  check_qudit(state, qudit);
  const std::uint32_t q = state.q();
  const std::size_t stride = state.stride(qudit);
  const auto& in = state.amplitudes();
  std::vector<Amplitude> out(in.size());
  const std::uint32_t power = gate.power % q;
  switch (gate.op) {
    case LocalOp::X:
      for (std::size_t i = 0; i < in.size(); ++i) {
        const std::uint32_t d = state.digit(i, qudit);
        const std::uint32_t nd = (d + power) % q;
        out[i + (static_cast<std::size_t>(nd) - d) * stride] = in[i];
      }
      return StateVector(state.n(), q, std::move(out));
    case LocalOp::Z: {
      const auto w = roots_of_unity(q);
      for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = in[i] * w[static_cast<std::uint64_t>(power) * state.digit(i, qudit) % q];
      }
      return StateVector(state.n(), q, std::move(out));
    }
    case LocalOp::F:
    case LocalOp::FInverse: {
      const auto w = roots_of_unity(q);
      const double scale = 1.0 / std::sqrt(static_cast<double>(q));
      const bool inverse = gate.op == LocalOp::FInverse;
      // F has order 4, so only power mod 4 matters.
      StateVector cur = state;
      for (std::uint32_t rep = 0; rep < gate.power % 4; ++rep) {
        const auto& src = cur.amplitudes();
        std::vector<Amplitude> dst(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
          if (src[i] == Amplitude{}) continue;
          const std::uint32_t d = cur.digit(i, qudit);
          const std::size_t base = i - d * stride;
          for (std::uint32_t j = 0; j < q; ++j) {
            std::uint64_t e = static_cast<std::uint64_t>(d) * j % q;
            if (inverse) e = (q - e) % q;
            dst[base + j * stride] += src[i] * w[e] * scale;
          }
        }
        cur = StateVector(cur.n(), q, std::move(dst));
      }
      return cur;
    }
  }
  throw InvalidInput("unknown local gate");
}

StateVector apply_controlled_phase(const StateVector& state, std::size_t a, std::size_t b, std::uint32_t power) {
  check_qudit(state, a);
  check_qudit(state, b);
  if (a == b) throw InvalidInput("controlled phase needs two distinct qudits");
  const std::uint32_t q = state.q();
  const auto w = roots_of_unity(q);
  std::vector<Amplitude> out = state.amplitudes();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t e = static_cast<std::uint64_t>(power % q) * state.digit(i, a) % q * state.digit(i, b) % q;
    out[i] *= w[e];
  }
  return StateVector(state.n(), q, std::move(out));
}

StateVector apply_pauli(const StateVector& state, const PauliProduct& pauli) {
  if (pauli.n() != state.n() || pauli.field().modulus() != state.q()) {
    throw InvalidInput("Pauli product does not match the state");
  }
  // X^x Z^z acts on a basis state as |d> -> omega^{z d} |d + x>.
  const std::uint32_t q = state.q();
  const auto w = roots_of_unity(q);
  const auto& in = state.amplitudes();
  std::vector<Amplitude> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    std::uint64_t e = pauli.phase();
    std::size_t target = 0;
    for (std::size_t t = 0; t < state.n(); ++t) {
      const std::uint32_t d = state.digit(i, t);
      e += static_cast<std::uint64_t>(pauli.z_exp()[t]) * d;
      target = target * q + (d + pauli.x_exp()[t]) % q;
    }
    out[target] = in[i] * w[e % q];
  }
  return StateVector(state.n(), q, std::move(out));
}

OperatorOutcome apply_O(const StateVector& state, std::size_t n_star, const LinearCode& sub_code) {
  const std::uint32_t q = state.q();
  if (sub_code.field().modulus() != q) throw FieldMismatch("sub-code field does not match the state");
  if (sub_code.n() != n_star) throw InvalidInput("sub-code length must equal n*");
  if (n_star < 2 || n_star > state.n()) throw InvalidInput("n* must satisfy 2 <= n* <= n");
  const std::size_t k_star = sub_code.k();
  const auto w = roots_of_unity(q);
  const auto words = enumerate_codewords(sub_code);
  const double amp = std::pow(static_cast<double>(q), -0.5 * static_cast<double>(k_star));

  // Basis labels of the last n* qudits are the low-order digits.
  const std::size_t block = state.stride(state.n() - n_star) * q;
  const auto& in = state.amplitudes();
  std::vector<Amplitude> out(in.size());
  std::vector<std::uint32_t> label(n_star);
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == Amplitude{}) continue;
    const std::size_t prefix = i - i % block;
    std::size_t rest = i % block;
    for (std::size_t t = n_star; t-- > 0;) {
      label[t] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    for (const Codeword& c : words) {
      // Z^{-l_t} on the first k* positions, X^{l_t} on the others.
      std::uint64_t e = 0;
      std::size_t sub_index = 0;
      for (std::size_t t = 0; t < n_star; ++t) {
        std::uint32_t sym = c.symbols[t];
        if (t < k_star) {
          e += static_cast<std::uint64_t>(q - label[t]) * sym;
        } else {
          sym = (sym + label[t]) % q;
        }
        sub_index = sub_index * q + sym;
      }
      out[prefix + sub_index] += in[i] * amp * w[e % q];
    }
  }
  StateVector raw(state.n(), q, std::move(out));
  const double nrm = raw.norm();
  return OperatorOutcome{raw.normalized(), nrm};
}

StateVector first_level_state(const LinearCode& base, const LinearCode& sub) {
  if (sub.field().modulus() != base.field().modulus()) throw FieldMismatch("codes over different fields");
  if (sub.n() < 2 || sub.n() > base.n() - base.k()) {
    throw InvalidInput("sub-code length must satisfy 2 <= n* <= n - k");
  }
  return apply_O(state_from_code(base), sub.n(), sub).state;
}

ReducedDensity reduced_density(const StateVector& state, std::span<const std::size_t> subset) {
  check_subset(state, subset);
  std::vector<std::size_t> keep(subset.begin(), subset.end());
  std::vector<std::size_t> traced;
  for (std::size_t t = 0; t < state.n(); ++t) {
    if (!std::binary_search(keep.begin(), keep.end(), t)) traced.push_back(t);
  }
  const auto row_off = digit_offsets(state, keep);
  const auto col_off = digit_offsets(state, traced);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(row_off.size()), static_cast<Eigen::Index>(col_off.size()));
  const auto& amps = state.amplitudes();
  for (std::size_t r = 0; r < row_off.size(); ++r) {
    for (std::size_t c = 0; c < col_off.size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = amps[row_off[r] + col_off[c]];
    }
  }
  return ReducedDensity{std::move(keep), m * m.adjoint()};
}

double deviation_from_maximally_mixed(const ReducedDensity& rho) {
  const auto dim = rho.matrix.rows();
  if (dim == 0) return 0.0;
  const Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return (rho.matrix - target).cwiseAbs().maxCoeff();
}

OracleUniformity uniformity_by_oracle(const StateVector& state, double tol) {
  OracleUniformity result;
  for (std::size_t size = 1; size <= state.n() / 2; ++size) {
    double worst = 0.0;
    for_each_combination(state.n(), size, [&](const std::vector<std::size_t>& subset) {
      ++result.subsets_checked;
      worst = std::max(worst, deviation_from_maximally_mixed(reduced_density(state, subset)));
      return true;
    });
    result.max_deviation_by_size.push_back(worst);
    if (worst > tol) break;
    result.k = size;
  }
  return result;
}

std::size_t rank_of_reduction(const StateVector& state, std::span<const std::size_t> subset, double rel_tol) {
  const ReducedDensity rho = reduced_density(state, subset);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  if (ev.size() == 0) return 0;
  const double top = ev.maxCoeff();
  if (top <= 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > rel_tol * top) ++rank;
  }
  return rank;
}

std::size_t support_count(const StateVector& state, double tol) {
  return static_cast<std::size_t>(std::count_if(state.amplitudes().begin(), state.amplitudes().end(),
                                                [tol](const Amplitude& a) { return std::abs(a) > tol; }));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n() || a.q() != b.q()) throw InvalidInput("states have different shapes");
  Amplitude s{};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return s;
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

double max_stabilizer_residual(const StateVector& state, const StabilizerGroupDesc& group) {
  double worst = 0.0;
  for (const PauliProduct& g : group.generators()) {
    const StateVector moved = apply_pauli(state, g);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
      worst = std::max(worst, std::abs(moved.amplitudes()[i] - state.amplitudes()[i]));
    }
  }
  return worst;
}

Json to_json(const StateVector& state, bool sparse) {
  Json j;
  j["q"] = state.q();
  j["n"] = state.n();
  Json amps = Json::array();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const Amplitude a = state.amplitudes()[i];
    if (sparse) {
      if (std::abs(a) > 1e-12) amps.push_back(Json::array({i, a.real(), a.imag()}));
    } else {
      amps.push_back(Json::array({a.real(), a.imag()}));
    }
  }
  if (sparse) j["sparse"] = true;
  j["amplitudes"] = std::move(amps);
  return j;
}

StateVector state_from_json(const Json& j) {
  try {
    const auto q = j.at("q").get<std::uint32_t>();
    const auto n = j.at("n").get<std::size_t>();
    const bool sparse = j.contains("sparse") && j.at("sparse").get<bool>();
    std::vector<Amplitude> amps(checked_dimension(q, n));
    const Json& list = j.at("amplitudes");
    if (!list.is_array()) throw InvalidInput("amplitudes must be an array");
    if (sparse) {
      for (const Json& e : list) {
        const auto idx = e.at(0).get<std::size_t>();
        if (idx >= amps.size()) throw InvalidInput("sparse amplitude index out of range");
        amps[idx] = Amplitude(e.at(1).get<double>(), e.at(2).get<double>());
      }
    } else {
      if (list.size() != amps.size()) throw InvalidInput("amplitude count does not match q^n");
      for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = Amplitude(list[i].at(0).get<double>(), list[i].at(1).get<double>());
      }
    }
    return StateVector(n, q, std::move(amps));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed state JSON: ") + e.what());
  }
}

}  // namespace kuni
