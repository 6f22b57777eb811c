#include "kuni/stabilizer.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>

#include "kuni/combinatorics.hpp"
#include "kuni/errors.hpp"

namespace kuni {

PauliProduct::PauliProduct(const PrimeField& field, std::size_t n)
    : field_(field), phase_(0), x_(n, 0), z_(n, 0) {}

PauliProduct::PauliProduct(const PrimeField& field, std::uint32_t phase, std::vector<std::uint32_t> x_exp,
                           std::vector<std::uint32_t> z_exp)
    : field_(field), phase_(field.reduce(phase)), x_(std::move(x_exp)), z_(std::move(z_exp)) {
  if (x_.size() != z_.size()) throw InvalidInput("X and Z exponent vectors differ in length");
  for (auto& v : x_) v = field_.reduce(v);
  for (auto& v : z_) v = field_.reduce(v);
}

bool PauliProduct::is_identity() const {
  return std::all_of(x_.begin(), x_.end(), [](auto v) { return v == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto v) { return v == 0; });
}

std::size_t PauliProduct::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n(); ++i)
    if (x_[i] != 0 || z_[i] != 0) ++w;
  return w;
}

PauliProduct PauliProduct::operator*(const PauliProduct& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("Pauli products over different fields");
  if (n() != rhs.n()) throw InvalidInput("Pauli products on different qudit counts");
  PauliProduct out(field_, n());
  std::uint32_t phase = field_.add(phase_, rhs.phase_);
  for (std::size_t i = 0; i < n(); ++i) {
    // X^a Z^b X^c Z^d = omega^{bc} X^{a+c} Z^{b+d}
    phase = field_.add(phase, field_.mul(z_[i], rhs.x_[i]));
    out.x_[i] = field_.add(x_[i], rhs.x_[i]);
    out.z_[i] = field_.add(z_[i], rhs.z_[i]);
  }
  out.phase_ = phase;
  return out;
}

PauliProduct PauliProduct::pow(std::uint64_t e) const {
  PauliProduct result(field_, n());
  PauliProduct base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::uint32_t symplectic_product(const PauliProduct& a, const PauliProduct& b) {
  if (a.field() != b.field() || a.n() != b.n()) throw InvalidInput("incompatible Pauli products");
  const auto& f = a.field();
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    s = f.add(s, f.mul(a.x_exp()[i], b.z_exp()[i]));
    s = f.sub(s, f.mul(a.z_exp()[i], b.x_exp()[i]));
  }
  return s;
}

StabilizerGroupDesc::StabilizerGroupDesc(const PrimeField& field, std::vector<PauliProduct> generators)
    : field_(field), generators_(std::move(generators)) {
  const std::size_t n = generators_.size();
  for (const auto& g : generators_) {
    if (g.field() != field_) throw FieldMismatch("generator from another field");
    if (g.n() != n) throw InvalidInput("need exactly n generators on n qudits");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (symplectic_product(generators_[i], generators_[j]) != 0) {
        throw InvalidInput("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not commute");
      }
  MatrixGF sym(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      sym.set(i, j, static_cast<std::int64_t>(generators_[i].x_exp()[j]));
      sym.set(i, n + j, static_cast<std::int64_t>(generators_[i].z_exp()[j]));
    }
  if (rank(sym) != n) throw InvalidInput("generators are not independent");
}

PauliProduct StabilizerGroupDesc::element(std::span<const std::uint32_t> w) const {
  if (w.size() != n()) throw InvalidInput("exponent vector length differs from n");
  PauliProduct acc(field_, n());
  for (std::size_t i = 0; i < n(); ++i) acc = acc * generators_[i].pow(w[i]);
  return acc;
}

StabilizerGroupDesc graph_generators(const Adjacency& adj) {
  const std::size_t n = adj.n();
  std::vector<PauliProduct> gens;
  gens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> x(n, 0);
    x[i] = 1;
    const auto row = adj.gamma().row(i);
    gens.emplace_back(adj.field(), 0, std::move(x), std::vector<std::uint32_t>(row.begin(), row.end()));
  }
  return StabilizerGroupDesc(adj.field(), std::move(gens));
}

std::size_t support_weight(std::span<const std::uint32_t> w, const Adjacency& adj) {
  if (w.size() != adj.n()) throw InvalidInput("exponent vector length differs from n");
  const auto& f = adj.field();
  std::size_t weight = 0;
  for (std::size_t i = 0; i < adj.n(); ++i) {
    if (f.reduce(w[i]) != 0) {
      ++weight;
      continue;
    }
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < adj.n(); ++j) acc += static_cast<std::uint64_t>(adj.weight(i, j)) * f.reduce(w[j]);
    if (acc % f.modulus() != 0) ++weight;
  }
  return weight;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("KUNI_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::uint64_t guarded_sweep_size(const Adjacency& adj) {
  const auto total = checked_power(adj.field().modulus(), adj.n(), kMaxStabilizerSweep);
  if (total == 0) throw ResourceLimit("q^n exceeds the 2^26 stabilizer sweep guard");
  return total;
}

struct SweepBest {
  std::size_t weight;
  std::vector<std::uint32_t> w;
  bool found = false;
};

// Walks every w whose leading symbol equals `lead` in lexicographic order,
// maintaining Gamma w incrementally. Stops as soon as a weight <= stop_at is
// seen; otherwise records the first minimum.
SweepBest sweep_leading(const Adjacency& adj, std::uint32_t lead, std::size_t stop_at) {
  const auto& f = adj.field();
  const std::size_t n = adj.n();
  const std::uint32_t q = f.modulus();
  std::vector<std::uint32_t> w(n, 0);
  std::vector<std::uint32_t> gw(n, 0);
  w[0] = lead;
  for (std::size_t i = 0; i < n; ++i) gw[i] = f.mul(adj.weight(i, 0), lead);

  std::uint64_t inner = 1;
  for (std::size_t i = 1; i < n; ++i) inner *= q;

  SweepBest best{n + 1, {}, false};
  for (std::uint64_t step = 0; step < inner; ++step) {
    if (lead != 0 || step != 0) {
      std::size_t weight = 0;
      for (std::size_t i = 0; i < n; ++i) weight += (w[i] != 0 || gw[i] != 0) ? 1 : 0;
      if (weight < best.weight) {
        best = {weight, w, true};
        if (weight <= stop_at) return best;
      }
    }
    for (std::size_t d = n; d-- > 1;) {
      w[d] = w[d] + 1 == q ? 0 : w[d] + 1;
      for (std::size_t i = 0; i < n; ++i) gw[i] = f.add(gw[i], adj.weight(i, d));
      if (w[d] != 0) break;
    }
  }
  return best;
}

SweepBest sweep(const Adjacency& adj, std::size_t stop_at, unsigned threads) {
  guarded_sweep_size(adj);
  const std::uint32_t q = adj.field().modulus();
  if (adj.n() == 0) return {0, {}, false};
  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, q);

  std::vector<SweepBest> per_lead(q);
  if (threads <= 1) {
    for (std::uint32_t lead = 0; lead < q; ++lead) {
      per_lead[lead] = sweep_leading(adj, lead, stop_at);
      if (per_lead[lead].found && per_lead[lead].weight <= stop_at) break;
    }
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::uint32_t lead = t; lead < q; lead += threads) per_lead[lead] = sweep_leading(adj, lead, stop_at);
      }));
    }
    for (auto& j : jobs) j.get();
  }
  // Combine in leading-symbol order so ties resolve to the lexicographically
  // first vector.
  SweepBest best{adj.n() + 1, {}, false};
  for (const auto& r : per_lead) {
    if (r.found && r.weight < best.weight) best = r;
    if (best.found && best.weight <= stop_at) break;
  }
  return best;
}

}  // namespace

UniformityResult uniformity_index(const Adjacency& adj, unsigned threads) {
  const auto best = sweep(adj, 0, threads);
  if (!best.found) return {0, 0, {}};
  return {best.weight - 1, best.weight, best.w};
}

std::optional<std::vector<std::uint32_t>> find_low_weight_element(const Adjacency& adj, std::size_t max_weight) {
  // Single-threaded so that "first" is well defined without finishing the
  // sweep of later leading symbols.
  const auto best = sweep(adj, max_weight, 1);
  if (best.found && best.weight <= max_weight) return best.w;
  return std::nullopt;
}

bool verify_theorem1(const LinearCode& code, const MatrixGF& b) {
  const auto adj = general_adjacency(code, b);
  return !find_low_weight_element(adj, code.k()).has_value();
}

Json to_json(const PauliProduct& p) {
  Json j;
  j["phase"] = p.phase();
  j["x"] = p.x_exp();
  j["z"] = p.z_exp();
  return j;
}

}  // namespace kuni
