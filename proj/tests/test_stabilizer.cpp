#include "doctest.h"

#include <random>

#include "kuni/errors.hpp"
#include "kuni/stabilizer.hpp"

using namespace kuni;

namespace {

const PrimeField F5(5);

LinearCode code_6_2() { return LinearCode::from_a_matrix(MatrixGF(F5, {{1, 1, 1, 1}, {1, 2, 3, 4}})); }

Adjacency bell() { return bipartite_adjacency(LinearCode::from_a_matrix(MatrixGF(F5, {{1}}))); }

// Walks every w in Z_q^n (including zero) in lexicographic order.
template <typename Fn>
void for_each_vector(std::size_t n, std::uint32_t q, Fn&& fn) {
  std::vector<std::uint32_t> w(n, 0);
  while (true) {
    fn(w);
    std::size_t i = n;
    while (i > 0 && ++w[i - 1] == q) w[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace

TEST_CASE("Pauli product algebra") {
  const PauliProduct x(F5, 0, {1}, {0});
  const PauliProduct z(F5, 0, {0}, {1});
  // Z X = omega X Z.
  const PauliProduct zx = z * x;
  CHECK(zx.x_exp() == std::vector<std::uint32_t>{1});
  CHECK(zx.z_exp() == std::vector<std::uint32_t>{1});
  CHECK(zx.phase() == 1);
  CHECK((x * z).phase() == 0);
  CHECK(x.pow(5).is_identity());
  CHECK(x.pow(5).phase() == 0);
  // (XZ)^5 = omega^{10} I = I over GF(5).
  CHECK((x * z).pow(5).is_identity());
  CHECK(PauliProduct(F5, 3).is_identity());
  CHECK(PauliProduct(F5, 0, {1, 0, 0}, {0, 0, 2}).weight() == 2);
  CHECK(symplectic_product(x, z) == 1);
  CHECK(symplectic_product(z, x) == 4);
  CHECK(symplectic_product(x, x) == 0);
  CHECK_THROWS_AS(PauliProduct(F5, 0, {1, 0}, {0}), InvalidInput);
}

TEST_CASE("group description validation") {
  const PauliProduct x(F5, 0, {1}, {0});
  const PauliProduct z(F5, 0, {0}, {1});
  CHECK_NOTHROW(StabilizerGroupDesc(F5, {x}));
  const PauliProduct x1(F5, 0, {1, 0}, {0, 0}), z1(F5, 0, {0, 0}, {1, 0}), x2(F5, 0, {0, 1}, {0, 0});
  CHECK_THROWS_AS(StabilizerGroupDesc(F5, {x1, z1}), InvalidInput);  // do not commute
  CHECK_THROWS_AS(StabilizerGroupDesc(F5, {x1, x1}), InvalidInput);  // dependent
  CHECK_THROWS_AS(StabilizerGroupDesc(F5, {x1}), InvalidInput);      // too few
  CHECK_NOTHROW(StabilizerGroupDesc(F5, {x1, x2}));
}

TEST_CASE("graph generators read off the adjacency rows") {
  const auto gens = graph_generators(bell()).generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == PauliProduct(F5, 0, {1, 0}, {0, 4}));
  CHECK(gens[1] == PauliProduct(F5, 0, {0, 1}, {4, 0}));

  const auto empty = graph_generators(Adjacency(MatrixGF(F5, 3, 3))).generators();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(empty[i].weight() == 1);
    CHECK(empty[i].x_exp()[i] == 1);
  }

  const auto g = bipartite_adjacency(code_6_2());
  const auto six = graph_generators(g).generators();
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(six[i].z_exp()[j] == g.weight(i, j));
}

TEST_CASE("support weight matches the weight of the group element") {
  const auto adj = hierarchy_adjacency(HierarchySpec{F5, {{6, 2}, {2, 1}}});
  const auto group = graph_generators(adj);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint32_t> w(6);
    for (auto& x : w) x = static_cast<std::uint32_t>(rng() % 5);
    CHECK(support_weight(w, adj) == group.element(w).weight());
  }
  const std::vector<std::uint32_t> zero(6, 0), e1{1, 0, 0, 0, 0, 0};
  CHECK(support_weight(zero, adj) == 0);
  CHECK(support_weight(e1, bipartite_adjacency(code_6_2())) == 5);
  const std::vector<std::uint32_t> b10{1, 0};
  CHECK(support_weight(b10, bell()) == 2);
}

TEST_CASE("uniformity of reference graphs") {
  const auto r = uniformity_index(bipartite_adjacency(code_6_2()));
  CHECK(r.k == 2);
  CHECK(r.min_weight == 3);
  CHECK(support_weight(r.witness, bipartite_adjacency(code_6_2())) == 3);
  CHECK(uniformity_index(Adjacency(MatrixGF(F5, 4, 4))).k == 0);
  const auto ame = bipartite_adjacency(LinearCode::from_a_matrix(mds_a_matrix(F5, 2, 3)));
  CHECK(uniformity_index(ame).k == 2);
  CHECK(uniformity_index(bell()).k == 1);
}

TEST_CASE("sweep result does not depend on the thread count") {
  const auto adj = general_adjacency(code_6_2(), random_symmetric_zero_diagonal(F5, 4, 3));
  const auto one = uniformity_index(adj, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto many = uniformity_index(adj, t);
    CHECK(many.k == one.k);
    CHECK(many.witness == one.witness);
  }
}

TEST_CASE("witness is the lexicographically first minimum") {
  const auto adj = hierarchy_adjacency(HierarchySpec{F5, {{6, 2}, {3, 1}}});
  const auto r = uniformity_index(adj);
  std::vector<std::uint32_t> first;
  std::size_t best = 7;
  for_each_vector(6, 5, [&](const std::vector<std::uint32_t>& w) {
    const std::size_t wt = support_weight(w, adj);
    if (wt > 0 && wt < best) {
      best = wt;
      first = w;
    }
  });
  CHECK(r.min_weight == best);
  CHECK(r.witness == first);
}

TEST_CASE("low-weight search and the general-adjacency check") {
  const auto code = code_6_2();
  CHECK_FALSE(find_low_weight_element(bipartite_adjacency(code), 2).has_value());
  CHECK(find_low_weight_element(bipartite_adjacency(code), 3).has_value());
  CHECK(verify_theorem1(code, MatrixGF(F5, 4, 4)));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(verify_theorem1(code, random_symmetric_zero_diagonal(F5, 4, rng())));
  }
  const auto bad = LinearCode::from_a_matrix(MatrixGF(F5, {{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(verify_theorem1(bad, MatrixGF(F5, 2, 2)), InvalidInput);
}

TEST_CASE("two-case weight bound for the bipartite [6,2] graph, exhaustively") {
  // Nonzero w always has weight >= k + 1; with both leading components
  // nonzero it has weight >= n - k + 1.
  const auto adj = bipartite_adjacency(code_6_2());
  std::size_t checked = 0;
  for_each_vector(6, 5, [&](const std::vector<std::uint32_t>& w) {
    const bool nonzero = std::any_of(w.begin(), w.end(), [](std::uint32_t x) { return x != 0; });
    if (!nonzero) return;
    const std::size_t wt = support_weight(w, adj);
    CHECK(wt >= 3);
    if (w[0] != 0 && w[1] != 0) CHECK(wt >= 5);
    ++checked;
  });
  CHECK(checked == 15624);
}

TEST_CASE("sweep guard") {
  const PrimeField f(11);
  CHECK_THROWS_AS(uniformity_index(Adjacency(MatrixGF(f, 8, 8))), ResourceLimit);
}

TEST_CASE("Pauli JSON") {
  CHECK(to_json(PauliProduct(F5, 2, {1, 0}, {0, 4})).dump() == R"({"phase":2,"x":[1,0],"z":[0,4]})");
}
