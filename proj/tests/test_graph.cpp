#include "doctest.h"

#include "kuni/errors.hpp"
#include "kuni/graph.hpp"

using namespace kuni;

namespace {

const PrimeField F5(5);

LinearCode code_6_2() { return LinearCode::from_a_matrix(MatrixGF(F5, {{1, 1, 1, 1}, {1, 2, 3, 4}})); }

HierarchySpec spec(std::vector<HierarchyLevel> levels) { return HierarchySpec{F5, std::move(levels)}; }

}  // namespace

TEST_CASE("adjacency validation") {
  CHECK_THROWS_AS(Adjacency(MatrixGF(F5, 2, 3)), InvalidInput);
  CHECK_THROWS_AS(Adjacency(MatrixGF(F5, {{0, 1}, {2, 0}})), InvalidInput);
  CHECK_THROWS_AS(Adjacency(MatrixGF(F5, {{1, 1}, {1, 0}})), InvalidInput);
  CHECK(Adjacency(MatrixGF(F5, {{0, 1}, {1, 0}})).edge_count() == 1);
}

TEST_CASE("bipartite adjacency stores -A") {
  const auto bell = bipartite_adjacency(LinearCode::from_a_matrix(MatrixGF(F5, {{1}})));
  CHECK(bell.gamma() == MatrixGF(F5, {{0, 4}, {4, 0}}));

  const auto g = bipartite_adjacency(code_6_2());
  const MatrixGF expected(F5, {{0, 0, 4, 4, 4, 4},
                               {0, 0, 4, 3, 2, 1},
                               {4, 4, 0, 0, 0, 0},
                               {4, 3, 0, 0, 0, 0},
                               {4, 2, 0, 0, 0, 0},
                               {4, 1, 0, 0, 0, 0}});
  CHECK(g.gamma() == expected);
  CHECK(g.gamma().is_symmetric());
  CHECK(g.edge_count() == 8);
}

TEST_CASE("general adjacency") {
  const auto code = code_6_2();
  CHECK(general_adjacency(code, MatrixGF(F5, 4, 4)) == bipartite_adjacency(code));

  const MatrixGF cycle(F5, {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
  const auto g = general_adjacency(code, cycle);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(g.weight(2 + i, 2 + j) == cycle(i, j));
  CHECK(g.edge_count() == 12);

  const auto bad_a = LinearCode::from_a_matrix(MatrixGF(F5, {{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(general_adjacency(bad_a, MatrixGF(F5, 2, 2)), InvalidInput);
  CHECK_THROWS_AS(general_adjacency(code, MatrixGF(F5, 3, 3)), InvalidInput);
  CHECK_THROWS_AS(general_adjacency(code, MatrixGF(F5, {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})),
                  InvalidInput);
  CHECK_THROWS_AS(general_adjacency(code, MatrixGF(F5, {{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}})),
                  InvalidInput);
}

TEST_CASE("hierarchy with one level is the bipartite graph") {
  CHECK(hierarchy_adjacency(spec({{6, 2}})) == bipartite_adjacency(code_6_2()));
}

TEST_CASE("hierarchy (6,2),(2,1) adds -1 in the last corner") {
  const auto g = hierarchy_adjacency(spec({{6, 2}, {2, 1}}));
  MatrixGF expected = bipartite_adjacency(code_6_2()).gamma();
  expected.set(4, 5, 4);
  expected.set(5, 4, 4);
  CHECK(g.gamma() == expected);
  CHECK(g.edge_count() == 9);
}

TEST_CASE("hierarchy (6,2),(3,1) embeds a star on the last three qudits") {
  const auto g = hierarchy_adjacency(spec({{6, 2}, {3, 1}}));
  MatrixGF expected = bipartite_adjacency(code_6_2()).gamma();
  for (std::size_t j : {4u, 5u}) {
    expected.set(3, j, 4);
    expected.set(j, 3, 4);
  }
  CHECK(g.gamma() == expected);
}

TEST_CASE("hierarchy equals general adjacency with the assembled B") {
  for (const auto& levels : std::vector<std::vector<HierarchyLevel>>{
           {{6, 2}, {2, 1}}, {{6, 2}, {3, 1}}, {{6, 2}, {4, 2}}, {{6, 2}, {4, 2}, {2, 1}}, {{6, 3}, {3, 1}}}) {
    const auto s = spec(levels);
    const auto codes = hierarchy_codes(s);
    CHECK(hierarchy_adjacency(s) == general_adjacency(codes[0], hierarchy_b_block(s)));
  }
}

TEST_CASE("each nontrivial level adds edges") {
  const std::vector<HierarchyLevel> levels{{6, 2}, {4, 2}, {2, 1}};
  std::size_t previous = 0;
  for (std::size_t l = 1; l <= levels.size(); ++l) {
    const std::size_t edges = hierarchy_adjacency(spec({levels.begin(), levels.begin() + l})).edge_count();
    CHECK(edges > previous);
    previous = edges;
  }
}

TEST_CASE("hierarchy constraint violations") {
  CHECK_THROWS_AS(hierarchy_adjacency(spec({})), InvalidInput);
  CHECK_THROWS_AS(hierarchy_adjacency(spec({{6, 4}})), InvalidInput);
  CHECK_THROWS_AS(hierarchy_adjacency(spec({{6, 2}, {5, 1}})), InvalidInput);
  CHECK_THROWS_AS(hierarchy_adjacency(spec({{6, 2}, {1, 1}})), InvalidInput);
  CHECK_THROWS_AS(hierarchy_adjacency(spec({{6, 2}, {4, 2}, {3, 1}})), InvalidInput);
  CHECK_THROWS_AS(hierarchy_adjacency(HierarchySpec{PrimeField(2), {{5, 2}}}), InvalidInput);
  HierarchySpec relaxed{F5, {{4, 3}}, false};
  CHECK(hierarchy_adjacency(relaxed).n() == 4);
}

TEST_CASE("level list parsing") {
  CHECK(parse_levels("6:2,2:1") == std::vector<HierarchyLevel>{{6, 2}, {2, 1}});
  CHECK(format_levels({{6, 2}, {3, 1}}) == "6:2,3:1");
  for (const char* bad : {"", "6", "6:", ":2", "6:2,", "6:2;2:1", "a:b", "6:-2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_levels(bad), InvalidInput);
  }
}

TEST_CASE("DOT export") {
  const auto bell = bipartite_adjacency(LinearCode::from_a_matrix(MatrixGF(F5, {{1}})));
  const std::string dot = export_dot(bell);
  CHECK(dot.find("1 -- 2 [label=4]") != std::string::npos);
  CHECK(dot.find("2 -- 1") == std::string::npos);

  const std::string empty = export_dot(Adjacency(MatrixGF(F5, 3, 3)));
  CHECK(empty.find("--") == std::string::npos);
  CHECK(empty.find("  3;") != std::string::npos);

  const auto g = hierarchy_adjacency(spec({{6, 2}, {2, 1}}));
  const std::string text = export_dot(g);
  std::size_t edges = 0;
  for (std::size_t pos = text.find("--"); pos != std::string::npos; pos = text.find("--", pos + 2)) ++edges;
  CHECK(edges == g.edge_count());
}

TEST_CASE("seeded random B is valid and reproducible") {
  const auto b1 = random_symmetric_zero_diagonal(F5, 4, 42);
  const auto b2 = random_symmetric_zero_diagonal(F5, 4, 42);
  CHECK(b1 == b2);
  CHECK(b1.is_symmetric());
  for (std::size_t i = 0; i < 4; ++i) CHECK(b1(i, i) == 0);
  bool any_diff = false;
  for (std::uint64_t s = 0; s < 8 && !any_diff; ++s) any_diff = random_symmetric_zero_diagonal(F5, 4, s) != b1;
  CHECK(any_diff);
}

TEST_CASE("adjacency JSON round trip") {
  const auto g = hierarchy_adjacency(spec({{6, 2}, {2, 1}}));
  const Json j = to_json(g);
  CHECK(j.at("p") == 5);
  CHECK(j.at("n") == 6);
  CHECK(adjacency_from_json(j) == g);
  CHECK_THROWS_AS(adjacency_from_json(Json::parse(R"({"p":5,"n":2,"gamma":[[0,1],[2,0]]})")), InvalidInput);
  CHECK_THROWS_AS(adjacency_from_json(Json::parse(R"({"p":5,"n":3,"gamma":[[0,1],[1,0]]})")), InvalidInput);
}
