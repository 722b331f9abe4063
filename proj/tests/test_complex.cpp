#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "zzhg/complex.hpp"

using namespace zzhg;

namespace {

bool face_closed(const SimplicialComplex& k) {
  for (const Simplex& s : k.simplices()) {
    if (s.size() == 1) continue;
    Simplex facet(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      facet.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) facet.push_back(s[i]);
      if (!k.contains(facet)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("associated_asc") {
  Hypergraph h;
  h.vertices = {"A", "B", "C"};
  h.edges = {{"e", {"A", "B", "C"}}};
  VertexTable table(h.vertices);

  SECTION("unbounded power set of a 3-edge") {
    SimplicialComplex k = associated_asc(h, table, std::nullopt);
    REQUIRE(k.size() == 7);
    CHECK(k.contains({0, 1, 2}));
    CHECK(face_closed(k));
  }

  SECTION("cap 2 drops the filled triangle") {
    SimplicialComplex k = associated_asc(h, table, 2);
    REQUIRE(k.size() == 6);
    CHECK_FALSE(k.contains({0, 1, 2}));
  }

  SECTION("empty hypergraph gives the empty complex") {
    Hypergraph none;
    SimplicialComplex k = associated_asc(none, table, 3);
    CHECK(k.empty());
  }

  SECTION("toy first snapshot: triangle plus point") {
    Hypergraph h0;
    h0.vertices = {"A", "B", "C", "D"};
    h0.edges = {{"E2", {"D"}}, {"E4", {"A", "B", "C"}}};
    VertexTable t0(h0.vertices);
    SimplicialComplex k = associated_asc(h0, t0, 3);
    CHECK(k.size() == 8);  // 7 from the triangle + the isolated vertex
    CHECK(k.contains({0, 1, 2}));
    CHECK(k.contains({3}));
    CHECK(face_closed(k));
  }
}

TEST_CASE("union and intersection") {
  auto k1 = SimplicialComplex::closure({{0}, {1}, {0, 1}}, std::nullopt);
  auto k2 = SimplicialComplex::closure({{1}, {2}}, std::nullopt);

  SECTION("union merges vertex sets") {
    SimplicialComplex u = union_of(SimplicialComplex::closure({{0}, {1}}, std::nullopt), k2);
    CHECK(u.size() == 3);
  }

  SECTION("idempotence") {
    CHECK(union_of(k1, k1) == k1);
    CHECK(intersection_of(k1, k1) == k1);
  }

  SECTION("disjoint intersection is empty") {
    auto a = SimplicialComplex::closure({{0}}, std::nullopt);
    auto b = SimplicialComplex::closure({{5}}, std::nullopt);
    CHECK(intersection_of(a, b).empty());
  }

  SECTION("membership-wise intersection") {
    SimplicialComplex i = intersection_of(k1, SimplicialComplex::closure({{0}, {1}}, std::nullopt));
    REQUIRE(i.size() == 2);
    CHECK(i.contains({0}));
    CHECK(i.contains({1}));
    CHECK_FALSE(i.contains({0, 1}));
  }

  SECTION("mismatched caps are rejected") {
    auto capped = SimplicialComplex::closure({{0, 1}}, 2);
    CHECK_THROWS_AS(union_of(k1, capped), std::invalid_argument);
    CHECK_THROWS_AS(intersection_of(k1, capped), std::invalid_argument);
  }

  SECTION("commutative, associative, face-closed on random complexes") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      SimplicialComplex a = oracle::random_complex(rng, 8, 4);
      SimplicialComplex b = oracle::random_complex(rng, 8, 4);
      SimplicialComplex c = oracle::random_complex(rng, 8, 4);
      CHECK(union_of(a, b) == union_of(b, a));
      CHECK(intersection_of(a, b) == intersection_of(b, a));
      CHECK(union_of(union_of(a, b), c) == union_of(a, union_of(b, c)));
      CHECK(intersection_of(intersection_of(a, b), c) ==
            intersection_of(a, intersection_of(b, c)));
      CHECK(face_closed(union_of(a, b)));
      CHECK(face_closed(intersection_of(a, b)));
    }
  }
}

TEST_CASE("subsimplex_count") {
  CHECK(subsimplex_count(3, std::nullopt) == 7);
  CHECK(subsimplex_count(3, 2) == 6);       // C(3,1) + C(3,2)
  CHECK(subsimplex_count(5, 3) == 25);      // C(5,1) + C(5,2) + C(5,3)
  CHECK(subsimplex_count(1, std::nullopt) == 1);
  CHECK_THROWS_AS(subsimplex_count(0, std::nullopt), std::invalid_argument);

  SECTION("matches enumeration and the single-edge complex size") {
    for (int m = 1; m <= 10; ++m) {
      Simplex edge;
      for (int v = 0; v < m; ++v) edge.push_back(static_cast<Vertex>(v));
      for (int cap = 1; cap <= m; ++cap) {
        std::uint64_t expect = oracle::count_subsets(m, cap);
        CHECK(subsimplex_count(m, cap) == expect);
        CHECK(SimplicialComplex::closure({edge}, cap).size() == expect);
      }
      std::uint64_t unbounded = oracle::count_subsets(m, std::nullopt);
      CHECK(subsimplex_count(m, std::nullopt) == unbounded);
      CHECK(SimplicialComplex::closure({edge}, std::nullopt).size() == unbounded);
    }
  }
}

TEST_CASE("associated_asc properties") {
  std::mt19937 rng(31);

  SECTION("monotone in the edge family") {
    for (int trial = 0; trial < 25; ++trial) {
      TemporalHypergraph thg = oracle::random_thg(rng);
      Hypergraph full = static_projection(thg);
      Hypergraph sub = full;
      while (sub.edges.size() > 1 && rng() % 2) sub.edges.pop_back();
      VertexTable table(full.vertices);
      CHECK(associated_asc(full, table, 4).includes(associated_asc(sub, table, 4)));
    }
  }

  SECTION("cap equals restriction of the unbounded complex") {
    for (int trial = 0; trial < 25; ++trial) {
      TemporalHypergraph thg = oracle::random_thg(rng);
      Hypergraph h = static_projection(thg);
      VertexTable table(h.vertices);
      int cap = 1 + static_cast<int>(rng() % 4);
      SimplicialComplex capped = associated_asc(h, table, cap);
      SimplicialComplex unbounded = associated_asc(h, table, std::nullopt);
      std::vector<Simplex> restricted;
      for (const Simplex& s : unbounded.simplices())
        if (static_cast<int>(s.size()) <= cap) restricted.push_back(s);
      CHECK(capped.simplices() == restricted);
      CHECK(face_closed(capped));
    }
  }
}
