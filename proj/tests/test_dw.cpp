#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qcone/dw_faces.hpp"

using namespace qcone;

namespace {

using Parts = std::vector<DimensionVector>;

Parts part_sets(const std::vector<DecompositionSet>& sets, std::size_t i) { return sets.at(i).parts; }

struct Instance {
  Quiver q;
  DimensionVector beta;
};

std::vector<Instance> instances() {
  return {{linear_quiver(2), {1, 1}},    {kronecker_quiver(2), {1, 1}}, {kronecker_quiver(2), {2, 2}},
          {linear_quiver(3), {1, 1, 1}}, {kronecker_quiver(3), {1, 1}}, {linear_quiver(3), {1, 2, 1}},
          {kronecker_quiver(2), {2, 1}}};
}

}  // namespace

TEST_CASE("enumerate_ordered_decompositions examples") {
  auto two = enumerate_ordered_decompositions({1, 1}, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].parts() == Parts{{0, 1}, {1, 0}});
  CHECK(two[1].parts() == Parts{{1, 0}, {0, 1}});

  auto one = enumerate_ordered_decompositions({1, 1}, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == Parts{{1, 1}});

  CHECK(enumerate_ordered_decompositions({1, 0}, 2).empty());
  CHECK_THROWS_AS(enumerate_ordered_decompositions({3, 3}, 2, 5), Error);
  CHECK_THROWS_AS(enumerate_ordered_decompositions({1, 1}, 0), Error);
}

TEST_CASE("ordered decomposition counts match a product of compositions") {
  // sequences of s vectors summing to beta, zero parts allowed, number
  // prod_x C(beta_x + s - 1, s - 1); inclusion-exclusion removes zero parts
  auto binom = [](std::int64_t n, std::int64_t k) {
    std::int64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
  };
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::int64_t> e(1 + rng() % 3);
    for (auto& x : e) x = static_cast<std::int64_t>(rng() % 4);
    DimensionVector beta(e);
    if (beta.is_zero()) continue;
    for (std::int64_t s = 1; s <= 3; ++s) {
      std::int64_t expected = 0;
      for (std::int64_t j = 0; j <= s; ++j) {
        std::int64_t with = 1;
        for (auto x : e) with *= binom(x + s - j - 1, s - j - 1);
        if (s - j == 0) with = 0;
        expected += (j % 2 ? -1 : 1) * binom(s, j) * with;
      }
      auto got = enumerate_ordered_decompositions(beta, static_cast<std::size_t>(s));
      CHECK(static_cast<std::int64_t>(got.size()) == expected);
      CHECK(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) { return a.parts() < b.parts(); }));
    }
  }
}

TEST_CASE("is_well_covering examples") {
  GenericCalculus a2(linear_quiver(2));
  CHECK(is_well_covering(a2, OrderedDecomposition({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_well_covering(a2, OrderedDecomposition({{1, 0}, {0, 1}})));
  CHECK(is_well_covering(a2, OrderedDecomposition({{1, 1}})));

  GenericCalculus k2(kronecker_quiver(2));
  auto obstruction = well_covering_obstruction(k2, OrderedDecomposition({{1, 1}, {1, 1}}));
  REQUIRE(obstruction.has_value());
  CHECK(obstruction->count.count == 2);
}

TEST_CASE("wcal_s examples") {
  GenericCalculus a2(linear_quiver(2));
  auto w = wcal_s(a2, {1, 1}, 2);
  REQUIRE(w.size() == 1);
  CHECK(w[0].parts == Parts{{0, 1}, {1, 0}});
  REQUIRE(w[0].certificate.has_value());
  CHECK(w[0].certificate->parts() == Parts{{0, 1}, {1, 0}});

  GenericCalculus k2(kronecker_quiver(2));
  std::vector<Rejection> rejected;
  auto k = wcal_s(k2, {2, 2}, 2, {}, kDefaultDecompositionBudget, &rejected);
  REQUIRE(k.size() == 1);
  CHECK(part_sets(k, 0) == Parts{{0, 2}, {2, 0}});
  CHECK(k[0].certificate->parts() == Parts{{0, 2}, {2, 0}});
  bool saw_pair = false;
  for (const auto& r : rejected) {
    if (r.decomposition.parts() == Parts{{1, 1}, {1, 1}}) {
      saw_pair = true;
      CHECK(r.count.count == 2);
    }
  }
  CHECK(saw_pair);

  for (const auto& inst : instances()) {
    GenericCalculus calc(inst.q);
    if (!calc.is_rational_schur_root(inst.beta)) continue;
    auto one = wcal_s(calc, inst.beta, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].parts == Parts{inst.beta});
  }
}

TEST_CASE("theta and face_of_decomposition examples") {
  GenericCalculus a2(linear_quiver(2));
  auto sigma = build_sigma_hrep(a2, {1, 1});
  auto whole = theta(DecompositionSet{{{1, 1}}, std::nullopt}, sigma);
  CHECK(whole.codim == 1);
  CHECK(whole.active.empty());
  auto apex = theta(DecompositionSet{{{0, 1}, {1, 0}}, std::nullopt}, sigma);
  CHECK(apex.codim == 2);
  CHECK(apex.dim == 0);

  CHECK(face_of_decomposition(a2, OrderedDecomposition({{0, 1}, {1, 0}}), sigma).dim == 0);
  CHECK(face_of_decomposition(a2, OrderedDecomposition({{1, 1}}), sigma) == whole);
  try {
    face_of_decomposition(a2, OrderedDecomposition({{1, 0}, {0, 1}}), sigma);
    FAIL("expected NotWellCovering");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotWellCovering);
  }

  GenericCalculus k2(kronecker_quiver(2));
  auto k22 = build_sigma_hrep(k2, {2, 2});
  CHECK(theta(DecompositionSet{{{0, 2}, {2, 0}}, std::nullopt}, k22).dim == 0);
  auto k11 = build_sigma_hrep(k2, {1, 1});
  CHECK(face_of_decomposition(k2, OrderedDecomposition({{0, 1}, {1, 0}}), k11).dim == 0);
}

TEST_CASE("verify_dw examples") {
  auto a2 = verify_dw(linear_quiver(2), {1, 1}, 2);
  CHECK(a2.overall() == Verdict::Holds);
  REQUIRE(a2.levels.size() == 2);
  CHECK(a2.levels[0].sets.size() == 1);
  CHECK(a2.levels[0].faces.size() == 1);
  CHECK(a2.levels[1].sets.size() == 1);
  CHECK(a2.levels[1].sets[0].parts == Parts{{0, 1}, {1, 0}});

  auto k22 = verify_dw(kronecker_quiver(2), {2, 2}, 2);
  CHECK(k22.overall() == Verdict::Holds);
  CHECK(k22.levels[1].sets.size() == 1);
  CHECK(k22.levels[1].sets[0].parts == Parts{{0, 2}, {2, 0}});

  auto k11 = verify_dw(kronecker_quiver(2), {1, 1}, 2);
  CHECK(k11.overall() == Verdict::Holds);
  CHECK(k11.levels[1].sets[0].parts == Parts{{0, 1}, {1, 0}});

  CHECK_THROWS_AS(verify_dw(linear_quiver(2), {5, 1}, 2), Error);
}

TEST_CASE("codimension, independence and distinctness on the verified instances") {
  for (const auto& inst : instances()) {
    auto report = verify_dw(inst.q, inst.beta, inst.q.num_vertices());
    for (const auto& level : report.levels) {
      for (std::size_t k = 0; k < level.sets.size(); ++k) {
        const auto& set = level.sets[k];
        CHECK(set.parts.size() == level.s);
        CHECK_MESSAGE(level.images[k].face.codim == level.s, to_string(inst.beta));
        std::vector<IntVector> rows;
        for (const auto& p : set.parts) rows.push_back(to_int_vector(p));
        CHECK(rank(rows, inst.q.num_vertices()) == level.s);
        CHECK(std::adjacent_find(set.parts.begin(), set.parts.end()) == set.parts.end());
      }
    }
  }
}

TEST_CASE("face_of_decomposition is independent of the certifying order") {
  for (const auto& inst : instances()) {
    GenericCalculus calc(inst.q);
    auto sigma = build_sigma_hrep(calc, inst.beta);
    for (std::size_t s = 1; s <= inst.q.num_vertices(); ++s) {
      for (const auto& set : wcal_s(calc, inst.beta, s)) {
        auto expected = theta(set, sigma);
        auto order = set.parts;
        do {
          OrderedDecomposition d(order);
          if (is_well_covering(calc, d)) CHECK(face_of_decomposition(calc, d, sigma) == expected);
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
}

TEST_CASE("mu is nonpositive on rays of Sigma and vanishes exactly on theta") {
  for (const auto& inst : instances()) {
    GenericCalculus calc(inst.q);
    auto sigma = build_sigma_hrep(calc, inst.beta);
    auto v = rays(sigma);
    for (std::size_t s = 1; s <= inst.q.num_vertices(); ++s) {
      for (const auto& set : wcal_s(calc, inst.beta, s)) {
        auto face = theta(set, sigma);
        for (const auto& r : v.rays) {
          auto m = mu(1, to_weight(r), *set.certificate);
          CHECK(m <= 0);
          const bool on_face = std::find(face.rays.begin(), face.rays.end(), r) != face.rays.end();
          CHECK((m == 0) == on_face);
        }
      }
    }
  }
}

TEST_CASE("every face in the image contains the apex") {
  for (const auto& inst : instances()) {
    auto report = verify_dw(inst.q, inst.beta, inst.q.num_vertices());
    IntVector zero(inst.q.num_vertices(), BigInt(0));
    for (const auto& level : report.levels) {
      for (const auto& image : level.images) {
        for (auto j : image.face.active) CHECK(dot(report.sigma.inequalities()[j].normal, zero) == 0);
        CHECK(report.sigma.contains(zero));
      }
    }
  }
}

TEST_CASE("A_2 (2,1): two part sets reach the same face") {
  // {(1,1),(1,0)} and {(2,0),(0,1)} both certify and both cut out the apex
  auto report = verify_dw(linear_quiver(2), {2, 1}, 2);
  REQUIRE(report.levels.size() == 2);
  const auto& level = report.levels[1];
  CHECK(level.injective == Verdict::Fails);
  CHECK_FALSE(level.witnesses.empty());
}
