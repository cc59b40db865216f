#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qcone/generic.hpp"
#include "qcone/representation.hpp"

using namespace qcone;

namespace {

Quiver three_vertex() {
  return validate_quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "3"}, {"d", "1", "3"}});
}

DimensionVector random_dv(std::mt19937_64& rng, std::size_t n, std::int64_t max_entry) {
  std::vector<std::int64_t> e(n);
  for (auto& x : e) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_entry + 1));
  return DimensionVector(e);
}

// Subdimensions present in every one of a few random representations. A
// generic subdimension is present in every representation (up to rational
// points, hence the extension field); a non-generic one is missing from a
// random representation with high probability.
std::set<DimensionVector> sampled_subdimensions(const Quiver& q, const DimensionVector& beta, unsigned field_degree,
                                                std::uint64_t seed) {
  std::set<DimensionVector> common;
  for (std::uint64_t k = 0; k < 3; ++k) {
    auto r = random_rep(q, beta, 211, mix_seed(seed, k), field_degree);
    auto dims = subrep_dimension_vectors(r);
    std::set<DimensionVector> here(dims.begin(), dims.end());
    if (k == 0) {
      common = here;
    } else {
      std::set<DimensionVector> both;
      std::set_intersection(common.begin(), common.end(), here.begin(), here.end(),
                            std::inserter(both, both.begin()));
      common = both;
    }
  }
  return common;
}

void check_against_sampling(const Quiver& q, const DimensionVector& bound, unsigned field_degree) {
  GenericCalculus calc(q);
  for (const auto& beta : box_below(bound)) {
    if (beta.is_zero()) continue;
    auto expected = sampled_subdimensions(q, beta, field_degree, 1000 + beta.total());
    const auto& got = calc.generic_subdimensions(beta);
    CHECK_MESSAGE(std::set<DimensionVector>(got.begin(), got.end()) == expected, "beta = ", to_string(beta));
  }
}

}  // namespace

TEST_CASE("generic hom and ext examples") {
  GenericCalculus a2(linear_quiver(2));
  CHECK(a2.hom({1, 0}, {0, 1}) == 0);
  CHECK(a2.ext({1, 0}, {0, 1}) == 1);
  CHECK(a2.hom({0, 1}, {1, 0}) == 0);
  CHECK(a2.ext({0, 1}, {1, 0}) == 0);
  CHECK(a2.hom({0, 1}, {1, 1}) == 1);

  GenericCalculus k2(kronecker_quiver(2));
  CHECK(k2.hom({1, 1}, {1, 1}) == 0);
  CHECK(k2.ext({1, 1}, {1, 1}) == 0);
  CHECK(k2.ext({1, 0}, {0, 1}) == 2);
  CHECK(k2.hom({1, 2}, {2, 3}) == 2);

  CHECK(generic_hom(kronecker_quiver(2), {1, 1}, {1, 1}) == 0);
  CHECK(generic_ext(linear_quiver(2), {1, 0}, {0, 1}) == 1);
}

TEST_CASE("generic subdimension examples") {
  GenericCalculus a2(linear_quiver(2));
  CHECK(a2.is_generic_subdim({0, 1}, {1, 1}));
  CHECK_FALSE(a2.is_generic_subdim({1, 0}, {1, 1}));
  CHECK(a2.is_generic_subdim({0, 0}, {1, 1}));
  CHECK(a2.is_generic_subdim({1, 1}, {1, 1}));
  CHECK(a2.is_generic_subdim({1, 0}, {2, 1}));

  GenericCalculus k2(kronecker_quiver(2));
  CHECK(k2.is_generic_subdim({1, 1}, {2, 2}));
  CHECK_FALSE(k2.is_generic_subdim({1, 0}, {2, 2}));
  CHECK(k2.is_generic_subdim({0, 1}, {2, 2}));

  CHECK_THROWS_AS(a2.is_generic_subdim({2, 0}, {1, 1}), Error);
  CHECK(is_generic_subdim(kronecker_quiver(3), {0, 2}, {1, 2}));
}

TEST_CASE("generic subdimensions agree with subrepresentation search on A_2 and A_3") {
  check_against_sampling(linear_quiver(2), {3, 3}, 1);
  check_against_sampling(linear_quiver(3), {2, 2, 2}, 1);
}

TEST_CASE("generic subdimensions agree with subrepresentation search on Kronecker quivers") {
  check_against_sampling(kronecker_quiver(2), {2, 2}, 2);
  check_against_sampling(kronecker_quiver(3), {2, 2}, 2);
}

TEST_CASE("recursive hom and ext agree with sampling") {
  const std::vector<Quiver> quivers{linear_quiver(3), kronecker_quiver(2), kronecker_quiver(3), three_vertex()};
  std::mt19937_64 rng(7);
  for (const auto& q : quivers) {
    GenericCalculus calc(q);
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_dv(rng, q.num_vertices(), 3);
      auto b = random_dv(rng, q.num_vertices(), 3);
      SamplingPolicy policy;
      policy.seed = rng();
      auto sampled = sampled_hom_ext(q, a, b, policy);
      CHECK_MESSAGE(calc.hom(a, b) == sampled.hom, to_string(a), " ", to_string(b));
      CHECK(calc.ext(a, b) == sampled.ext);
      CHECK(calc.hom(a, b) - calc.ext(a, b) == euler_form(q, a, b));
      CHECK(calc.ext(a, b) >= 0);
      CHECK(calc.hom(a, b) >= 0);
    }
  }
}

TEST_CASE("hom_ext records the method") {
  GenericCalculus calc(kronecker_quiver(2));
  auto r = calc.hom_ext({1, 1}, {1, 1});
  CHECK(r.method == HomExtMethod::Recursive);
  CHECK(r.evidence.empty());
  SamplingPolicy policy;
  policy.trials = 2;
  auto s = sampled_hom_ext(kronecker_quiver(2), {1, 1}, {1, 1}, policy);
  CHECK(s.method == HomExtMethod::Sampled);
  CHECK(s.evidence.size() == 4);
  CHECK(s.hom == 0);
}

TEST_CASE("sampling more can only lower the observed hom") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_dv(rng, 2, 3), b = random_dv(rng, 2, 3);
    SamplingPolicy few, many;
    few.trials = 1;
    few.primes = {101};
    many.trials = 6;
    many.primes = {101};
    few.seed = many.seed = rng();
    CHECK(generic_hom(kronecker_quiver(3), a, b, many) <= generic_hom(kronecker_quiver(3), a, b, few));
  }
}

TEST_CASE("generic subdimensions compose") {
  const std::vector<Quiver> quivers{linear_quiver(3), kronecker_quiver(2), three_vertex()};
  std::mt19937_64 rng(19);
  for (const auto& q : quivers) {
    GenericCalculus calc(q);
    for (int trial = 0; trial < 15; ++trial) {
      auto gamma = random_dv(rng, q.num_vertices(), 3);
      for (const auto& beta : calc.generic_subdimensions(gamma)) {
        for (const auto& alpha : calc.generic_subdimensions(beta)) {
          CHECK(calc.is_generic_subdim(alpha, gamma));
        }
      }
    }
  }
}

TEST_CASE("canonical decomposition examples") {
  GenericCalculus a2(linear_quiver(2));
  CHECK(a2.canonical_decomposition({2, 1}) == std::vector<DimensionVector>{{1, 1}, {1, 0}});
  CHECK(a2.canonical_decomposition({1, 1}) == std::vector<DimensionVector>{{1, 1}});
  CHECK(a2.canonical_decomposition({1, 0}) == std::vector<DimensionVector>{{1, 0}});

  GenericCalculus k2(kronecker_quiver(2));
  CHECK(k2.canonical_decomposition({2, 2}) == std::vector<DimensionVector>{{1, 1}, {1, 1}});
  CHECK(k2.canonical_decomposition({2, 1}) == std::vector<DimensionVector>{{2, 1}});
  CHECK(k2.canonical_decomposition({0, 3}) == std::vector<DimensionVector>{{0, 1}, {0, 1}, {0, 1}});

  CHECK(canonical_decomposition(kronecker_quiver(3), {2, 2}) == std::vector<DimensionVector>{{2, 2}});
}

TEST_CASE("canonical decompositions are Schur, ext-orthogonal and unique") {
  const std::vector<Quiver> quivers{linear_quiver(3), kronecker_quiver(2), kronecker_quiver(3), three_vertex()};
  std::mt19937_64 rng(29);
  for (const auto& q : quivers) {
    GenericCalculus calc(q);
    for (int trial = 0; trial < 15; ++trial) {
      auto beta = random_dv(rng, q.num_vertices(), 3);
      if (beta.is_zero()) continue;
      auto parts = calc.canonical_decomposition(beta);
      DimensionVector sum = DimensionVector::zero(q.num_vertices());
      for (const auto& p : parts) sum = sum + p;
      CHECK(sum == beta);
      CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
      for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(calc.is_schur_root(parts[i]));
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (i != j) CHECK(calc.ext(parts[i], parts[j]) == 0);
        }
      }
      CHECK(calc.schur_splittings(beta, 2).size() == 1);
    }
  }
}

TEST_CASE("Schur roots match the endomorphisms of a random representation") {
  const std::vector<Quiver> quivers{linear_quiver(3), kronecker_quiver(2), kronecker_quiver(3), three_vertex()};
  std::mt19937_64 rng(37);
  for (const auto& q : quivers) {
    GenericCalculus calc(q);
    for (int trial = 0; trial < 20; ++trial) {
      auto beta = random_dv(rng, q.num_vertices(), 3);
      if (beta.is_zero()) continue;
      // End(R) of a general R is the minimum over samples
      std::int64_t end = beta.total() * beta.total();
      for (int k = 0; k < 3; ++k) {
        auto r = random_rep(q, beta, 211, rng());
        end = std::min(end, hom_dim(r, r));
      }
      const bool schur = end == 1;
      CHECK_MESSAGE(calc.is_schur_root(beta) == schur, to_string(beta));
    }
  }
}

TEST_CASE("Schur and rational Schur examples") {
  GenericCalculus k2(kronecker_quiver(2));
  CHECK(k2.is_schur_root({1, 1}));
  CHECK_FALSE(k2.is_schur_root({2, 2}));
  CHECK(k2.is_rational_schur_root({2, 2}));
  CHECK(k2.is_rational_schur_root({3, 3}));
  CHECK_FALSE(k2.is_rational_schur_root({1, 2}) != k2.is_schur_root({1, 2}));
  CHECK_FALSE(k2.is_rational_schur_root({3, 1}));

  GenericCalculus a2(linear_quiver(2));
  CHECK(a2.is_schur_root({1, 1}));
  CHECK_FALSE(a2.is_schur_root({2, 1}));
  CHECK(a2.is_rational_schur_root({2, 2}));
  CHECK_FALSE(a2.is_schur_root({2, 2}));
  CHECK(a2.is_schur_root({0, 1}));
  CHECK(a2.is_rational_schur_root({0, 2}));
  CHECK_FALSE(a2.is_rational_schur_root({2, 1}));

  CHECK(is_schur_root(kronecker_quiver(3), {2, 2}));
  CHECK(is_rational_schur_root(kronecker_quiver(3), {2, 2}));
  CHECK_THROWS_AS(a2.is_schur_root({0, 0}), Error);
}

TEST_CASE("rational Schur roots are exactly the gcd-reduced Schur roots") {
  const std::vector<Quiver> quivers{kronecker_quiver(2), kronecker_quiver(3), linear_quiver(3)};
  std::mt19937_64 rng(43);
  for (const auto& q : quivers) {
    GenericCalculus calc(q);
    for (int trial = 0; trial < 20; ++trial) {
      auto beta = random_dv(rng, q.num_vertices(), 2);
      if (beta.is_zero()) continue;
      for (std::int64_t k : {1, 2, 3}) {
        CHECK(calc.is_rational_schur_root(beta * k) == calc.is_schur_root(beta.divided_by(beta.gcd())));
      }
    }
  }
}
