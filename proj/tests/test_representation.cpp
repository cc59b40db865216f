#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcone/representation.hpp"

using namespace qcone;

namespace {

Matrix scalar(FiniteField::Element x) {
  Matrix m(1, 1);
  m.at(0, 0) = x;
  return m;
}

FiniteFieldRepresentation a2_rep(FiniteField::Element u, std::uint64_t p = 101) {
  return make_representation(linear_quiver(2), {1, 1}, FiniteField(p), {scalar(u)});
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Precondition;
}

}  // namespace

TEST_CASE("field arithmetic satisfies the field axioms") {
  for (unsigned degree : {1u, 2u, 3u}) {
    FiniteField f(7, degree);
    CHECK(f.order() == (degree == 1 ? 7u : degree == 2 ? 49u : 343u));
    std::mt19937_64 rng(degree);
    for (int trial = 0; trial < 300; ++trial) {
      auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.sub(f.add(a, b), b) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    // x^q = x for every element
    for (FiniteField::Element x = 0; x < f.order(); ++x) CHECK(f.pow(x, f.order()) == x);
  }
}

TEST_CASE("bad primes are rejected") {
  CHECK(kind_of([] { FiniteField(100); }) == ErrorKind::BadPrime);
  CHECK(kind_of([] { random_rep(linear_quiver(2), {1, 1}, 97, 1); }) == ErrorKind::BadPrime);
  CHECK(kind_of([] { random_rep(linear_quiver(2), {1, 1}, 102, 1); }) == ErrorKind::BadPrime);
}

TEST_CASE("random_rep shapes") {
  auto r = random_rep(linear_quiver(2), {1, 1}, 101, 9);
  REQUIRE(r.maps.size() == 1);
  CHECK(r.maps[0].rows == 1);
  CHECK(r.maps[0].cols == 1);

  auto k = random_rep(kronecker_quiver(2), {2, 2}, 101, 9);
  REQUIRE(k.maps.size() == 2);
  for (const auto& m : k.maps) {
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
  }

  auto degenerate = random_rep(linear_quiver(3), {2, 0, 1}, 101, 9);
  CHECK(degenerate.maps[0].rows == 0);
  CHECK(degenerate.maps[0].cols == 2);
  CHECK(degenerate.maps[1].data.empty());

  // deterministic in the seed
  CHECK(random_rep(kronecker_quiver(2), {2, 2}, 101, 9).maps[1].data == k.maps[1].data);
}

TEST_CASE("hom_dim examples") {
  CHECK(hom_dim(a2_rep(0), a2_rep(0)) == 2);
  CHECK(hom_dim(a2_rep(1), a2_rep(0)) == 1);
  auto r = random_rep(linear_quiver(2), {1, 1}, 101, 3);
  REQUIRE(r.maps[0].at(0, 0) != 0);
  CHECK(hom_dim(r, r) == 1);
  CHECK(kind_of([&] { hom_dim(a2_rep(1, 101), a2_rep(1, 103)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("hom_dim is at least the Euler form") {
  const std::vector<Quiver> quivers{linear_quiver(2), linear_quiver(3), kronecker_quiver(2), kronecker_quiver(3)};
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& q = quivers[rng() % quivers.size()];
    std::vector<std::int64_t> a(q.num_vertices()), b(q.num_vertices());
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 4);
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % 4);
    auto r = random_rep(q, DimensionVector(a), 101, rng());
    auto s = random_rep(q, DimensionVector(b), 101, rng());
    CHECK(hom_dim(r, s) >= euler_form(q, r.dim, s.dim));
  }
}

TEST_CASE("count_subreps examples") {
  CHECK(count_subreps(a2_rep(1), {0, 1}).count == 1);
  CHECK(count_subreps(a2_rep(1), {1, 0}).count == 0);
  CHECK(count_subreps(a2_rep(0), {1, 0}).count == 1);
  CHECK(kind_of([] { count_subreps(a2_rep(1), {2, 0}); }) == ErrorKind::NotBelow);
}

TEST_CASE("zero and full subrepresentations are unique") {
  const std::vector<Quiver> quivers{linear_quiver(3), kronecker_quiver(2), kronecker_quiver(3)};
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& q = quivers[rng() % quivers.size()];
    std::vector<std::int64_t> b(q.num_vertices());
    for (auto& x : b) x = static_cast<std::int64_t>(rng() % 3);
    auto r = random_rep(q, DimensionVector(b), 101, rng());
    CHECK(count_subreps(r, DimensionVector::zero(q.num_vertices())).count == 1);
    CHECK(count_subreps(r, r.dim).count == 1);
  }
}

TEST_CASE("counting subspaces of an arrowless space gives Gaussian binomials") {
  // one vertex, dim 3, over F_5: [3 choose 1]_5 = 31, [3 choose 2]_5 = 31
  auto q = validate_quiver({"x"}, {});
  auto r = make_representation(q, {3}, FiniteField(5), {});
  CHECK(count_subreps(r, {1}).count == 31);
  CHECK(count_subreps(r, {2}).count == 31);
  // over F_25 lines in a plane: 26
  auto r2 = make_representation(q, {2}, FiniteField(5, 2), {});
  CHECK(count_subreps(r2, {1}).count == 26);
}

TEST_CASE("positive-dimensional subrepresentation families grow with the field") {
  // <(0,1),(0,1)> = 1 on A_2: lines in the 2-dimensional head space, p + 1 of them
  auto small = random_rep(linear_quiver(2), {0, 2}, 101, 1);
  auto large = random_rep(linear_quiver(2), {0, 2}, 101, 1, 2);
  CHECK(count_subreps(small, {0, 1}).count == 102);
  CHECK(count_subreps(large, {0, 1}).count == 101 * 101 + 1);
}

TEST_CASE("the search budget is enforced") {
  auto r = random_rep(linear_quiver(2), {0, 3}, 101, 1);
  CHECK(kind_of([&] { count_subreps(r, {0, 1}, 100); }) == ErrorKind::TooLarge);
}

TEST_CASE("is_semistable examples") {
  CHECK(is_semistable(a2_rep(1), {1, -1}));
  CHECK_FALSE(is_semistable(a2_rep(0), {1, -1}));
  CHECK(is_semistable(a2_rep(0), {0, 0}));
  CHECK(is_semistable(random_rep(kronecker_quiver(2), {2, 2}, 101, 5), {0, 0}));
  // sigma(dim R) != 0
  CHECK_FALSE(is_semistable(a2_rep(1), {1, 0}));
}

TEST_CASE("subrepresentation dimension vectors of the A_2 examples") {
  auto dims = subrep_dimension_vectors(a2_rep(1));
  CHECK(dims == std::vector<DimensionVector>{{0, 0}, {0, 1}, {1, 1}});
  auto all = subrep_dimension_vectors(a2_rep(0));
  CHECK(all.size() == 4);
}

TEST_CASE("a nonzero map over F_2 has exactly the target line as subrepresentation") {
  auto r = make_representation(linear_quiver(2), {1, 1}, FiniteField(2), {scalar(1)});
  CHECK(count_subreps(r, {0, 1}).count == 1);
  CHECK(count_subreps(r, {1, 0}).count == 0);
}
