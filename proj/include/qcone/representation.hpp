#pragma once

// Explicit representations over finite fields and the brute-force
// computations on them: morphism spaces, exhaustive subrepresentation
// search and King semistability.

#include <cstdint>
#include <optional>
#include <vector>

#include "qcone/finite_field.hpp"
#include "qcone/quiver.hpp"

namespace qcone {

inline constexpr std::uint64_t kDefaultSubspaceBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultMinPrime = 101;

// One matrix per arrow, rows = dim at the head, cols = dim at the tail.
struct FiniteFieldRepresentation {
  Quiver quiver;
  DimensionVector dim;
  FiniteField field;
  std::vector<Matrix> maps;
  std::optional<std::uint64_t> seed;
};

// Checks matrix shapes against the dimension vector.
FiniteFieldRepresentation make_representation(Quiver quiver, DimensionVector dim, FiniteField field,
                                              std::vector<Matrix> maps);

// Uniform independent entries from F_p, deterministic in seed. With
// field_degree k > 1 the representation is still defined over F_p and is read
// over F_{p^k}, so subrepresentations defined over F_{p^k} are visible.
// Throws BadPrime when p is not a prime >= min_prime.
FiniteFieldRepresentation random_rep(const Quiver& quiver, const DimensionVector& dim, std::uint64_t p,
                                     std::uint64_t seed, unsigned field_degree = 1,
                                     std::uint64_t min_prime = kDefaultMinPrime);

// dim of {(f_s) : f(head) u_R(a) = u_S(a) f(tail) for all arrows}
std::int64_t hom_dim(const FiniteFieldRepresentation& r, const FiniteFieldRepresentation& s);

struct CountEvidence {
  std::uint64_t prime = 0;
  unsigned field_degree = 1;
  std::uint64_t seed = 0;
  std::int64_t raw_count = 0;
  std::uint64_t nodes_visited = 0;
};

struct SubrepCount {
  DimensionVector alpha;
  std::int64_t count = 0;
  bool infinite = false;
  std::vector<CountEvidence> evidence;
};

// Exhaustive count of subrepresentations of dimension alpha, enumerating
// subspaces in echelon form vertex by vertex in topological order. Each
// visited subspace counts against the budget; throws TooLarge beyond it.
SubrepCount count_subreps(const FiniteFieldRepresentation& r, const DimensionVector& alpha,
                          std::uint64_t budget = kDefaultSubspaceBudget);

bool has_subrep(const FiniteFieldRepresentation& r, const DimensionVector& alpha,
                std::uint64_t budget = kDefaultSubspaceBudget);

// Dimension vectors of all subrepresentations of r, lexicographic.
std::vector<DimensionVector> subrep_dimension_vectors(const FiniteFieldRepresentation& r,
                                                      std::uint64_t budget = kDefaultSubspaceBudget);

// King: sigma(dim r) = 0 and sigma(alpha) <= 0 for every subrepresentation.
bool is_semistable(const FiniteFieldRepresentation& r, const Weight& sigma,
                   std::uint64_t budget = kDefaultSubspaceBudget);

// All dimension vectors 0 <= v <= bound, lexicographic.
std::vector<DimensionVector> box_below(const DimensionVector& bound);

}  // namespace qcone
