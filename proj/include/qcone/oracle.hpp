#pragma once

// Brute-force ground truth built on explicit finite-field representations:
// the number alpha o beta of alpha-dimensional subrepresentations of a
// general representation of dimension alpha + beta, and the weights of
// semi-invariants up to a degree bound.

#include <cstdint>
#include <string>
#include <vector>

#include "qcone/generic.hpp"
#include "qcone/representation.hpp"

namespace qcone {

struct CountPolicy {
  std::vector<std::uint64_t> primes{101, 103};
  std::size_t seeds_per_prime = 3;
  // Counting over F_{p^k}: points of a finite subrepresentation scheme that
  // are conjugate over F_p become visible once k covers their field of
  // definition.
  unsigned field_degree = 2;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSubspaceBudget;
};

// Thrown when sampled counts disagree; carries every sample.
class InconclusiveCount : public Error {
 public:
  InconclusiveCount(const std::string& what, SubrepCount partial)
      : Error(ErrorKind::Inconclusive, what), partial_(std::move(partial)) {}
  const SubrepCount& partial() const { return partial_; }

 private:
  SubrepCount partial_;
};

// ext(alpha, beta) != 0 gives 0; <alpha, beta> != 0 with ext = 0 gives 0
// with the infinite flag; otherwise the common raw count of all samples.
SubrepCount alpha_circ_beta(const GenericCalculus& calculus, const DimensionVector& alpha,
                            const DimensionVector& beta, const CountPolicy& policy = {});
SubrepCount alpha_circ_beta(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                            const CountPolicy& policy = {});

struct SemiInvariantPolicy {
  std::uint64_t prime = 2147483647;  // 2^31 - 1
  std::size_t repetitions = 6;       // minimum number of random group elements
  std::uint64_t seed = 0;
  std::uint64_t monomial_budget = 200'000;
};

struct WeightSpace {
  Weight sigma;  // semi-invariants of weight -sigma
  std::int64_t degree = 0;
  std::int64_t dimension = 0;
  std::size_t group_elements = 0;
  bool operator==(const WeightSpace&) const = default;
};

struct SemiInvariantWeights {
  std::vector<WeightSpace> spaces;  // by degree, then weight
  // A fixed non-semi-invariant survives one random group element with
  // probability at most bound_numerator / prime (Schwartz-Zippel).
  std::int64_t bound_numerator = 0;
  std::uint64_t prime = 0;
  // vertices with beta(s) = 0, whose weight coordinate is unconstrained and
  // reported as 0
  std::vector<std::size_t> free_vertices;
};

// Throws Budget when a degree has more monomials than allowed.
SemiInvariantWeights si_weights_by_degree(const Quiver& quiver, const DimensionVector& beta, std::int64_t max_degree,
                                          const SemiInvariantPolicy& policy = {});

// Distinct primitive weights among the nonzero reported weights.
std::vector<Weight> primitive_weights(const SemiInvariantWeights& weights);

}  // namespace qcone
