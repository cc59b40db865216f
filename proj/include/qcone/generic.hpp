#pragma once

// Generic hom/ext between dimension vectors, generic subdimensions,
// canonical decomposition and Schur root tests.
//
// The deterministic side uses Schofield's recursion:
//   alpha is a generic subdimension of beta  iff  <a', beta - alpha> >= 0
//   for every generic subdimension a' of alpha, and
//   ext(alpha, beta) = max over generic subdimensions a' of alpha of -<a', beta>.
// The sampled side computes hom between random representations over prime
// fields and is used to cross-check the recursion.

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "qcone/quiver.hpp"

namespace qcone {

struct SamplingPolicy {
  std::size_t trials = 8;  // per prime
  std::vector<std::uint64_t> primes{32003, 65537};
  std::uint64_t seed = 0;
};

enum class HomExtMethod { Recursive, Sampled };

struct HomSample {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::int64_t hom = 0;
};

struct GenericHomExt {
  DimensionVector alpha;
  DimensionVector beta;
  std::int64_t hom = 0;
  std::int64_t ext = 0;
  HomExtMethod method = HomExtMethod::Recursive;
  std::vector<HomSample> evidence;
};

// Memoized Schofield recursion for one quiver. Thread safe.
class GenericCalculus {
 public:
  explicit GenericCalculus(Quiver quiver) : quiver_(std::move(quiver)) {}

  const Quiver& quiver() const { return quiver_; }

  // All generic subdimensions of beta, including 0 and beta, lexicographic.
  const std::vector<DimensionVector>& generic_subdimensions(const DimensionVector& beta) const;
  // Throws NotBelow unless alpha <= beta.
  bool is_generic_subdim(const DimensionVector& alpha, const DimensionVector& beta) const;

  std::int64_t ext(const DimensionVector& alpha, const DimensionVector& beta) const;
  std::int64_t hom(const DimensionVector& alpha, const DimensionVector& beta) const {
    return euler_form(quiver_, alpha, beta) + ext(alpha, beta);
  }
  GenericHomExt hom_ext(const DimensionVector& alpha, const DimensionVector& beta) const;

  // The general representation is stable for the canonical weight of beta.
  bool is_schur_root(const DimensionVector& beta) const;
  bool is_rational_schur_root(const DimensionVector& beta) const;

  // Schur roots with pairwise vanishing generic ext summing to beta, sorted
  // lexicographically descending.
  std::vector<DimensionVector> canonical_decomposition(const DimensionVector& beta) const;
  // Every such splitting, at most `limit` of them. The canonical one is unique,
  // so a correct calculus returns exactly one.
  std::vector<std::vector<DimensionVector>> schur_splittings(const DimensionVector& beta, std::size_t limit) const;

 private:
  Quiver quiver_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<DimensionVector, std::vector<DimensionVector>> subdimensions_;
  mutable std::map<DimensionVector, bool> schur_;
};

// Sampled over random representations; min over trials and primes.
std::int64_t generic_hom(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                         const SamplingPolicy& policy = {});
// generic_hom - euler_form; throws NegativeExt if that is negative.
std::int64_t generic_ext(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                         const SamplingPolicy& policy = {});
GenericHomExt sampled_hom_ext(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                              const SamplingPolicy& policy = {});

bool is_generic_subdim(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta);
std::vector<DimensionVector> canonical_decomposition(const Quiver& quiver, const DimensionVector& beta);
bool is_schur_root(const Quiver& quiver, const DimensionVector& beta);
bool is_rational_schur_root(const Quiver& quiver, const DimensionVector& beta);

}  // namespace qcone
