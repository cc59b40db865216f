#include "qcone/generic.hpp"

#include <algorithm>
#include <limits>

#include "qcone/representation.hpp"

namespace qcone {

const std::vector<DimensionVector>& GenericCalculus::generic_subdimensions(const DimensionVector& beta) const {
  std::lock_guard lock(mutex_);
  require_on_quiver(quiver_, beta);
  if (auto it = subdimensions_.find(beta); it != subdimensions_.end()) return it->second;

  std::vector<DimensionVector> result;
  for (const auto& alpha : box_below(beta)) {
    if (alpha.is_zero() || alpha == beta) {
      result.push_back(alpha);
      continue;
    }
    const auto rest = beta - alpha;
    const auto& below = generic_subdimensions(alpha);
    bool ok = std::all_of(below.begin(), below.end(),
                          [&](const DimensionVector& a) { return euler_form(quiver_, a, rest) >= 0; });
    if (ok) result.push_back(alpha);
  }
  return subdimensions_.emplace(beta, std::move(result)).first->second;
}

bool GenericCalculus::is_generic_subdim(const DimensionVector& alpha, const DimensionVector& beta) const {
  require_on_quiver(quiver_, alpha);
  require_on_quiver(quiver_, beta);
  if (!alpha.below(beta)) throw Error(ErrorKind::NotBelow, to_string(alpha) + " is not below " + to_string(beta));
  const auto& subs = generic_subdimensions(beta);
  return std::binary_search(subs.begin(), subs.end(), alpha);
}

std::int64_t GenericCalculus::ext(const DimensionVector& alpha, const DimensionVector& beta) const {
  require_on_quiver(quiver_, beta);
  std::int64_t best = 0;
  for (const auto& a : generic_subdimensions(alpha)) best = std::max(best, -euler_form(quiver_, a, beta));
  return best;
}

GenericHomExt GenericCalculus::hom_ext(const DimensionVector& alpha, const DimensionVector& beta) const {
  auto e = ext(alpha, beta);
  return GenericHomExt{alpha, beta, euler_form(quiver_, alpha, beta) + e, e, HomExtMethod::Recursive, {}};
}

bool GenericCalculus::is_schur_root(const DimensionVector& beta) const {
  std::lock_guard lock(mutex_);
  require_on_quiver(quiver_, beta);
  if (beta.is_zero()) throw Error(ErrorKind::Precondition, "Schur roots are nonzero");
  if (auto it = schur_.find(beta); it != schur_.end()) return it->second;
  const auto sigma = canonical_weight(quiver_, beta);
  bool stable = true;
  for (const auto& a : generic_subdimensions(beta)) {
    if (a.is_zero() || a == beta) continue;
    if (weight_apply(sigma, a) >= 0) {
      stable = false;
      break;
    }
  }
  schur_.emplace(beta, stable);
  return stable;
}

bool GenericCalculus::is_rational_schur_root(const DimensionVector& beta) const {
  return is_schur_root(beta.divided_by(beta.gcd()));
}

std::vector<std::vector<DimensionVector>> GenericCalculus::schur_splittings(const DimensionVector& beta,
                                                                           std::size_t limit) const {
  require_on_quiver(quiver_, beta);
  if (beta.is_zero()) throw Error(ErrorKind::Precondition, "canonical decomposition of the zero vector");

  // candidate parts: Schur roots below beta, descending
  std::vector<DimensionVector> roots;
  for (const auto& v : box_below(beta)) {
    if (!v.is_zero() && is_schur_root(v)) roots.push_back(v);
  }
  std::reverse(roots.begin(), roots.end());

  std::vector<std::vector<DimensionVector>> found;
  std::vector<DimensionVector> chosen;
  // parts are chosen in non-increasing order, so each multiset is seen once
  auto search = [&](auto&& self, const DimensionVector& remaining, std::size_t first) -> void {
    if (found.size() >= limit) return;
    if (remaining.is_zero()) {
      found.push_back(chosen);
      return;
    }
    for (std::size_t i = first; i < roots.size(); ++i) {
      const auto& r = roots[i];
      if (!r.below(remaining)) continue;
      // includes ext(r, r) when r is repeated
      bool compatible = std::all_of(chosen.begin(), chosen.end(), [&](const DimensionVector& c) {
        return ext(r, c) == 0 && ext(c, r) == 0;
      });
      if (compatible) {
        chosen.push_back(r);
        self(self, remaining - r, i);
        chosen.pop_back();
        if (found.size() >= limit) return;
      }
    }
  };
  search(search, beta, 0);
  return found;
}

std::vector<DimensionVector> GenericCalculus::canonical_decomposition(const DimensionVector& beta) const {
  auto all = schur_splittings(beta, 1);
  if (all.empty()) throw Error(ErrorKind::Precondition, "no canonical decomposition found for " + to_string(beta));
  return all.front();
}

GenericHomExt sampled_hom_ext(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                              const SamplingPolicy& policy) {
  require_on_quiver(quiver, alpha);
  require_on_quiver(quiver, beta);
  if (policy.trials == 0 || policy.primes.empty()) {
    throw Error(ErrorKind::Precondition, "sampling policy needs at least one prime and one trial");
  }
  GenericHomExt out{alpha, beta, std::numeric_limits<std::int64_t>::max(), 0, HomExtMethod::Sampled, {}};
  for (std::size_t pi = 0; pi < policy.primes.size(); ++pi) {
    const auto p = policy.primes[pi];
    for (std::size_t t = 0; t < policy.trials; ++t) {
      const auto tag = (static_cast<std::uint64_t>(pi) << 32) | t;
      const auto seed = mix_seed(policy.seed, tag);
      auto r = random_rep(quiver, alpha, p, mix_seed(seed, 0));
      auto s = random_rep(quiver, beta, p, mix_seed(seed, 1));
      auto h = hom_dim(r, s);
      out.evidence.push_back(HomSample{p, seed, h});
      out.hom = std::min(out.hom, h);
    }
  }
  out.ext = out.hom - euler_form(quiver, alpha, beta);
  if (out.ext < 0) {
    throw Error(ErrorKind::NegativeExt, "sampled hom " + std::to_string(out.hom) + " below the Euler form for " +
                                            to_string(alpha) + ", " + to_string(beta));
  }
  return out;
}

std::int64_t generic_hom(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                         const SamplingPolicy& policy) {
  return sampled_hom_ext(quiver, alpha, beta, policy).hom;
}

std::int64_t generic_ext(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                         const SamplingPolicy& policy) {
  return sampled_hom_ext(quiver, alpha, beta, policy).ext;
}

bool is_generic_subdim(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta) {
  return GenericCalculus(quiver).is_generic_subdim(alpha, beta);
}

std::vector<DimensionVector> canonical_decomposition(const Quiver& quiver, const DimensionVector& beta) {
  return GenericCalculus(quiver).canonical_decomposition(beta);
}

bool is_schur_root(const Quiver& quiver, const DimensionVector& beta) {
  return GenericCalculus(quiver).is_schur_root(beta);
}

bool is_rational_schur_root(const Quiver& quiver, const DimensionVector& beta) {
  return GenericCalculus(quiver).is_rational_schur_root(beta);
}

}  // namespace qcone
