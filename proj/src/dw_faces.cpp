#include "qcone/dw_faces.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcone {

std::vector<OrderedDecomposition> enumerate_ordered_decompositions(const DimensionVector& beta, std::size_t s,
                                                                   std::uint64_t budget) {
  if (s < 1) throw Error(ErrorKind::Precondition, "decompositions have at least one part");
  std::vector<OrderedDecomposition> out;
  const auto candidates = box_below(beta);  // lexicographic
  std::vector<DimensionVector> parts;
  auto extend = [&](auto&& self, const DimensionVector& remaining) -> void {
    const auto left = s - parts.size();
    if (left == 1) {
      if (remaining.is_zero()) return;
      parts.push_back(remaining);
      if (out.size() >= budget) {
        throw Error(ErrorKind::Budget, "more than " + std::to_string(budget) + " ordered decompositions");
      }
      out.emplace_back(parts);
      parts.pop_back();
      return;
    }
    for (const auto& part : candidates) {
      if (part.is_zero() || !part.below(remaining)) continue;
      auto rest = remaining - part;
      // each later part needs at least one unit
      if (rest.total() < static_cast<std::int64_t>(left - 1)) continue;
      parts.push_back(part);
      self(self, rest);
      parts.pop_back();
    }
  };
  extend(extend, beta);
  return out;
}

std::optional<Rejection> well_covering_obstruction(const GenericCalculus& calculus,
                                                   const OrderedDecomposition& decomposition,
                                                   const CountPolicy& policy) {
  for (std::size_t i = 0; i < decomposition.length(); ++i) {
    for (std::size_t j = i + 1; j < decomposition.length(); ++j) {
      auto count = alpha_circ_beta(calculus, decomposition[i], decomposition[j], policy);
      if (count.count != 1 || count.infinite) return Rejection{decomposition, i, j, std::move(count)};
    }
  }
  return std::nullopt;
}

bool is_well_covering(const GenericCalculus& calculus, const OrderedDecomposition& decomposition,
                      const CountPolicy& policy) {
  return !well_covering_obstruction(calculus, decomposition, policy).has_value();
}

std::vector<DecompositionSet> wcal_s(const GenericCalculus& calculus, const DimensionVector& beta, std::size_t s,
                                     const CountPolicy& policy, std::uint64_t budget,
                                     std::vector<Rejection>* rejections) {
  std::map<std::vector<DimensionVector>, DecompositionSet> found;
  for (const auto& d : enumerate_ordered_decompositions(beta, s, budget)) {
    bool rational = std::all_of(d.parts().begin(), d.parts().end(),
                                [&](const DimensionVector& p) { return calculus.is_rational_schur_root(p); });
    if (!rational) continue;
    auto parts = d.parts();
    std::sort(parts.begin(), parts.end());
    if (found.contains(parts)) continue;
    if (auto obstruction = well_covering_obstruction(calculus, d, policy)) {
      if (rejections) rejections->push_back(std::move(*obstruction));
      continue;
    }
    found.emplace(parts, DecompositionSet{parts, d});
  }
  std::vector<DecompositionSet> out;
  for (auto& [parts, set] : found) out.push_back(std::move(set));
  return out;
}

namespace {
std::vector<IntVector> hyperplanes_of(const std::vector<DimensionVector>& parts) {
  std::vector<IntVector> out;
  for (const auto& p : parts) out.push_back(to_int_vector(p));
  return out;
}
}  // namespace

Face theta(const DecompositionSet& set, const HCone& sigma) {
  return cut_by_hyperplanes(sigma, hyperplanes_of(set.parts)).face;
}

Face face_of_decomposition(const GenericCalculus& calculus, const OrderedDecomposition& decomposition,
                           const HCone& sigma, const CountPolicy& policy) {
  if (auto obstruction = well_covering_obstruction(calculus, decomposition, policy)) {
    throw Error(ErrorKind::NotWellCovering,
                to_string(decomposition) + " fails at parts " + std::to_string(obstruction->first + 1) + " and " +
                    std::to_string(obstruction->second + 1) + " with count " +
                    std::to_string(obstruction->count.count));
  }
  return cut_by_hyperplanes(sigma, hyperplanes_of(decomposition.parts())).face;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {
Verdict combine(std::initializer_list<Verdict> verdicts) {
  auto result = Verdict::Holds;
  for (auto v : verdicts) {
    if (v == Verdict::Fails) return Verdict::Fails;
    if (v == Verdict::Inconclusive) result = Verdict::Inconclusive;
  }
  return result;
}
}  // namespace

Verdict LevelReport::overall() const {
  return combine({well_defined, injective, surjective, independent, distinct_parts});
}

Verdict DwReport::overall() const {
  auto result = Verdict::Holds;
  for (const auto& level : levels) {
    auto v = level.overall();
    if (v == Verdict::Fails) return Verdict::Fails;
    if (v == Verdict::Inconclusive) result = Verdict::Inconclusive;
  }
  return result;
}

DwReport verify_dw(const Quiver& quiver, const DimensionVector& beta, std::size_t s_max, const DwPolicy& policy) {
  require_on_quiver(quiver, beta);
  if (quiver.num_vertices() > policy.max_vertices ||
      std::any_of(beta.begin(), beta.end(), [&](auto e) { return e > policy.max_entry; })) {
    throw Error(ErrorKind::Budget, "verification is limited to " + std::to_string(policy.max_vertices) +
                                       " vertices and entries up to " + std::to_string(policy.max_entry));
  }
  const GenericCalculus calculus(quiver);
  DwReport report{beta, build_sigma_hrep(calculus, beta), {}};
  const auto n = quiver.num_vertices();
  const auto all_faces = faces_up_to_codim(report.sigma, std::min(s_max, n));

  for (std::size_t s = 1; s <= s_max; ++s) {
    LevelReport level;
    level.s = s;
    for (const auto& f : all_faces) {
      if (f.codim == s) level.faces.push_back(f);
    }
    try {
      level.sets = wcal_s(calculus, beta, s, policy.count, policy.decomposition_budget, &level.rejections);
    } catch (const InconclusiveCount& e) {
      level.well_defined = level.injective = level.surjective = level.independent = level.distinct_parts =
          Verdict::Inconclusive;
      level.witnesses.push_back(e.what());
      report.levels.push_back(std::move(level));
      continue;
    }

    std::map<std::vector<std::size_t>, std::size_t> hit;
    for (std::size_t k = 0; k < level.sets.size(); ++k) {
      const auto& set = level.sets[k];
      auto cut = cut_by_hyperplanes(report.sigma, hyperplanes_of(set.parts));
      ThetaImage image{k, cut.face, cut.exact, std::nullopt};
      for (std::size_t f = 0; f < level.faces.size(); ++f) {
        if (level.faces[f].active == cut.face.active) image.face_index = f;
      }
      const auto label = to_string(*set.certificate);
      if (!cut.exact) {
        level.well_defined = Verdict::Fails;
        level.witnesses.push_back("Theta" + label + " is not a face of Sigma");
      } else if (!image.face_index) {
        level.well_defined = Verdict::Fails;
        level.witnesses.push_back("Theta" + label + " has codimension " + std::to_string(cut.face.codim) +
                                  ", expected " + std::to_string(s));
      }
      if (auto [it, inserted] = hit.emplace(cut.face.active, k); !inserted) {
        level.injective = Verdict::Fails;
        level.witnesses.push_back("Theta" + label + " equals Theta" + to_string(*level.sets[it->second].certificate));
      }
      if (rank(hyperplanes_of(set.parts), n) != set.parts.size()) {
        level.independent = Verdict::Fails;
        level.witnesses.push_back("parts of " + label + " are linearly dependent");
      }
      if (std::adjacent_find(set.parts.begin(), set.parts.end()) != set.parts.end()) {
        level.distinct_parts = Verdict::Fails;
        level.witnesses.push_back("parts of " + label + " repeat");
      }
      level.images.push_back(std::move(image));
    }
    for (std::size_t f = 0; f < level.faces.size(); ++f) {
      bool covered = std::any_of(level.images.begin(), level.images.end(),
                                 [&](const ThetaImage& im) { return im.face_index == f; });
      if (!covered) {
        level.surjective = Verdict::Fails;
        std::string active;
        for (auto i : level.faces[f].active) active += (active.empty() ? "" : ",") + std::to_string(i);
        level.witnesses.push_back("face with active set {" + active + "} of codimension " + std::to_string(s) +
                                  " is not in the image");
      }
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

}  // namespace qcone
