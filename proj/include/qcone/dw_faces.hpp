#pragma once

// Well-covering ordered decompositions by rational Schur roots and the map
// Theta sending a set of parts {beta_1, ..., beta_s} to the face
// H(beta_1) n ... n H(beta_s) n Sigma(Q, beta). verify_dw checks that Theta is
// a bijection onto the faces of codimension s.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcone/cone.hpp"
#include "qcone/oracle.hpp"

namespace qcone {

inline constexpr std::uint64_t kDefaultDecompositionBudget = 1'000'000;

// All sequences of s nonzero dimension vectors summing to beta, in
// lexicographic order. Throws Budget beyond `budget` sequences.
std::vector<OrderedDecomposition> enumerate_ordered_decompositions(const DimensionVector& beta, std::size_t s,
                                                                   std::uint64_t budget = kDefaultDecompositionBudget);

// beta_i o beta_j = 1 for all i < j. InconclusiveCount propagates.
bool is_well_covering(const GenericCalculus& calculus, const OrderedDecomposition& decomposition,
                      const CountPolicy& policy = {});

// An ordered decomposition by rational Schur roots that failed the
// well-covering test at the pair (first, second).
struct Rejection {
  OrderedDecomposition decomposition;
  std::size_t first = 0;
  std::size_t second = 0;
  SubrepCount count;
};

struct DecompositionSet {
  std::vector<DimensionVector> parts;  // sorted ascending, repeats kept
  std::optional<OrderedDecomposition> certificate;
  bool operator==(const DecompositionSet&) const = default;
};

// First pair i < j with beta_i o beta_j != 1, if any.
std::optional<Rejection> well_covering_obstruction(const GenericCalculus& calculus,
                                                   const OrderedDecomposition& decomposition,
                                                   const CountPolicy& policy = {});

// When `rejections` is given, every ordered decomposition by rational Schur
// roots that is not well covering is recorded there.
std::vector<DecompositionSet> wcal_s(const GenericCalculus& calculus, const DimensionVector& beta, std::size_t s,
                                     const CountPolicy& policy = {},
                                     std::uint64_t budget = kDefaultDecompositionBudget,
                                     std::vector<Rejection>* rejections = nullptr);

Face theta(const DecompositionSet& set, const HCone& sigma);
// Same face as theta on the part set; throws NotWellCovering.
Face face_of_decomposition(const GenericCalculus& calculus, const OrderedDecomposition& decomposition,
                           const HCone& sigma, const CountPolicy& policy = {});

enum class Verdict { Holds, Fails, Inconclusive };
std::string_view to_string(Verdict v);

struct ThetaImage {
  std::size_t set_index = 0;
  Face face;
  bool is_face = true;  // the intersection is exactly a face
  std::optional<std::size_t> face_index;  // into the codim-s face list
};

struct LevelReport {
  std::size_t s = 0;
  std::vector<DecompositionSet> sets;
  std::vector<Face> faces;  // faces of codimension s
  std::vector<ThetaImage> images;
  Verdict well_defined = Verdict::Holds;
  Verdict injective = Verdict::Holds;
  Verdict surjective = Verdict::Holds;
  Verdict independent = Verdict::Holds;
  Verdict distinct_parts = Verdict::Holds;
  std::vector<std::string> witnesses;
  std::vector<Rejection> rejections;

  Verdict overall() const;
};

struct DwReport {
  DimensionVector beta;
  HCone sigma{0};
  std::vector<LevelReport> levels;
  Verdict overall() const;
};

struct DwPolicy {
  CountPolicy count;
  std::uint64_t decomposition_budget = kDefaultDecompositionBudget;
  std::int64_t max_entry = 4;
  std::size_t max_vertices = 4;
};

DwReport verify_dw(const Quiver& quiver, const DimensionVector& beta, std::size_t s_max, const DwPolicy& policy = {});

}  // namespace qcone
