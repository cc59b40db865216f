#pragma once

// Exact rational polyhedral cones in the weight space Z^{Q_0}.
//
// HCone: {x : e.x = 0 for equalities e, b.x <= 0 for inequalities b}.
// VCone: extreme rays plus a lineality basis, from the double description
// method. Faces are identified by their maximal active inequality sets.

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qcone/generic.hpp"
#include "qcone/quiver.hpp"

namespace qcone {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

IntVector to_int_vector(const DimensionVector& v);
IntVector to_int_vector(const Weight& w);
// Throws Precondition if an entry does not fit in 64 bits.
Weight to_weight(const IntVector& v);

BigInt dot(const IntVector& a, const IntVector& b);
// Divide by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t width);
// Primitive integer basis of {x : r.x = 0 for all rows}.
std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, std::size_t width);
// Canonical basis of the row span: reduced echelon form scaled to primitive
// integer rows.
std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& rows, std::size_t width);

struct Inequality {
  IntVector normal;                     // normal . x <= 0, primitive
  std::vector<DimensionVector> labels;  // generating dimension vectors, if any
};

class HCone {
 public:
  explicit HCone(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  // Zero vectors are ignored; duplicates (after normalization) are merged.
  void add_equality(IntVector v);
  void add_inequality(IntVector v, std::optional<DimensionVector> label = std::nullopt);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& equalities() const { return equalities_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }

  bool contains(const IntVector& x) const;

 private:
  std::size_t ambient_dim_;
  std::vector<IntVector> equalities_;
  std::vector<Inequality> inequalities_;
};

struct VCone {
  std::vector<IntVector> rays;       // primitive, sorted
  std::vector<IntVector> lineality;  // canonical_span_basis form
  bool operator==(const VCone&) const = default;
};

struct Face {
  std::vector<std::size_t> active;  // sorted indices into HCone::inequalities()
  std::size_t dim = 0;
  std::size_t codim = 0;            // in the ambient space
  std::vector<IntVector> rays;      // extreme rays of the owning cone lying on the face
  bool operator==(const Face&) const = default;
};

// Sigma(Q, beta): sigma(beta) = 0 and sigma(alpha) <= 0 for every generic
// subdimension 0 < alpha < beta, inequalities in lexicographic label order.
HCone build_sigma_hrep(const GenericCalculus& calculus, const DimensionVector& beta);
HCone build_sigma_hrep(const Quiver& quiver, const DimensionVector& beta);

VCone rays(const HCone& cone);
std::size_t cone_dim(const HCone& cone);
// Irredundant subset of inequalities (greedy removal from the back).
std::vector<std::size_t> facets(const HCone& cone);
bool same_cone(const HCone& a, const HCone& b);

// Faces of ambient codimension <= max_codim, by codimension then active set.
std::vector<Face> faces_up_to_codim(const HCone& cone, std::size_t max_codim);

// Face spanned by the rays listed, with its closed active set.
Face face_from_rays(const HCone& cone, const VCone& vrep, std::vector<IntVector> face_rays);

struct CutResult {
  Face face;          // smallest face containing the intersection
  bool exact = true;  // the intersection is that face
};
// Intersect the cone with the hyperplanes v.x = 0 for the given vectors.
CutResult cut_by_hyperplanes(const HCone& cone, const std::vector<IntVector>& hyperplanes);

}  // namespace qcone
