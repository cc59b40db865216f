#include "qcone/cone.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace qcone {

IntVector to_int_vector(const DimensionVector& v) {
  IntVector out;
  for (auto e : v) out.emplace_back(static_cast<long>(e));
  return out;
}

IntVector to_int_vector(const Weight& w) {
  IntVector out;
  for (auto e : w.entries()) out.emplace_back(static_cast<long>(e));
  return out;
}

Weight to_weight(const IntVector& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw Error(ErrorKind::Precondition, "weight entry does not fit in 64 bits");
    out.push_back(x.get_si());
  }
  return Weight(std::move(out));
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector primitive(IntVector v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

namespace {

using RatMatrix = std::vector<std::vector<mpq_class>>;

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(RatMatrix& m, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    mpq_class lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (std::size_t j = 0; j < width; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

RatMatrix to_rational(const std::vector<IntVector>& rows, std::size_t width) {
  RatMatrix m;
  for (const auto& r : rows) {
    if (r.size() != width) throw Error(ErrorKind::MismatchedQuiver, "vector length does not match the ambient space");
    m.emplace_back(r.begin(), r.end());
  }
  return m;
}

IntVector clear_denominators(const std::vector<mpq_class>& row) {
  BigInt l = 1;
  for (const auto& x : row) l = lcm(l, x.get_den());
  IntVector out;
  for (const auto& x : row) out.push_back(BigInt(x * l));
  return primitive(std::move(out));
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

// Orient so the first nonzero entry is positive.
IntVector sign_normalized(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    break;
  }
  return v;
}

}  // namespace

std::size_t rank(const std::vector<IntVector>& rows, std::size_t width) {
  auto m = to_rational(rows, width);
  return rref(m, width).size();
}

std::vector<IntVector> nullspace(const std::vector<IntVector>& rows, std::size_t width) {
  auto m = to_rational(rows, width);
  auto pivots = rref(m, width);
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (std::binary_search(pivots.begin(), pivots.end(), free)) continue;
    std::vector<mpq_class> v(width, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

std::vector<IntVector> canonical_span_basis(const std::vector<IntVector>& rows, std::size_t width) {
  auto m = to_rational(rows, width);
  rref(m, width);
  std::vector<IntVector> out;
  for (const auto& r : m) out.push_back(clear_denominators(r));
  return out;
}

void HCone::add_equality(IntVector v) {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::MismatchedQuiver, "equality has the wrong length");
  if (is_zero(v)) return;
  v = sign_normalized(primitive(std::move(v)));
  if (std::find(equalities_.begin(), equalities_.end(), v) == equalities_.end()) equalities_.push_back(std::move(v));
}

void HCone::add_inequality(IntVector v, std::optional<DimensionVector> label) {
  if (v.size() != ambient_dim_) throw Error(ErrorKind::MismatchedQuiver, "inequality has the wrong length");
  if (is_zero(v)) return;
  v = primitive(std::move(v));
  auto it = std::find_if(inequalities_.begin(), inequalities_.end(),
                         [&](const Inequality& q) { return q.normal == v; });
  if (it == inequalities_.end()) {
    inequalities_.push_back(Inequality{std::move(v), {}});
    it = std::prev(inequalities_.end());
  }
  if (label) it->labels.push_back(std::move(*label));
}

bool HCone::contains(const IntVector& x) const {
  for (const auto& e : equalities_) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& q : inequalities_) {
    if (dot(q.normal, x) > 0) return false;
  }
  return true;
}

HCone build_sigma_hrep(const GenericCalculus& calculus, const DimensionVector& beta) {
  const auto& quiver = calculus.quiver();
  require_on_quiver(quiver, beta);
  if (beta.is_zero()) throw Error(ErrorKind::Precondition, "Sigma(Q, 0) is not considered");
  HCone cone(quiver.num_vertices());
  cone.add_equality(to_int_vector(beta));
  for (const auto& alpha : calculus.generic_subdimensions(beta)) {
    if (alpha.is_zero() || alpha == beta) continue;
    cone.add_inequality(to_int_vector(alpha), alpha);
  }
  return cone;
}

HCone build_sigma_hrep(const Quiver& quiver, const DimensionVector& beta) {
  return build_sigma_hrep(GenericCalculus(quiver), beta);
}

namespace {

struct DoubleDescription {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
  std::vector<std::vector<bool>> zeros;  // zeros[r][j]: inserted inequality j is tight on ray r
};

DoubleDescription double_description(const HCone& cone, const std::vector<std::size_t>& order) {
  const auto n = cone.ambient_dim();
  DoubleDescription dd;
  dd.lineality = nullspace(cone.equalities(), n);

  for (std::size_t step = 0; step < order.size(); ++step) {
    const auto& b = cone.inequalities()[order[step]].normal;

    auto l0 = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                           [&](const IntVector& l) { return dot(b, l) != 0; });
    if (l0 != dd.lineality.end()) {
      IntVector r0 = *l0;
      BigInt c0 = dot(b, r0);
      if (c0 > 0) {
        for (auto& x : r0) x = -x;
        c0 = -c0;
      }
      const BigInt scale = -c0;  // > 0
      dd.lineality.erase(l0);
      for (auto& l : dd.lineality) {
        BigInt bl = dot(b, l);
        if (bl == 0) continue;
        for (std::size_t i = 0; i < n; ++i) l[i] = scale * l[i] + bl * r0[i];
        l = primitive(std::move(l));
      }
      for (std::size_t r = 0; r < dd.rays.size(); ++r) {
        auto& ray = dd.rays[r];
        BigInt br = dot(b, ray);
        if (br != 0) {
          for (std::size_t i = 0; i < n; ++i) ray[i] = scale * ray[i] + br * r0[i];
          ray = primitive(std::move(ray));
        }
        dd.zeros[r].push_back(true);
      }
      dd.rays.push_back(primitive(std::move(r0)));
      std::vector<bool> z(step, true);
      z.push_back(false);
      dd.zeros.push_back(std::move(z));
      continue;
    }

    std::vector<BigInt> value;
    for (const auto& ray : dd.rays) value.push_back(dot(b, ray));
    std::vector<IntVector> next_rays;
    std::vector<std::vector<bool>> next_zeros;
    for (std::size_t r = 0; r < dd.rays.size(); ++r) {
      if (value[r] > 0) continue;
      next_rays.push_back(dd.rays[r]);
      auto z = dd.zeros[r];
      z.push_back(value[r] == 0);
      next_zeros.push_back(std::move(z));
    }
    for (std::size_t p = 0; p < dd.rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t m = 0; m < dd.rays.size(); ++m) {
        if (value[m] >= 0) continue;
        std::vector<bool> common(step);
        for (std::size_t j = 0; j < step; ++j) common[j] = dd.zeros[p][j] && dd.zeros[m][j];
        // combinatorial adjacency test
        bool adjacent = true;
        for (std::size_t r = 0; r < dd.rays.size() && adjacent; ++r) {
          if (r == p || r == m) continue;
          bool covers = true;
          for (std::size_t j = 0; j < step && covers; ++j) {
            if (common[j] && !dd.zeros[r][j]) covers = false;
          }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector combo(n);
        for (std::size_t i = 0; i < n; ++i) combo[i] = value[p] * dd.rays[m][i] - value[m] * dd.rays[p][i];
        next_rays.push_back(primitive(std::move(combo)));
        common.push_back(true);
        next_zeros.push_back(std::move(common));
      }
    }
    dd.rays = std::move(next_rays);
    dd.zeros = std::move(next_zeros);
  }
  return dd;
}

std::vector<std::size_t> identity_order(std::size_t k) {
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  return order;
}

VCone to_vcone(const DoubleDescription& dd, std::size_t n) {
  VCone v;
  v.lineality = canonical_span_basis(dd.lineality, n);
  v.rays = dd.rays;
  if (!v.lineality.empty()) {
    // reduce rays modulo the lineality space so the representation is canonical:
    // eliminate the pivot coordinates of the lineality basis
    auto m = to_rational(v.lineality, n);
    auto pivots = rref(m, n);
    for (auto& ray : v.rays) {
      std::vector<mpq_class> x(ray.begin(), ray.end());
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        mpq_class f = x[pivots[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < n; ++j) x[j] -= f * m[r][j];
      }
      ray = clear_denominators(x);
    }
  }
  std::sort(v.rays.begin(), v.rays.end());
  v.rays.erase(std::unique(v.rays.begin(), v.rays.end()), v.rays.end());
  return v;
}

bool vcone_inside(const VCone& v, const HCone& h) {
  for (const auto& r : v.rays) {
    if (!h.contains(r)) return false;
  }
  for (const auto& l : v.lineality) {
    IntVector minus = l;
    for (auto& x : minus) x = -x;
    if (!h.contains(l) || !h.contains(minus)) return false;
  }
  return true;
}

}  // namespace

VCone rays(const HCone& cone) {
  return to_vcone(double_description(cone, identity_order(cone.inequalities().size())), cone.ambient_dim());
}

std::size_t cone_dim(const HCone& cone) {
  auto v = rays(cone);
  return v.lineality.size() + rank(v.rays, cone.ambient_dim());
}

bool same_cone(const HCone& a, const HCone& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return vcone_inside(rays(a), b) && vcone_inside(rays(b), a);
}

std::vector<std::size_t> facets(const HCone& cone) {
  const auto& ineqs = cone.inequalities();
  std::vector<bool> kept(ineqs.size(), true);
  for (std::size_t i = ineqs.size(); i-- > 0;) {
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < ineqs.size(); ++j) {
      if (kept[j] && j != i) order.push_back(j);
    }
    auto relaxed = to_vcone(double_description(cone, order), cone.ambient_dim());
    bool redundant = true;
    for (const auto& r : relaxed.rays) {
      if (dot(ineqs[i].normal, r) > 0) redundant = false;
    }
    for (const auto& l : relaxed.lineality) {
      if (dot(ineqs[i].normal, l) != 0) redundant = false;
    }
    if (redundant) kept[i] = false;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (kept[i]) out.push_back(i);
  }
  return out;
}

Face face_from_rays(const HCone& cone, const VCone& vrep, std::vector<IntVector> face_rays) {
  Face f;
  const auto& ineqs = cone.inequalities();
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    bool tight = std::all_of(face_rays.begin(), face_rays.end(),
                             [&](const IntVector& r) { return dot(ineqs[i].normal, r) == 0; });
    if (tight) f.active.push_back(i);
  }
  // close: all cone rays satisfying the active set
  f.rays.clear();
  for (const auto& r : vrep.rays) {
    bool on = std::all_of(f.active.begin(), f.active.end(),
                          [&](std::size_t i) { return dot(ineqs[i].normal, r) == 0; });
    if (on) f.rays.push_back(r);
  }
  f.dim = vrep.lineality.size() + rank(f.rays, cone.ambient_dim());
  f.codim = cone.ambient_dim() - f.dim;
  return f;
}

std::vector<Face> faces_up_to_codim(const HCone& cone, std::size_t max_codim) {
  if (max_codim > cone.ambient_dim()) {
    throw Error(ErrorKind::Precondition, "codimension bound exceeds the ambient dimension");
  }
  const auto vrep = rays(cone);
  const auto& ineqs = cone.inequalities();
  std::vector<Face> out;
  std::set<std::vector<std::size_t>> seen;
  std::vector<Face> frontier;

  auto top = face_from_rays(cone, vrep, vrep.rays);
  if (top.codim <= max_codim) {
    seen.insert(top.active);
    frontier.push_back(top);
  }
  while (!frontier.empty()) {
    auto face = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      if (std::binary_search(face.active.begin(), face.active.end(), i)) continue;
      std::vector<IntVector> sub;
      for (const auto& r : face.rays) {
        if (dot(ineqs[i].normal, r) == 0) sub.push_back(r);
      }
      auto smaller = face_from_rays(cone, vrep, std::move(sub));
      if (smaller.codim > max_codim || !seen.insert(smaller.active).second) continue;
      frontier.push_back(std::move(smaller));
    }
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return std::tie(a.codim, a.active) < std::tie(b.codim, b.active);
  });
  return out;
}

CutResult cut_by_hyperplanes(const HCone& cone, const std::vector<IntVector>& hyperplanes) {
  HCone cut = cone;
  for (const auto& h : hyperplanes) cut.add_equality(h);
  const auto cut_v = rays(cut);
  const auto vrep = rays(cone);

  // active set of the intersection: tight on all its rays and lineality
  std::vector<IntVector> generators = cut_v.rays;
  for (const auto& l : cut_v.lineality) generators.push_back(l);
  CutResult result;
  result.face = face_from_rays(cone, vrep, generators);
  // if the cone has lineality, inequalities vanish on it already, so
  // face_from_rays sees the same active set as for the intersection
  for (const auto& r : result.face.rays) {
    for (const auto& h : hyperplanes) {
      if (dot(h, r) != 0) result.exact = false;
    }
  }
  for (const auto& l : vrep.lineality) {
    for (const auto& h : hyperplanes) {
      if (dot(h, l) != 0) result.exact = false;
    }
  }
  return result;
}

}  // namespace qcone
