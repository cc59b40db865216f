#include "qcone/representation.hpp"

#include <algorithm>
#include <functional>

namespace qcone {

FiniteFieldRepresentation make_representation(Quiver quiver, DimensionVector dim, FiniteField field,
                                              std::vector<Matrix> maps) {
  require_on_quiver(quiver, dim);
  if (maps.size() != quiver.num_arrows()) {
    throw Error(ErrorKind::DimensionMismatch, "need one matrix per arrow");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& a = quiver.arrows()[i];
    if (maps[i].rows != static_cast<std::size_t>(dim[a.head]) ||
        maps[i].cols != static_cast<std::size_t>(dim[a.tail])) {
      throw Error(ErrorKind::DimensionMismatch, "matrix for arrow '" + a.id + "' has the wrong shape");
    }
    for (auto x : maps[i].data) {
      if (x >= field.order()) throw Error(ErrorKind::Precondition, "matrix entry outside the field");
    }
  }
  return FiniteFieldRepresentation{std::move(quiver), std::move(dim), field, std::move(maps), std::nullopt};
}

FiniteFieldRepresentation random_rep(const Quiver& quiver, const DimensionVector& dim, std::uint64_t p,
                                     std::uint64_t seed, unsigned field_degree, std::uint64_t min_prime) {
  if (p < min_prime) {
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " is below the minimum prime " + std::to_string(min_prime));
  }
  FiniteField field(p, field_degree);
  require_on_quiver(quiver, dim);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(0, static_cast<std::int64_t>(p) - 1);
  std::vector<Matrix> maps;
  for (const auto& a : quiver.arrows()) {
    Matrix m(static_cast<std::size_t>(dim[a.head]), static_cast<std::size_t>(dim[a.tail]));
    for (auto& x : m.data) x = field.from_int(entry(rng));
    maps.push_back(std::move(m));
  }
  auto rep = make_representation(quiver, dim, field, std::move(maps));
  rep.seed = seed;
  return rep;
}

std::int64_t hom_dim(const FiniteFieldRepresentation& r, const FiniteFieldRepresentation& s) {
  if (!(r.field == s.field)) throw Error(ErrorKind::FieldMismatch, "representations over different fields");
  if (!(r.quiver == s.quiver)) throw Error(ErrorKind::MismatchedQuiver, "representations of different quivers");
  const auto& q = r.quiver;
  const auto& field = r.field;
  const auto n = q.num_vertices();
  auto rd = [&](std::size_t v) { return static_cast<std::size_t>(r.dim[v]); };
  auto sd = [&](std::size_t v) { return static_cast<std::size_t>(s.dim[v]); };

  // unknown f_v[i][j], i < s(v), j < r(v)
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + sd(v) * rd(v);
  const auto unknowns = offset[n];
  if (unknowns == 0) return 0;

  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += sd(a.head) * rd(a.tail);
  Matrix system(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
    const auto& a = q.arrows()[ai];
    const auto& ur = r.maps[ai];
    const auto& us = s.maps[ai];
    for (std::size_t i = 0; i < sd(a.head); ++i) {
      for (std::size_t j = 0; j < rd(a.tail); ++j, ++row) {
        // (f_head u_R)[i][j] = sum_k f_head[i][k] u_R[k][j]
        for (std::size_t k = 0; k < rd(a.head); ++k) {
          auto col = offset[a.head] + i * rd(a.head) + k;
          system.at(row, col) = field.add(system.at(row, col), ur.at(k, j));
        }
        // (u_S f_tail)[i][j] = sum_k u_S[i][k] f_tail[k][j]
        for (std::size_t k = 0; k < sd(a.tail); ++k) {
          auto col = offset[a.tail] + k * rd(a.tail) + j;
          system.at(row, col) = field.sub(system.at(row, col), us.at(i, k));
        }
      }
    }
  }
  return static_cast<std::int64_t>(unknowns - rank(field, std::move(system)));
}

namespace {

// Depth-first search over tuples of subspaces U(v) of dimension alpha(v),
// vertices in canonical (topological) order. The visitor returns false to
// stop the search.
class SubspaceSearch {
 public:
  SubspaceSearch(const FiniteFieldRepresentation& r, const DimensionVector& alpha, std::uint64_t budget)
      : rep_(r), alpha_(alpha), budget_(budget), chosen_(r.quiver.num_vertices()) {
    require_on_quiver(r.quiver, alpha);
    if (!alpha.below(r.dim)) throw Error(ErrorKind::NotBelow, to_string(alpha) + " is not below " + to_string(r.dim));
  }

  void run(const std::function<bool()>& on_tuple) {
    on_tuple_ = &on_tuple;
    visit(0);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool visit(std::size_t v) {
    const auto& q = rep_.quiver;
    if (v == q.num_vertices()) return (*on_tuple_)();
    const auto& field = rep_.field;
    const auto width = static_cast<std::size_t>(rep_.dim[v]);
    const auto target = static_cast<std::size_t>(alpha_[v]);

    RowSpace forced(field, width);
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
      const auto& a = q.arrows()[ai];
      if (a.head != v) continue;
      for (const auto& b : chosen_[a.tail]) {
        forced.insert(apply(field, rep_.maps[ai], b));
        if (forced.dimension() > target) return true;
      }
    }

    // complement coordinates: non-pivot columns of the forced span
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < width; ++j) {
      if (!std::binary_search(forced.pivots().begin(), forced.pivots().end(), j)) free_cols.push_back(j);
    }
    const auto extra = target - forced.dimension();
    const auto m = free_cols.size();

    // echelon forms of extra x m matrices: pivot column sets, then free entries
    std::vector<std::size_t> pivots(extra);
    for (std::size_t i = 0; i < extra; ++i) pivots[i] = i;
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < extra; ++i) {
        for (std::size_t j = pivots[i] + 1; j < m; ++j) {
          if (!std::binary_search(pivots.begin(), pivots.end(), j)) slots.emplace_back(i, j);
        }
      }
      std::vector<FiniteField::Element> values(slots.size(), 0);
      for (;;) {
        if (++nodes_ > budget_) {
          throw Error(ErrorKind::TooLarge, "subspace enumeration exceeded the budget of " + std::to_string(budget_));
        }
        auto basis = forced.basis();
        for (std::size_t i = 0; i < extra; ++i) {
          FVector row(width, 0);
          row[free_cols[pivots[i]]] = 1;
          basis.push_back(std::move(row));
        }
        for (std::size_t t = 0; t < slots.size(); ++t) {
          auto [i, j] = slots[t];
          basis[forced.dimension() + i][free_cols[j]] = values[t];
        }
        chosen_[v] = std::move(basis);
        if (!visit(v + 1)) return false;

        std::size_t t = 0;
        while (t < values.size() && ++values[t] == field.order()) values[t++] = 0;
        if (t == values.size()) break;
      }
      // next pivot combination
      std::size_t i = extra;
      while (i > 0 && pivots[i - 1] == m - extra + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t k = i; k < extra; ++k) pivots[k] = pivots[k - 1] + 1;
    }
    return true;
  }

  const FiniteFieldRepresentation& rep_;
  const DimensionVector& alpha_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<FVector>> chosen_;
  const std::function<bool()>* on_tuple_ = nullptr;
};

}  // namespace

SubrepCount count_subreps(const FiniteFieldRepresentation& r, const DimensionVector& alpha, std::uint64_t budget) {
  SubspaceSearch search(r, alpha, budget);
  std::int64_t count = 0;
  search.run([&] {
    ++count;
    return true;
  });
  SubrepCount result{alpha, count, false, {}};
  result.evidence.push_back(CountEvidence{r.field.characteristic(), r.field.degree(), r.seed.value_or(0), count,
                                          search.nodes()});
  return result;
}

bool has_subrep(const FiniteFieldRepresentation& r, const DimensionVector& alpha, std::uint64_t budget) {
  SubspaceSearch search(r, alpha, budget);
  bool found = false;
  search.run([&] {
    found = true;
    return false;
  });
  return found;
}

std::vector<DimensionVector> box_below(const DimensionVector& bound) {
  std::vector<DimensionVector> out;
  std::vector<std::int64_t> current(bound.size(), 0);
  for (;;) {
    out.emplace_back(current);
    std::size_t i = bound.size();
    while (i > 0 && current[i - 1] == bound[i - 1]) current[--i] = 0;
    if (i == 0) break;
    ++current[i - 1];
  }
  return out;
}

std::vector<DimensionVector> subrep_dimension_vectors(const FiniteFieldRepresentation& r, std::uint64_t budget) {
  std::vector<DimensionVector> out;
  for (auto& alpha : box_below(r.dim)) {
    if (has_subrep(r, alpha, budget)) out.push_back(std::move(alpha));
  }
  return out;
}

bool is_semistable(const FiniteFieldRepresentation& r, const Weight& sigma, std::uint64_t budget) {
  require_on_quiver(r.quiver, sigma);
  if (weight_apply(sigma, r.dim) != 0) return false;
  for (const auto& alpha : box_below(r.dim)) {
    if (weight_apply(sigma, alpha) <= 0) continue;
    if (has_subrep(r, alpha, budget)) return false;
  }
  return true;
}

}  // namespace qcone
