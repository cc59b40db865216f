#include "qcone/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace qcone {

SubrepCount alpha_circ_beta(const GenericCalculus& calculus, const DimensionVector& alpha,
                            const DimensionVector& beta, const CountPolicy& policy) {
  const auto& quiver = calculus.quiver();
  require_on_quiver(quiver, alpha);
  require_on_quiver(quiver, beta);
  SubrepCount result{alpha, 0, false, {}};
  if (calculus.ext(alpha, beta) != 0) return result;
  if (euler_form(quiver, alpha, beta) != 0) {
    result.infinite = true;
    return result;
  }
  if (policy.primes.size() < 2 || policy.seeds_per_prime < 3) {
    throw Error(ErrorKind::Precondition, "counting needs at least 2 primes and 3 seeds per prime");
  }
  const auto total = alpha + beta;
  for (std::size_t pi = 0; pi < policy.primes.size(); ++pi) {
    for (std::size_t t = 0; t < policy.seeds_per_prime; ++t) {
      const auto seed = mix_seed(policy.seed, (static_cast<std::uint64_t>(pi) << 32) | t);
      auto rep = random_rep(quiver, total, policy.primes[pi], seed, policy.field_degree);
      auto sample = count_subreps(rep, alpha, policy.budget);
      result.evidence.push_back(sample.evidence.front());
    }
  }
  const auto first = result.evidence.front().raw_count;
  bool stable = std::all_of(result.evidence.begin(), result.evidence.end(),
                            [&](const CountEvidence& e) { return e.raw_count == first; });
  if (!stable) {
    throw InconclusiveCount("subrepresentation counts for " + to_string(alpha) + " o " + to_string(beta) +
                                " disagree across samples",
                            result);
  }
  result.count = first;
  return result;
}

SubrepCount alpha_circ_beta(const Quiver& quiver, const DimensionVector& alpha, const DimensionVector& beta,
                            const CountPolicy& policy) {
  return alpha_circ_beta(GenericCalculus(quiver), alpha, beta, policy);
}

namespace {

using Element = FiniteField::Element;

// Monomials of degree <= 8 in < 255 variables, packed as sorted 8-bit
// variable indices.
using MonoKey = std::uint64_t;

MonoKey pack(const std::vector<std::size_t>& vars) {
  MonoKey k = 0;
  for (auto v : vars) k = (k << 8) | static_cast<MonoKey>(v + 1);
  return k;
}

std::vector<std::size_t> unpack(MonoKey k) {
  std::vector<std::size_t> vars;
  while (k) {
    vars.push_back(static_cast<std::size_t>(k & 0xff) - 1);
    k >>= 8;
  }
  std::reverse(vars.begin(), vars.end());
  return vars;
}

struct Variable {
  std::size_t arrow;
  std::size_t row;  // basis index at the head
  std::size_t col;  // basis index at the tail
};

struct DegreeBasis {
  std::vector<MonoKey> monomials;
  std::unordered_map<MonoKey, std::uint32_t> index;
};

DegreeBasis monomials_of_degree(std::size_t nvars, std::size_t degree) {
  DegreeBasis basis;
  std::vector<std::size_t> vars(degree, 0);
  for (;;) {
    basis.index.emplace(pack(vars), static_cast<std::uint32_t>(basis.monomials.size()));
    basis.monomials.push_back(pack(vars));
    std::size_t i = degree;
    while (i > 0 && vars[i - 1] == nvars - 1) --i;
    if (i == 0) break;
    ++vars[i - 1];
    for (std::size_t k = i; k < degree; ++k) vars[k] = vars[i - 1];
  }
  return basis;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX / 2) return UINT64_MAX / 2;
  }
  return static_cast<std::uint64_t>(r);
}

// Random invertible matrix with its inverse and determinant.
struct GroupFactor {
  Matrix g;
  Matrix g_inverse;
  Element det = 1;
};

GroupFactor random_invertible(const FiniteField& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    GroupFactor f{Matrix(n, n), Matrix(n, n), 1};
    for (auto& x : f.g.data) x = field.random(rng);
    // Gauss-Jordan on [g | I]
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = f.g.at(i, j);
      aug.at(i, n + i) = 1;
    }
    Element det = 1;
    bool singular = false;
    for (std::size_t col = 0; col < n && !singular; ++col) {
      std::size_t p = col;
      while (p < n && aug.at(p, col) == 0) ++p;
      if (p == n) {
        singular = true;
        break;
      }
      if (p != col) {
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(p, j), aug.at(col, j));
        det = field.neg(det);
      }
      det = field.mul(det, aug.at(col, col));
      auto inv = field.inv(aug.at(col, col));
      for (std::size_t j = 0; j < 2 * n; ++j) aug.at(col, j) = field.mul(aug.at(col, j), inv);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || aug.at(i, col) == 0) continue;
        auto factor = aug.at(i, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(i, j) = field.sub(aug.at(i, j), field.mul(factor, aug.at(col, j)));
      }
    }
    if (singular) continue;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) f.g_inverse.at(i, j) = aug.at(i, n + j);
    }
    f.det = det;
    return f;
  }
}

// Substitution R -> g.R on polynomials; m(g.R) is memoized per monomial.
class Substitution {
 public:
  Substitution(const FiniteField& field, std::vector<std::vector<std::pair<std::size_t, Element>>> linear_forms,
               const std::vector<DegreeBasis>& bases)
      : field_(field), forms_(std::move(linear_forms)), bases_(bases) {}

  // Sparse polynomial over the degree-k basis.
  const std::vector<std::pair<std::uint32_t, Element>>& expand(MonoKey m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    auto vars = unpack(m);
    std::vector<std::pair<std::uint32_t, Element>> result;
    if (vars.empty()) {
      result.emplace_back(0, 1);
    } else {
      const auto first = vars.front();
      std::vector<std::size_t> rest(vars.begin() + 1, vars.end());
      const auto& tail = expand(pack(rest));
      const auto& prev_basis = bases_[rest.size()];
      const auto& basis = bases_[vars.size()];
      std::unordered_map<std::uint32_t, Element> acc;
      for (const auto& [idx, c] : tail) {
        auto mono = unpack(prev_basis.monomials[idx]);
        for (const auto& [w, cw] : forms_[first]) {
          auto product = mono;
          product.insert(std::upper_bound(product.begin(), product.end(), w), w);
          auto target = basis.index.at(pack(product));
          auto& slot = acc[target];
          slot = field_.add(slot, field_.mul(c, cw));
        }
      }
      for (const auto& [idx, c] : acc) {
        if (c != 0) result.emplace_back(idx, c);
      }
      std::sort(result.begin(), result.end());
    }
    return memo_.emplace(m, std::move(result)).first->second;
  }

 private:
  const FiniteField& field_;
  std::vector<std::vector<std::pair<std::size_t, Element>>> forms_;
  const std::vector<DegreeBasis>& bases_;
  std::unordered_map<MonoKey, std::vector<std::pair<std::uint32_t, Element>>> memo_;
};

}  // namespace

SemiInvariantWeights si_weights_by_degree(const Quiver& quiver, const DimensionVector& beta, std::int64_t max_degree,
                                          const SemiInvariantPolicy& policy) {
  require_on_quiver(quiver, beta);
  if (max_degree < 0) throw Error(ErrorKind::Precondition, "negative degree bound");
  if (max_degree > 8) throw Error(ErrorKind::Budget, "degree bound above 8 is outside the supported range");
  const FiniteField field(policy.prime);
  const auto n = quiver.num_vertices();

  std::vector<std::size_t> basis_offset(n + 1, 0);
  for (std::size_t s = 0; s < n; ++s) basis_offset[s + 1] = basis_offset[s] + static_cast<std::size_t>(beta[s]);
  std::vector<Variable> variables;
  for (std::size_t ai = 0; ai < quiver.num_arrows(); ++ai) {
    const auto& a = quiver.arrows()[ai];
    for (std::int64_t i = 0; i < beta[a.head]; ++i) {
      for (std::int64_t j = 0; j < beta[a.tail]; ++j) {
        variables.push_back({ai, static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
      }
    }
  }
  if (variables.size() >= 255) throw Error(ErrorKind::Budget, "too many coordinates for the monomial encoding");
  const auto nvars = variables.size();
  const auto max_beta = *std::max_element(beta.begin(), beta.end());

  SemiInvariantWeights out;
  out.prime = policy.prime;
  for (std::size_t s = 0; s < n; ++s) {
    if (beta[s] == 0) out.free_vertices.push_back(s);
  }

  std::vector<DegreeBasis> bases;
  for (std::int64_t d = 0; d <= max_degree; ++d) {
    const auto count = nvars == 0 ? (d == 0 ? 1 : 0) : binomial(nvars + static_cast<std::uint64_t>(d) - 1,
                                                                 static_cast<std::uint64_t>(d));
    if (count > policy.monomial_budget) {
      throw Error(ErrorKind::Budget, "degree " + std::to_string(d) + " has " + std::to_string(count) +
                                         " monomials, above the budget " + std::to_string(policy.monomial_budget));
    }
    if (nvars == 0) {
      bases.push_back(DegreeBasis{});
      if (d == 0) {
        bases.back().monomials.push_back(0);
        bases.back().index.emplace(0, 0);
      }
    } else {
      bases.push_back(monomials_of_degree(nvars, static_cast<std::size_t>(d)));
    }
  }

  for (std::int64_t d = 0; d <= max_degree; ++d) {
    const auto& basis = bases[static_cast<std::size_t>(d)];
    // torus weights: a monomial is a candidate iff its weight is constant on
    // the basis of every vertex
    std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t idx = 0; idx < basis.monomials.size(); ++idx) {
      std::vector<std::int64_t> torus(basis_offset[n], 0);
      for (auto v : unpack(basis.monomials[idx])) {
        const auto& var = variables[v];
        const auto& a = quiver.arrows()[var.arrow];
        ++torus[basis_offset[a.head] + var.row];
        --torus[basis_offset[a.tail] + var.col];
      }
      std::vector<std::int64_t> tau(n, 0);
      bool uniform = true;
      for (std::size_t s = 0; s < n && uniform; ++s) {
        if (beta[s] == 0) continue;
        tau[s] = torus[basis_offset[s]];
        for (auto b = basis_offset[s]; b < basis_offset[s + 1]; ++b) {
          if (torus[b] != tau[s]) uniform = false;
        }
      }
      if (uniform) groups[tau].push_back(idx);
    }
    if (groups.empty()) continue;

    struct GroupState {
      std::vector<std::int64_t> tau;
      std::vector<std::uint32_t> monomials;
      RowSpace rows;
      bool done = false;
      std::size_t used = 0;
    };
    std::vector<GroupState> states;
    for (auto& [tau, monos] : groups) {
      states.push_back(GroupState{tau, monos, RowSpace(field, monos.size())});
      std::int64_t bound = 2 * d * max_beta;
      for (std::size_t s = 0; s < n; ++s) bound += std::abs(tau[s]) * beta[s];
      out.bound_numerator = std::max(out.bound_numerator, bound);
    }

    for (std::size_t round = 0;; ++round) {
      if (std::all_of(states.begin(), states.end(), [](const GroupState& g) { return g.done; })) break;
      std::mt19937_64 rng(mix_seed(policy.seed, (static_cast<std::uint64_t>(d) << 32) | round));
      std::vector<GroupFactor> g;
      for (std::size_t s = 0; s < n; ++s) g.push_back(random_invertible(field, static_cast<std::size_t>(beta[s]), rng));

      // coordinate (a,i,j) of g.R = sum_{k,l} g_head[i][k] x_{a,k,l} g_tail^{-1}[l][j]
      std::vector<std::vector<std::pair<std::size_t, Element>>> forms(nvars);
      for (std::size_t v = 0; v < nvars; ++v) {
        const auto& var = variables[v];
        const auto& a = quiver.arrows()[var.arrow];
        for (std::size_t w = 0; w < nvars; ++w) {
          const auto& other = variables[w];
          if (other.arrow != var.arrow) continue;
          auto c = field.mul(g[a.head].g.at(var.row, other.row), g[a.tail].g_inverse.at(other.col, var.col));
          if (c != 0) forms[v].emplace_back(w, c);
        }
      }
      Substitution subst(field, std::move(forms), bases);

      for (auto& state : states) {
        if (state.done) continue;
        Element chi = 1;
        for (std::size_t s = 0; s < n; ++s) {
          if (beta[s] == 0 || state.tau[s] == 0) continue;
          auto base = state.tau[s] > 0 ? g[s].det : field.inv(g[s].det);
          chi = field.mul(chi, field.pow(base, static_cast<std::uint64_t>(std::abs(state.tau[s]))));
        }
        // rows: coefficient of each degree-d monomial in f(g.R) - chi f(R)
        std::map<std::uint32_t, FVector> equations;
        const auto width = state.monomials.size();
        for (std::size_t c = 0; c < width; ++c) {
          const auto m = state.monomials[c];
          for (const auto& [idx, coef] : subst.expand(basis.monomials[m])) {
            auto& row = equations.try_emplace(idx, FVector(width, 0)).first->second;
            row[c] = field.add(row[c], coef);
          }
          auto& row = equations.try_emplace(m, FVector(width, 0)).first->second;
          row[c] = field.sub(row[c], chi);
        }
        bool grew = false;
        for (auto& [idx, row] : equations) grew = state.rows.insert(std::move(row)) || grew;
        ++state.used;
        if (state.rows.dimension() == width || (state.used >= policy.repetitions && !grew)) state.done = true;
      }
    }

    for (const auto& state : states) {
      auto dim = static_cast<std::int64_t>(state.monomials.size() - state.rows.dimension());
      if (dim == 0) continue;
      std::vector<std::int64_t> sigma(n);
      for (std::size_t s = 0; s < n; ++s) sigma[s] = -state.tau[s];
      out.spaces.push_back(WeightSpace{Weight(std::move(sigma)), d, dim, state.used});
    }
  }
  std::sort(out.spaces.begin(), out.spaces.end(), [](const WeightSpace& a, const WeightSpace& b) {
    return std::tie(a.degree, a.sigma) < std::tie(b.degree, b.sigma);
  });
  return out;
}

std::vector<Weight> primitive_weights(const SemiInvariantWeights& weights) {
  std::vector<Weight> out;
  for (const auto& space : weights.spaces) {
    std::int64_t g = 0;
    for (auto e : space.sigma.entries()) g = std::gcd(g, e);
    if (g == 0) continue;
    auto entries = space.sigma.entries();
    for (auto& e : entries) e /= g;
    out.emplace_back(std::move(entries));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qcone
