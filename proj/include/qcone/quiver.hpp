#pragma once

// Quivers without oriented cycles, dimension vectors, weights and
// decompositions. Everything here is exact integer arithmetic.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcone/error.hpp"

namespace qcone {

struct Arrow {
  std::string id;
  std::size_t tail;  // vertex index in canonical order
  std::size_t head;
  bool operator==(const Arrow&) const = default;
};

struct RawArrow {
  std::string id;
  std::string tail;
  std::string head;
};

// Vertices are stored in canonical order: a topological order of the arrows,
// ties broken by the smallest vertex id. All vectors indexed by vertex use
// this order.
class Quiver {
 public:
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& declared_vertices() const { return declared_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  std::size_t index_of(std::string_view vertex_id) const;
  // canonical index of the i-th declared vertex
  std::size_t canonical_index_of_declared(std::size_t declared_position) const {
    return declared_to_canonical_[declared_position];
  }

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

 private:
  friend Quiver validate_quiver(const std::vector<std::string>&, const std::vector<RawArrow>&);
  std::vector<std::string> vertices_;
  std::vector<std::string> declared_;
  std::vector<std::size_t> declared_to_canonical_;
  std::vector<Arrow> arrows_;
};

// Throws CyclicQuiver, DuplicateId or UnknownVertex.
Quiver validate_quiver(const std::vector<std::string>& vertices, const std::vector<RawArrow>& arrows);

// Equioriented A_n: 1 -> 2 -> ... -> n.
Quiver linear_quiver(std::size_t n);
// Generalized Kronecker quiver with m arrows 1 -> 2.
Quiver kronecker_quiver(std::size_t m);

class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<std::int64_t> entries);
  DimensionVector(std::initializer_list<std::int64_t> entries)
      : DimensionVector(std::vector<std::int64_t>(entries)) {}

  static DimensionVector zero(std::size_t n) { return DimensionVector(std::vector<std::int64_t>(n, 0)); }
  static DimensionVector unit(std::size_t n, std::size_t vertex);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  std::int64_t total() const;
  // gcd of the entries; precondition: not the zero vector
  std::int64_t gcd() const;
  // componentwise <=
  bool below(const DimensionVector& other) const;

  DimensionVector operator+(const DimensionVector& other) const;
  // throws Precondition when the difference has a negative entry
  DimensionVector operator-(const DimensionVector& other) const;
  DimensionVector operator*(std::int64_t k) const;
  DimensionVector divided_by(std::int64_t k) const;

  auto operator<=>(const DimensionVector&) const = default;
  bool operator==(const DimensionVector&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

std::string to_string(const DimensionVector& v);

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  Weight(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  static Weight zero(std::size_t n) { return Weight(std::vector<std::int64_t>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  Weight operator+(const Weight& other) const;
  Weight operator*(std::int64_t k) const;
  Weight operator-() const { return *this * -1; }

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  std::vector<std::int64_t> entries_;
};

std::string to_string(const Weight& w);

// Sequence of nonzero dimension vectors (beta_1, ..., beta_s).
class OrderedDecomposition {
 public:
  explicit OrderedDecomposition(std::vector<DimensionVector> parts);

  std::size_t length() const { return parts_.size(); }
  const std::vector<DimensionVector>& parts() const { return parts_; }
  const DimensionVector& operator[](std::size_t k) const { return parts_[k]; }
  DimensionVector total() const;

  auto operator<=>(const OrderedDecomposition&) const = default;
  bool operator==(const OrderedDecomposition&) const = default;

 private:
  std::vector<DimensionVector> parts_;
};

std::string to_string(const OrderedDecomposition& d);

// Family of dimension vectors indexed by integers, almost all zero. Only the
// nonzero parts are stored.
using ZDecomposition = std::map<std::int64_t, DimensionVector>;

// <a,b> = sum_s a(s)b(s) - sum_arrows a(tail)b(head)
std::int64_t euler_form(const Quiver& quiver, const DimensionVector& a, const DimensionVector& b);
// Same bilinear form on arbitrary integer vectors.
std::int64_t euler_form(const Quiver& quiver, std::span<const std::int64_t> a, std::span<const std::int64_t> b);

std::int64_t weight_apply(const Weight& sigma, const DimensionVector& alpha);

// sigma_beta(x) = <beta,x> - <x,beta>
Weight canonical_weight(const Quiver& quiver, const DimensionVector& beta);

// Weight of the one-parameter subgroup attached to the decomposition on the
// fiber of L(n, sigma) over the origin: sum_k (s+1-k) sigma(beta_k).
std::int64_t mu(std::int64_t n, const Weight& sigma, const OrderedDecomposition& decomposition);

// beta_k goes to index s+1-k, so the first part carries the highest weight.
ZDecomposition z_from_ordered(const OrderedDecomposition& decomposition);

void require_on_quiver(const Quiver& quiver, const DimensionVector& v);
void require_on_quiver(const Quiver& quiver, const Weight& w);

}  // namespace qcone
