#pragma once

// Arithmetic over F_q, q = p^k with k <= 3, and dense linear algebra over it.
// Elements are encoded as integers sum_i a_i p^i with 0 <= a_i < p.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qcone {

bool is_prime(std::uint64_t n);

// splitmix64 step; used to derive independent seeds from (base, tags)
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag);

class FiniteField {
 public:
  using Element = std::uint64_t;

  // Throws BadPrime when p is not prime; Precondition unless 1 <= degree <= 3.
  explicit FiniteField(std::uint64_t p, unsigned degree = 1);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return q_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  Element from_int(std::int64_t v) const;
  Element random(std::mt19937_64& rng) const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && degree_ == other.degree_;
  }

 private:
  std::uint64_t p_;
  unsigned degree_;
  std::uint64_t q_;
  // monic modulus x^k + c[k-1] x^{k-1} + ... + c[0]
  std::vector<std::uint64_t> modulus_;
};

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FiniteField::Element> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  FiniteField::Element& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  FiniteField::Element at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using FVector = std::vector<FiniteField::Element>;

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(const FiniteField& field, Matrix& m);
std::size_t rank(const FiniteField& field, Matrix m);

// Incrementally maintained row space in reduced echelon form.
class RowSpace {
 public:
  RowSpace(const FiniteField& field, std::size_t width) : field_(&field), width_(width) {}
  // Returns true when the vector enlarged the span.
  bool insert(FVector v);
  bool contains(FVector v) const;
  std::size_t dimension() const { return rows_.size(); }
  const std::vector<FVector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void reduce(FVector& v) const;
  const FiniteField* field_;
  std::size_t width_;
  std::vector<FVector> rows_;
  std::vector<std::size_t> pivots_;
};

FVector apply(const FiniteField& field, const Matrix& m, std::span<const FiniteField::Element> v);

}  // namespace qcone
