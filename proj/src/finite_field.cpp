#include "qcone/finite_field.hpp"

#include <algorithm>

#include "qcone/error.hpp"

namespace qcone {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

bool has_root(const std::vector<std::uint64_t>& monic_low, std::uint64_t p) {
  const auto k = monic_low.size();
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t value = 1;  // leading coefficient, Horner
    for (std::size_t i = k; i-- > 0;) value = (mulmod(value, x, p) + monic_low[i]) % p;
    if (value == 0) return true;
  }
  return false;
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned degree) : p_(p), degree_(degree), q_(1) {
  if (!is_prime(p)) throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not prime");
  if (degree < 1 || degree > 3) throw Error(ErrorKind::Precondition, "field extension degree must be 1, 2 or 3");
  for (unsigned i = 0; i < degree; ++i) {
    if (q_ > (std::uint64_t{1} << 62) / p) throw Error(ErrorKind::Precondition, "field too large");
    q_ *= p;
  }
  if (degree > 1) {
    // smallest monic polynomial without roots, in lexicographic order of the
    // low coefficients; for degree <= 3 that means irreducible
    modulus_.assign(degree, 0);
    for (std::uint64_t code = 0;; ++code) {
      auto c = code;
      for (unsigned i = 0; i < degree; ++i) {
        modulus_[i] = c % p;
        c /= p;
      }
      if (modulus_[0] != 0 && !has_root(modulus_, p)) break;
    }
  }
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (degree_ == 1) {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  if (degree_ == 1) return a >= b ? a - b : a + p_ - b;
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    r += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (degree_ == 1) return mulmod(a, b, p_);
  std::vector<std::uint64_t> x(degree_), y(degree_), prod(2 * degree_ - 1, 0);
  for (unsigned i = 0; i < degree_; ++i) {
    x[i] = a % p_;
    y[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < degree_; ++i) {
    for (unsigned j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p_)) % p_;
  }
  // x^k = -sum c_i x^i
  for (std::size_t top = prod.size(); top-- > degree_;) {
    auto lead = prod[top];
    if (lead == 0) continue;
    prod[top] = 0;
    for (unsigned i = 0; i < degree_; ++i) {
      auto shift = top - degree_ + i;
      prod[shift] = (prod[shift] + p_ - mulmod(lead, modulus_[i], p_)) % p_;
    }
  }
  Element r = 0, scale = 1;
  for (unsigned i = 0; i < degree_; ++i) {
    r += prod[i] * scale;
    scale *= p_;
  }
  return r;
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::Precondition, "inverse of zero");
  return pow(a, q_ - 2);
}

FiniteField::Element FiniteField::from_int(std::int64_t v) const {
  auto p = static_cast<std::int64_t>(p_);
  return static_cast<Element>(((v % p) + p) % p);
}

FiniteField::Element FiniteField::random(std::mt19937_64& rng) const {
  // rejection sampling keeps the distribution uniform and platform independent
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % q_;
  for (;;) {
    auto r = rng();
    if (r < limit) return r % q_;
  }
}

std::vector<std::size_t> row_reduce(const FiniteField& field, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
    }
    auto scale = field.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = field.mul(m.at(row, j), scale);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      auto factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) {
        m.at(i, j) = field.sub(m.at(i, j), field.mul(factor, m.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const FiniteField& field, Matrix m) { return row_reduce(field, m).size(); }

void RowSpace::reduce(FVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto c = v[pivots_[r]];
    if (c == 0) continue;
    for (std::size_t j = pivots_[r]; j < width_; ++j) v[j] = field_->sub(v[j], field_->mul(c, rows_[r][j]));
  }
}

bool RowSpace::insert(FVector v) {
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
  if (lead == v.end()) return false;
  auto col = static_cast<std::size_t>(lead - v.begin());
  auto scale = field_->inv(v[col]);
  for (std::size_t j = col; j < width_; ++j) v[j] = field_->mul(v[j], scale);
  // keep the basis fully reduced
  for (auto& row : rows_) {
    auto c = row[col];
    if (c == 0) continue;
    for (std::size_t j = col; j < width_; ++j) row[j] = field_->sub(row[j], field_->mul(c, v[j]));
  }
  auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), col);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  return true;
}

bool RowSpace::contains(FVector v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

FVector apply(const FiniteField& field, const Matrix& m, std::span<const FiniteField::Element> v) {
  FVector out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    FiniteField::Element acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (m.at(i, j) && v[j]) acc = field.add(acc, field.mul(m.at(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace qcone
