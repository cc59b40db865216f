#include "qcone/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace qcone {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CyclicQuiver: return "CyclicQuiver";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MismatchedQuiver: return "MismatchedQuiver";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::NegativeExt: return "NegativeExt";
    case ErrorKind::NotBelow: return "NotBelow";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::Budget: return "Budget";
    case ErrorKind::NotWellCovering: return "NotWellCovering";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

std::size_t Quiver::index_of(std::string_view vertex_id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), vertex_id);
  if (it == vertices_.end()) {
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + std::string(vertex_id) + "'");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

Quiver validate_quiver(const std::vector<std::string>& vertices, const std::vector<RawArrow>& arrows) {
  std::unordered_map<std::string, std::size_t> declared_index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!declared_index.emplace(vertices[i], i).second) {
      throw Error(ErrorKind::DuplicateId, "vertex '" + vertices[i] + "' declared twice");
    }
  }
  std::set<std::string> arrow_ids;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& a : arrows) {
    if (!arrow_ids.insert(a.id).second) {
      throw Error(ErrorKind::DuplicateId, "arrow '" + a.id + "' declared twice");
    }
    auto t = declared_index.find(a.tail);
    auto h = declared_index.find(a.head);
    if (t == declared_index.end() || h == declared_index.end()) {
      throw Error(ErrorKind::UnknownVertex, "arrow '" + a.id + "' refers to an undeclared vertex");
    }
    ends.emplace_back(t->second, h->second);
  }

  // Kahn's algorithm; among available vertices take the smallest id.
  std::vector<std::size_t> indegree(vertices.size(), 0);
  for (auto [t, h] : ends) ++indegree[h];
  auto by_id = [&](std::size_t a, std::size_t b) { return vertices[a] > vertices[b]; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_id)> ready(by_id);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto [t, h] : ends) {
      if (t == v && --indegree[h] == 0) ready.push(h);
    }
  }
  if (order.size() != vertices.size()) {
    throw Error(ErrorKind::CyclicQuiver, "the arrows contain an oriented cycle");
  }

  Quiver q;
  q.declared_ = vertices;
  q.declared_to_canonical_.assign(vertices.size(), 0);
  for (std::size_t c = 0; c < order.size(); ++c) {
    q.vertices_.push_back(vertices[order[c]]);
    q.declared_to_canonical_[order[c]] = c;
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    q.arrows_.push_back(Arrow{arrows[i].id, q.declared_to_canonical_[ends[i].first],
                              q.declared_to_canonical_[ends[i].second]});
  }
  return q;
}

Quiver linear_quiver(std::size_t n) {
  std::vector<std::string> vertices;
  std::vector<RawArrow> arrows;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  }
  return validate_quiver(vertices, arrows);
}

Quiver kronecker_quiver(std::size_t m) {
  std::vector<RawArrow> arrows;
  for (std::size_t i = 1; i <= m; ++i) arrows.push_back({"a" + std::to_string(i), "1", "2"});
  return validate_quiver({"1", "2"}, arrows);
}

DimensionVector::DimensionVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (auto e : entries_) {
    if (e < 0) throw Error(ErrorKind::Precondition, "dimension vectors have nonnegative entries");
  }
}

DimensionVector DimensionVector::unit(std::size_t n, std::size_t vertex) {
  std::vector<std::int64_t> e(n, 0);
  e.at(vertex) = 1;
  return DimensionVector(std::move(e));
}

bool DimensionVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

std::int64_t DimensionVector::total() const { return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0}); }

std::int64_t DimensionVector::gcd() const {
  if (is_zero()) throw Error(ErrorKind::Precondition, "gcd of the zero dimension vector");
  std::int64_t g = 0;
  for (auto e : entries_) g = std::gcd(g, e);
  return g;
}

bool DimensionVector::below(const DimensionVector& other) const {
  if (size() != other.size()) throw Error(ErrorKind::MismatchedQuiver, "dimension vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

DimensionVector DimensionVector::operator+(const DimensionVector& other) const {
  if (size() != other.size()) throw Error(ErrorKind::MismatchedQuiver, "dimension vectors of different length");
  auto e = entries_;
  for (std::size_t i = 0; i < size(); ++i) e[i] += other.entries_[i];
  return DimensionVector(std::move(e));
}

DimensionVector DimensionVector::operator-(const DimensionVector& other) const {
  if (size() != other.size()) throw Error(ErrorKind::MismatchedQuiver, "dimension vectors of different length");
  auto e = entries_;
  for (std::size_t i = 0; i < size(); ++i) e[i] -= other.entries_[i];
  return DimensionVector(std::move(e));
}

DimensionVector DimensionVector::operator*(std::int64_t k) const {
  if (k < 0) throw Error(ErrorKind::Precondition, "negative multiple of a dimension vector");
  auto e = entries_;
  for (auto& x : e) x *= k;
  return DimensionVector(std::move(e));
}

DimensionVector DimensionVector::divided_by(std::int64_t k) const {
  auto e = entries_;
  for (auto& x : e) {
    if (k <= 0 || x % k != 0) throw Error(ErrorKind::Precondition, "not divisible");
    x /= k;
  }
  return DimensionVector(std::move(e));
}

namespace {
std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}
}  // namespace

std::string to_string(const DimensionVector& v) { return join(v.entries()); }
std::string to_string(const Weight& w) { return join(w.entries()); }

Weight Weight::operator+(const Weight& other) const {
  if (size() != other.size()) throw Error(ErrorKind::MismatchedQuiver, "weights of different length");
  auto e = entries_;
  for (std::size_t i = 0; i < size(); ++i) e[i] += other.entries_[i];
  return Weight(std::move(e));
}

Weight Weight::operator*(std::int64_t k) const {
  auto e = entries_;
  for (auto& x : e) x *= k;
  return Weight(std::move(e));
}

OrderedDecomposition::OrderedDecomposition(std::vector<DimensionVector> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorKind::Precondition, "an ordered decomposition has at least one part");
  for (const auto& p : parts_) {
    if (p.size() != parts_.front().size()) throw Error(ErrorKind::MismatchedQuiver, "parts of different length");
    if (p.is_zero()) throw Error(ErrorKind::Precondition, "ordered decompositions have nonzero parts");
  }
}

DimensionVector OrderedDecomposition::total() const {
  auto sum = DimensionVector::zero(parts_.front().size());
  for (const auto& p : parts_) sum = sum + p;
  return sum;
}

std::string to_string(const OrderedDecomposition& d) {
  std::string s = "(";
  for (std::size_t k = 0; k < d.length(); ++k) {
    if (k) s += " + ";
    s += to_string(d[k]);
  }
  return s + ")";
}

void require_on_quiver(const Quiver& quiver, const DimensionVector& v) {
  if (v.size() != quiver.num_vertices()) {
    throw Error(ErrorKind::MismatchedQuiver, "dimension vector " + to_string(v) + " does not match the quiver");
  }
}

void require_on_quiver(const Quiver& quiver, const Weight& w) {
  if (w.size() != quiver.num_vertices()) {
    throw Error(ErrorKind::MismatchedQuiver, "weight " + to_string(w) + " does not match the quiver");
  }
}

std::int64_t euler_form(const Quiver& quiver, std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() != quiver.num_vertices() || b.size() != quiver.num_vertices()) {
    throw Error(ErrorKind::MismatchedQuiver, "vector length does not match the quiver");
  }
  std::int64_t value = 0;
  for (std::size_t s = 0; s < a.size(); ++s) value += a[s] * b[s];
  for (const auto& arrow : quiver.arrows()) value -= a[arrow.tail] * b[arrow.head];
  return value;
}

std::int64_t euler_form(const Quiver& quiver, const DimensionVector& a, const DimensionVector& b) {
  return euler_form(quiver, std::span(a.entries()), std::span(b.entries()));
}

std::int64_t weight_apply(const Weight& sigma, const DimensionVector& alpha) {
  if (sigma.size() != alpha.size()) throw Error(ErrorKind::MismatchedQuiver, "weight and dimension vector differ in length");
  std::int64_t value = 0;
  for (std::size_t s = 0; s < alpha.size(); ++s) value += sigma[s] * alpha[s];
  return value;
}

Weight canonical_weight(const Quiver& quiver, const DimensionVector& beta) {
  require_on_quiver(quiver, beta);
  std::vector<std::int64_t> coefficients(quiver.num_vertices());
  for (std::size_t x = 0; x < coefficients.size(); ++x) {
    auto e = DimensionVector::unit(quiver.num_vertices(), x);
    coefficients[x] = euler_form(quiver, beta, e) - euler_form(quiver, e, beta);
  }
  return Weight(std::move(coefficients));
}

std::int64_t mu(std::int64_t /*n*/, const Weight& sigma, const OrderedDecomposition& decomposition) {
  const auto s = static_cast<std::int64_t>(decomposition.length());
  std::int64_t value = 0;
  for (std::int64_t k = 1; k <= s; ++k) {
    value += (s + 1 - k) * weight_apply(sigma, decomposition[static_cast<std::size_t>(k - 1)]);
  }
  return value;
}

ZDecomposition z_from_ordered(const OrderedDecomposition& decomposition) {
  ZDecomposition z;
  const auto s = static_cast<std::int64_t>(decomposition.length());
  for (std::int64_t k = 1; k <= s; ++k) z.emplace(s + 1 - k, decomposition[static_cast<std::size_t>(k - 1)]);
  return z;
}

}  // namespace qcone
