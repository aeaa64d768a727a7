#include "detm/exponent.hpp"

#include <algorithm>
#include <numeric>

#include "detm/errors.hpp"

namespace detm {

namespace {

void require_same_size(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw InputError("exponent vectors of different lengths");
}

}  // namespace

Exponent::Exponent(std::initializer_list<value_type> entries) : Exponent(std::vector<value_type>(entries)) {}

Exponent::Exponent(std::vector<value_type> entries)
    : entries_(std::move(entries)), degree_(std::accumulate(entries_.begin(), entries_.end(), 0u)) {}

void Exponent::set(std::size_t i, value_type v) {
  degree_ = degree_ - entries_.at(i) + v;
  entries_[i] = v;
}

bool Exponent::divides(const Exponent& other) const {
  require_same_size(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  require_same_size(a, b);
  Exponent r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  if (!b.divides(a)) throw InputError("exponent subtraction requires divisibility");
  Exponent r = a;
  for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  require_same_size(a, b);
  std::vector<Exponent::value_type> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Exponent(std::move(e));
}

bool coprime(const Exponent& a, const Exponent& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

Exponent insert_coordinate(const Exponent& a, std::size_t pos, Exponent::value_type v) {
  if (pos > a.size()) throw InputError("variable position out of range");
  std::vector<Exponent::value_type> e(a.entries().begin(), a.entries().end());
  e.insert(e.begin() + static_cast<std::ptrdiff_t>(pos), v);
  return Exponent(std::move(e));
}

Exponent erase_coordinate(const Exponent& a, std::size_t pos) {
  if (pos >= a.size()) throw InputError("variable position out of range");
  std::vector<Exponent::value_type> e(a.entries().begin(), a.entries().end());
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(pos));
  return Exponent(std::move(e));
}

namespace {

void fill_compositions(std::vector<Exponent::value_type>& e, std::size_t pos, unsigned remaining,
                       std::vector<Exponent>& out) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    out.emplace_back(e);
    return;
  }
  for (unsigned first = 0; first <= remaining; ++first) {
    e[pos] = first;
    fill_compositions(e, pos + 1, remaining - first, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent::value_type> e(nvars, 0);
  fill_compositions(e, 0, degree, out);
  return out;
}

}  // namespace detm
