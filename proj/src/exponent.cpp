#include "regclosure/exponent.hpp"

#include <algorithm>
#include <string>

#include "regclosure/errors.hpp"

namespace regclosure {

namespace {

void require_nonnegative(Exponent value) {
  if (value < 0)
    throw ValidationError("negative exponent " + std::to_string(value));
}

void require_same_length(const ExponentVector &a, const ExponentVector &b) {
  if (a.size() != b.size())
    throw DimensionError("exponent vectors of length " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()));
}

} // namespace

ExponentVector::ExponentVector(std::initializer_list<Exponent> entries)
    : entries_(entries) {
  std::ranges::for_each(entries_, require_nonnegative);
}

ExponentVector::ExponentVector(std::vector<Exponent> entries)
    : entries_(std::move(entries)) {
  std::ranges::for_each(entries_, require_nonnegative);
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t index) {
  if (index >= n)
    throw DimensionError("variable index " + std::to_string(index) +
                         " out of range for n = " + std::to_string(n));
  ExponentVector e(n);
  e.entries_[index] = 1;
  return e;
}

void ExponentVector::set(std::size_t i, Exponent value) {
  require_nonnegative(value);
  entries_.at(i) = value;
}

Exponent ExponentVector::degree() const {
  Exponent total = 0;
  for (Exponent e : entries_)
    total = checked_add(total, e);
  return total;
}

bool ExponentVector::is_zero() const {
  return std::ranges::all_of(entries_, [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> ExponentVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] > 0)
      out.push_back(i);
  return out;
}

std::strong_ordering operator<=>(const ExponentVector &a,
                                 const ExponentVector &b) {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  return a.entries_ <=> b.entries_;
}

bool divides(const ExponentVector &a, const ExponentVector &b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

ExponentVector componentwise_max(const ExponentVector &a,
                                 const ExponentVector &b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.set(i, std::max(a[i], b[i]));
  return out;
}

ExponentVector componentwise_min(const ExponentVector &a,
                                 const ExponentVector &b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.set(i, std::min(a[i], b[i]));
  return out;
}

ExponentVector operator+(const ExponentVector &a, const ExponentVector &b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.set(i, checked_add(a[i], b[i]));
  return out;
}

ExponentVector operator-(const ExponentVector &a, const ExponentVector &b) {
  require_same_length(a, b);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i])
      throw UndefinedInputError("monomial quotient is not a monomial");
    out.set(i, a[i] - b[i]);
  }
  return out;
}

ExponentVector scaled(const ExponentVector &a, Exponent factor) {
  require_nonnegative(factor);
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out.set(i, checked_mul(a[i], factor));
  return out;
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out))
    throw ExponentOverflow("exponent sum overflows 64 bits");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out))
    throw ExponentOverflow("exponent product overflows 64 bits");
  return out;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector &v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Exponent e : v) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

} // namespace regclosure
