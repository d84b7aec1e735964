#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace regclosure {

using Exponent = std::int64_t;

/// Multidegree of a monomial x^A, i.e. a point of Z^n_{>=0}.
///
/// Entries are 64-bit; every arithmetic helper in this header checks for
/// overflow and throws ExponentOverflow instead of wrapping.
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
  ExponentVector(std::initializer_list<Exponent> entries);
  explicit ExponentVector(std::vector<Exponent> entries);

  static ExponentVector unit(std::size_t n, std::size_t index);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] Exponent operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Exponent value);

  [[nodiscard]] Exponent degree() const;
  [[nodiscard]] bool is_zero() const;
  /// Indices i with a_i > 0.
  [[nodiscard]] std::vector<std::size_t> support() const;

  [[nodiscard]] std::span<const Exponent> entries() const { return entries_; }
  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  friend bool operator==(const ExponentVector &, const ExponentVector &) = default;
  /// Canonical order: total degree first, then lexicographic on entries.
  friend std::strong_ordering operator<=>(const ExponentVector &a,
                                          const ExponentVector &b);

private:
  std::vector<Exponent> entries_;
};

/// x^a | x^b, i.e. a <= b componentwise.
[[nodiscard]] bool divides(const ExponentVector &a, const ExponentVector &b);

[[nodiscard]] ExponentVector componentwise_max(const ExponentVector &a,
                                               const ExponentVector &b);
[[nodiscard]] ExponentVector componentwise_min(const ExponentVector &a,
                                               const ExponentVector &b);
[[nodiscard]] ExponentVector operator+(const ExponentVector &a,
                                       const ExponentVector &b);
/// Requires b <= a; throws UndefinedInputError otherwise.
[[nodiscard]] ExponentVector operator-(const ExponentVector &a,
                                       const ExponentVector &b);
[[nodiscard]] ExponentVector scaled(const ExponentVector &a, Exponent factor);

[[nodiscard]] Exponent checked_add(Exponent a, Exponent b);
[[nodiscard]] Exponent checked_mul(Exponent a, Exponent b);

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector &v) const noexcept;
};

} // namespace regclosure
