#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "regclosure/ideal.hpp"

namespace regclosure {

enum class Family { CompleteIntersection, Stable, StronglyStable, Gorenstein3, Random2, Random3, MPrimary };

[[nodiscard]] std::string_view family_name(Family family);
/// Inverse of family_name; throws ValidationError for unknown tags.
[[nodiscard]] Family parse_family(std::string_view name);
[[nodiscard]] const std::vector<Family> &all_families();

struct FamilySpec {
  Family family = Family::Random3;
  std::size_t n = 3;
  Exponent max_degree = 6;
  std::size_t min_gens = 1;
  std::size_t max_gens = 5;
  std::uint64_t seed = 0;

  /// Throws ValidationError on nonpositive bounds or a family/n mismatch.
  void validate() const;
  /// random2 and random3 pin the ring dimension.
  [[nodiscard]] std::size_t effective_dimension() const;
};

/// Seed of record `index` of `family` in a batch started from `master`.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, Family family, std::uint64_t index);

/// Deterministic in the spec: the same spec always yields the same ideal.
[[nodiscard]] MonomialIdeal sample(const FamilySpec &spec);

/// Uniform draws from a 64-bit engine that do not depend on the standard
/// library's distribution implementations.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

} // namespace regclosure
