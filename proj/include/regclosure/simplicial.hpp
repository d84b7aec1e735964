#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace regclosure {

/// Coefficient field for homology: Q, or F_p for a prime p.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(unsigned p);
  /// "q", "f2", "f3", ...
  static Field parse(const std::string &name);

  [[nodiscard]] bool is_rational() const { return p_ == 0; }
  [[nodiscard]] unsigned characteristic() const { return p_; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field &, const Field &) = default;

private:
  explicit Field(unsigned p) : p_(p) {}
  unsigned p_;
};

/// Simplicial complex on vertices {0..n-1}; faces are vertex bitmasks.
/// No faces is the void complex; the single face 0 is the irrelevant complex {∅}.
class SimplicialComplex {
public:
  explicit SimplicialComplex(std::size_t num_vertices) : n_(num_vertices) {}

  /// Takes a subset-closed face list; throws ValidationError otherwise.
  SimplicialComplex(std::size_t num_vertices, std::vector<std::uint64_t> faces);

  [[nodiscard]] std::size_t num_vertices() const { return n_; }
  [[nodiscard]] const std::vector<std::uint64_t> &faces() const { return faces_; }
  [[nodiscard]] bool is_void() const { return faces_.empty(); }
  [[nodiscard]] bool contains(std::uint64_t face) const;
  /// Largest face dimension; -2 for the void complex.
  [[nodiscard]] int dimension() const;

private:
  std::size_t n_;
  std::vector<std::uint64_t> faces_; // sorted by (size, mask)
};

/// ranks[d + 1] = dim of reduced homology in dimension d, d = -1 .. dim(K).
/// Empty for the void complex.
[[nodiscard]] std::vector<std::size_t> homology_ranks(const SimplicialComplex &complex,
                                                      const Field &field);

/// Rank of an integer matrix over `field` (fraction-free Bareiss over Q,
/// Gaussian elimination mod p otherwise).
[[nodiscard]] std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> matrix,
                                      const Field &field);

} // namespace regclosure
