#include "regclosure/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "regclosure/errors.hpp"
#include "regclosure/rational_lp.hpp"

namespace regclosure {

Field Field::prime(unsigned p) {
  if (p < 2)
    throw ValidationError("field characteristic must be a prime >= 2");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw ValidationError(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string &name) {
  if (name == "q" || name == "Q")
    return rationals();
  if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
    try {
      std::size_t used = 0;
      unsigned long p = std::stoul(name.substr(1), &used);
      if (used == name.size() - 1)
        return prime(static_cast<unsigned>(p));
    } catch (const std::logic_error &) {
    }
  }
  throw ValidationError("unknown field \"" + name + "\" (expected q or f<p>)");
}

std::string Field::name() const { return p_ == 0 ? "q" : "f" + std::to_string(p_); }

namespace {

bool face_order(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

struct CheckedInt {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
      throw ExponentOverflow("Bareiss step overflow");
    return out;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out))
      throw ExponentOverflow("Bareiss step overflow");
    return out;
  }
};

template <typename Int, typename Ops>
std::size_t bareiss_rank(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  Int previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int value = Ops::sub(Ops::mul(m[rank][c], m[i][j]), Ops::mul(m[i][c], m[rank][j]));
        m[i][j] = value / previous;
      }
      m[i][c] = 0;
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

struct BigOps {
  static BigInt mul(const BigInt &a, const BigInt &b) { return a * b; }
  static BigInt sub(const BigInt &a, const BigInt &b) { return a - b; }
};

std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  for (auto &row : m)
    for (auto &v : row)
      v = ((v % p) + p) % p;
  auto inverse = [p](std::int64_t a) {
    std::int64_t result = 1;
    std::int64_t base = a;
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1)
        result = result * base % p;
      base = base * base % p;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    std::int64_t inv = inverse(m[rank][c]);
    for (std::size_t j = c; j < cols; ++j)
      m[rank][j] = m[rank][j] * inv % p;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::int64_t factor = m[i][c];
      if (factor == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ((m[i][j] - factor * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

} // namespace

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> matrix, const Field &field) {
  if (!field.is_rational())
    return rank_mod_p(std::move(matrix), field.characteristic());
  try {
    return bareiss_rank<std::int64_t, CheckedInt>(matrix);
  } catch (const ExponentOverflow &) {
    std::vector<std::vector<BigInt>> big;
    big.reserve(matrix.size());
    for (const auto &row : matrix)
      big.emplace_back(row.begin(), row.end());
    return bareiss_rank<BigInt, BigOps>(std::move(big));
  }
}

SimplicialComplex::SimplicialComplex(std::size_t num_vertices, std::vector<std::uint64_t> faces)
    : n_(num_vertices), faces_(std::move(faces)) {
  if (n_ > 63)
    throw ValidationError("simplicial complexes support at most 63 vertices");
  std::ranges::sort(faces_, face_order);
  auto dup = std::ranges::unique(faces_);
  faces_.erase(dup.begin(), dup.end());
  for (std::uint64_t f : faces_) {
    if (f >> n_)
      throw ValidationError("face uses a vertex outside the vertex set");
    for (std::uint64_t rest = f; rest; rest &= rest - 1) {
      std::uint64_t without = f & ~(rest & -rest);
      if (!contains(without))
        throw ValidationError("face list is not closed under subsets");
    }
  }
}

bool SimplicialComplex::contains(std::uint64_t face) const {
  return std::ranges::binary_search(faces_, face, face_order);
}

int SimplicialComplex::dimension() const {
  if (faces_.empty())
    return -2;
  return std::popcount(faces_.back()) - 1;
}

std::vector<std::size_t> homology_ranks(const SimplicialComplex &complex,
                                        const Field &field) {
  if (complex.is_void())
    return {};
  const int top = complex.dimension();
  // by_dim[d + 1] = faces of dimension d, in sorted order.
  std::vector<std::vector<std::uint64_t>> by_dim(static_cast<std::size_t>(top) + 2);
  for (std::uint64_t f : complex.faces())
    by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  // boundary_rank[d + 1] = rank of the boundary map from dimension d to d - 1.
  std::vector<std::size_t> boundary_rank(by_dim.size() + 1, 0);
  for (std::size_t k = 1; k < by_dim.size(); ++k) {
    const auto &cells = by_dim[k];
    const auto &faces = by_dim[k - 1];
    std::vector<std::vector<std::int64_t>> matrix(faces.size(),
                                                  std::vector<std::int64_t>(cells.size(), 0));
    for (std::size_t col = 0; col < cells.size(); ++col) {
      std::uint64_t cell = cells[col];
      int position = 0;
      for (std::uint64_t rest = cell; rest; rest &= rest - 1, ++position) {
        std::uint64_t facet = cell & ~(rest & -rest);
        auto it = std::ranges::lower_bound(faces, facet);
        matrix[static_cast<std::size_t>(it - faces.begin())][col] = position % 2 == 0 ? 1 : -1;
      }
    }
    boundary_rank[k] = matrix_rank(std::move(matrix), field);
  }

  std::vector<std::size_t> ranks(by_dim.size());
  for (std::size_t k = 0; k < by_dim.size(); ++k)
    ranks[k] = by_dim[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return ranks;
}

} // namespace regclosure
