#include "regclosure/sample.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "regclosure/classify.hpp"
#include "regclosure/errors.hpp"

namespace regclosure {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kFamilyNames{{
    {Family::CompleteIntersection, "ci"},
    {Family::Stable, "stable"},
    {Family::StronglyStable, "strongly-stable"},
    {Family::Gorenstein3, "gorenstein3"},
    {Family::Random2, "random2"},
    {Family::Random3, "random3"},
    {Family::MPrimary, "m-primary"},
}};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Monomial of the given degree supported inside `vars`, every listed
/// variable getting at least `floor` (0 or 1).
ExponentVector random_monomial(SampleRng &rng, std::size_t n, const std::vector<std::size_t> &vars,
                               Exponent degree, Exponent floor) {
  ExponentVector v(n);
  Exponent remaining = degree;
  for (std::size_t i : vars) {
    v.set(i, floor);
    remaining -= floor;
  }
  for (Exponent k = 0; k < remaining; ++k) {
    std::size_t i = vars[rng.uniform(0, vars.size() - 1)];
    v.set(i, v[i] + 1);
  }
  return v;
}

std::vector<std::size_t> all_variables(std::size_t n) {
  std::vector<std::size_t> vars(n);
  for (std::size_t i = 0; i < n; ++i)
    vars[i] = i;
  return vars;
}

std::vector<ExponentVector> random_monomials(SampleRng &rng, const FamilySpec &spec,
                                             std::size_t n) {
  auto count = rng.uniform(spec.min_gens, spec.max_gens);
  auto vars = all_variables(n);
  std::vector<ExponentVector> out;
  for (std::uint64_t k = 0; k < count; ++k) {
    auto degree = static_cast<Exponent>(rng.uniform(1, static_cast<std::uint64_t>(spec.max_degree)));
    out.push_back(random_monomial(rng, n, vars, degree, 0));
  }
  return out;
}

void shuffle(SampleRng &rng, std::vector<std::size_t> &items) {
  for (std::size_t i = items.size(); i > 1; --i)
    std::swap(items[i - 1], items[rng.uniform(0, i - 1)]);
}

/// Split a random subset of at least `parts` variables into `parts` nonempty
/// disjoint blocks.
std::vector<std::vector<std::size_t>> random_partition(SampleRng &rng, std::size_t n,
                                                       std::size_t parts) {
  auto vars = all_variables(n);
  shuffle(rng, vars);
  auto used = rng.uniform(parts, n);
  std::vector<std::vector<std::size_t>> blocks(parts);
  for (std::size_t k = 0; k < used; ++k) {
    std::size_t target = k < parts ? k : rng.uniform(0, parts - 1);
    blocks[target].push_back(vars[k]);
  }
  for (auto &b : blocks)
    std::ranges::sort(b);
  return blocks;
}

/// One monomial per block, each with full support on its block and degree
/// at most max(|block|, bound).
std::vector<ExponentVector> block_monomials(SampleRng &rng, std::size_t n,
                                            const std::vector<std::vector<std::size_t>> &blocks,
                                            Exponent bound) {
  std::vector<ExponentVector> out;
  for (const auto &block : blocks) {
    auto lo = static_cast<Exponent>(block.size());
    Exponent hi = std::max(lo, bound);
    auto degree = static_cast<Exponent>(
        rng.uniform(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
    out.push_back(random_monomial(rng, n, block, degree, 1));
  }
  return out;
}

MonomialIdeal sample_gorenstein3(SampleRng &rng, const FamilySpec &spec) {
  std::vector<std::size_t> choices;
  for (std::size_t m : {3, 5, 7})
    if (m <= spec.n)
      choices.push_back(m);
  std::size_t m = choices[rng.uniform(0, choices.size() - 1)];
  std::size_t s = (m + 1) / 2;
  Exponent bound = std::max<Exponent>(1, spec.max_degree / static_cast<Exponent>(s - 1));
  auto blocks = block_monomials(rng, spec.n, random_partition(rng, spec.n, m), bound);
  return kamoi_gorenstein(KamoiBlocks(spec.n, std::move(blocks)));
}

} // namespace

std::string_view family_name(Family family) {
  for (auto [f, name] : kFamilyNames)
    if (f == family)
      return name;
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (auto [f, tag] : kFamilyNames)
    if (tag == name)
      return f;
  throw ValidationError("unknown family \"" + std::string(name) + "\"");
}

const std::vector<Family> &all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (auto [f, name] : kFamilyNames)
      out.push_back(f);
    return out;
  }();
  return families;
}

std::size_t FamilySpec::effective_dimension() const {
  switch (family) {
  case Family::Random2:
    return 2;
  case Family::Random3:
    return 3;
  default:
    return n;
  }
}

void FamilySpec::validate() const {
  if (n < 1 || n > 16)
    throw ValidationError("n must lie in [1, 16]");
  if (max_degree < 1)
    throw ValidationError("max degree must be positive");
  if (min_gens < 1 || max_gens < min_gens)
    throw ValidationError("generator-count bounds must satisfy 1 <= min <= max");
  if (family == Family::Gorenstein3 && n < 3)
    throw ValidationError("gorenstein3 needs n >= 3");
}

std::uint64_t derive_seed(std::uint64_t master, Family family, std::uint64_t index) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(family) + 1) * 0x100000001b3ULL);
  return splitmix64(h ^ splitmix64(index));
}

std::uint64_t SampleRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo)
    throw ValidationError("empty sampling range");
  std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0})
    return engine_();
  std::uint64_t range = span + 1;
  // Rejection sampling against the largest multiple of range.
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + draw % range;
}

MonomialIdeal sample(const FamilySpec &spec) {
  spec.validate();
  SampleRng rng(spec.seed);
  const std::size_t n = spec.effective_dimension();
  switch (spec.family) {
  case Family::CompleteIntersection: {
    auto c = rng.uniform(1, std::min<std::uint64_t>(n, spec.max_gens));
    auto blocks = random_partition(rng, n, c);
    MonomialIdeal ideal = minimalize(block_monomials(rng, n, blocks, spec.max_degree), n);
    if (!is_complete_intersection(ideal))
      throw ConsistencyError("ci sampler produced overlapping supports");
    return ideal;
  }
  case Family::Stable:
    return stable_closure(random_monomials(rng, spec, n), n);
  case Family::StronglyStable:
    return strongly_stable_closure(random_monomials(rng, spec, n), n);
  case Family::Gorenstein3:
    return sample_gorenstein3(rng, spec);
  case Family::Random2:
  case Family::Random3:
    return minimalize(random_monomials(rng, spec, n), n);
  case Family::MPrimary: {
    auto raw = random_monomials(rng, spec, n);
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector pure(n);
      pure.set(i, static_cast<Exponent>(rng.uniform(1, static_cast<std::uint64_t>(spec.max_degree))));
      raw.push_back(std::move(pure));
    }
    return minimalize(std::move(raw), n);
  }
  }
  throw ValidationError("unhandled family");
}

} // namespace regclosure
