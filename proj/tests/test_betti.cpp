#include <doctest.h>

#include <bit>
#include <map>

#include "regclosure/betti.hpp"
#include "regclosure/classify.hpp"
#include "regclosure/errors.hpp"
#include "regclosure/simplicial.hpp"
#include "support.hpp"

using namespace regclosure;
using namespace testing;

namespace {

using Laurent = std::map<ExponentVector, long long>;

/// Numerator of the multigraded Hilbert series of S/I by inclusion-exclusion
/// over all subsets of G(I): sum over subsets T of (-1)^|T| t^lcm(T).
Laurent k_polynomial_by_subsets(const MonomialIdeal &ideal) {
  Laurent out;
  auto gens = ideal.generators();
  const std::size_t k = gens.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    ExponentVector lcm(ideal.dimension());
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1)
        lcm = componentwise_max(lcm, gens[j]);
    out[lcm] += std::popcount(mask) % 2 == 0 ? 1 : -1;
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

Laurent k_polynomial_from_table(const BettiTable &table) {
  Laurent out;
  for (const auto &[key, rank] : table.entries())
    out[key.second] += (key.first % 2 == 0 ? 1 : -1) * static_cast<long long>(rank);
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

std::uint64_t face(std::initializer_list<int> vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices)
    mask |= std::uint64_t{1} << v;
  return mask;
}

/// Closes a list of facets under subsets.
SimplicialComplex from_facets(std::size_t n, const std::vector<std::uint64_t> &facets) {
  std::vector<std::uint64_t> faces;
  for (std::uint64_t f : facets)
    for (std::uint64_t sub = f;; sub = (sub - 1) & f) {
      faces.push_back(sub);
      if (sub == 0)
        break;
    }
  std::ranges::sort(faces);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return SimplicialComplex(n, faces);
}

// Six-vertex triangulation of the real projective plane.
const std::vector<std::vector<int>> kProjectivePlane = {
    {0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
    {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};

/// Stanley-Reisner ideal of the triangulation: its minimal non-faces are the
/// ten triangles that are not facets.
MonomialIdeal projective_plane_ideal() {
  std::vector<ExponentVector> gens;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        if (std::ranges::find(kProjectivePlane, std::vector<int>{a, b, c}) != kProjectivePlane.end())
          continue;
        ExponentVector g(6);
        g.set(a, 1);
        g.set(b, 1);
        g.set(c, 1);
        gens.push_back(g);
      }
  return minimalize(gens, 6);
}

} // namespace

TEST_CASE("homology of small complexes") {
  auto q = Field::rationals();
  CHECK(homology_ranks(SimplicialComplex(2, {0, face({0}), face({1})}), q) ==
        std::vector<std::size_t>{0, 1});
  auto triangle_boundary = from_facets(3, {face({0, 1}), face({1, 2}), face({0, 2})});
  CHECK(homology_ranks(triangle_boundary, q) == std::vector<std::size_t>{0, 0, 1});
  CHECK(homology_ranks(SimplicialComplex(3, {0}), q) == std::vector<std::size_t>{1});
  CHECK(homology_ranks(SimplicialComplex(3), q).empty());
  CHECK(homology_ranks(from_facets(3, {face({0, 1, 2})}), q) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK_THROWS_AS(SimplicialComplex(3, {0, face({0, 1})}), ValidationError);

  std::vector<std::uint64_t> facets;
  for (const auto &t : kProjectivePlane)
    facets.push_back(face({t[0], t[1], t[2]}));
  auto rp2 = from_facets(6, facets);
  CHECK(homology_ranks(rp2, q) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(homology_ranks(rp2, Field::prime(2)) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(homology_ranks(rp2, Field::prime(3)) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("exact matrix rank") {
  auto q = Field::rationals();
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK(matrix_rank({{big, 1}, {1, big}}, q) == 2);
  CHECK(matrix_rank({{big, 2 * big}, {2 * big, 4 * big}}, q) == 1);
  CHECK(matrix_rank({{big, big + 1, 3}, {big - 1, big, 5}, {1, 1, -2}}, q) == 2);
  CHECK(matrix_rank({{2, 0}, {0, 2}}, Field::prime(2)) == 0);
  CHECK(matrix_rank({{1, 1}, {1, -1}}, Field::prime(2)) == 1);
  CHECK(matrix_rank({{1, 1}, {1, -1}}, q) == 2);
  CHECK(matrix_rank({}, q) == 0);
  CHECK_THROWS_AS(Field::prime(4), ValidationError);
  CHECK(Field::parse("f2") == Field::prime(2));
  CHECK(Field::parse("q") == Field::rationals());
}

TEST_CASE("lcm lattice and upper Koszul complexes") {
  CHECK(lcm_lattice(I("x^2, y^3")) == std::vector{E({2, 0}), E({0, 3}), E({2, 3})});
  CHECK(lcm_lattice(I("x^2, x*y, y^2")) ==
        std::vector{E({0, 2}), E({1, 1}), E({2, 0}), E({1, 2}), E({2, 1}), E({2, 2})});
  CHECK(lcm_lattice(I("x^3*y")) == std::vector{E({3, 1})});

  auto ideal = I("x^2, x*y, y^2");
  CHECK(upper_koszul(ideal, E({1, 1})).faces() == std::vector<std::uint64_t>{0});
  CHECK(upper_koszul(ideal, E({2, 1})).faces() == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(upper_koszul(ideal, E({1, 0})).is_void());
}

TEST_CASE("multigraded Betti numbers") {
  auto table = multigraded_betti(I("x^2, y^3"));
  CHECK(table.entries() == BettiTable::Entries{{{0, E({0, 0})}, 1},
                                               {{1, E({2, 0})}, 1},
                                               {{1, E({0, 3})}, 1},
                                               {{2, E({2, 3})}, 1}});
  CHECK(table.totals() == std::vector<BettiCount>{1, 2, 1});
  CHECK(quotient_regularity(table) == 3);
  CHECK(ideal_regularity(table) == 4);
  CHECK(table.projective_dimension() == 2);

  table = multigraded_betti(I("x^2, x*y, y^2"));
  CHECK(table.totals() == std::vector<BettiCount>{1, 3, 2});
  CHECK(ideal_regularity(table) == 2);

  table = multigraded_betti(I("x", 1));
  CHECK(table.totals() == std::vector<BettiCount>{1, 1});
  CHECK(ideal_regularity(table) == 1);
  CHECK(table.projective_dimension() == 1);

  table = multigraded_betti(ideal_power(I("x, y, z"), 5));
  CHECK(table.totals() == std::vector<BettiCount>{1, 21, 35, 15});
  CHECK(ideal_regularity(table) == 5);

  CHECK(multigraded_betti(MonomialIdeal::zero(2)).totals() == std::vector<BettiCount>{1});
  CHECK_THROWS_AS((void)multigraded_betti(MonomialIdeal::unit(2)), UndefinedInputError);

  auto of_ideal = multigraded_betti(I("x^2, y^3")).to_ideal_convention();
  CHECK(of_ideal.convention() == BettiConvention::Ideal);
  CHECK(of_ideal.totals() == std::vector<BettiCount>{2, 1});
  CHECK(of_ideal.regularity() == 4);
}

TEST_CASE("field dependence") {
  // Golden examples agree over Q and F_2.
  for (const char *text : {"x^2, y^3", "x^2, x*y, y^2", "x1*x2, x2*x3, x3*x4, x4*x5, x5*x1",
                           "x^3, x^2*y, y^3*z, z^4"}) {
    auto ideal = I(text);
    CHECK(multigraded_betti(ideal, Field::rationals()) == multigraded_betti(ideal, Field::prime(2)));
  }
  // The projective plane's Stanley-Reisner ring has an extra syzygy in
  // characteristic two, in the squarefree multidegree of full support.
  auto rp2 = projective_plane_ideal();
  REQUIRE(rp2.size() == 10);
  auto over_q = multigraded_betti(rp2, Field::rationals());
  auto over_f2 = multigraded_betti(rp2, Field::prime(2));
  CHECK(over_q != over_f2);
  const ExponentVector full{1, 1, 1, 1, 1, 1};
  CHECK(over_q.entries().count({3, full}) == 0);
  CHECK(over_f2.entries().at({3, full}) == 1);
  CHECK(over_f2.entries().at({4, full}) == 1);
  CHECK(k_polynomial_from_table(over_q) == k_polynomial_from_table(over_f2));
}

TEST_CASE("Euler characteristic matches inclusion-exclusion") {
  RandomIdeals gen(31);
  for (int trial = 0; trial < 150; ++trial) {
    auto ideal = gen.next(trial % 3 + 2, 5, 7);
    if (ideal.is_unit())
      continue;
    auto table = multigraded_betti(ideal);
    CAPTURE(to_canonical_json(ideal));
    CHECK(k_polynomial_from_table(table) == k_polynomial_by_subsets(ideal));
    // First syzygies sit exactly at the generators.
    std::size_t first = 0;
    for (const auto &[key, rank] : table.entries())
      if (key.first == 1) {
        CHECK(rank == 1);
        CHECK(std::ranges::find(ideal.generators(), key.second) != ideal.generators().end());
        ++first;
      }
    CHECK(first == ideal.size());
    CHECK(table.projective_dimension() <= static_cast<int>(ideal.dimension()));
  }
}

TEST_CASE("closed forms") {
  auto ek = ek_betti(I("x^2, x*y, y^2"));
  CHECK(ek.totals() == std::vector<BettiCount>{3, 2});
  CHECK(ek.regularity() == 2);
  ek = ek_betti(I("x", 2));
  CHECK(ek.totals() == std::vector<BettiCount>{1});
  CHECK(ek.regularity() == 1);
  ek = ek_betti(ideal_power(I("x, y, z"), 5));
  CHECK(ek.totals().front() == 21);
  CHECK(ek.regularity() == 5);
  CHECK(ek.projective_dimension() + 1 == 3);
  CHECK_THROWS_AS((void)ek_betti(I("y^2", 2)), PreconditionError);

  auto koszul = koszul_betti(I("x^2, y^3"));
  CHECK(koszul.totals() == std::vector<BettiCount>{1, 2, 1});
  CHECK(quotient_regularity(koszul) == 3);
  koszul = koszul_betti(I("x^2*z", 3));
  CHECK(koszul.totals() == std::vector<BettiCount>{1, 1});
  CHECK(quotient_regularity(koszul) == 2);
  koszul = koszul_betti(I("x^2, y^2, z^2"));
  CHECK(koszul.totals() == std::vector<BettiCount>{1, 3, 3, 1});
  CHECK(quotient_regularity(koszul) == 3);
  CHECK_THROWS_AS((void)koszul_betti(I("x^2, x*y")), PreconditionError);

  SUBCASE("agree with homology on random inputs") {
    RandomIdeals gen(32);
    int stable_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
      auto seed = gen.next(3, 4, 3);
      std::vector<ExponentVector> raw(seed.generators().begin(), seed.generators().end());
      auto stable = stable_closure(raw, 3);
      if (stable.is_unit())
        continue;
      ++stable_seen;
      CHECK(ek_betti(stable) == multigraded_betti(stable).graded().to_ideal_convention());
    }
    CHECK(stable_seen > 50);
    CHECK(koszul_betti(I("x1^2*x2, x3^3, x4*x5^2", 5)) ==
          multigraded_betti(I("x1^2*x2, x3^3, x4*x5^2", 5)));
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
}
