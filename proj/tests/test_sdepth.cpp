#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "stanley/errors.hpp"
#include "stanley/fixtures.hpp"
#include "stanley/parse.hpp"
#include "stanley/random_ideals.hpp"
#include "stanley/sdepth.hpp"

using namespace stanley;

namespace {

Decomposition fixture(const char* name) {
  return document_decomposition(parse_document(find_fixture(name)->text));
}

MonomialIdeal ideal_from(const std::string& text) {
  return document_ideal(parse_document(text));
}

std::set<std::vector<int>> element_set(const CharacteristicPoset& poset) {
  auto elems = poset.elements();
  return {elems.begin(), elems.end()};
}

}  // namespace

TEST_CASE("characteristic posets") {
  CharacteristicPoset p1 =
      char_poset(ideal_from("ring 2\nideal = x1, x2\n"), PosetMode::Ideal);
  CHECK(element_set(p1) ==
        std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});

  CharacteristicPoset p2 =
      char_poset(ideal_from("ring 2\nideal = x1*x2\n"), PosetMode::Quotient);
  CHECK(element_set(p2) ==
        std::set<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}});

  CharacteristicPoset p3 = char_poset(
      ideal_from("ring 2\nideal = x1^2, x1*x2\n"), PosetMode::Ideal);
  CHECK(element_set(p3) ==
        std::set<std::vector<int>>{{2, 0}, {2, 1}, {1, 1}});
  CHECK(p3.rho(p3.id_of({2, 1})) == 2);
  CHECK(p3.rho(p3.id_of({1, 1})) == 1);
}

TEST_CASE("poset bound refusal and degenerate ideals") {
  CHECK_THROWS_AS(
      char_poset(ideal_from("ring 2\nideal = x1, x2\n"), PosetMode::Ideal, 3),
      BoundError);
  Ring r2(2);
  CHECK_THROWS_AS(char_poset(MonomialIdeal::zero(r2), PosetMode::Ideal),
                  InvalidInputError);
}

TEST_CASE("sdepth of small ideals") {
  CHECK(sdepth_exact(ideal_from("ring 3\nideal = x1*x2*x3\n"),
                     PosetMode::Ideal)
            .value == 3);
  CHECK(sdepth_exact(ideal_from("ring 2\nideal = x1^2*x2\n"), PosetMode::Ideal)
            .value == 2);
  CHECK(sdepth_exact(ideal_from("ring 2\nideal = x1, x2\n"), PosetMode::Ideal)
            .value == 1);
  CHECK(sdepth_exact(ideal_from("ring 2\nideal = x1^2, x1*x2\n"),
                     PosetMode::Ideal)
            .value == 1);
}

TEST_CASE("sdepth of the seven-prime example") {
  MonomialIdeal ideal = fixture("e-prime").intersection();
  SdepthResult result = sdepth_exact(ideal, PosetMode::Ideal);
  CHECK(result.value == 5);
  CHECK(valid_partition(char_poset(ideal, PosetMode::Ideal),
                        result.certificate, 5));
  SdepthResult quotient = sdepth_exact(ideal, PosetMode::Quotient);
  CHECK(quotient.value == 3);
  CHECK(valid_partition(char_poset(ideal, PosetMode::Quotient),
                        quotient.certificate, 3));
}

TEST_CASE("search agrees with the exhaustive oracle on small posets") {
  std::mt19937_64 rng(121);
  RandomIdealOptions opts;
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Decomposition d = random_decomposition(rng, opts);
    MonomialIdeal ideal = d.intersection();
    for (PosetMode mode : {PosetMode::Ideal, PosetMode::Quotient}) {
      CharacteristicPoset poset = char_poset(ideal, mode);
      if (poset.element_count() == 0 || poset.element_count() > 12) continue;
      CHECK(sdepth_of_poset(poset).value == oracles::brute_force_sdepth(poset));
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("certificates are valid partitions") {
  std::mt19937_64 rng(232);
  RandomIdealOptions opts;
  for (int trial = 0; trial < 30; ++trial) {
    Decomposition d = random_decomposition(rng, opts);
    MonomialIdeal ideal = d.intersection();
    for (PosetMode mode : {PosetMode::Ideal, PosetMode::Quotient}) {
      CharacteristicPoset poset = char_poset(ideal, mode);
      if (poset.element_count() == 0) continue;
      SdepthResult result = sdepth_of_poset(poset);
      CHECK(valid_partition(poset, result.certificate, result.value));
    }
  }
}

TEST_CASE("sdepth sanity: positivity, principal ideals, free variables") {
  std::mt19937_64 rng(343);
  RandomIdealOptions opts;
  opts.max_vars = 3;
  for (int trial = 0; trial < 25; ++trial) {
    Decomposition d = random_decomposition(rng, opts);
    MonomialIdeal ideal = d.intersection();
    int value = sdepth_exact(ideal, PosetMode::Ideal).value;
    CHECK(value >= 1);

    // Append a free variable: both depths rise by exactly one.
    Ring wide = ideal.ring().extended();
    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.generators()) {
      std::vector<int> exps = g.exponents();
      exps.push_back(0);
      gens.emplace_back(wide, std::move(exps));
    }
    MonomialIdeal embedded = MonomialIdeal::from_generators(wide, gens);
    CHECK(sdepth_exact(embedded, PosetMode::Ideal).value == value + 1);
    int quotient = sdepth_exact(ideal, PosetMode::Quotient).value;
    CHECK(sdepth_exact(embedded, PosetMode::Quotient).value == quotient + 1);
  }

  for (int n = 1; n <= 4; ++n) {
    Ring ring(n);
    MonomialIdeal principal = MonomialIdeal::from_generators(
        ring, {Monomial(ring, std::vector<int>(n, 1))});
    CHECK(sdepth_exact(principal, PosetMode::Ideal).value == n);
  }
}

TEST_CASE("splitting data on the seven-prime example") {
  Decomposition d = fixture("e-prime");

  SplitScan scan = scan_splits(d, VarSet::single(4));
  REQUIRE(scan.qualifying.size() == 1);
  const SplitData& q = scan.qualifying[0];
  CHECK(q.tau == std::vector<int>{0, 1, 2, 3, 5});
  CHECK(q.j_tau.str() == "(x5)");
  CHECK(q.a_tau == 5);
  CHECK_FALSE(scan.a0.has_value());
  CHECK(scan.bound == 5);
  CHECK(split_lower_bound(d, VarSet::single(4)) == 5);

  SplitScan scan5 = scan_splits(d, VarSet::single(3));
  REQUIRE(scan5.qualifying.size() == 1);
  CHECK(scan5.qualifying[0].tau == std::vector<int>{0, 1, 2, 4, 6});
  CHECK(scan5.bound == 5);

  int sdepth = sdepth_exact(d.intersection(), PosetMode::Ideal).value;
  CHECK(*scan.bound == sdepth);
  CHECK(*scan5.bound == sdepth);
}

TEST_CASE("split bound side conditions") {
  Decomposition d = fixture("e-prime");
  // tau sharing variables with Z empties the middle subring.
  SplitData data = split_data(d, VarSet::single(4), {4, 6});
  CHECK(data.j_tau.is_zero());
  CHECK_FALSE(data.a_tau.has_value());

  CHECK_THROWS_AS(split_data(fixture("e1"), VarSet::single(0), {0}),
                  InvalidInputError);
  CHECK_THROWS_AS(split_data(d, VarSet::single(4), {}), InvalidInputError);
}

TEST_CASE("split bound holds when Z is an associated-prime support") {
  std::mt19937_64 rng(454);
  RandomIdealOptions opts;
  opts.squarefree = true;
  opts.max_vars = 5;
  opts.max_components = 5;
  int bounds_checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Decomposition d =
        strip_free_variables(random_decomposition(rng, opts)).decomposition;
    if (d.component_count() < 2) continue;
    MonomialIdeal ideal = d.intersection();
    int sdepth = sdepth_exact(ideal, PosetMode::Ideal).value;
    for (const PrimeSupport& p : ass_primes(d)) {
      if ((d.ring().all_vars() - p.vars).empty()) continue;
      SplitScan scan = scan_splits(d, p.vars);
      if (!scan.bound) continue;
      CHECK(*scan.bound <= sdepth);
      ++bounds_checked;
    }
  }
  CHECK(bounds_checked > 20);
}

TEST_CASE("split minimum can overshoot sdepth for other Z") {
  // Regression: the scan minimum is not a universal lower bound. Here the
  // complement of Z spans the first two components, yet the minimum exceeds
  // the exact Stanley depth.
  Decomposition d = document_decomposition(parse_document(
      "ring 4\ncomponents = (x1,x3,x4),(x1,x2,x3),(x2,x4)\n"));
  CharacteristicPoset poset =
      char_poset(d.intersection(), PosetMode::Ideal);
  int sdepth = sdepth_of_poset(poset).value;
  CHECK(sdepth == 2);
  CHECK(sdepth == oracles::brute_force_sdepth(poset));
  SplitScan scan = scan_splits(d, VarSet::single(1));
  REQUIRE(scan.bound.has_value());
  CHECK(*scan.bound == 3);
}

TEST_CASE("instance verification of the worked examples") {
  VerifyReport ep = verify_instance(fixture("e-prime"));
  CHECK(ep.all_pass());
  bool found_equality = false;
  for (const Check& c : ep.checks)
    if (c.name == "squarefree_sdepth_ge_bigsize_plus_one") {
      CHECK(c.lhs == 5);
      CHECK(c.rhs == 5);
      found_equality = true;
    }
  CHECK(found_equality);

  VerifyReport e1 = verify_instance(fixture("e1"));
  CHECK(e1.all_pass());
  for (const Check& c : e1.checks)
    if (c.name == "sdepth_ge_size_plus_one") CHECK(c.rhs == 1);

  // The polarized three-component example keeps size 2.
  Decomposition e3 = fixture("e3");
  VerifyReport r3 = verify_instance(e3);
  CHECK(r3.all_pass());
}
