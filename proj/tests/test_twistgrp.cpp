#include <doctest.h>

#include <random>

#include "sphact/twistgrp.hpp"
#include "test_util.hpp"

using namespace sphact;

namespace {

Word w(const std::string& text, int rank) { return parse_word(text, rank); }

TwistedGroup inv_f1() {
  return TwistedGroup(FreeAutomorphism(1, {w("x1^-1", 1)}));
}
TwistedGroup id_f1() { return TwistedGroup(FreeAutomorphism::identity(1)); }
TwistedGroup swap_f2() {
  return TwistedGroup(FreeAutomorphism(2, {w("x2", 2), w("x1", 2)}));
}
TwistedGroup z2() { return TwistedGroup(FreeAutomorphism::identity(0)); }

}  // namespace

TEST_CASE("construction rejects non-involutions") {
  CHECK_THROWS_AS(TwistedGroup(FreeAutomorphism(2, {w("x2", 2), w("x2", 2)})),
                  std::invalid_argument);
}

TEST_CASE("semidirect multiplication convention") {
  TwistedGroup g = swap_f2();
  // (x1, 1)(x2, 0) = (x1 * theta(x2), 1) = (x1 x1, 1)
  SemidirectElement p = sd_multiply(g, {w("x1", 2), 1}, {w("x2", 2), 0});
  CHECK(p == SemidirectElement{w("x1 x1", 2), 1});

  CHECK(sd_multiply(g, {Word::identity(2), 1}, {Word::identity(2), 1}) ==
        sd_identity(g));
  CHECK(sd_multiply(g, {w("x1", 2), 0}, {w("x1^-1", 2), 0}) ==
        sd_identity(g));
}

TEST_CASE("semidirect group laws on random triples") {
  std::mt19937_64 rng(31);
  std::vector<TwistedGroup> groups = {inv_f1(), id_f1(), swap_f2()};
  for (const TwistedGroup& g : groups) {
    for (int trial = 0; trial < 1000; ++trial) {
      SemidirectElement a{testing::random_word(g.rank(), 8, rng),
                          static_cast<int>(rng() % 2)};
      SemidirectElement b{testing::random_word(g.rank(), 8, rng),
                          static_cast<int>(rng() % 2)};
      SemidirectElement c{testing::random_word(g.rank(), 8, rng),
                          static_cast<int>(rng() % 2)};
      CHECK(sd_multiply(g, sd_multiply(g, a, b), c) ==
            sd_multiply(g, a, sd_multiply(g, b, c)));
      CHECK(sd_multiply(g, a, sd_identity(g)) == a);
      CHECK(sd_multiply(g, sd_invert(g, a), a) == sd_identity(g));
      CHECK(sd_multiply(g, a, sd_invert(g, a)) == sd_identity(g));
    }
  }
}

TEST_CASE("order-two detection") {
  CHECK(has_order_two(swap_f2(), {Word::identity(2), 1}));
  CHECK(has_order_two(inv_f1(), {w("x1", 1), 1}));
  CHECK(!has_order_two(id_f1(), {w("x1", 1), 1}));
  CHECK(!has_order_two(id_f1(), {w("x1", 1), 0}));
  CHECK_THROWS_AS(has_order_two(id_f1(), sd_identity(id_f1())),
                  std::invalid_argument);
}

TEST_CASE("order two with bit one is exactly the fixed-point equation") {
  std::mt19937_64 rng(37);
  std::vector<TwistedGroup> groups = {inv_f1(), id_f1(), swap_f2()};
  for (const TwistedGroup& g : groups)
    for (int trial = 0; trial < 300; ++trial) {
      Word word = testing::random_word(g.rank(), 8, rng);
      SemidirectElement a{word, 1};
      if (a == sd_identity(g)) continue;
      bool fixed_eq = multiply(word, g.apply_theta(word)).is_identity();
      CHECK(has_order_two(g, a) == fixed_eq);
    }
}

TEST_CASE("orientation validation") {
  CHECK(!validate_orientation(swap_f2(), OrientationHom({1, 0})));
  CHECK(orientation_violation(swap_f2(), OrientationHom({1, 0})) == 1);
  CHECK(validate_orientation(swap_f2(), OrientationHom({0, 0})));
  CHECK(validate_orientation(swap_f2(), OrientationHom({1, 1})));
  CHECK(validate_orientation(inv_f1(), OrientationHom({1})));
  CHECK_THROWS_AS(validate_orientation(inv_f1(), OrientationHom({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("orientation evaluation") {
  TwistedGroup g = inv_f1();
  OrientationHom phi({1});
  CHECK(evaluate_orientation(g, phi, {w("x1 x1", 1), 0}) == 0);
  CHECK(evaluate_orientation(g, phi, {w("x1", 1), 1}) == 0);
  CHECK(evaluate_orientation(g, phi, {w("x1", 1), 0}) == 1);
  OrientationHom zero({0});
  CHECK(evaluate_orientation(id_f1(), zero, {w("x1", 1), 1}) == 1);
}

TEST_CASE("orientation evaluation is a homomorphism") {
  std::mt19937_64 rng(41);
  TwistedGroup g = swap_f2();
  OrientationHom phi({1, 1});
  for (int trial = 0; trial < 500; ++trial) {
    SemidirectElement a{testing::random_word(2, 8, rng),
                        static_cast<int>(rng() % 2)};
    SemidirectElement b{testing::random_word(2, 8, rng),
                        static_cast<int>(rng() % 2)};
    CHECK(evaluate_orientation(g, phi, sd_multiply(g, a, b)) ==
          (evaluate_orientation(g, phi, a) + evaluate_orientation(g, phi, b)) %
              2);
  }
}

TEST_CASE("free product of two order-two factors is the twisted line") {
  FreeProductResult result = free_product_with_z2({z2(), z2()});
  CHECK(result.group.rank() == 1);
  CHECK(result.group.theta().image(1) == w("x1^-1", 1));
  REQUIRE(result.factors.size() == 2);
  CHECK(result.factors[0].new_letter == 0);
  CHECK(result.factors[1].new_letter == 1);
}

TEST_CASE("free product with a single factor is unchanged") {
  FreeProductResult result = free_product_with_z2({swap_f2()});
  CHECK(result.group.rank() == 2);
  CHECK(result.group.theta() == swap_f2().theta());
}

TEST_CASE("free product of a line factor and an order-two factor") {
  FreeProductResult result = free_product_with_z2({id_f1(), z2()});
  CHECK(result.group.rank() == 2);
  CHECK(result.group.theta().image(1) == w("x1", 2));
  CHECK(result.group.theta().image(2) == w("x2^-1", 2));
  CHECK(result.factors[0].generator_offset == 0);
  CHECK(result.factors[1].new_letter == 2);
}

TEST_CASE("free product conjugates non-distinguished factors") {
  FreeProductResult result = free_product_with_z2({z2(), id_f1()});
  CHECK(result.group.rank() == 2);
  CHECK(result.group.theta().image(1) == w("x2^-1 x1 x2", 2));
  CHECK(result.group.theta().image(2) == w("x2^-1", 2));
  CHECK(is_involution(result.group.theta()));
  CHECK_THROWS_AS(free_product_with_z2({}), std::invalid_argument);
}

TEST_CASE("dyer-scott verification") {
  // One swap pair, one fixed, one inverted generator.
  TwistedGroup g(FreeAutomorphism(
      4, {w("x2", 4), w("x1", 4), w("x3", 4), w("x4^-1", 4)}));
  DyerScottClaim good;
  good.swaps = {{1, 2}};
  good.fixed = {3};
  good.lambdas = {{4, {}}};
  CHECK(verify_dyer_scott(g, good));

  DyerScottClaim wrong;
  wrong.fixed = {1, 2, 3};
  wrong.lambdas = {{4, {}}};
  CHECK(!verify_dyer_scott(g, wrong));

  DyerScottClaim malformed;
  malformed.fixed = {1, 2, 3};
  CHECK_THROWS_AS(verify_dyer_scott(g, malformed), std::invalid_argument);
  DyerScottClaim doubled;
  doubled.fixed = {1, 1, 2, 3};
  doubled.lambdas = {{4, {}}};
  CHECK_THROWS_AS(verify_dyer_scott(g, doubled), std::invalid_argument);
}

TEST_CASE("dyer-scott lambda blocks") {
  TwistedGroup g(FreeAutomorphism(2, {w("x1^-1", 2), w("x1^-1 x2 x1", 2)}));
  DyerScottClaim claim;
  claim.lambdas = {{1, {2}}};
  CHECK(verify_dyer_scott(g, claim));

  DyerScottClaim both_fixed;
  both_fixed.fixed = {1, 2};
  CHECK(!verify_dyer_scott(g, both_fixed));
}

TEST_CASE("consistent claims match the abelianized block signs") {
  TwistedGroup g(FreeAutomorphism(
      4, {w("x2", 4), w("x1", 4), w("x3", 4), w("x4^-1", 4)}));
  IntMatrix m = abelianization_matrix(g.theta());
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(2, 2) == 1);
  CHECK(m.at(3, 3) == -1);
}
