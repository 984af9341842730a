#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylint/arith.hpp"
#include "sylint/liedata.hpp"

using namespace sylint;
using namespace sylint::arith;
using sylint::arith::make_rat;
using namespace sylint::lie;

TEST_CASE("small orders") {
  CHECK(group_order(make_group(Family::Linear, 2, 7)).order.value == 168);
  CHECK(group_order(make_group(Family::Linear, 3, 2)).order.value == 168);
  CHECK(group_order(make_group(Family::Linear, 4, 2)).order.value == 20160);
  CHECK(group_order(make_group(Family::Linear, 5, 2)).order.value == 9999360);
  CHECK(group_order(make_group(Family::Linear, 4, 3)).order.value == 6065280);
  CHECK(group_order(make_group(Family::Unitary, 4, 2)).order.value == 25920);
  CHECK(group_order(make_group(Family::Unitary, 3, 3)).order.value == 6048);
  CHECK(group_order(make_group(Family::Symplectic, 6, 2)).order.value == 1451520);
  CHECK(group_order(make_group(Family::Symplectic, 4, 3)).order.value == 25920);
  CHECK(group_order(make_group(Family::OrthogonalPlus, 8, 2)).order.value == 174182400);
  CHECK(group_order(alternating_group(5)).order.value == 60);
  CHECK(group_order(alternating_group(9)).order.value == 181440);
}

TEST_CASE("L2(7) borel data") {
  auto d = group_order(make_group(Family::Linear, 2, 7));
  CHECK(d.unipotent_order.value == 7);
  CHECK(d.borel_order.value == 21);
  CHECK(d.d == 2);
}

TEST_CASE("known exceptional orders") {
  CHECK(group_order(make_group(Family::G2, 0, 3)).order.value == 4245696);
  CHECK(group_order(make_group(Family::G2, 0, 2)).order.value == 6048);   // G2(2)'
  CHECK(group_order(make_group(Family::TwoB2, 0, 8)).order.value == 29120);
  CHECK(group_order(make_group(Family::ThreeD4, 0, 2)).order.value == 211341312);
  CHECK(group_order(make_group(Family::TwoF4, 0, 2)).order.value == 17971200);  // 2F4(2)'
  CHECK(group_order(make_group(Family::TwoG2, 0, 27)).order.value ==
        Int("10073444472"));
  CHECK(group_order(make_group(Family::TwoG2, 0, 3)).order.value == 504);  // = L2(8)
}

TEST_CASE("2E6(2) facts from the q=2 case analysis") {
  auto G = make_group(Family::TwistedE6, 0, 2);
  auto d = group_order(G);
  CHECK(p_part(d.order, 2) == ipow(2, 36));
  CHECK(d.pi_prime.size() == 7);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make_group(Family::Linear, 2, 4), std::domain_error);
  CHECK_THROWS_AS(make_group(Family::Unitary, 3, 2), std::domain_error);
  CHECK_THROWS_AS(make_group(Family::OrthogonalOdd, 7, 4), std::domain_error);
  CHECK_THROWS_AS(make_group(Family::OrthogonalPlus, 6, 3), std::domain_error);
  CHECK_THROWS_AS(make_group(Family::TwoB2, 0, 4), std::domain_error);
  CHECK_THROWS_AS(make_group(Family::Linear, 3, 6), std::domain_error);
}

TEST_CASE("sylow orders") {
  CHECK(sylow_order(make_group(Family::Linear, 7, 2), 3) == 81);  // |H_3| = 3^4
  auto G = make_group(Family::OrthogonalPlus, 8, 2);
  CHECK(sylow_order(G, 2) == 4096);
  CHECK(sylow_order(G, 5) == 25);
  CHECK_THROWS_AS(sylow_order(G, 11), std::domain_error);
  auto d = group_order(G);
  CHECK(sylow_order(G, 2) == d.unipotent_order.value);
}

TEST_CASE("product of sylow orders = |G| over family grids") {
  std::vector<GroupId> grid;
  auto qs = prime_powers(2, 9);
  for (unsigned long q : qs) {
    for (unsigned n = 2; n <= 14; ++n) {
      for (Family fam : {Family::Linear, Family::Unitary, Family::Symplectic,
                         Family::OrthogonalOdd, Family::OrthogonalPlus,
                         Family::OrthogonalMinus}) {
        try {
          grid.push_back(make_group(fam, n, q));
        } catch (const std::domain_error&) {
        }
      }
    }
    for (Family fam : {Family::G2, Family::F4, Family::E6, Family::TwistedE6,
                       Family::E7, Family::E8, Family::ThreeD4, Family::TwoB2,
                       Family::TwoG2, Family::TwoF4}) {
      try {
        grid.push_back(make_group(fam, 0, q));
      } catch (const std::domain_error&) {
      }
    }
  }
  CHECK(grid.size() > 250);
  for (const auto& G : grid) {
    auto d = group_order(G);
    Int prod = 1;
    for (const auto& p : d.pi) prod *= p_part(d.order, p);
    CAPTURE(G.name());
    CHECK(prod == d.order.value);
    CHECK(d.order.value % d.borel_order.value == 0);
    CHECK(d.borel_order.value % d.unipotent_order.value == 0);
  }
}

TEST_CASE("structured sylow formulas match the p-part on grids") {
  unsigned checked = 0;
  auto qs = prime_powers(2, 9);
  for (unsigned long q : qs) {
    for (unsigned n = 2; n <= 14; ++n) {
      for (Family fam : {Family::Linear, Family::Unitary, Family::Symplectic,
                         Family::OrthogonalOdd, Family::OrthogonalPlus,
                         Family::OrthogonalMinus, Family::G2, Family::F4,
                         Family::TwistedE6}) {
        GroupId G;
        try {
          G = make_group(fam, n, q);
        } catch (const std::domain_error&) {
          continue;
        }
        if (is_exceptional(fam) && n != 2 && fam != Family::F4 && fam != Family::TwistedE6)
          continue;
        if ((fam == Family::F4 || fam == Family::TwistedE6) && n != 4 && n != 6)
          continue;  // one copy per (fam,q)
        auto data = group_order(G);
        for (const auto& p : data.pi) {
          auto s = structured_sylow_order(G, p);
          if (!s) continue;
          CAPTURE(G.name());
          CAPTURE(p.get_str());
          CHECK(*s == p_part(data.order, p));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 400);
}

TEST_CASE("qr_defining") {
  // L2(7): Q_7 = 1/8, the same value the L3(2) analysis quotes
  CHECK(qr_defining(make_group(Family::Linear, 2, 7)) == Rat(1, 8));
  // U4(2): the defining-characteristic term gives Q_2 = 71/135
  CHECK(qr_defining(make_group(Family::Unitary, 4, 2)) == Rat(71, 135));
  CHECK(qr_defining(make_group(Family::OrthogonalPlus, 8, 2)) == Rat(38429, 42525));
  CHECK(qr_defining(make_group(Family::Linear, 4, 3)) == Rat(1351, 2080));
  CHECK(qr_defining(make_group(Family::Linear, 4, 2)) == Rat(251, 315));
  // general L_n(q) closed form
  for (unsigned n : {3u, 4u, 5u}) {
    for (unsigned long q : {2ul, 3ul, 4ul}) {
      auto G = make_group(Family::Linear, n, q);
      Rat lhs = qr_defining(G);
      Int num = ipow(Int(q), n * (n - 1) / 2) * ipow(Int(q) - 1, n - 1);
      Int den = 1;
      for (unsigned i = 2; i <= n; ++i) den *= ipow(Int(q), i) - 1;
      Rat rhs = Rat(1) - Rat(num) / Rat(den);
      CHECK(lhs == rhs);
    }
  }
  for (unsigned long q : {2ul, 3ul, 5ul, 9ul}) {
    for (unsigned n : {4u, 6u, 8u}) {
      auto G = make_group(Family::Symplectic, n, q);
      if (zenkov_excluded(G)) continue;
      Rat v = qr_defining(G);
      CHECK(v >= 0);
      CHECK(v < 1);
    }
  }
  CHECK_THROWS_AS(qr_defining(make_group(Family::Symplectic, 4, 2)), std::domain_error);
  CHECK_THROWS_AS(qr_defining(make_group(Family::G2, 0, 2)), std::domain_error);
}

TEST_CASE("mersenne L2 values") {
  auto m7 = l2_mersenne_q2(7);
  CHECK(m7.q2 == Rat(13, 21));   // = 1/2 + 10/84
  CHECK(m7.regular_orbits == 1);
  auto m31 = l2_mersenne_q2(31);
  CHECK(m31.q2 == Rat(1, 2) + make_rat(34, 1860));
  CHECK(m31.regular_orbits == 7);
  CHECK_THROWS_AS(l2_mersenne_q2(11), std::domain_error);
  CHECK_THROWS_AS(l2_mersenne_q2(3), std::domain_error);
}

TEST_CASE("group token parsing") {
  auto g = parse_group_token("L4", 3);
  REQUIRE(g.has_value());
  CHECK(g->family == Family::Linear);
  CHECK(g->n == 4);
  auto e = parse_group_token("2E6", 2);
  REQUIRE(e.has_value());
  CHECK(e->family == Family::TwistedE6);
  auto a = parse_group_token("A7", 0);
  REQUIRE(a.has_value());
  CHECK(a->family == Family::Alternating);
  CHECK(!parse_group_token("X9", 2).has_value());
  auto om = parse_group_token("O-10", 3);
  REQUIRE(om.has_value());
  CHECK(om->family == Family::OrthogonalMinus);
}
