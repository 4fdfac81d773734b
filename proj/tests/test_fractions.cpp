#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hopfforge/fraction.hpp"
#include "testutil.hpp"

using namespace hopfforge;

namespace {

// brute-force oracle: least e >= 1 with m | e*mi
unsigned exponent_oracle(unsigned m, unsigned mi) {
  for (unsigned e = 1;; ++e)
    if ((static_cast<unsigned long long>(e) * mi) % m == 0) return e;
}

}  // namespace

TEST_CASE("exponent against brute-force oracle") {
  CHECK(exponent_of(6, 2) == 3);
  CHECK(exponent_of(30, 12) == 5);
  for (unsigned m = 1; m <= 24; ++m) {
    CHECK(exponent_of(m, m) == 1);
    for (unsigned mi = 1; mi <= 2 * m; ++mi)
      CHECK(exponent_of(m, mi) == exponent_oracle(m, mi));
  }
}

TEST_CASE("validation of the worked fractions") {
  auto f = validate_fraction(6, {2, 3});
  CHECK(f.exponents == std::vector<unsigned>{3, 2});
  CHECK(f.m0 == 1);

  auto g = validate_fraction(10, {2, 5});
  CHECK(g.exponents == std::vector<unsigned>{5, 2});

  auto h = validate_fraction(30, {12, 5});
  CHECK(h.exponents == std::vector<unsigned>{5, 6});

  CHECK(std::holds_alternative<FractionSpec>(check_fraction(6, {4, 3})));

  // conditions are reported in order; 6 does not divide 2*2, so (2) fires
  // before the exponent-product condition gets a chance
  auto bad = check_fraction(6, {2, 2});
  auto* err = std::get_if<FractionError>(&bad);
  REQUIRE(err != nullptr);
  CHECK(err->condition == 2);
  CHECK_THROWS_AS(validate_fraction(6, {2, 2}), ConditionFailed);

  auto bad2 = check_fraction(6, {5, 3});
  auto* err2 = std::get_if<FractionError>(&bad2);
  REQUIRE(err2 != nullptr);
  CHECK(err2->condition == 2);  // 6 does not divide 15

  auto bad3 = check_fraction(30, {10, 6});
  auto* err3 = std::get_if<FractionError>(&bad3);
  REQUIRE(err3 != nullptr);
  CHECK(err3->condition == 3);  // e1*e2 = 15, not 30

  auto bad1 = check_fraction(12, {2, 3});
  auto* err1 = std::get_if<FractionError>(&bad1);
  REQUIRE(err1 != nullptr);
  CHECK(err1->condition == 1);  // e_1 = 6 shares a factor with m_1 = 2
}

TEST_CASE("injectivity is forced once conditions (1)-(3) hold") {
  // multiplying a collision relation by m_i gives m | c_i m_i^2, and
  // coprimality of e_i and m_i pins gcd(m, m_i^2) = gcd(m, m_i), so the
  // first reportable failure is always one of (1)-(3); checked exhaustively
  for (unsigned m = 1; m <= 14; ++m) {
    std::vector<unsigned> parts;
    auto rec = [&](auto&& self, unsigned lo) -> void {
      if (parts.size() > 3) return;
      if (!parts.empty()) {
        auto r = check_fraction(m, parts);
        if (auto* e = std::get_if<FractionError>(&r)) CHECK(e->condition != 4);
      }
      for (unsigned p = lo; p <= m; ++p) {
        parts.push_back(p);
        self(self, p);
        parts.pop_back();
      }
    };
    if (m <= 10) rec(rec, 1);
  }
}

TEST_CASE("coordinates are the unique box representatives") {
  auto f = validate_fraction(6, {2, 3});
  CHECK(f.coordinates(0) == std::vector<unsigned>{0, 0});
  CHECK(f.coordinates(5) == std::vector<unsigned>{1, 1});
  CHECK(f.coordinates(-1) == std::vector<unsigned>{1, 1});

  // uniqueness by exhaustion over the box, and the round trip
  for (unsigned m : {6u, 10u, 30u}) {
    for (auto& spec : enumerate_fractions(m)) {
      std::set<long> hit;
      std::vector<unsigned> coords(spec.theta(), 0);
      unsigned count = 0;
      while (true) {
        long r = spec.residue_of(coords);
        CHECK(!hit.count(r));
        hit.insert(r);
        CHECK(spec.coordinates(r) == coords);
        ++count;
        std::size_t i = 0;
        while (i < coords.size() && ++coords[i] == spec.exponents[i])
          coords[i++] = 0;
        if (i == coords.size()) break;
      }
      CHECK(count == spec.m);  // box size equals m
    }
  }
}

TEST_CASE("enumeration: length one gives exactly the coprime residues") {
  for (unsigned m = 1; m <= 20; ++m) {
    std::set<unsigned> got;
    for (auto& f : enumerate_fractions(m, 1)) {
      REQUIRE(f.parts.size() == 1);
      got.insert(f.parts[0] % m);
    }
    std::set<unsigned> want;
    for (unsigned x : units_mod(m)) want.insert(x);
    CHECK(got == want);
  }
}

TEST_CASE("enumeration: both {2,3} and {4,3} are fractions of 6") {
  auto fs = enumerate_fractions(6, 2);
  auto has = [&](std::vector<unsigned> parts) {
    for (auto& f : fs)
      if (f.parts == parts) return true;
    return false;
  };
  CHECK(has({2, 3}));
  CHECK(has({3, 4}));  // multiset-deduplicated, sorted representative
  // both share the same exponent multiset
  auto a = validate_fraction(6, {2, 3}), b = validate_fraction(6, {4, 3});
  std::multiset<unsigned> ea(a.exponents.begin(), a.exponents.end());
  std::multiset<unsigned> eb(b.exponents.begin(), b.exponents.end());
  CHECK(ea == eb);
}

TEST_CASE("enumeration: m=1 has only the unit fraction") {
  auto fs = enumerate_fractions(1);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].parts == std::vector<unsigned>{1});
  CHECK(fs[0].exponents == std::vector<unsigned>{1});
}

TEST_CASE("the part sum of a valid fraction is coprime to m") {
  for (unsigned m = 1; m <= 16; ++m) {
    for (auto& f : enumerate_fractions(m)) {
      unsigned long long s = 0;
      for (unsigned p : f.parts) s += p;
      CHECK(std::gcd(s, static_cast<unsigned long long>(m)) == 1);
    }
  }
}

TEST_CASE("taft isomorphism witness search") {
  auto f = validate_fraction(6, {2, 3});
  RootOfUnity z6(6, 1);
  auto same = taft_fraction_iso(f, z6, f, z6);
  CHECK(same.isomorphic);
  CHECK(same.x0 == 1);

  // scaling parts by the unit 5 and raising the root to the inverse unit
  auto g = validate_fraction(6, {4, 3});  // {2*5, 3*5} = {10,15} = {4,3} mod 6
  auto iso = taft_fraction_iso(f, z6.pow(5), g, z6);
  CHECK(iso.isomorphic);
  CHECK(iso.x0 == 5);

  // same parts but incompatible roots: z6 vs z6 after scaling by 5
  auto no = taft_fraction_iso(f, z6, g, z6);
  CHECK_FALSE(no.isomorphic);

  // theta mismatch
  auto h = validate_fraction(5, {2});
  CHECK_FALSE(taft_fraction_iso(f, z6, h, RootOfUnity(5, 1)).isomorphic);

  // infinite case distinguishes t
  auto inf_no = taft_infinite_iso(f, 1, z6, f, 2, z6);
  CHECK_FALSE(inf_no.isomorphic);
  RootOfUnity z12(12, 1);
  auto inf_yes = taft_infinite_iso(f, 2, z12, f, 2, z12);
  CHECK(inf_yes.isomorphic);
}

TEST_CASE("liu basic form and isomorphism criteria") {
  RootOfUnity z3(3, 1);
  auto f = validate_fraction(3, {2});  // m0 = 2
  auto basic = liu_basic_form(f, 3, z3);
  CHECK(basic.spec.parts == std::vector<unsigned>{1});
  CHECK(basic.omega == 6);
  CHECK(basic.gamma == z3.pow(4));
  CHECK(basic.gamma == z3);  // z3^4 = z3

  // basic form of a basic form is itself
  auto again = liu_basic_form(basic.spec, basic.omega, basic.gamma);
  CHECK(again.spec.parts == basic.spec.parts);
  CHECK(again.omega == basic.omega);
  CHECK(again.gamma == basic.gamma);

  // a presentation is isomorphic to its basic form
  CHECK(liu_iso(f, 3, z3, basic.spec, basic.omega, basic.gamma));
  CHECK(liu_iso(f, 3, z3, f, 3, z3));
  CHECK_FALSE(liu_iso(f, 3, z3, basic.spec, 3, z3));

  // gcd-1 fraction: basic form is the identity transform
  auto g = validate_fraction(6, {2, 3});
  auto gb = liu_basic_form(g, 5, RootOfUnity(6, 1));
  CHECK(gb.spec.parts == g.parts);
  CHECK(gb.omega == 5);

  // randomized idempotence
  auto rng = testutil::rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    unsigned m = 2 + rng() % 11;
    auto fs = enumerate_fractions(m);
    auto& spec = fs[rng() % fs.size()];
    unsigned omega = 1 + rng() % 6;
    RootOfUnity gamma(m, 1 + 0 * rng());
    auto b1 = liu_basic_form(spec, omega, gamma);
    auto b2 = liu_basic_form(b1.spec, b1.omega, b1.gamma);
    CHECK(b1.spec.parts == b2.spec.parts);
    CHECK(b1.omega == b2.omega);
    CHECK(b1.gamma == b2.gamma);
  }
}

TEST_CASE("d-family isomorphism criterion") {
  auto f = validate_fraction(2, {1});
  RootOfUnity minus(2, 1);
  CHECK(d_iso(f, 2, minus, f, 2, minus));
  CHECK_FALSE(d_iso(f, 2, minus, f, 4, minus));  // d*m0 differs
  auto g = validate_fraction(6, {2, 3});
  CHECK_FALSE(d_iso(f, 2, minus, g, 2, RootOfUnity(6, 1)));
}
