#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfforge/presented.hpp"
#include "testutil.hpp"

using namespace hopfforge;

namespace {

PresentationPtr taft63(unsigned t = 1) {
  return Presentation::build_taft(validate_fraction(6, {2, 3}), t,
                                  RootOfUnity(6 * t, 1));
}

PresentationPtr liu63() {
  return Presentation::build_liu(validate_fraction(6, {2, 3}), 6,
                                 RootOfUnity(6, 1));
}

PresentationPtr d12(unsigned d) {
  return Presentation::build_dfrac(validate_fraction(2, {1}), d,
                                   RootOfUnity(2, 1));
}

void require_all(const std::vector<CheckRecord>& recs) {
  for (auto& r : recs) {
    INFO(r.name, " | ", r.witness);
    CHECK(r.pass);
  }
}

std::vector<Monomial> bounded_monomials(const PresentationPtr& p, long xlo,
                                        long xhi) {
  std::vector<Monomial> out;
  const auto& spec = p->spec;
  std::vector<unsigned> box(spec.theta(), 0);
  std::vector<std::vector<unsigned>> ydegs;
  while (true) {
    ydegs.push_back(box);
    std::size_t i = 0;
    while (i < box.size() && ++box[i] == spec.exponents[i]) box[i++] = 0;
    if (i == box.size()) break;
  }
  bool has_x = p->family != Family::TaftFraction;
  for (long x = has_x ? xlo : 0; x <= (has_x ? xhi : 0); ++x) {
    for (unsigned g = 0; g < p->g_modulus(); ++g) {
      for (auto& yd : ydegs) {
        Monomial m;
        m.xpow = x;
        m.ydeg = yd;
        m.gpow = g;
        out.push_back(m);
      }
      if (p->family == Family::DFraction)
        for (unsigned u = 0; u < spec.m; ++u) {
          Monomial m;
          m.xpow = x;
          m.ydeg.assign(spec.theta(), 0);
          m.gpow = g;
          m.uidx = static_cast<int>(u);
          out.push_back(m);
        }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("taft builder enforces the compatible-root condition") {
  CHECK_THROWS_AS(Presentation::build_taft(validate_fraction(6, {4, 3}), 2,
                                           RootOfUnity(12, 1)),
                  NoCompatibleRoot);
  CHECK_THROWS_AS(Presentation::build_taft(validate_fraction(6, {2, 3}), 2,
                                           RootOfUnity(6, 1)),
                  NoCompatibleRoot);  // not primitive of order 12
  CHECK_NOTHROW(taft63(1));
  CHECK_NOTHROW(taft63(2));
}

TEST_CASE("taft normal form") {
  auto p = taft63(1);
  // g^6 = 1
  CHECK(p->g_power(1).pow(6) == p->one());
  CHECK(p->g_power(-1) == p->g_power(5));
  // y2^2 = y1^3 moves into the unbounded coordinate
  CHECK(p->y_gen(1).pow(2) == p->y_gen(0).pow(3));
  // the unbounded coordinate really is unbounded
  Element y15 = p->y_gen(0).pow(5);
  REQUIRE(y15.term_count() == 1);
  CHECK(y15.terms().begin()->first.ydeg[0] == 5);
  // q-commutation: y1 g = xi^2 g y1
  Cyclotomic q = Cyclotomic::root(6, 2);
  CHECK(p->y_gen(0) * p->g_power(1) ==
        (p->g_power(1) * p->y_gen(0)).scaled(q));
}

TEST_CASE("taft hopf verification and winding") {
  for (unsigned t : {1u, 2u}) {
    auto p = taft63(t);
    require_all(verify_relation_compatibility(p));
    require_all(verify_coassoc_counit_antipode(p));
    require_all(verify_winding(p));
    require_all(verify_pivot_conjugation(p));
    CHECK(p->winding_order(true) == 6 * t);
    CHECK(p->winding_order(false) == 6 * t);
    // center contains y1^{e_1 t}; g is not central
    CHECK(verify_central(p, p->y_gen(0).pow(3 * t)));
    CHECK_FALSE(verify_central(p, p->g_power(1)));
    CHECK_FALSE(verify_central(p, p->y_gen(0)));
  }
}

TEST_CASE("liu normal form and verification") {
  auto p = liu63();
  // y_i^{e_i} = 1 - x^{omega e_i m_i / m}
  CHECK(p->y_gen(0).pow(3) == p->one() - p->x_power(6));
  CHECK(p->y_gen(1).pow(2) == p->one() - p->x_power(6));
  // g^m = x^omega
  CHECK(p->g_power(1).pow(6) == p->x_power(6));
  CHECK(p->g_power(-1) == p->x_power(-6) * p->g_power(5));
  require_all(verify_relation_compatibility(p));
  require_all(verify_coassoc_counit_antipode(p));
  require_all(verify_winding(p));
  require_all(verify_pivot_conjugation(p));
  CHECK(p->winding_order(true) == 6);
  CHECK(verify_central(p, p->x_power(1)));
  CHECK_FALSE(verify_central(p, p->g_power(1)));
}

TEST_CASE("d family builder guards") {
  // odd second parity sum: {1} of 2 has (e-1) m d = d, so d odd fails
  CHECK_THROWS_AS(Presentation::build_dfrac(validate_fraction(2, {1}), 1,
                                            RootOfUnity(2, 1)),
                  ParityViolation);
  CHECK_NOTHROW(d12(2));
  CHECK_NOTHROW(d12(6));
  // {1} of 3, d = 1: both parity sums even
  CHECK_NOTHROW(Presentation::build_dfrac(validate_fraction(3, {1}), 1,
                                          RootOfUnity(3, 1)));
  // xi_{m_i}^{e_i} = -1 by construction
  auto p = Presentation::build_dfrac(validate_fraction(6, {2, 3}), 2,
                                     RootOfUnity(6, 1));
  for (unsigned r = 0; r < 2; ++r) {
    CHECK(p->xi_part[r].pow(2) == p->gamma.pow(p->spec.parts[r]));
    CHECK(p->xi_part[r].pow(p->spec.exponents[r]) == RootOfUnity::minus_one());
  }
}

TEST_CASE("d family frozen products") {
  {
    auto p = d12(2);
    // g^m = x^{md}
    CHECK(p->g_power(1) * p->g_power(1) == p->x_power(4));
    CHECK(p->g_power(-1) == p->x_power(-4) * p->g_power(1));
    // y^2 = 1 - x^{e m d}
    CHECK(p->y_gen(0) * p->y_gen(0) == p->one() - p->x_power(4));
    // x u_j = u_j x^{-1}
    CHECK(p->x_power(1) * p->u_gen(0) == p->u_gen(0) * p->x_power(-1));
  }
  {
    // u0*u0 = (1/2) x^{-9} (1 + x^6) g for d = 6 and gamma = -1
    auto p = d12(6);
    Element got = p->u_gen(0) * p->u_gen(0);
    Element want =
        (p->x_power(-9) + p->x_power(-3)).scaled(Cyclotomic(Rational(1, 2))) *
        p->g_power(1);
    CHECK(got == want);
    // S(g) = x^{-md} g^{m-1}
    CHECK(p->antipode(p->g_power(1)) == p->x_power(-12) * p->g_power(1));
    // epsilon
    CHECK(p->counit(p->u_gen(0)) == Cyclotomic::one());
    CHECK(p->counit(p->u_gen(1)) == Cyclotomic::zero());
    CHECK(p->counit(p->y_gen(0)).is_zero());
  }
}

TEST_CASE("d family hopf verification, small parameters") {
  for (unsigned d : {2u, 6u}) {
    auto p = d12(d);
    require_all(verify_relation_compatibility(p));
    require_all(verify_coassoc_counit_antipode(p));
    require_all(verify_winding(p));
    require_all(verify_pivot_conjugation(p));
    CHECK(p->winding_order(true) == 4);
    CHECK_FALSE(verify_central(p, p->g_power(1)));
  }
  auto p31 = Presentation::build_dfrac(validate_fraction(3, {1}), 1,
                                       RootOfUnity(3, 1));
  require_all(verify_relation_compatibility(p31));
  require_all(verify_coassoc_counit_antipode(p31));
  require_all(verify_winding(p31));
  require_all(verify_pivot_conjugation(p31));
  CHECK(p31->winding_order(false) == 6);
}

TEST_CASE("m = 1 degenerates to the infinite dihedral group algebra") {
  auto p = Presentation::build_dfrac(validate_fraction(1, {1}), 2,
                                     RootOfUnity::one());
  CHECK(p->u_gen(0) * p->u_gen(0) == p->one());
  CHECK(p->u_gen(0) * p->x_power(1) == p->x_power(-1) * p->u_gen(0));
  // group-like u0: diagonal coproduct, S is inversion, cocommutative
  Tensor du = p->coproduct(p->u_gen(0));
  REQUIRE(du.terms().size() == 1);
  CHECK(du.terms().begin()->first[0] == du.terms().begin()->first[1]);
  CHECK(p->antipode(p->u_gen(0)) == p->u_gen(0));
  require_all(verify_relation_compatibility(p));
  require_all(verify_coassoc_counit_antipode(p));
}

TEST_CASE("negative control: corrupted structure constant is caught") {
  auto p = d12(2);
  Element good = p->u_times_u(0, 0);
  Element bad = good + p->x_power(1).scaled(Cyclotomic(Rational(1, 7)));
  Tensor lhs = p->coproduct(p->u_gen(0)) * p->coproduct(p->u_gen(0));
  CHECK(lhs == p->coproduct(good));
  CHECK(lhs != p->coproduct(bad));
  // and a corrupted coproduct coefficient breaks coassociativity
  Tensor dd = p->coproduct(p->u_gen(1));
  Tensor corrupted = dd;
  corrupted.add(dd.terms().begin()->first, Cyclotomic(Rational(1, 3)));
  CHECK(dd.apply_delta(0) == dd.apply_delta(1));
  CHECK(corrupted.apply_delta(0) != corrupted.apply_delta(1));
}

TEST_CASE("associativity on bounded monomials") {
  {
    auto p = d12(2);
    auto monos = bounded_monomials(p, -2, 2);
    REQUIRE(monos.size() == 40);
    for (auto& a : monos)
      for (auto& b : monos)
        for (auto& c : monos) {
          Element ab_c = (p->from_monomial(a, Cyclotomic::one()) *
                          p->from_monomial(b, Cyclotomic::one())) *
                         p->from_monomial(c, Cyclotomic::one());
          Element a_bc = p->from_monomial(a, Cyclotomic::one()) *
                         (p->from_monomial(b, Cyclotomic::one()) *
                          p->from_monomial(c, Cyclotomic::one()));
          if (ab_c != a_bc) REQUIRE(ab_c.str() == a_bc.str());
        }
  }
  {
    // larger presentations: randomized triples with a fixed seed
    auto p = Presentation::build_dfrac(validate_fraction(6, {2, 3}), 2,
                                       RootOfUnity(6, 1));
    auto monos = bounded_monomials(p, -2, 2);
    auto rng = testutil::rng(5);
    for (int trial = 0; trial < 400; ++trial) {
      auto& a = monos[rng() % monos.size()];
      auto& b = monos[rng() % monos.size()];
      auto& c = monos[rng() % monos.size()];
      Element ab_c = (p->from_monomial(a, Cyclotomic::one()) *
                      p->from_monomial(b, Cyclotomic::one())) *
                     p->from_monomial(c, Cyclotomic::one());
      Element a_bc = p->from_monomial(a, Cyclotomic::one()) *
                     (p->from_monomial(b, Cyclotomic::one()) *
                      p->from_monomial(c, Cyclotomic::one()));
      REQUIRE(ab_c == a_bc);
    }
  }
  {
    auto p = taft63(2);
    auto monos = bounded_monomials(p, 0, 0);
    auto rng = testutil::rng(6);
    for (int trial = 0; trial < 300; ++trial) {
      auto& a = monos[rng() % monos.size()];
      auto& b = monos[rng() % monos.size()];
      auto& c = monos[rng() % monos.size()];
      REQUIRE((p->from_monomial(a, Cyclotomic::one()) *
               p->from_monomial(b, Cyclotomic::one())) *
                  p->from_monomial(c, Cyclotomic::one()) ==
              p->from_monomial(a, Cyclotomic::one()) *
                  (p->from_monomial(b, Cyclotomic::one()) *
                   p->from_monomial(c, Cyclotomic::one())));
    }
  }
}

TEST_CASE("bigrading is additive under multiplication") {
  auto p = d12(2);
  auto monos = bounded_monomials(p, -1, 1);
  unsigned two_m = 2 * p->spec.m;
  for (auto& a : monos)
    for (auto& b : monos) {
      auto da = p->bidegree(a), db = p->bidegree(b);
      Element prod = p->from_monomial(a, Cyclotomic::one()) *
                     p->from_monomial(b, Cyclotomic::one());
      for (auto& [m, c] : prod.terms()) {
        auto dm = p->bidegree(m);
        CHECK(dm.first == (da.first + db.first) % two_m);
        CHECK(dm.second == (da.second + db.second) % two_m);
      }
    }
}

TEST_CASE("unit element is neutral and multiplication bilinear") {
  auto p = d12(6);
  auto monos = bounded_monomials(p, -1, 1);
  auto rng = testutil::rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    Element a = p->from_monomial(monos[rng() % monos.size()],
                                 Cyclotomic::root(4, 1)) +
                p->from_monomial(monos[rng() % monos.size()],
                                 Cyclotomic(Rational(3)));
    Element b = p->from_monomial(monos[rng() % monos.size()],
                                 Cyclotomic(Rational(1, 2)));
    Element c = p->from_monomial(monos[rng() % monos.size()],
                                 Cyclotomic::one());
    CHECK(p->one() * a == a);
    CHECK(a * p->one() == a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(c * (a + b) == c * a + c * b);
  }
}
