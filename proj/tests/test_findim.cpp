#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfforge/findim.hpp"
#include "testutil.hpp"

using namespace hopfforge;

namespace {

void require_all(const std::vector<CheckRecord>& recs) {
  for (auto& r : recs) {
    INFO(r.name, " | ", r.witness);
    CHECK(r.pass);
  }
}

FinDimHopf dbar12_2() {
  return build_dbar(validate_fraction(2, {1}), 2, RootOfUnity(2, 1));
}

FinDimHopf dt_24() {
  return build_dt(validate_fraction(2, {1}), 6, RootOfUnity(2, 1), 3);
}

bool is_commutative(const FinDimHopf& h) {
  for (unsigned i = 0; i < h.dim; ++i)
    for (unsigned j = 0; j < h.dim; ++j)
      if (h.mult[i][j] != h.mult[j][i]) return false;
  return true;
}

bool is_cocommutative(const FinDimHopf& h) {
  for (unsigned i = 0; i < h.dim; ++i) {
    SparseTensor flip;
    for (auto& [key, c] : h.delta[i]) flip[{key.second, key.first}] = c;
    if (flip != h.delta[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("finite taft dimensions") {
  CHECK(build_finite_taft(validate_fraction(1, {1}), RootOfUnity::one()).dim ==
        1);
  CHECK(build_finite_taft(validate_fraction(2, {1}), RootOfUnity(2, 1)).dim ==
        4);
  CHECK(build_finite_taft(validate_fraction(6, {2, 3}), RootOfUnity(6, 1))
            .dim == 36);
}

TEST_CASE("finite taft is a hopf algebra with m group-likes") {
  auto h = build_finite_taft(validate_fraction(2, {1}), RootOfUnity(2, 1));
  require_all(verify_hopf(h));
  auto gl = group_likes(h);
  CHECK(gl.elements.size() == 2);

  auto h6 = build_finite_taft(validate_fraction(6, {2, 3}), RootOfUnity(6, 1));
  require_all(verify_hopf(h6, 4000));
  CHECK(group_likes(h6).elements.size() == 6);

  // not semisimple for m >= 2: the integral has counit zero
  CHECK_FALSE(is_semisimple(h));
  // y is a (1, g^{m_1})-skew-primitive
  Monomial gm;
  gm.ydeg.assign(1, 0);
  gm.gpow = 1;
  auto space = skew_primitive_space(h, h.basis_vec(h.unit_index),
                                    h.basis_vec(h.index.at(gm)));
  Monomial ym;
  ym.ydeg.assign(1, 1);
  bool has_y = false;
  for (auto& v : space) {
    SparseVec sv;
    for (unsigned i = 0; i < h.dim; ++i)
      if (!v[i].is_zero()) sv[i] = v[i];
    if (sv.size() == 1 && sv.count(h.index.at(ym))) has_y = true;
  }
  CHECK(has_y);
}

TEST_CASE("finite taft radical is the span of y-monomials") {
  auto h = build_finite_taft(validate_fraction(2, {1}), RootOfUnity(2, 1));
  auto rad = jacobson_radical(h);
  CHECK(rad.size() == 2);  // y, yg
  // the quotient by (y) is the group algebra of Z_m
  Monomial ym;
  ym.ydeg.assign(1, 1);
  auto q = quotient_hopf(h, {h.basis_vec(h.index.at(ym))});
  CHECK(q.dim == 2);
  CHECK(is_commutative(q));
  CHECK(is_cocommutative(q));
  require_all(verify_hopf(q));
  CHECK(group_likes(q).elements.size() == 2);
  CHECK(is_semisimple(q));
  // pivot: S^2 = conjugation by g^{sum m_i}
  auto piv = pivotal_grouplike(h);
  REQUIRE(piv.has_value());
  Monomial want;
  want.ydeg.assign(1, 0);
  want.gpow = 1;
  CHECK(*piv == SparseVec{{h.index.at(want), Cyclotomic::one()}});
}

TEST_CASE("dbar dimensions") {
  CHECK(dbar12_2().dim == 16);
  CHECK(build_dbar(validate_fraction(1, {1}), 3, RootOfUnity::one()).dim == 6);
  CHECK(build_dbar(validate_fraction(3, {1}), 1, RootOfUnity(3, 1)).dim == 18);
  CHECK(build_dbar(validate_fraction(6, {2, 3}), 2, RootOfUnity(6, 1)).dim ==
        144);
  CHECK_THROWS_AS(
      build_dbar(validate_fraction(3, {2}), 1, RootOfUnity(3, 1)),
      GcdNotOne);
  CHECK_THROWS_AS(
      build_dbar(validate_fraction(2, {1}), 1, RootOfUnity(2, 1)),
      ParityViolation);
}

TEST_CASE("dbar is a semisimple hopf algebra") {
  auto h = dbar12_2();
  require_all(verify_hopf(h));
  auto integral = left_integral(h);
  // the reference double-sum integral spans the computed integral space
  SparseVec ref = dbar_reference_integral(h);
  Cyclotomic ratio = ref.begin()->second / integral.vec.begin()->second;
  SparseVec scaled;
  for (auto& [i, c] : integral.vec) scaled[i] = c * ratio;
  CHECK(scaled == ref);
  CHECK(h.eps_vec(ref) == Cyclotomic(Rational(16)));
  CHECK(is_semisimple(h));
  CHECK(jacobson_radical(h).empty());
  CHECK(group_likes(h).elements.size() == 8);  // m^2 d
  require_all(verify_c_block_matrix_algebra(h));
  require_all(verify_dbar_block_decomposition(h));
}

TEST_CASE("dbar with m = 1 is the dihedral group algebra") {
  auto h = build_dbar(validate_fraction(1, {1}), 3, RootOfUnity::one());
  require_all(verify_hopf(h));
  CHECK(is_cocommutative(h));
  CHECK_FALSE(is_commutative(h));  // dihedral of order 6
  CHECK(group_likes(h).elements.size() == 6);
  CHECK(is_semisimple(h));
}

TEST_CASE("dbar structure constants match the presented-family quotient") {
  // independent route: multiply in the infinite presentation, kill the
  // y-monomials, reduce x modulo md on the group part and modulo d with a
  // gamma twist on the u-sector
  auto spec = validate_fraction(2, {1});
  RootOfUnity gamma(2, 1);
  auto h = build_dbar(spec, 2, gamma);
  auto pres = Presentation::build_dfrac(spec, 2, gamma);
  unsigned md = 4;
  auto project = [&](const Element& e) {
    SparseVec out;
    for (auto& [mo, c] : e.terms()) {
      bool hasy = false;
      for (unsigned v : mo.ydeg) hasy |= v != 0;
      if (hasy) continue;
      Monomial p = mo;
      Cyclotomic cc = c;
      if (p.has_u()) {
        long q = floordiv_l(p.xpow, 2);
        p.xpow -= q * 2;
        cc *= Cyclotomic::from_root(gamma.pow(q * p.uidx));
      } else {
        p.xpow = mod_l(p.xpow, md);
      }
      auto [it, ins] = out.try_emplace(h.index.at(p), cc);
      if (!ins) {
        it->second += cc;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    return out;
  };
  for (unsigned a = 0; a < h.dim; ++a)
    for (unsigned b = 0; b < h.dim; ++b) {
      Element prod = pres->monomial_product(h.basis[a], h.basis[b]);
      CHECK(project(prod) == h.mult[a][b]);
    }
}

TEST_CASE("the 24-dimensional quotient and its radical") {
  auto h = dt_24();
  CHECK(h.dim == 24);
  require_all(verify_hopf(h));

  const auto& spec = h.spec;
  (void)spec;
  Monomial um0, um1, ym, gm;
  um0.ydeg.assign(1, 0);
  um0.uidx = 0;
  um1.ydeg.assign(1, 0);
  um1.uidx = 1;
  ym.ydeg.assign(1, 1);
  gm.ydeg.assign(1, 0);
  gm.gpow = 1;
  unsigned iu0 = h.index.at(um0), iu1 = h.index.at(um1);
  unsigned iy = h.index.at(ym), ig = h.index.at(gm);

  // u0 u0 = g, u0 u1 = (-i/2) y g, u1 u0 = (1/2) y g, u1 u1 = 0
  CHECK(h.mult[iu0][iu0] == SparseVec{{ig, Cyclotomic::one()}});
  Monomial ygm = ym;
  ygm.gpow = 1;
  Cyclotomic mi_half = Cyclotomic(Rational(-1, 2)) * Cyclotomic::root(4, 1);
  CHECK(h.mult[iu0][iu1] == SparseVec{{h.index.at(ygm), mi_half}});
  CHECK(h.mult[iu1][iu0] ==
        SparseVec{{h.index.at(ygm), Cyclotomic(Rational(1, 2))}});
  CHECK(h.mult[iu1][iu1].empty());
  // y u0 = 2 u1 = i u0 y
  CHECK(h.mult[iy][iu0] == SparseVec{{iu1, Cyclotomic(Rational(2))}});
  CHECK(h.mult[iu0][iy] ==
        SparseVec{{iu1, Cyclotomic(Rational(2)) *
                            Cyclotomic::root(4, 1).inverse()}});
  // S(u0) = g u0, S(u1) = -i u1
  Monomial gu0 = um0;
  gu0.gpow = 1;
  CHECK(h.antip[iu0] == SparseVec{{h.index.at(gu0), Cyclotomic::one()}});
  CHECK(h.antip[iu1] == SparseVec{{iu1, -Cyclotomic::root(4, 1)}});
  // delta(u0) = u0 (x) u0 - u1 (x) g u1
  Monomial gu1 = um1;
  gu1.gpow = 1;
  SparseTensor want{{{iu0, iu0}, Cyclotomic::one()},
                    {{iu1, h.index.at(gu1)}, -Cyclotomic::one()}};
  CHECK(h.delta[iu0] == want);

  // non-semisimple: the integral has counit zero
  auto integral = left_integral(h);
  CHECK(h.eps_vec(integral.vec).is_zero());
  CHECK_FALSE(is_semisimple(h));

  // radical equals the two-sided ideal (y, u1)
  auto rad = jacobson_radical(h);
  auto ideal = two_sided_ideal(h, {h.basis_vec(iy), h.basis_vec(iu1)});
  CHECK(rad.size() == h.dim - ideal.complement.size());
  for (auto& v : rad) CHECK(ideal.span.contains(v));

  // the quotient is the group algebra of Z_3 x| Z_4 (dicyclic of order 12):
  // x u0 = u0 x^{-1} survives the quotient and x keeps order 3, so the
  // quotient is cocommutative with 12 group-likes but NOT commutative
  auto q = quotient_hopf(h, {h.basis_vec(iy), h.basis_vec(iu1)});
  CHECK(q.dim == 12);
  CHECK_FALSE(is_commutative(q));
  CHECK(is_cocommutative(q));
  require_all(verify_hopf(q));
  auto qgl = group_likes(q);
  CHECK(qgl.elements.size() == 12);
  CHECK(is_semisimple(q));  // radical correctness oracle
  {
    // dicyclic signature: exactly one group-like of order 2
    unsigned involutions = 0;
    SparseVec unit = q.basis_vec(q.unit_index);
    for (auto& v : qgl.elements)
      if (v != unit && q.mult_vec(v, v) == unit) ++involutions;
    CHECK(involutions == 1);
  }

  // pivot: g^{sum m_i} x^{c mod t} with c = -9, so plain g
  auto piv = pivotal_grouplike(h);
  REQUIRE(piv.has_value());
  CHECK(*piv == SparseVec{{ig, Cyclotomic::one()}});

  // y is a (1, g)-skew-primitive
  auto space = skew_primitive_space(h, h.basis_vec(h.unit_index),
                                    h.basis_vec(ig));
  bool has_y = false;
  for (auto& v : space) {
    bool only_y = !v[iy].is_zero();
    for (unsigned i = 0; i < h.dim && only_y; ++i)
      if (i != iy && !v[i].is_zero()) only_y = false;
    has_y |= only_y;
  }
  CHECK(has_y);

  // coradical is bigger than the group part: the c-block is simple of
  // dimension m^2 = 4, so the quotient is not pointed
  require_all(verify_c_block_matrix_algebra(h));
}

TEST_CASE("dt with m = 1 gives dihedral group algebras") {
  auto h = build_dt(validate_fraction(1, {1}), 2, RootOfUnity::one(), 4);
  CHECK(h.dim == 8);
  require_all(verify_hopf(h));
  CHECK(is_cocommutative(h));
  CHECK(group_likes(h).elements.size() == 8);
  CHECK(is_semisimple(h));
  CHECK(build_dt(validate_fraction(2, {1}), 2, RootOfUnity(2, 1), 1).dim == 8);
}

TEST_CASE("negative controls: single corrupted coefficients are caught") {
  auto h = dbar12_2();
  {
    auto bad = h;
    bad.mult[3][5][bad.mult[3][5].empty()
                       ? 0
                       : bad.mult[3][5].begin()->first] += Cyclotomic::one();
    bool failed = false;
    for (auto& r : verify_hopf(bad)) failed |= !r.pass;
    CHECK(failed);
  }
  {
    auto bad = h;
    Monomial um;
    um.ydeg.assign(1, 0);
    um.uidx = 1;
    unsigned iu = bad.index.at(um);
    bad.delta[iu][bad.delta[iu].begin()->first] += Cyclotomic(Rational(1, 2));
    bool failed = false;
    for (auto& r : verify_hopf(bad)) failed |= !r.pass;
    CHECK(failed);
  }
  {
    auto bad = h;
    bad.antip[7].clear();
    bad.antip[7][h.unit_index] = Cyclotomic::one();
    bool failed = false;
    for (auto& r : verify_hopf(bad)) failed |= !r.pass;
    CHECK(failed);
  }
}

TEST_CASE("quotient by a non-hopf ideal is rejected") {
  auto h = dbar12_2();
  // the ideal generated by g - 1 is a Hopf ideal; by g it is not (eps(g)=1)
  Monomial gm;
  gm.ydeg.assign(1, 0);
  gm.gpow = 1;
  CHECK_THROWS_AS(quotient_hopf(h, {h.basis_vec(h.index.at(gm))}),
                  NotAHopfIdeal);
  SparseVec gminus1{{h.index.at(gm), Cyclotomic::one()},
                    {h.unit_index, -Cyclotomic::one()}};
  auto q = quotient_hopf(h, {gminus1});
  CHECK(q.dim < h.dim);
  require_all(verify_hopf(q));
}
