#include "hopfforge/qcombi.hpp"

#include <sstream>

namespace hopfforge {

PhiContext::PhiContext(FractionSpec s, unsigned d_, RootOfUnity g)
    : spec(std::move(s)), d(d_), gamma(g) {
  if (gamma.order() != spec.m)
    throw std::domain_error("gamma must be a primitive root of order m = " +
                            std::to_string(spec.m));
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    long mi = spec.parts[i];
    RootOfUnity gi = gamma.pow(-mi * mi);
    if (gi.order() != spec.exponents[i])
      throw std::logic_error("gamma_i does not have order e_i");
    gamma_i.push_back(gi);
  }
}

Laurent phi(const PhiContext& ctx, unsigned i, long j) {
  long ji = ctx.spec.coordinates(j)[i];
  Cyclotomic c = Cyclotomic::from_root(ctx.gamma_i[i].pow(1 + ji));
  long deg = static_cast<long>(ctx.spec.parts[i]) * ctx.d;
  return Laurent::scalar(Cyclotomic::one()) - Laurent::term(c, deg);
}

namespace {

// product of phi_{m_i, k m_i} over k in the cyclic range [from, to],
// empty when from > to
Laurent phi_run(const PhiContext& ctx, unsigned i, long from, long to) {
  Laurent acc = Laurent::scalar(Cyclotomic::one());
  for (long k = from; k <= to; ++k)
    acc *= phi(ctx, i, k * static_cast<long>(ctx.spec.parts[i]));
  return acc;
}

}  // namespace

Laurent bracket_omit(const PhiContext& ctx, unsigned i, long s, long t) {
  long e = ctx.spec.exponents[i];
  long sb = mod_l(s, e), tb = mod_l(t, e);
  if (tb >= sb) return phi_run(ctx, i, tb + 1, e - 1) * phi_run(ctx, i, 0, sb - 1);
  if (sb == tb + 1) return Laurent::scalar(Cyclotomic::one());
  return phi_run(ctx, i, tb + 1, sb - 1);
}

Laurent bracket_keep(const PhiContext& ctx, unsigned i, long s, long t) {
  long e = ctx.spec.exponents[i];
  long sb = mod_l(s, e), tb = mod_l(t, e);
  if (tb >= sb) return phi_run(ctx, i, sb, tb);
  if (sb == tb + 1) return Laurent::scalar(Cyclotomic::one());
  return phi_run(ctx, i, sb, e - 1) * phi_run(ctx, i, 0, tb);
}

Cyclotomic qbinomial(unsigned n, unsigned k, const Cyclotomic& q) {
  if (k > n) throw std::domain_error("qbinomial requires 0 <= k <= n");
  // row-by-row q-Pascal: C(n,k) = C(n-1,k-1) + q^k C(n-1,k)
  std::vector<Cyclotomic> row{Cyclotomic::one()};
  for (unsigned r = 1; r <= n; ++r) {
    std::vector<Cyclotomic> next(r + 1, Cyclotomic::one());
    Cyclotomic qpow = Cyclotomic::one();
    for (unsigned c = 1; c < r; ++c) {
      qpow *= q;
      next[c] = row[c - 1] + qpow * row[c];
    }
    row = std::move(next);
  }
  return row[k];
}

namespace {

void record(std::vector<CheckRecord>& out, const std::string& name,
            const std::string& anchor, bool pass, const std::string& witness) {
  out.push_back({name, anchor, pass, witness});
}

std::string part_tag(const PhiContext& ctx, unsigned i) {
  std::ostringstream os;
  os << ctx.spec.str() << " part " << i + 1 << " (m_i=" << ctx.spec.parts[i]
     << ", e_i=" << ctx.spec.exponents[i] << ", d=" << ctx.d << ")";
  return os.str();
}

}  // namespace

std::vector<CheckRecord> verify_identities(const PhiContext& ctx) {
  std::vector<CheckRecord> out;
  const Laurent one = Laurent::scalar(Cyclotomic::one());

  for (unsigned i = 0; i < ctx.theta(); ++i) {
    long e = ctx.spec.exponents[i];
    long mi = ctx.spec.parts[i];
    Cyclotomic gi = Cyclotomic::from_root(ctx.gamma_i[i]);
    std::string tag = part_tag(ctx, i);

    {
      Laurent sum(1);
      for (long j = 0; j < e; ++j) sum += bracket_omit(ctx, i, j - 1, j - 1);
      Laurent want = Laurent::scalar(Cyclotomic(Rational(e)));
      record(out, "omit-single sum equals e_i [" + tag + "]", "phi-calculus.1",
             sum == want, sum == want ? "" : sum.str());
    }
    {
      Laurent prod = one;
      for (long k = 0; k < e; ++k) prod *= phi(ctx, i, k * mi);
      Laurent want = one - Laurent::term(Cyclotomic::one(), e * mi * ctx.d);
      record(out, "full phi product telescopes [" + tag + "]",
             "phi-calculus.2", prod == want, prod == want ? "" : prod.str());
    }
    {
      Laurent sum(1);
      Cyclotomic gpow = Cyclotomic::one();
      for (long j = 0; j < e; ++j) {
        sum += bracket_omit(ctx, i, j - 1, j - 1).scaled(gpow);
        gpow *= gi;
      }
      Laurent want =
          Laurent::term(Cyclotomic(Rational(e)), (e - 1) * mi * ctx.d);
      record(out, "twisted omit-single sum [" + tag + "]", "phi-calculus.3",
             sum == want, sum == want ? "" : sum.str());
    }
    {
      // degenerate at e_i = 1: no two distinct items can be omitted, so the
      // pairing that produces the cancellation does not exist
      if (e == 1) {
        record(out, "twisted omit-pair sum vanishes [" + tag + "]",
               "phi-calculus.4", true, "vacuous for e_i = 1");
      } else {
        Laurent sum(1);
        Cyclotomic gpow = Cyclotomic::one();
        for (long j = 0; j < e; ++j) {
          sum += bracket_omit(ctx, i, j - 2, j - 1).scaled(gpow);
          gpow *= gi;
        }
        record(out, "twisted omit-pair sum vanishes [" + tag + "]",
               "phi-calculus.4", sum.is_zero(),
               sum.is_zero() ? "" : sum.str());
      }
    }
    {
      bool all = true;
      std::string witness;
      for (long k = 1; k < e && all; ++k) {
        for (long ip = 1; ip <= k && all; ++ip) {
          Laurent sum(1);
          for (long j = 0; j < e; ++j)
            sum += bracket_omit(ctx, i, j - 1 - k, j - 1)
                       .scaled(gi.pow(ip * j));
          if (!sum.is_zero()) {
            all = false;
            std::ostringstream os;
            os << "k=" << k << " i'=" << ip << ": " << sum.str();
            witness = os.str();
          }
        }
      }
      record(out, "twisted omit-span sums vanish [" + tag + "]",
             "phi-calculus.5", all, witness);
    }
    {
      bool all = true;
      std::string witness;
      for (long sigma = 0; sigma < e && all; ++sigma) {    // sigma = j+l
        for (long t = 0; t <= sigma && all; ++t) {
          for (long alpha = 0; alpha <= e - 1 - sigma && all; ++alpha) {
            Cyclotomic sign((alpha + t) % 2 == 0 ? Rational(1) : Rational(-1));
            Cyclotomic lhs =
                sign *
                gi.pow((alpha + t) * (alpha + t + 1) / 2 + t * (sigma - t)) *
                qbinomial(e - 1 - t, alpha, gi) *
                qbinomial(e - 1 + t - sigma, alpha + t, gi);
            Cyclotomic rhs = qbinomial(sigma, t, gi) *
                             qbinomial(ctx.spec.m - 1 - sigma, alpha, gi);
            if (lhs != rhs) {
              all = false;
              std::ostringstream os;
              os << "t=" << t << " j+l=" << sigma << " alpha=" << alpha
                 << ": " << lhs.str() << " vs " << rhs.str();
              witness = os.str();
            }
          }
        }
      }
      record(out, "q-binomial exchange identity [" + tag + "]",
             "phi-calculus.6", all, witness);
    }
    {
      bool all = true;
      std::string witness;
      for (long r = 0; r < e && all; ++r) {
        Cyclotomic xi = gi.pow(r);
        Laurent sum(1);
        for (long j = 0; j < e; ++j)
          sum += bracket_omit(ctx, i, j - 1, j - 1).scaled(xi.pow(j));
        if (sum.is_zero()) {
          all = false;
          witness = "vanishes at xi = gamma_i^" + std::to_string(r);
        }
      }
      record(out, "omit-single sum nonzero at all unit roots [" + tag + "]",
             "root-vanishing.1", all, witness);
    }
    {
      if (e == 1) {
        record(out, "omit-pair sum vanishes exactly at gamma_i [" + tag + "]",
               "root-vanishing.2", true, "vacuous for e_i = 1");
      } else {
        bool all = true;
        std::string witness;
        for (long r = 0; r < e && all; ++r) {
          Cyclotomic xi = gi.pow(r);
          Laurent sum(1);
          for (long j = 0; j < e; ++j)
            sum += bracket_omit(ctx, i, j - 2, j - 1).scaled(xi.pow(j));
          bool vanish = sum.is_zero();
          bool should = (r == 1);  // xi == gamma_i
          if (vanish != should) {
            all = false;
            witness = "xi = gamma_i^" + std::to_string(r) +
                      (vanish ? " vanishes unexpectedly" : " fails to vanish");
          }
        }
        record(out, "omit-pair sum vanishes exactly at gamma_i [" + tag + "]",
               "root-vanishing.2", all, witness);
      }
    }
  }
  return out;
}

}  // namespace hopfforge
