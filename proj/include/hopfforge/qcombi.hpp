#pragma once

#include <string>
#include <vector>

#include "hopfforge/fraction.hpp"

namespace hopfforge {

struct CheckRecord {
  std::string name;
  std::string anchor;  // semantic tag, or "plumbing"
  bool pass = false;
  std::string witness;  // counterexample data on failure, notes on pass
};

// Evaluation context for the phi-polynomial calculus attached to a fraction:
// gamma is a primitive m-th root and gamma_i = gamma^{-m_i^2} has order
// exactly e_i.
struct PhiContext {
  FractionSpec spec;
  unsigned d = 1;
  RootOfUnity gamma;
  std::vector<RootOfUnity> gamma_i;

  PhiContext(FractionSpec s, unsigned d_, RootOfUnity g);
  unsigned theta() const { return spec.theta(); }
};

// phi_{m_i, j} = 1 - gamma_i^{1+j_i} x^{m_i d}, period e_i in the i-th
// coordinate of j
Laurent phi(const PhiContext& ctx, unsigned i, long j);

// product over k in [0, e_i) of phi_{m_i, k m_i} with the cyclic span
// s..t (indices mod e_i) omitted, or kept
Laurent bracket_omit(const PhiContext& ctx, unsigned i, long s, long t);
Laurent bracket_keep(const PhiContext& ctx, unsigned i, long s, long t);

// Gaussian binomial by the q-Pascal recurrence, valid at roots of unity
Cyclotomic qbinomial(unsigned n, unsigned k, const Cyclotomic& q);

// checks the six product/sum identities plus the two root-vanishing
// criteria for every part of the context's fraction
std::vector<CheckRecord> verify_identities(const PhiContext& ctx);

}  // namespace hopfforge
