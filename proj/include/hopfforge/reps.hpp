#pragma once

#include "hopfforge/findim.hpp"

namespace hopfforge {

struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RelationViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSemisimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple-module label over the semisimple quotient: an x-weight index c
// (mod dm), a g-weight j (mod m), and a sign for the one-dimensional
// families sitting at c = 0 and, for even d, at c = dm/2.
struct SimpleLabel {
  unsigned c = 0;
  unsigned j = 0;
  int sign = 0;  // +1 / -1 for one-dimensional labels, 0 for two-dimensional
  auto operator<=>(const SimpleLabel&) const = default;
  std::string str() const;
};

using SmallMat = std::vector<std::vector<Cyclotomic>>;

struct DbarRep {
  FractionSpec spec;
  unsigned d = 0;
  RootOfUnity gamma;
  RootOfUnity zeta;  // primitive md-th root with zeta^d = gamma
  FinDimHopf H;

  unsigned m() const { return spec.m; }
  unsigned dm() const { return d * spec.m; }
  bool even_d() const { return d % 2 == 0; }
  // label aliasing: V_{c,j} ~ V_{dm-c, j-(c mod m)}
  SimpleLabel canonical(long c, long j, int sign) const;
};

DbarRep make_dbar_rep(const FractionSpec& spec, unsigned d,
                      const RootOfUnity& gamma);

struct CentralIdempotent {
  SimpleLabel label;
  unsigned block_dim = 1;
  SparseVec vec;
};

// the explicit list: verified central, orthogonal, idempotent, summing to 1;
// throws VerificationFailed otherwise
std::vector<CentralIdempotent> central_idempotents(const DbarRep& ctx);

struct SimpleModule {
  SimpleLabel label;
  unsigned dim = 1;
  SmallMat x_act, g_act;
  std::vector<SmallMat> u_act;
};

// the deduplicated list with canonical labels; every action matrix is
// certified as an algebra map against the full structure-constant table,
// completeness by sum of squared dimensions, and the idempotent pairing
// rho_A(e_B) = delta_{AB} id; throws RelationViolated on failure
std::vector<SimpleModule> build_simples(const DbarRep& ctx);

// explicit intertwiner certificates for the label aliasing
std::vector<CheckRecord> verify_alias_intertwiners(const DbarRep& ctx);

using FusionCell = std::map<SimpleLabel, unsigned>;

FusionCell tensor_decompose(const DbarRep& ctx, const SimpleModule& a,
                            const SimpleModule& b,
                            const std::vector<CentralIdempotent>& idems,
                            const std::vector<SimpleModule>& simples);

struct FusionTable {
  std::vector<SimpleLabel> labels;
  std::map<SimpleLabel, unsigned> dims;
  std::map<std::pair<SimpleLabel, SimpleLabel>, FusionCell> cells;
};

FusionTable fusion_table(const DbarRep& ctx);

// re-derives every cell from the closed-form rules (with all splitting
// cases) and diffs against the computed table; sign bookkeeping on the
// one-dimensional quadrant uses exact square-root branch arithmetic
std::vector<CheckRecord> verify_fusion_closed_form(const DbarRep& ctx,
                                                   const FusionTable& table);

// the naive "signs multiply" reading of the one-dimensional quadrant; holds
// verbatim for odd m, provably unrealizable for even m (branch cocycle)
std::vector<CheckRecord> verify_fusion_literal_signs(const DbarRep& ctx,
                                                     const FusionTable& table);

// unital, dimension-multiplicative, associative (exhaustive or sampled)
std::vector<CheckRecord> verify_fusion_properties(const FusionTable& table,
                                                  unsigned triple_samples = 0,
                                                  unsigned seed = 20260809u);

// block-size multiset from the explicit central idempotents (rank route)
std::map<unsigned, unsigned> wedderburn_profile(
    const DbarRep& ctx, const std::vector<CentralIdempotent>& idems);

// generic route: radical must vanish; the count of 1x1 blocks comes from
// the abelianization and the rest are certified to be 2x2 by dimension
// bookkeeping (all block sizes in this family are 1 or 2)
std::map<unsigned, unsigned> wedderburn_profile(const FinDimHopf& h);

}  // namespace hopfforge
