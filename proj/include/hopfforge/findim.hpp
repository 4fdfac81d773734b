#pragma once

#include <optional>

#include "hopfforge/linalg.hpp"
#include "hopfforge/presented.hpp"

namespace hopfforge {

struct IntegralSpaceNotOneDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAHopfIdeal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSimple : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GcdNotOne : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// HOPFFORGE_MAX_DIM, default 1024 basis elements
unsigned max_build_dim();

using SparseVec = std::map<unsigned, Cyclotomic>;
using SparseTensor = std::map<std::pair<unsigned, unsigned>, Cyclotomic>;

// A finite-dimensional Hopf algebra as explicit structure constants on a
// labeled monomial basis.
struct FinDimHopf {
  std::string family;  // "taft-fin", "dbar", "dt", "quotient"
  FractionSpec spec;
  unsigned d = 0;
  unsigned tq = 0;     // x-order for the dt family
  RootOfUnity root;    // xi (taft-fin) or gamma (dbar/dt)
  std::vector<RootOfUnity> xi_part;

  unsigned dim = 0;
  std::vector<Monomial> basis;
  std::map<Monomial, unsigned> index;
  unsigned unit_index = 0;
  std::vector<std::vector<SparseVec>> mult;   // basis x basis -> vector
  std::vector<SparseTensor> delta;
  std::vector<Cyclotomic> eps;
  std::vector<SparseVec> antip;
  std::vector<std::pair<std::string, SparseVec>> generators;

  int index_of(const Monomial& m) const;
  SparseVec basis_vec(unsigned i) const { return {{i, Cyclotomic::one()}}; }
  SparseVec mult_vec(const SparseVec& a, const SparseVec& b) const;
  SparseTensor delta_vec(const SparseVec& v) const;
  Cyclotomic eps_vec(const SparseVec& v) const;
  SparseVec antipode_vec(const SparseVec& v) const;
  SparseTensor tensor_mult(const SparseTensor& a, const SparseTensor& b) const;

  std::string label(unsigned i) const;
  std::string vec_str(const SparseVec& v) const;
};

FinDimHopf build_finite_taft(const FractionSpec& spec, const RootOfUnity& xi);
FinDimHopf build_dbar(const FractionSpec& spec, unsigned d,
                      const RootOfUnity& gamma);
FinDimHopf build_dt(const FractionSpec& spec, unsigned d,
                    const RootOfUnity& gamma, unsigned t);

// exhaustive brute-force verification of all axiom families; when
// assoc_samples > 0 the associativity triples are sampled instead
std::vector<CheckRecord> verify_hopf(const FinDimHopf& h,
                                     unsigned assoc_samples = 0,
                                     unsigned seed = 20260809u);

struct IntegralElement {
  SparseVec vec;
  bool left = true;
};

// solves h*v = eps(h)*v over all generators, then certifies against every
// basis element; the solution space must be one-dimensional
IntegralElement left_integral(const FinDimHopf& h);
bool is_semisimple(const FinDimHopf& h);

// the explicit double-sum integral of the dbar family (group part plus u0
// part), for cross-checking the solver
SparseVec dbar_reference_integral(const FinDimHopf& h);

struct GroupLikes {
  std::vector<SparseVec> elements;
  std::string certificate;  // how completeness was certified
};
GroupLikes group_likes(const FinDimHopf& h);

// basis of {v : delta(v) = v (x) g2 + g1 (x) v}; contains g1 - g2 trivially
std::vector<std::vector<Cyclotomic>> skew_primitive_space(const FinDimHopf& h,
                                                          const SparseVec& g1,
                                                          const SparseVec& g2);

std::optional<SparseVec> pivotal_grouplike(const FinDimHopf& h);

// plain associative algebra given by structure constants (used for duals,
// blocks and quotients)
struct AlgebraTable {
  unsigned dim = 0;
  std::vector<std::vector<SparseVec>> mult;
  SparseVec unit;
};

AlgebraTable dual_algebra(const FinDimHopf& h);
AlgebraTable algebra_of(const FinDimHopf& h);

// radical of the trace form of the left regular representation (valid in
// characteristic zero)
std::vector<std::vector<Cyclotomic>> algebra_radical(const AlgebraTable& a);
std::vector<std::vector<Cyclotomic>> jacobson_radical(const FinDimHopf& h);

// number of one-dimensional simple modules: dimension of the semisimple
// quotient's abelianization
unsigned one_dim_block_count(const AlgebraTable& a);

// dimension of the center
unsigned center_dim(const AlgebraTable& a);

// dual algebra of a subcoalgebra span; throws NotSimple via the certify flag
struct DualBlock {
  unsigned dim = 0;
  std::vector<std::vector<SparseVec>> mult;  // in the dual basis f_i
};
DualBlock dual_block_algebra(const FinDimHopf& h,
                             const std::vector<SparseVec>& block);

// span {(x^{-d} g)^i u_j} inside a dbar (or dt) table
std::vector<SparseVec> c_block(const FinDimHopf& h);

// checks that the dual of the c-block is the m x m matrix algebra via the
// explicit unit-mapping f_{ij} -> gamma^{ij} E_{i,i+j}
std::vector<CheckRecord> verify_c_block_matrix_algebra(const FinDimHopf& h);

// the coalgebra decomposition of dbar into group-like lines and shifted
// copies of the c-block; certifies the group-like count
std::vector<CheckRecord> verify_dbar_block_decomposition(const FinDimHopf& h);

FinDimHopf quotient_hopf(const FinDimHopf& h,
                         const std::vector<SparseVec>& ideal_generators);

// quotient map data used by tests: the two-sided ideal span of the input
struct IdealSpan {
  SpanBuilder<Cyclotomic> span;
  std::vector<unsigned> complement;  // basis indices surviving the quotient
};
IdealSpan two_sided_ideal(const FinDimHopf& h,
                          const std::vector<SparseVec>& gens);

}  // namespace hopfforge
