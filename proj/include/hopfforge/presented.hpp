#pragma once

#include <memory>
#include <vector>

#include "hopfforge/qcombi.hpp"

namespace hopfforge {

struct NoCompatibleRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoValidXi : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnAutomorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family { TaftFraction, LiuFraction, DFraction };

// Normal-form monomial. The three families share the shape:
//   Taft:  y^deg g^i              (no x, no u; ydeg[0] unbounded)
//   Liu:   x^a y^deg g^i          (ydeg[i] < e_i, 0 <= i < m)
//   D:     x^a y^deg g^i  or  x^a g^i u_j   (u never carries y's)
struct Monomial {
  long xpow = 0;
  std::vector<unsigned> ydeg;
  unsigned gpow = 0;
  int uidx = -1;

  bool has_u() const { return uidx >= 0; }
  auto operator<=>(const Monomial&) const = default;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Element {
 public:
  Element() = default;
  explicit Element(PresentationPtr p) : pres_(std::move(p)) {}

  const PresentationPtr& presentation() const { return pres_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  void add(const Monomial& m, const Cyclotomic& c);

  Element operator-() const;
  Element operator+(const Element&) const;
  Element operator-(const Element&) const;
  Element operator*(const Element&) const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element scaled(const Cyclotomic& c) const;
  Element pow(unsigned e) const;

  bool operator==(const Element&) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  std::string str() const;

 private:
  PresentationPtr pres_;
  std::map<Monomial, Cyclotomic> terms_;
};

class Tensor {
 public:
  Tensor(PresentationPtr p, unsigned legs) : pres_(std::move(p)), legs_(legs) {}

  unsigned legs() const { return legs_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<Monomial>, Cyclotomic>& terms() const {
    return terms_;
  }
  void add(const std::vector<Monomial>& key, const Cyclotomic& c);

  Tensor operator+(const Tensor&) const;
  Tensor operator-(const Tensor&) const;
  Tensor operator*(const Tensor&) const;  // legwise products
  Tensor scaled(const Cyclotomic& c) const;
  bool operator==(const Tensor&) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  Tensor apply_delta(unsigned leg) const;    // legs + 1
  Tensor apply_counit(unsigned leg) const;   // legs - 1
  Element fold_convolution(bool antipode_on_left) const;  // legs == 2
  Element to_element() const;                // legs == 1

  std::string str() const;

 private:
  PresentationPtr pres_;
  unsigned legs_;
  std::map<std::vector<Monomial>, Cyclotomic> terms_;
};

struct Relation {
  std::string name;
  std::vector<Element> lhs;  // factor list, multiplied left to right
  std::vector<Element> rhs;
};

// Scalar-diagonal endomorphism: each generator maps to a root of unity
// times itself.
struct DiagonalEndo {
  RootOfUnity x_scale, g_scale;
  std::vector<RootOfUnity> y_scale;  // per part
  std::vector<RootOfUnity> u_scale;  // per u index (D only)
};

class Presentation : public std::enable_shared_from_this<Presentation> {
 public:
  Family family;
  FractionSpec spec;

  // Taft
  unsigned t = 0, n = 0;
  RootOfUnity xi;
  // Liu
  unsigned omega = 0;
  // D
  unsigned d = 0;
  std::vector<RootOfUnity> xi_part;  // xi_{m_i}, squares to gamma^{m_i}
  long a_const = 0, b_const = 0;
  // Liu and D
  RootOfUnity gamma;
  std::vector<RootOfUnity> gamma_part;  // gamma^{-m_i^2}, order e_i

  unsigned theta() const { return spec.theta(); }
  unsigned g_modulus() const;  // g-power range of the normal form
  // x-power step c_i in y_i^{e_i} = 1 - x^{c_i} (0 for Taft)
  long y_power_step(unsigned i) const;

  Element zero() const;
  Element one() const;
  Element scalar(const Cyclotomic& c) const;
  Element x_power(long p) const;
  Element g_power(long p) const;  // negative powers normalized
  Element y_gen(unsigned i) const;
  Element u_gen(long j) const;
  Element from_monomial(const Monomial& m, const Cyclotomic& c) const;

  // normal form of coeff * x^xp * y^yd * g^gp * [u_ui]
  Element normalize(const Cyclotomic& coeff, long xp, std::vector<long> yd,
                    long gp, int ui) const;

  Element monomial_product(const Monomial& a, const Monomial& b) const;

  Tensor coproduct(const Element& e) const;
  Cyclotomic counit(const Element& e) const;
  Element antipode(const Element& e) const;

  std::vector<Relation> defining_relations() const;

  // S^2 = conjugation by this group-like (family-specific power of g and x)
  Element pivot_candidate() const;

  // bigrading by the left/right winding weights (D family)
  std::pair<unsigned, unsigned> bidegree(const Monomial& m) const;

  DiagonalEndo winding_automorphism(bool left) const;
  unsigned winding_order(bool left) const;
  Element apply(const DiagonalEndo& endo, const Element& e) const;

  static PresentationPtr build_taft(FractionSpec spec, unsigned t,
                                    RootOfUnity xi);
  static PresentationPtr build_liu(FractionSpec spec, unsigned omega,
                                   RootOfUnity gamma);
  static PresentationPtr build_dfrac(FractionSpec spec, unsigned d,
                                     RootOfUnity gamma);

  Element u_times_u(long s, long l) const;

 private:
  PresentationPtr self() const { return shared_from_this(); }
  const PhiContext& phi_ctx() const;
  Laurent phi_poly(unsigned i, long j) const;
  Laurent bracket_omit_poly(unsigned i, long s, long t) const;
  Tensor delta_monomial(const Monomial& m) const;
  Element antipode_monomial(const Monomial& m) const;

  std::optional<PhiContext> phi_ctx_;  // D family only, set at build time
};

std::vector<CheckRecord> verify_relation_compatibility(const PresentationPtr&);
std::vector<CheckRecord> verify_coassoc_counit_antipode(const PresentationPtr&);
bool verify_central(const PresentationPtr&, const Element& candidate);
std::vector<CheckRecord> verify_winding(const PresentationPtr&);
std::vector<CheckRecord> verify_pivot_conjugation(const PresentationPtr&);

}  // namespace hopfforge
