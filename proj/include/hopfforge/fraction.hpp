#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hopfforge/exact.hpp"

namespace hopfforge {

// A validated fraction (m; m_1..m_theta): each part's exponent e_i is the
// least e with m | e*m_i, the e_i are pairwise coprime with product m, and
// the coordinate map over the exponent box is a bijection onto Z_m.
struct FractionSpec {
  unsigned m = 1;
  std::vector<unsigned> parts;      // stored as given
  std::vector<unsigned> exponents;  // derived e_i
  unsigned m0 = 1;                  // gcd of parts

  unsigned theta() const { return static_cast<unsigned>(parts.size()); }

  // coordinates of j mod m: the unique (j_1..j_theta), 0 <= j_i < e_i,
  // with sum j_i * m_i = j (mod m)
  std::vector<unsigned> coordinates(long j) const;
  unsigned coordinate(long j, unsigned i) const { return coordinates(j)[i]; }
  long residue_of(const std::vector<unsigned>& coords) const;

  bool same_parts_multiset(const FractionSpec& o) const;
  std::string str() const;

  // filled by validation: residue -> coordinates
  std::vector<std::vector<unsigned>> coordinate_table;
};

struct FractionError {
  int condition = 0;  // 1..4, or 0 for malformed input
  std::string detail;
};

struct ConditionFailed : std::runtime_error {
  int condition;
  explicit ConditionFailed(const FractionError& e)
      : std::runtime_error("fraction condition (" +
                           std::to_string(e.condition) + ") failed: " +
                           e.detail),
        condition(e.condition) {}
};

unsigned exponent_of(unsigned m, unsigned mi);

std::variant<FractionSpec, FractionError> check_fraction(
    unsigned m, const std::vector<unsigned>& parts);

// throws ConditionFailed naming the first violated condition
FractionSpec validate_fraction(unsigned m, const std::vector<unsigned>& parts);

// All fractions with parts in [1,m], deduplicated as unordered multisets and
// sorted. Parts divisible by m are excluded for m > 1: they have exponent 1
// and would pad any fraction to arbitrary length.
std::vector<FractionSpec> enumerate_fractions(
    unsigned m, std::optional<unsigned> theta = std::nullopt);

struct IsoWitness {
  bool isomorphic = false;
  unsigned x0 = 0;  // unit witness when isomorphic
};

// finite m^2-dimensional case: parts compared mod m, root relation xi = xi'^x0
IsoWitness taft_fraction_iso(const FractionSpec& a, const RootOfUnity& xi_a,
                             const FractionSpec& b, const RootOfUnity& xi_b);

// infinite-dimensional case: witness ranges over units mod n = m*t and parts
// are compared mod n
IsoWitness taft_infinite_iso(const FractionSpec& a, unsigned t_a,
                             const RootOfUnity& xi_a, const FractionSpec& b,
                             unsigned t_b, const RootOfUnity& xi_b);

struct LiuForm {
  FractionSpec spec;
  unsigned omega;
  RootOfUnity gamma;
};

LiuForm liu_basic_form(const FractionSpec& spec, unsigned omega,
                       const RootOfUnity& gamma);

bool liu_iso(const FractionSpec& a, unsigned omega_a, const RootOfUnity& ga,
             const FractionSpec& b, unsigned omega_b, const RootOfUnity& gb);

bool d_iso(const FractionSpec& a, unsigned d_a, const RootOfUnity& ga,
           const FractionSpec& b, unsigned d_b, const RootOfUnity& gb);

}  // namespace hopfforge
