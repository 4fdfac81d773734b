#include "hopfforge/fraction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hopfforge {

unsigned exponent_of(unsigned m, unsigned mi) {
  if (m == 0 || mi == 0) throw std::domain_error("arguments must be positive");
  return m / std::gcd(m, mi);
}

std::vector<unsigned> FractionSpec::coordinates(long j) const {
  return coordinate_table[mod_l(j, m)];
}

long FractionSpec::residue_of(const std::vector<unsigned>& coords) const {
  long acc = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    acc += static_cast<long>(coords[i]) * parts[i];
  return mod_l(acc, m);
}

bool FractionSpec::same_parts_multiset(const FractionSpec& o) const {
  if (m != o.m || parts.size() != o.parts.size()) return false;
  auto reduce = [](const FractionSpec& s) {
    std::vector<unsigned> v;
    for (unsigned p : s.parts) v.push_back(p % s.m);
    std::sort(v.begin(), v.end());
    return v;
  };
  return reduce(*this) == reduce(o);
}

std::string FractionSpec::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << "} of " << m;
  return os.str();
}

std::variant<FractionSpec, FractionError> check_fraction(
    unsigned m, const std::vector<unsigned>& parts) {
  if (m == 0 || parts.empty())
    return FractionError{0, "m must be positive and parts nonempty"};
  for (unsigned p : parts)
    if (p == 0) return FractionError{0, "parts must be positive"};

  FractionSpec spec;
  spec.m = m;
  spec.parts = parts;
  for (unsigned p : parts) spec.exponents.push_back(exponent_of(m, p));
  spec.m0 = parts[0];
  for (unsigned p : parts) spec.m0 = std::gcd(spec.m0, p);

  // (1) exponent coprime to its part
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (std::gcd(spec.exponents[i], parts[i]) != 1) {
      std::ostringstream os;
      os << "gcd(e_" << i + 1 << ", m_" << i + 1 << ") = "
         << std::gcd(spec.exponents[i], parts[i]) << " for part " << parts[i];
      return FractionError{1, os.str()};
    }
  }
  // (2) m divides products of distinct parts
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if ((static_cast<unsigned long long>(parts[i]) * parts[j]) % m != 0) {
        std::ostringstream os;
        os << "m does not divide m_" << i + 1 << "*m_" << j + 1 << " = "
           << parts[i] * parts[j];
        return FractionError{2, os.str()};
      }
  // (3) product of exponents equals m
  unsigned long long prod = 1;
  for (unsigned e : spec.exponents) {
    prod *= e;
    if (prod > m) break;
  }
  if (prod != m) {
    std::ostringstream os;
    os << "product of exponents is " << prod << ", not " << m;
    return FractionError{3, os.str()};
  }
  // (4) the coordinate map over the box is injective
  spec.coordinate_table.assign(m, {});
  std::vector<std::vector<unsigned>> seen(m);
  std::vector<unsigned> coords(parts.size(), 0);
  while (true) {
    long r = spec.residue_of(coords);
    if (!seen[r].empty() && seen[r] != coords) {
      std::ostringstream os;
      os << "residue " << r << " hit by (";
      for (std::size_t i = 0; i < seen[r].size(); ++i)
        os << (i ? "," : "") << seen[r][i];
      os << ") and (";
      for (std::size_t i = 0; i < coords.size(); ++i)
        os << (i ? "," : "") << coords[i];
      os << ")";
      return FractionError{4, os.str()};
    }
    seen[r] = coords;
    spec.coordinate_table[r] = coords;
    std::size_t i = 0;
    while (i < coords.size() && ++coords[i] == spec.exponents[i])
      coords[i++] = 0;
    if (i == coords.size()) break;
  }
  return spec;
}

FractionSpec validate_fraction(unsigned m, const std::vector<unsigned>& parts) {
  auto result = check_fraction(m, parts);
  if (auto* err = std::get_if<FractionError>(&result))
    throw ConditionFailed(*err);
  return std::get<FractionSpec>(std::move(result));
}

std::vector<FractionSpec> enumerate_fractions(unsigned m,
                                              std::optional<unsigned> theta) {
  std::vector<FractionSpec> out;
  if (m == 0) return out;
  if (m == 1) {
    if (!theta || *theta == 1) out.push_back(validate_fraction(1, {1}));
    return out;
  }
  std::vector<unsigned> chosen;
  // nondecreasing parts in [1, m-1]; the exponents of a valid fraction
  // multiply to m, so the exponent product prunes the search
  auto rec = [&](auto&& self, unsigned min_part,
                 unsigned long long eprod) -> void {
    if (!chosen.empty() && (!theta || chosen.size() == *theta)) {
      auto result = check_fraction(m, chosen);
      if (auto* spec = std::get_if<FractionSpec>(&result))
        out.push_back(std::move(*spec));
    }
    if (theta && chosen.size() >= *theta) return;
    if (eprod == m && !chosen.empty()) return;  // further parts cannot help
    for (unsigned p = min_part; p < m; ++p) {
      unsigned e = exponent_of(m, p);
      if (e == 1) continue;
      if (eprod * e > m || m % (eprod * e) != 0) continue;
      chosen.push_back(p);
      self(self, p, eprod * e);
      chosen.pop_back();
    }
  };
  rec(rec, 1, 1);
  std::sort(out.begin(), out.end(),
            [](const FractionSpec& a, const FractionSpec& b) {
              return a.parts < b.parts;
            });
  return out;
}

namespace {

// shared search over unit witnesses: parts match after scaling by x0 mod
// `modulus` and the roots satisfy xi = xi'^{x0}
IsoWitness unit_witness_search(const FractionSpec& a, const RootOfUnity& xi_a,
                               const FractionSpec& b, const RootOfUnity& xi_b,
                               unsigned modulus) {
  auto sorted_residues = [&](const std::vector<unsigned>& parts, long scale) {
    std::vector<long> v;
    for (unsigned p : parts) v.push_back(mod_l(static_cast<long>(p) * scale,
                                               modulus));
    std::sort(v.begin(), v.end());
    return v;
  };
  auto target = sorted_residues(b.parts, 1);
  for (unsigned x0 : units_mod(modulus)) {
    if (sorted_residues(a.parts, x0) != target) continue;
    if (xi_b.pow(x0) == xi_a) return {true, x0};
  }
  return {false, 0};
}

}  // namespace

IsoWitness taft_fraction_iso(const FractionSpec& a, const RootOfUnity& xi_a,
                             const FractionSpec& b, const RootOfUnity& xi_b) {
  if (a.m != b.m || a.theta() != b.theta()) return {false, 0};
  return unit_witness_search(a, xi_a, b, xi_b, a.m);
}

IsoWitness taft_infinite_iso(const FractionSpec& a, unsigned t_a,
                             const RootOfUnity& xi_a, const FractionSpec& b,
                             unsigned t_b, const RootOfUnity& xi_b) {
  if (a.m != b.m || a.theta() != b.theta() || t_a != t_b) return {false, 0};
  return unit_witness_search(a, xi_a, b, xi_b, a.m * t_a);
}

LiuForm liu_basic_form(const FractionSpec& spec, unsigned omega,
                       const RootOfUnity& gamma) {
  std::vector<unsigned> reduced;
  for (unsigned p : spec.parts) reduced.push_back(p / spec.m0);
  LiuForm form;
  form.spec = validate_fraction(spec.m, reduced);
  form.omega = omega * spec.m0;
  form.gamma = gamma.pow(static_cast<long>(spec.m0) * spec.m0);
  return form;
}

bool liu_iso(const FractionSpec& a, unsigned omega_a, const RootOfUnity& ga,
             const FractionSpec& b, unsigned omega_b, const RootOfUnity& gb) {
  return a.m == b.m && a.theta() == b.theta() &&
         omega_a * a.m0 == omega_b * b.m0 &&
         ga.pow(static_cast<long>(a.m0) * a.m0) ==
             gb.pow(static_cast<long>(b.m0) * b.m0);
}

bool d_iso(const FractionSpec& a, unsigned d_a, const RootOfUnity& ga,
           const FractionSpec& b, unsigned d_b, const RootOfUnity& gb) {
  return liu_iso(a, d_a, ga, b, d_b, gb);
}

}  // namespace hopfforge
