#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfforge/numtheory.hpp"

namespace hopfforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Coefficients of the N-th cyclotomic polynomial, ascending degree.
// Cached per conductor; safe for concurrent readers.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

// A root of unity z_N^k kept in lowest terms (gcd(k,N)=1 after reduction),
// so its multiplicative order is exactly the stored conductor.
struct RootOfUnity {
  unsigned conductor = 1;
  unsigned exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(unsigned n, long k);

  static RootOfUnity one() { return RootOfUnity(1, 0); }
  static RootOfUnity minus_one() { return RootOfUnity(2, 1); }

  unsigned order() const { return conductor; }
  RootOfUnity pow(long j) const;
  RootOfUnity inverse() const { return pow(-1); }
  RootOfUnity times(const RootOfUnity& o) const;
  RootOfUnity negated() const { return times(minus_one()); }
  RootOfUnity sqrt() const;  // principal branch: z_N^k -> z_{2N}^k

  bool operator==(const RootOfUnity&) const = default;
  std::string str() const;
};

// Exact element of Q(z_N): a vector of rationals in the power basis
// 1, z, ..., z^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.
// Mixed-conductor arithmetic lifts both operands to the lcm; conductors are
// never shrunk implicitly (see minimized()).
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeff_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : conductor_(1), coeff_(1, r) {}
  explicit Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }
  static Cyclotomic root(unsigned n, long k);
  static Cyclotomic from_root(const RootOfUnity& r) {
    return root(r.conductor, r.exponent);
  }

  unsigned conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeff_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic&) const;
  Cyclotomic operator-(const Cyclotomic&) const;
  Cyclotomic operator*(const Cyclotomic&) const;
  Cyclotomic operator/(const Cyclotomic&) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // throws DivisionByZero on 0
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic lifted(unsigned m) const;  // conductor_ must divide m
  Cyclotomic minimized() const;         // smallest conductor representation

  // least n <= bound with (*this)^n == 1, if any
  std::optional<unsigned> multiplicative_order(unsigned bound) const;

  std::string str() const;  // "c0 + c1*z{N}^1 + ..."

 private:
  Cyclotomic(unsigned n, std::vector<Rational> c)
      : conductor_(n), coeff_(std::move(c)) {}

  unsigned conductor_;
  std::vector<Rational> coeff_;  // size phi(conductor_)

  friend Cyclotomic operator*(const Rational& r, const Cyclotomic& c);
};

Cyclotomic operator*(const Rational& r, const Cyclotomic& c);

// Sparse Laurent element in one or two variables over Q(z_N).
// Variable 0 prints as "x", variable 1 as "w".
class Laurent {
 public:
  using Exponent = std::array<long, 2>;

  explicit Laurent(unsigned nvars = 1) : nvars_(nvars) {}
  static Laurent scalar(const Cyclotomic& c, unsigned nvars = 1);
  static Laurent term(const Cyclotomic& c, long e0, unsigned nvars = 1);
  static Laurent term2(const Cyclotomic& c, long e0, long e1);
  static Laurent variable(unsigned which, unsigned nvars = 1);

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponent, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coefficient(long e0, long e1 = 0) const;

  Laurent operator-() const;
  Laurent operator+(const Laurent&) const;
  Laurent operator-(const Laurent&) const;
  Laurent operator*(const Laurent&) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent scaled(const Cyclotomic& c) const;

  bool operator==(const Laurent&) const;
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  // substitution v -> v^{-1} on one variable
  Laurent bar(unsigned which = 0) const;

  // evaluate variable 0 at a root of unity, collapsing to a scalar
  Cyclotomic eval(const Cyclotomic& x0) const;

  std::string str() const;  // "coef * x^e" terms sorted by exponent

  void add_term(const Exponent& e, const Cyclotomic& c);

 private:
  unsigned nvars_;
  std::map<Exponent, Cyclotomic> terms_;  // no zero coefficients stored
};

// z{N}^{k} syntax, optional leading '-', plus plain "1"/"-1"
RootOfUnity parse_root(const std::string& text);

}  // namespace hopfforge
