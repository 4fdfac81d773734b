#include "hopfforge/exact.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hopfforge {

namespace {

using Poly = std::vector<Integer>;  // ascending degree, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division of integer polynomials, remainder known to vanish
Poly divide_exact(const Poly& num, const Poly& den) {
  Poly rem = num, quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
                       Integer(0));
  while (rem.size() >= den.size() && !rem.empty()) {
    Integer c = rem.back() / den.back();
    std::size_t shift = rem.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    trim(rem);
  }
  return quot;
}

}  // namespace

namespace {

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d; caller holds the cache lock
const Poly& cyclotomic_unlocked(unsigned n, std::map<unsigned, Poly>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    num = divide_exact(num, cyclotomic_unlocked(d, cache));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  return cyclotomic_unlocked(n, cache);
}

RootOfUnity::RootOfUnity(unsigned n, long k) {
  if (n == 0) throw std::domain_error("conductor must be positive");
  unsigned e = static_cast<unsigned>(mod_l(k, n));
  unsigned g = std::gcd(e == 0 ? n : e, n);
  conductor = n / g;
  exponent = e / g;
}

RootOfUnity RootOfUnity::pow(long j) const {
  return RootOfUnity(conductor, static_cast<long>(exponent) * j);
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
  unsigned l = std::lcm(conductor, o.conductor);
  return RootOfUnity(l, static_cast<long>(exponent) * (l / conductor) +
                            static_cast<long>(o.exponent) * (l / o.conductor));
}

RootOfUnity RootOfUnity::sqrt() const {
  return RootOfUnity(2 * conductor, exponent);
}

std::string RootOfUnity::str() const {
  if (conductor == 1) return "1";
  if (conductor == 2) return "-1";
  std::ostringstream os;
  os << "z" << conductor << "^" << exponent;
  return os.str();
}

Cyclotomic Cyclotomic::root(unsigned n, long k) {
  if (n == 0) throw std::domain_error("conductor must be positive");
  RootOfUnity r(n, k);
  unsigned phi = totient(r.conductor);
  // z^exponent reduced modulo Phi_N
  std::vector<Rational> poly(r.exponent + 1, Rational(0));
  poly[r.exponent] = 1;
  const Poly& mod = cyclotomic_polynomial(r.conductor);
  while (poly.size() > phi) {
    Rational c = poly.back();
    std::size_t shift = poly.size() - mod.size();
    for (std::size_t i = 0; i + 1 < mod.size(); ++i)
      poly[shift + i] -= c * Rational(mod[i]);
    poly.pop_back();
  }
  poly.resize(phi, Rational(0));
  return Cyclotomic(r.conductor, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(),
                     [](const Rational& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  Cyclotomic m = minimized();
  if (m.conductor_ == 1) return m.coeff_[0];
  return std::nullopt;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeff_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::lifted(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw std::domain_error("lift target must be a multiple of the conductor");
  unsigned step = m / conductor_, phi = totient(m);
  std::vector<Rational> poly((coeff_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeff_.size(); ++k) poly[k * step] = coeff_[k];
  const Poly& mod = cyclotomic_polynomial(m);
  while (poly.size() > phi) {
    Rational c = poly.back();
    std::size_t shift = poly.size() - mod.size();
    if (c != 0)
      for (std::size_t i = 0; i + 1 < mod.size(); ++i)
        poly[shift + i] -= c * Rational(mod[i]);
    poly.pop_back();
  }
  poly.resize(phi, Rational(0));
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  unsigned l = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lifted(l), b = o.lifted(l);
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) a.coeff_[i] += b.coeff_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  unsigned l = std::lcm(conductor_, o.conductor_);
  Cyclotomic a = lifted(l), b = o.lifted(l);
  unsigned phi = totient(l);
  std::vector<Rational> prod(2 * phi, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeff_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeff_[j] == 0) continue;
      prod[i + j] += a.coeff_[i] * b.coeff_[j];
    }
  }
  const Poly& mod = cyclotomic_polynomial(l);
  while (prod.size() > phi) {
    Rational c = prod.back();
    std::size_t shift = prod.size() - mod.size();
    if (c != 0)
      for (std::size_t i = 0; i + 1 < mod.size(); ++i)
        prod[shift + i] -= c * Rational(mod[i]);
    prod.pop_back();
  }
  prod.resize(phi, Rational(0));
  return Cyclotomic(l, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // extended Euclid in Q[x] against Phi_N, which is irreducible
  using QPoly = std::vector<Rational>;
  auto trimq = [](QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  const Poly& phi_int = cyclotomic_polynomial(conductor_);
  QPoly r0(phi_int.begin(), phi_int.end());
  QPoly r1(coeff_.begin(), coeff_.end());
  trimq(r1);
  QPoly s0 = {}, s1 = {Rational(1)};  // s tracks the coefficient of *this
  while (!r1.empty()) {
    // r0 = q*r1 + r; (s0, s1) -> (s1, s0 - q*s1)
    QPoly q, rem = r0;
    if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rational(0));
    while (rem.size() >= r1.size() && !rem.empty()) {
      Rational c = rem.back() / r1.back();
      std::size_t shift = rem.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
      trimq(rem);
    }
    QPoly s2 = s0;
    s2.resize(std::max(s2.size(), q.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    trimq(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant gcd; inverse = s0 / r0
  if (r0.size() != 1)
    throw std::logic_error("cyclotomic polynomial not coprime to element");
  std::vector<Rational> result(totient(conductor_), Rational(0));
  for (std::size_t i = 0; i < s0.size(); ++i) result[i] = s0[i] / r0[0];
  return Cyclotomic(conductor_, std::move(result));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const {
  unsigned l = std::lcm(conductor_, o.conductor_);
  return lifted(l) * o.lifted(l).inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, acc = Cyclotomic::one();
  unsigned long long n = static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  unsigned l = std::lcm(conductor_, o.conductor_);
  return lifted(l).coeff_ == o.lifted(l).coeff_;
}

Cyclotomic Cyclotomic::minimized() const {
  for (unsigned d : divisors(conductor_)) {
    if (d == conductor_) break;
    // is *this in the span of the lifted power basis of Q(z_d)?
    unsigned phi_d = totient(d), phi_n = totient(conductor_);
    std::vector<Cyclotomic> basis;
    basis.reserve(phi_d);
    for (unsigned k = 0; k < phi_d; ++k)
      basis.push_back(Cyclotomic::root(d, k).lifted(conductor_));
    // solve sum c_k basis[k] = *this by Gaussian elimination over Q
    std::vector<std::vector<Rational>> m(phi_n,
                                         std::vector<Rational>(phi_d + 1));
    for (unsigned r = 0; r < phi_n; ++r) {
      for (unsigned k = 0; k < phi_d; ++k) m[r][k] = basis[k].coeff_[r];
      m[r][phi_d] = coeff_[r];
    }
    std::vector<int> pivot_col(phi_n, -1);
    unsigned row = 0;
    for (unsigned col = 0; col < phi_d && row < phi_n; ++col) {
      unsigned sel = row;
      while (sel < phi_n && m[sel][col] == 0) ++sel;
      if (sel == phi_n) continue;
      std::swap(m[sel], m[row]);
      Rational p = m[row][col];
      for (auto& v : m[row]) v /= p;
      for (unsigned r = 0; r < phi_n; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rational f = m[r][col];
        for (unsigned c2 = col; c2 <= phi_d; ++c2) m[r][c2] -= f * m[row][c2];
      }
      pivot_col[row] = static_cast<int>(col);
      ++row;
    }
    bool solvable = true;
    for (unsigned r = row; r < phi_n; ++r)
      if (m[r][phi_d] != 0) solvable = false;
    if (!solvable) continue;
    std::vector<Rational> sol(phi_d, Rational(0));
    for (unsigned r = 0; r < row; ++r) sol[pivot_col[r]] = m[r][phi_d];
    return Cyclotomic(d, std::move(sol));
  }
  return *this;
}

std::optional<unsigned> Cyclotomic::multiplicative_order(unsigned bound) const {
  Cyclotomic p = *this;
  for (unsigned n = 1; n <= bound; ++n) {
    if (p == Cyclotomic::one()) return n;
    p = p * *this;
  }
  return std::nullopt;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeff_.size(); ++k) {
    if (coeff_[k] == 0) continue;
    Rational c = coeff_[k];
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Rational a = neg ? Rational(-c) : c;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "z" << conductor_ << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic operator*(const Rational& r, const Cyclotomic& c) {
  Cyclotomic result = c;
  for (auto& v : result.coeff_) v *= r;
  return result;
}

Laurent Laurent::scalar(const Cyclotomic& c, unsigned nvars) {
  Laurent l(nvars);
  l.add_term({0, 0}, c);
  return l;
}

Laurent Laurent::term(const Cyclotomic& c, long e0, unsigned nvars) {
  Laurent l(nvars);
  l.add_term({e0, 0}, c);
  return l;
}

Laurent Laurent::term2(const Cyclotomic& c, long e0, long e1) {
  Laurent l(2);
  l.add_term({e0, e1}, c);
  return l;
}

Laurent Laurent::variable(unsigned which, unsigned nvars) {
  Laurent l(nvars);
  Exponent e{0, 0};
  e[which] = 1;
  l.add_term(e, Cyclotomic::one());
  return l;
}

void Laurent::add_term(const Exponent& e, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic Laurent::coefficient(long e0, long e1) const {
  auto it = terms_.find({e0, e1});
  return it == terms_.end() ? Cyclotomic::zero() : it->second;
}

Laurent Laurent::operator-() const {
  Laurent r(nvars_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("variable sets differ");
  Laurent r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (nvars_ != o.nvars_) throw std::domain_error("variable sets differ");
  Laurent r(nvars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_)
      r.add_term({e1[0] + e2[0], e1[1] + e2[1]}, c1 * c2);
  return r;
}

Laurent Laurent::scaled(const Cyclotomic& c) const {
  Laurent r(nvars_);
  if (c.is_zero()) return r;
  for (auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (nvars_ != o.nvars_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (auto it1 = terms_.begin(), it2 = o.terms_.begin(); it1 != terms_.end();
       ++it1, ++it2) {
    if (it1->first != it2->first || !(it1->second == it2->second)) return false;
  }
  return true;
}

Laurent Laurent::bar(unsigned which) const {
  Laurent r(nvars_);
  for (auto& [e, c] : terms_) {
    Exponent f = e;
    f[which] = -f[which];
    r.add_term(f, c);
  }
  return r;
}

Cyclotomic Laurent::eval(const Cyclotomic& x0) const {
  Cyclotomic acc = Cyclotomic::zero();
  for (auto& [e, c] : terms_) {
    if (nvars_ > 1 && e[1] != 0)
      throw std::domain_error("eval only substitutes the first variable");
    acc += c * x0.pow(e[0]);
  }
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool atom = cs.find(' ') == std::string::npos && cs[0] != '-';
    std::string vars;
    if (e[0] != 0) vars += "x^" + std::to_string(e[0]);
    if (nvars_ > 1 && e[1] != 0) {
      if (!vars.empty()) vars += "*";
      vars += "w^" + std::to_string(e[1]);
    }
    if (vars.empty()) {
      os << cs;
    } else {
      os << (atom ? cs : "(" + cs + ")") << "*" << vars;
    }
  }
  return os.str();
}

RootOfUnity parse_root(const std::string& text) {
  std::string s = text;
  bool negate = false;
  if (!s.empty() && s[0] == '-') {
    negate = true;
    s = s.substr(1);
  }
  RootOfUnity r;
  if (s == "1") {
    r = RootOfUnity::one();
  } else {
    if (s.empty() || (s[0] != 'z' && s[0] != 'Z'))
      throw std::invalid_argument("expected root syntax z{N}^{k}: " + text);
    auto caret = s.find('^');
    unsigned n = std::stoul(s.substr(1, caret == std::string::npos
                                            ? std::string::npos
                                            : caret - 1));
    long k = caret == std::string::npos ? 1 : std::stol(s.substr(caret + 1));
    r = RootOfUnity(n, k);
  }
  return negate ? r.negated() : r;
}

}  // namespace hopfforge
