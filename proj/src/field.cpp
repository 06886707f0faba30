#include "fqt/field.hpp"

#include <algorithm>

namespace fqt {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense F_p[a] helpers for modulus validation and extension arithmetic.
// Polynomials are coefficient vectors, index = exponent, no trailing zeros.
using APoly = std::vector<uint32_t>;

APoly trim(APoly v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

APoly amul(const APoly& f, const APoly& g, uint32_t p) {
  if (f.empty() || g.empty()) return {};
  APoly out(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      out[i + j] = (out[i + j] + uint64_t(f[i]) * g[j]) % p;
  return trim(out);
}

APoly amod(APoly f, const APoly& m, uint32_t p) {
  f = trim(std::move(f));
  uint32_t lead_inv = 1;
  {
    // m is monic in our usage, but normalize defensively.
    uint32_t lc = m.back();
    for (uint32_t t = 1; t < p; ++t)
      if (lc * t % p == 1) lead_inv = t;
  }
  while (f.size() >= m.size()) {
    uint32_t c = f.back() * uint64_t(lead_inv) % p;
    size_t shift = f.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      uint64_t sub = uint64_t(c) * m[i] % p;
      f[shift + i] = (f[shift + i] + p - sub) % p;
    }
    f = trim(std::move(f));
    if (f.empty()) break;
  }
  return f;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p) : p_(p), k_(1), q_(p) {
  if (!is_prime(p)) throw InvalidFieldSpec("characteristic " + std::to_string(p) + " is not prime");
}

FieldSpec::FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw InvalidFieldSpec("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidFieldSpec("extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 20)) throw InvalidFieldSpec("field too large");
  }
  q_ = uint32_t(q);
  if (k == 1) {
    modulus_.clear();
    return;
  }
  for (auto& c : modulus_) c %= p;
  modulus_ = trim(std::move(modulus_));
  if (modulus_.size() != k + 1)
    throw InvalidFieldSpec("modulus must have degree " + std::to_string(k));
  if (modulus_.back() != 1) throw InvalidFieldSpec("modulus must be monic");
  // Irreducibility by trial division: no monic factor of degree 1..k/2.
  // Enumerate candidate divisors by their coefficient tuples.
  for (uint32_t d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      APoly g(d + 1, 0);
      uint64_t c = code;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = uint32_t(c % p);
        c /= p;
      }
      g[d] = 1;  // monic
      if (amod(modulus_, g, p).empty())
        throw InvalidFieldSpec("modulus is reducible (divisible by a degree-" +
                               std::to_string(d) + " factor)");
    }
  }
}

std::vector<uint32_t> FieldSpec::digits(uint32_t x) const {
  std::vector<uint32_t> d(k_, 0);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

uint32_t FieldSpec::undigits(const std::vector<uint32_t>& d) const {
  uint32_t x = 0;
  for (size_t i = d.size(); i-- > 0;) x = x * p_ + d[i];
  return x;
}

uint32_t FieldSpec::add(uint32_t x, uint32_t y) const {
  if (k_ == 1) return (x + y) % p_;
  auto a = digits(x), b = digits(y);
  for (uint32_t i = 0; i < k_; ++i) a[i] = (a[i] + b[i]) % p_;
  return undigits(a);
}

uint32_t FieldSpec::neg(uint32_t x) const {
  if (k_ == 1) return (p_ - x % p_) % p_;
  auto a = digits(x);
  for (auto& c : a) c = (p_ - c) % p_;
  return undigits(a);
}

uint32_t FieldSpec::sub(uint32_t x, uint32_t y) const { return add(x, neg(y)); }

uint32_t FieldSpec::mul(uint32_t x, uint32_t y) const {
  if (k_ == 1) return uint64_t(x) * y % p_;
  APoly prod = amod(amul(trim(digits(x)), trim(digits(y)), p_), modulus_, p_);
  prod.resize(k_, 0);
  return undigits(prod);
}

uint32_t FieldSpec::pow(uint32_t x, uint64_t e) const {
  uint32_t acc = 1, base = x % q_;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

uint32_t FieldSpec::inv(uint32_t x) const {
  x %= q_;
  if (x == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(q_));
  return pow(x, uint64_t(q_) - 2);  // Fermat/Lagrange: x^(q-2)
}

std::string FieldSpec::elem_to_string(uint32_t x) const {
  if (k_ == 1) return std::to_string(x % p_);
  auto d = digits(x);
  std::string out;
  for (size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]);
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

uint32_t FieldSpec::elem_from_apoly(const std::vector<uint32_t>& coeffs) const {
  APoly v(coeffs);
  for (auto& c : v) c %= p_;
  v = trim(std::move(v));
  if (v.size() > 1) {
    if (k_ == 1)
      throw InvalidFieldSpec("the symbol a requires an extension field");
    v = amod(std::move(v), modulus_, p_);
  }
  v.resize(k_, 0);
  return undigits(v);
}

FieldElem field_arith(const FieldElem& x, const FieldElem& y, FieldOp op) {
  if ((op == FieldOp::add || op == FieldOp::mul) && !x.F->same(*y.F))
    throw FieldMismatch("operands belong to different fields");
  switch (op) {
    case FieldOp::add:
      return FieldElem(*x.F, x.F->add(x.v, y.v));
    case FieldOp::mul:
      return FieldElem(*x.F, x.F->mul(x.v, y.v));
    case FieldOp::neg:
      return FieldElem(*x.F, x.F->neg(x.v));
    case FieldOp::inv:
      return FieldElem(*x.F, x.F->inv(x.v));
  }
  throw Error("Internal", "unreachable field op");
}

}  // namespace fqt
