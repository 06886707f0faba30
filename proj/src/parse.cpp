#include "fqt/parse.hpp"

#include <cctype>

namespace fqt {

namespace {

struct Scanner {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_kw(const std::string& kw) {
    skip_ws();
    if (s.compare(pos, kw.size(), kw) != 0) return false;
    pos += kw.size();
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + s + "\"");
  }

  uint64_t read_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected a number");
    uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + uint64_t(s[pos] - '0');
      if (v > (1ull << 40)) fail("number too large");
      ++pos;
    }
    return v;
  }

  int read_int() {
    skip_ws();
    bool neg = accept('-');
    uint64_t v = read_uint();
    if (v > (1u << 30)) fail("exponent too large");
    return neg ? -int(v) : int(v);
  }
};

// amono := [uint] ['*'] 'a' ['^' uint]; returns the element index.
uint32_t read_amono(const FieldSpec& F, Scanner& sc, uint64_t lead) {
  sc.expect('a');
  uint64_t e = 1;
  if (sc.accept('^')) e = sc.read_uint();
  if (e > 64) sc.fail("a-exponent too large");
  std::vector<uint32_t> coeffs(size_t(e) + 1, 0);
  coeffs[size_t(e)] = uint32_t(lead % F.p());
  return F.elem_from_apoly(coeffs);
}

// apoly := ['-'] amono-or-uint (('+'|'-') ...)*, inside parentheses.
uint32_t read_apoly(const FieldSpec& F, Scanner& sc) {
  uint32_t acc = 0;
  bool first = true;
  while (true) {
    bool neg = false;
    if (first) {
      neg = sc.accept('-');
      first = false;
    } else if (sc.accept('+')) {
      neg = false;
    } else if (sc.accept('-')) {
      neg = true;
    } else {
      break;
    }
    uint32_t term;
    if (sc.peek() == 'a') {
      term = read_amono(F, sc, 1);
    } else {
      uint64_t n = sc.read_uint();
      if (sc.peek() == '*') sc.accept('*');
      if (sc.peek() == 'a')
        term = read_amono(F, sc, n);
      else
        term = F.elem_from_apoly({uint32_t(n % F.p())});
    }
    acc = F.add(acc, neg ? F.neg(term) : term);
  }
  return acc;
}

// One signed term of a (Laurent) polynomial: coefficient and exponent.
struct Term {
  uint32_t coeff;
  int exp;
};

Term read_term(const FieldSpec& F, Scanner& sc, bool allow_negative_exp) {
  uint32_t coeff = 1;
  bool saw_coeff = false;
  char c = sc.peek();
  if (c == '(') {
    sc.expect('(');
    coeff = read_apoly(F, sc);
    sc.expect(')');
    saw_coeff = true;
  } else if (std::isdigit(static_cast<unsigned char>(c))) {
    uint64_t n = sc.read_uint();
    if (sc.peek() == 'a' || (sc.peek() == '*' && sc.s[sc.pos + 1] == 'a')) {
      sc.accept('*');
      coeff = read_amono(F, sc, n);
    } else {
      coeff = F.elem_from_apoly({uint32_t(n % F.p())});
    }
    saw_coeff = true;
  } else if (c == 'a') {
    coeff = read_amono(F, sc, 1);
    saw_coeff = true;
  }
  sc.accept('*');
  if (sc.peek() == 't') {
    sc.expect('t');
    int e = 1;
    if (sc.accept('^')) e = sc.read_int();
    if (e < 0 && !allow_negative_exp) sc.fail("negative exponent outside a Laurent context");
    if (e > 4096 || e < -4096) sc.fail("exponent out of range");
    return Term{coeff, e};
  }
  if (!saw_coeff) sc.fail("expected a term");
  return Term{coeff, 0};
}

std::map<int, uint32_t> read_terms(const FieldSpec& F, Scanner& sc, bool allow_negative_exp) {
  std::map<int, uint32_t> acc;
  bool neg = sc.accept('-');
  while (true) {
    Term t = read_term(F, sc, allow_negative_exp);
    uint32_t v = neg ? F.neg(t.coeff) : t.coeff;
    uint32_t merged = F.add(acc.count(t.exp) ? acc[t.exp] : 0, v);
    if (merged == 0)
      acc.erase(t.exp);
    else
      acc[t.exp] = merged;
    if (sc.accept('+'))
      neg = false;
    else if (sc.accept('-'))
      neg = true;
    else
      break;
  }
  return acc;
}

Poly terms_to_poly(const FieldSpec& F, const std::map<int, uint32_t>& terms, Scanner& sc) {
  Poly out(F);
  if (terms.empty()) return out;
  if (terms.begin()->first < 0) sc.fail("negative exponent outside a Laurent context");
  out.c.assign(size_t(terms.rbegin()->first) + 1, 0);
  for (auto [e, c] : terms) out.c[size_t(e)] = c;
  return Poly(F, out.c);
}

Poly read_poly(const FieldSpec& F, Scanner& sc) {
  return terms_to_poly(F, read_terms(F, sc, false), sc);
}

// A Laurent-term map rendered as num / t^shift so that point syntax may use
// negative exponents ("t^-1" means 1/t).
struct RatPart {
  Poly num, den;
};

RatPart terms_to_rat(const FieldSpec& F, const std::map<int, uint32_t>& terms) {
  int shift = 0;
  if (!terms.empty() && terms.begin()->first < 0) shift = -terms.begin()->first;
  std::vector<uint32_t> coeffs;
  if (!terms.empty()) {
    coeffs.assign(size_t(terms.rbegin()->first + shift) + 1, 0);
    for (auto [e, c] : terms) coeffs[size_t(e + shift)] = c;
  }
  return {Poly(F, std::move(coeffs)), Poly::monomial(F, 1, uint32_t(shift))};
}

// part := '(' laurent-poly ')' | laurent-poly.  A leading '(' is a grouping
// paren only when the matching ')' ends the part ('/', ',', ')' or end
// follows); otherwise it is an extension-field coefficient like "(a+1)t".
bool is_grouping_paren(Scanner& sc) {
  if (sc.peek() != '(') return false;
  size_t i = sc.pos, depth = 0;
  for (; i < sc.s.size(); ++i) {
    if (sc.s[i] == '(') ++depth;
    if (sc.s[i] == ')' && --depth == 0) break;
  }
  if (i >= sc.s.size()) sc.fail("unbalanced parenthesis");
  for (++i; i < sc.s.size() && std::isspace(static_cast<unsigned char>(sc.s[i])); ++i) {
  }
  return i >= sc.s.size() || sc.s[i] == '/' || sc.s[i] == ',' || sc.s[i] == ')';
}

RatPart read_point_part(const FieldSpec& F, Scanner& sc) {
  if (is_grouping_paren(sc)) {
    sc.expect('(');
    auto terms = read_terms(F, sc, true);
    sc.expect(')');
    return terms_to_rat(F, terms);
  }
  return terms_to_rat(F, read_terms(F, sc, true));
}

ProjPoint read_point(const FieldSpec& F, Scanner& sc) {
  if (sc.accept_kw("inf")) return ProjPoint::infinity(F);
  RatPart p1 = read_point_part(F, sc);
  if (sc.accept('/')) {
    RatPart p2 = read_point_part(F, sc);
    Poly num = p1.num * p2.den;
    Poly den = p1.den * p2.num;
    if (num.is_zero() && den.is_zero()) sc.fail("0/0 is not a point");
    return ProjPoint(std::move(num), std::move(den));
  }
  return ProjPoint(std::move(p1.num), std::move(p1.den));
}

void expect_end(Scanner& sc) {
  if (!sc.eof()) sc.fail("unexpected trailing input");
}

}  // namespace

Poly parse_poly(const FieldSpec& F, const std::string& text) {
  Scanner sc{text};
  Poly f = read_poly(F, sc);
  expect_end(sc);
  return f;
}

std::map<int, uint32_t> parse_laurent(const FieldSpec& F, const std::string& text) {
  Scanner sc{text};
  auto terms = read_terms(F, sc, true);
  expect_end(sc);
  return terms;
}

ProjPoint parse_point(const FieldSpec& F, const std::string& text) {
  Scanner sc{text};
  ProjPoint p = read_point(F, sc);
  expect_end(sc);
  return p;
}

Triple parse_triple(const FieldSpec& F, const std::string& text) {
  Scanner sc{text};
  sc.expect('(');
  ProjPoint w1 = read_point(F, sc);
  sc.expect(',');
  ProjPoint w2 = read_point(F, sc);
  sc.expect(',');
  ProjPoint w3 = read_point(F, sc);
  sc.expect(')');
  expect_end(sc);
  return make_triple(std::move(w1), std::move(w2), std::move(w3));
}

GammaElem parse_matrix(const FieldSpec& F, const std::string& text) {
  Scanner sc{text};
  sc.expect('[');
  sc.expect('[');
  Poly a = read_poly(F, sc);
  sc.expect(',');
  Poly b = read_poly(F, sc);
  sc.expect(']');
  sc.expect(',');
  sc.expect('[');
  Poly c = read_poly(F, sc);
  sc.expect(',');
  Poly d = read_poly(F, sc);
  sc.expect(']');
  sc.expect(']');
  expect_end(sc);
  return make_matrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

Vertex parse_vertex(const FieldSpec& F, const std::string& text) {
  Scanner sc{text};
  sc.expect('(');
  int n = sc.read_int();
  sc.expect(';');
  auto f = read_terms(F, sc, true);
  sc.expect(')');
  expect_end(sc);
  return make_vertex(F, n, std::move(f));
}

Word parse_word(const FieldSpec& F, const std::string& text) {
  // Tokens are written in matrix-product order; application order is the
  // reverse, so parse first and push backwards.
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  Word w(F);
  for (size_t i = parts.size(); i-- > 0;) {
    Scanner tsc{parts[i]};
    if (tsc.accept_kw("iota")) {
      expect_end(tsc);
      w.push_iota();
    } else if (tsc.accept_kw("sigma")) {
      tsc.expect(':');
      uint32_t c;
      if (tsc.peek() == '(') {
        tsc.expect('(');
        c = read_apoly(F, tsc);
        tsc.expect(')');
      } else if (tsc.peek() == 'a') {
        c = read_amono(F, tsc, 1);
      } else {
        uint64_t n = tsc.read_uint();
        if (tsc.peek() == 'a' || tsc.peek() == '*') {
          tsc.accept('*');
          c = read_amono(F, tsc, n);
        } else {
          c = F.elem_from_apoly({uint32_t(n % F.p())});
        }
      }
      expect_end(tsc);
      w.push_sigma(c);
    } else if (tsc.accept_kw("u")) {
      tsc.expect(':');
      Poly f = read_poly(F, tsc);
      expect_end(tsc);
      w.push_u(f);
    } else {
      tsc.fail("unknown word token");
    }
  }
  return w;
}

std::vector<uint32_t> parse_modulus(uint32_t p, const std::string& text) {
  Scanner sc{text};
  std::vector<uint32_t> coeffs;
  auto bump = [&](size_t e, uint32_t v) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
    coeffs[e] = (coeffs[e] + v) % p;
  };
  bool neg = sc.accept('-');
  while (true) {
    uint64_t c = 1;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      c = sc.read_uint();
      sc.accept('*');
    }
    size_t e = 0;
    if (sc.accept('a')) {
      e = 1;
      if (sc.accept('^')) e = size_t(sc.read_uint());
      if (e > 64) sc.fail("exponent too large");
    }
    uint32_t v = uint32_t(c % p);
    bump(e, neg ? (p - v) % p : v);
    if (sc.accept('+'))
      neg = false;
    else if (sc.accept('-'))
      neg = true;
    else
      break;
  }
  expect_end(sc);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace fqt
