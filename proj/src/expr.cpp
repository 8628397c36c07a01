#include "kstar/expr.hpp"

#include <cctype>
#include <vector>

namespace kstar {

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;

  explicit Scanner(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw syntax_error(std::string("expected '") + c + "'", i);
  }
  long long integer() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw syntax_error("expected integer", i);
    long long v = 0;
    for (size_t k = start; k < i; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v < 0) throw syntax_error("integer out of range", start);
    }
    return v;
  }
};

// One additive chunk: coefficient, exponent vector, and wedge directions
// (empty when the chunk has no d-block).
struct Chunk {
  Rat coeff;
  std::vector<int> exps;
  std::vector<int> wedge;
  bool has_wedge = false;
};

Chunk parse_chunk(Scanner& sc, int dim, bool negate) {
  Chunk ch;
  ch.coeff = Rat(negate ? -1 : 1);
  ch.exps.assign(static_cast<size_t>(dim), 0);

  bool saw_coeff = false;
  bool first = true;
  for (;;) {
    char c = sc.peek();
    if (first && c == '-') {
      // unary minus inside a chunk: "- 3*x1"
      sc.accept('-');
      ch.coeff = -ch.coeff;
      c = sc.peek();
    }
    first = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (saw_coeff) throw syntax_error("second rational factor in term", sc.i);
      saw_coeff = true;
      long long num = sc.integer();
      long long den = 1;
      if (sc.accept('/')) den = sc.integer();
      ch.coeff = ch.coeff * Rat(num, den);
    } else if (c == 'x') {
      sc.expect('x');
      long long idx = sc.integer();
      if (idx < 1 || idx > dim)
        throw syntax_error("variable index out of range", sc.i);
      long long pow = 1;
      if (sc.accept('^')) pow = sc.integer();
      ch.exps[static_cast<size_t>(idx - 1)] += static_cast<int>(pow);
    } else if (c == 'd') {
      if (ch.has_wedge) throw syntax_error("second wedge block in term", sc.i);
      ch.has_wedge = true;
      sc.expect('d');
      long long idx = sc.integer();
      if (idx < 1 || idx > dim)
        throw syntax_error("wedge index out of range", sc.i);
      ch.wedge.push_back(static_cast<int>(idx - 1));
      while (sc.accept('^')) {
        sc.expect('d');
        idx = sc.integer();
        if (idx < 1 || idx > dim)
          throw syntax_error("wedge index out of range", sc.i);
        ch.wedge.push_back(static_cast<int>(idx - 1));
      }
    } else {
      throw syntax_error("expected factor", sc.i);
    }
    if (!sc.accept('*')) break;
  }
  return ch;
}

std::vector<Chunk> parse_chunks(const std::string& text, int dim) {
  Scanner sc(text);
  std::vector<Chunk> out;
  if (sc.done()) throw syntax_error("empty expression", sc.i);
  bool neg = sc.accept('-');
  out.push_back(parse_chunk(sc, dim, neg));
  while (!sc.done()) {
    if (sc.accept('+'))
      out.push_back(parse_chunk(sc, dim, false));
    else if (sc.accept('-'))
      out.push_back(parse_chunk(sc, dim, true));
    else
      throw syntax_error("expected '+' or '-'", sc.i);
  }
  return out;
}

} // namespace

Poly parse_poly(const std::string& text, int dim) {
  Poly p(dim);
  for (const Chunk& ch : parse_chunks(text, dim)) {
    if (ch.has_wedge)
      throw syntax_error("wedge factor in scalar polynomial", 0);
    p.add_term(ch.exps, ch.coeff);
  }
  return p;
}

PolyVec parse_polyvector(const std::string& text, int dim) {
  std::vector<Chunk> chunks = parse_chunks(text, dim);
  int deg = chunks.front().has_wedge
                ? static_cast<int>(chunks.front().wedge.size()) - 1
                : -1;
  if (deg < 0) {
    Poly sc(dim);
    for (const Chunk& ch : chunks) {
      if (ch.has_wedge) throw syntax_error("mixed degrees in polyvector", 0);
      sc.add_term(ch.exps, ch.coeff);
    }
    return PolyVec(sc);
  }
  PolyVec v(dim, deg);
  for (const Chunk& ch : chunks) {
    int d = ch.has_wedge ? static_cast<int>(ch.wedge.size()) - 1 : -1;
    if (d != deg) throw syntax_error("mixed degrees in polyvector", 0);
    Poly mono(dim);
    mono.add_term(ch.exps, ch.coeff);
    v.add_wedge(ch.wedge, mono);
  }
  return v;
}

std::string print_poly(const Poly& p) { return p.str(); }

std::string print_polyvector(const PolyVec& v) { return v.str(); }

} // namespace kstar
