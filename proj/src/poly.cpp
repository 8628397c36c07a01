#include "kstar/poly.hpp"

#include <numeric>
#include <sstream>

namespace kstar {

Poly Poly::constant(int dim, const Rat& c) {
  Poly p(dim);
  p.add_term(Exps(dim, 0), c);
  return p;
}

Poly Poly::var(int dim, int i, const Rat& c) {
  Exps e(dim, 0);
  e.at(i) = 1;
  Poly p(dim);
  p.add_term(e, c);
  return p;
}

Poly Poly::monomial(int dim, const Exps& e, const Rat& c) {
  if ((int)e.size() != dim) throw dim_mismatch{};
  Poly p(dim);
  p.add_term(e, c);
  return p;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rat Poly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exps& e, const Rat& c) {
  if ((int)e.size() != dim_) throw dim_mismatch{};
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (dim_ != o.dim_) throw dim_mismatch{};
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (dim_ != o.dim_) throw dim_mismatch{};
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.dim_ != b.dim_) throw dim_mismatch{};
  Poly r(a.dim_);
  Poly::Exps e(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r(dim_);
  Exps e(dim_);
  for (const auto& [ex, c] : terms_) {
    if (ex[i] == 0) continue;
    e = ex;
    e[i] -= 1;
    r.add_term(e, c * Rat(ex[i]));
  }
  return r;
}

Poly Poly::derivative(const std::vector<int>& dirs) const {
  Poly r = *this;
  for (int i : dirs) {
    r = r.derivative(i);
    if (r.is_zero()) break;
  }
  return r;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
  if ((int)x.size() != dim_) throw dim_mismatch{};
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    total += t;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      out << "*x" << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

} // namespace kstar
