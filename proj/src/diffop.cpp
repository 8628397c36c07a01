#include "kstar/diffop.hpp"

#include <algorithm>
#include <sstream>

namespace kstar {

DiffOp DiffOp::mu(int dim) {
  DiffOp m(dim, 2);
  m.add_term(Key{{}, {}}, Poly::constant(dim, 1));
  return m;
}

DiffOp DiffOp::identity(int dim) {
  DiffOp m(dim, 1);
  m.add_term(Key{{}}, Poly::constant(dim, 1));
  return m;
}

void DiffOp::add_term(const Key& k, const Poly& c) {
  if ((int)k.size() != arity_) throw arity_mismatch{};
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly DiffOp::evaluate(const std::vector<Poly>& fs) const {
  if ((int)fs.size() != arity_) throw arity_mismatch{};
  Poly out(dim_);
  for (const auto& [key, c] : terms_) {
    Poly t = c;
    for (int j = 0; j < arity_ && !t.is_zero(); ++j)
      t *= fs[j].derivative(key[j]);
    out += t;
  }
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (dim_ != o.dim_ || arity_ != o.arity_) throw arity_mismatch{};
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (dim_ != o.dim_ || arity_ != o.arity_) throw arity_mismatch{};
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp r(dim_, arity_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

DiffOp& DiffOp::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string DiffOp::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ")";
    for (int j = 0; j < arity_; ++j) {
      out << " " << (j ? "(x) " : "");
      out << "d[";
      for (size_t a = 0; a < key[j].size(); ++a)
        out << (a ? "," : "") << key[j][a] + 1;
      out << "]";
    }
  }
  return out.str();
}

DiffOp gerst_circ_i(const DiffOp& phi, const DiffOp& psi, int i) {
  if (phi.dim() != psi.dim()) throw dim_mismatch{};
  if (i < 0 || i >= phi.arity())
    throw std::invalid_argument("gerst_circ_i: slot out of range");
  const int a = phi.arity(), b = psi.arity();
  DiffOp out(phi.dim(), a + b - 1);

  for (const auto& [pk, pc] : phi.terms()) {
    const DiffOp::MultiIndex& hit = pk[i];  // derivatives landing on psi(...)
    const int ntargets = b + 1;             // psi's coefficient + its b slots
    for (const auto& [qk, qc] : psi.terms()) {
      // Distribute each direction of `hit` over the targets (Leibniz).  Raw
      // assignment enumeration yields the multinomial multiplicities.
      std::vector<int> assign(hit.size(), 0);
      while (true) {
        Poly coeff = qc;
        std::vector<DiffOp::MultiIndex> extra(b);
        for (size_t e = 0; e < hit.size() && !coeff.is_zero(); ++e) {
          if (assign[e] == 0)
            coeff = coeff.derivative(hit[e]);
          else
            extra[assign[e] - 1].push_back(hit[e]);
        }
        if (!coeff.is_zero()) {
          coeff = pc * coeff;
          DiffOp::Key key;
          key.reserve(a + b - 1);
          for (int j = 0; j < i; ++j) key.push_back(pk[j]);
          for (int j = 0; j < b; ++j) {
            DiffOp::MultiIndex m = qk[j];
            m.insert(m.end(), extra[j].begin(), extra[j].end());
            std::sort(m.begin(), m.end());
            key.push_back(std::move(m));
          }
          for (int j = i + 1; j < a; ++j) key.push_back(pk[j]);
          out.add_term(key, coeff);
        }
        // Odometer step.
        size_t e = 0;
        for (; e < assign.size(); ++e) {
          if (++assign[e] < ntargets) break;
          assign[e] = 0;
        }
        if (e == assign.size()) break;
      }
    }
  }
  return out;
}

DiffOp gerst_circ(const DiffOp& phi, const DiffOp& psi) {
  const int l = psi.hdeg();
  DiffOp out(phi.dim(), phi.arity() + psi.arity() - 1);
  for (int i = 0; i < phi.arity(); ++i) {
    DiffOp t = gerst_circ_i(phi, psi, i);
    if ((i * l) % 2 == 0)
      out += t;
    else
      out -= t;
  }
  return out;
}

DiffOp gerst_bracket(const DiffOp& phi, const DiffOp& psi) {
  const int k = phi.hdeg(), l = psi.hdeg();
  DiffOp a = gerst_circ(phi, psi);
  DiffOp b = gerst_circ(psi, phi);
  return ((k * l) % 2 == 0) ? a - b : a + b;
}

DiffOp hochschild_d(const DiffOp& phi) {
  return gerst_bracket(DiffOp::mu(phi.dim()), phi);
}

DiffOp cup(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim()) throw dim_mismatch{};
  DiffOp out(a.dim(), a.arity() + b.arity());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      DiffOp::Key key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add_term(key, ca * cb);
    }
  return out;
}

} // namespace kstar
