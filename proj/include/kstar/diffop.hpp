// Polydifferential operators with polynomial coefficients, and the
// Gerstenhaber structure on them (insertion compositions, bracket, Hochschild
// differential, cup product).
//
// An operator of arity a is a finite sum of terms  C * ∂_{I0} ⊗ ... ⊗ ∂_{I_{a-1}},
// stored in normal form: each derivative multi-index is a sorted list of
// 0-based directions, and terms with equal index blocks are merged.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "kstar/poly.hpp"

namespace kstar {

class DiffOp {
 public:
  using MultiIndex = std::vector<int>;        // sorted directions
  using Key = std::vector<MultiIndex>;        // one multi-index per slot

  DiffOp() : dim_(0), arity_(0) {}
  DiffOp(int dim, int arity) : dim_(dim), arity_(arity) {}

  // Pointwise multiplication of two functions: arity 2, C = 1, no derivatives.
  static DiffOp mu(int dim);
  // The 1-ary identity operator.
  static DiffOp identity(int dim);

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  // Hochschild degree (arity - 1); what the Gerstenhaber signs see.
  int hdeg() const { return arity_ - 1; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<Key, Poly>& terms() const { return terms_; }
  void add_term(const Key& k, const Poly& c);

  Poly evaluate(const std::vector<Poly>& fs) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  DiffOp& operator*=(const Rat& c);
  friend DiffOp operator*(DiffOp a, const Rat& c) { return a *= c; }
  friend DiffOp operator*(const Rat& c, DiffOp a) { return a *= c; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int dim_;
  int arity_;
  std::map<Key, Poly> terms_;
};

struct arity_mismatch : std::invalid_argument {
  arity_mismatch() : std::invalid_argument("operator arity mismatch") {}
};

// Nested substitution: plug psi into slot i (0-based) of phi.  Arities a, b
// compose to a + b - 1.
DiffOp gerst_circ_i(const DiffOp& phi, const DiffOp& psi, int i);

// Alternating sum over slots, sign (-1)^{i*l} with l = hdeg(psi).
DiffOp gerst_circ(const DiffOp& phi, const DiffOp& psi);

// [phi,psi]_G = phi∘psi - (-1)^{kl} psi∘phi  (k, l the Hochschild degrees).
DiffOp gerst_bracket(const DiffOp& phi, const DiffOp& psi);

// d_Hoch = [mu, ·]_G.
DiffOp hochschild_d(const DiffOp& phi);

// Cup product: evaluate the factors on consecutive argument blocks and
// multiply the results.
DiffOp cup(const DiffOp& a, const DiffOp& b);

} // namespace kstar
