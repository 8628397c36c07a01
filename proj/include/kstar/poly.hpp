// Sparse multivariate polynomials over Rat.
//
// Terms live in an ordered map keyed by the exponent vector (length = ambient
// dimension), so iteration order, printing and equality are all canonical.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "kstar/rational.hpp"

namespace kstar {

struct dim_mismatch : std::invalid_argument {
  dim_mismatch() : std::invalid_argument("ambient dimension mismatch") {}
};

class Poly {
 public:
  using Exps = std::vector<int>;

  explicit Poly(int dim = 0) : dim_(dim) {}
  static Poly constant(int dim, const Rat& c);
  // Monomial c * x_{i+1} (0-based variable index).
  static Poly var(int dim, int i, const Rat& c = 1);
  static Poly monomial(int dim, const Exps& e, const Rat& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  const std::map<Exps, Rat>& terms() const { return terms_; }
  Rat coeff(const Exps& e) const;

  void add_term(const Exps& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  // d/dx_{i+1} (0-based direction).
  Poly derivative(int i) const;
  // Iterated derivative by a multi-index given as a list of directions.
  Poly derivative(const std::vector<int>& dirs) const;

  // Evaluation at a rational point (used by test oracles).
  Rat eval(const std::vector<Rat>& x) const;

  std::string str() const;

 private:
  int dim_;
  std::map<Exps, Rat> terms_;
};

} // namespace kstar
