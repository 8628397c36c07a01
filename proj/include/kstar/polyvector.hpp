// Polyvector fields with polynomial coefficients.
//
// A degree-k field is stored by its components on strictly increasing index
// tuples of length k+1; the full antisymmetric tensor is implied.  Degree -1
// means a plain function (polynomial).  The Einstein-sum helper add_wedge
// interprets an arbitrary index tuple against the wedge basis, so formulas
// written as "tensor * d_{i0} ^ ... ^ d_{ik}" sums can be entered verbatim.

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kstar/poly.hpp"

namespace kstar {

class PolyVec {
 public:
  using Tuple = std::vector<int>;

  PolyVec() : dim_(0), deg_(-1), scalar_(0) {}
  PolyVec(int dim, int deg) : dim_(dim), deg_(deg), scalar_(dim) {
    if (deg < -1) throw std::invalid_argument("polyvector degree below -1");
  }
  // Degree -1 embedding of a function.
  explicit PolyVec(const Poly& f) : dim_(f.dim()), deg_(-1), scalar_(f) {}

  int dim() const { return dim_; }
  int deg() const { return deg_; }
  bool is_function() const { return deg_ == -1; }
  const Poly& scalar() const { return scalar_; }

  bool is_zero() const;

  // Component on an arbitrary tuple of 0-based directions: antisymmetric
  // extension of the stored increasing components.  Repeated index -> 0.
  Poly component(const Tuple& t) const;

  // Adds c * d_{t0} ^ ... ^ d_{tk} (tuple need not be sorted).
  void add_wedge(const Tuple& t, const Poly& c);

  const std::map<Tuple, Poly>& components() const { return comps_; }

  PolyVec& operator+=(const PolyVec& o);
  PolyVec& operator-=(const PolyVec& o);
  friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
  friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a -= b; }
  PolyVec operator-() const;
  PolyVec& operator*=(const Rat& c);
  friend PolyVec operator*(PolyVec a, const Rat& c) { return a *= c; }

  friend bool operator==(const PolyVec& a, const PolyVec& b);

  std::string str() const;

 private:
  int dim_;
  int deg_;
  Poly scalar_;                  // degree -1 payload
  std::map<Tuple, Poly> comps_;  // increasing tuples, length deg_+1
};

// Elementary Nijenhuis-Richardson product on slot r (0-based, 0 <= r <= k):
// contract slot r of xi with a derivative acting on eta, wedge the remaining
// slots in place.  Reference implementation sweeping the full antisymmetric
// tensors of both factors.
PolyVec nr_bullet_r(const PolyVec& xi, const PolyVec& eta, int r);

// Full NR product xi • eta = sum_r (-1)^r (slot-r product), computed directly
// on the stored increasing components.  Zero when xi is a function (no
// slots).
PolyVec nr_bullet(const PolyVec& xi, const PolyVec& eta);

// Schouten bracket, assembled from the bullet as
//   [xi,eta] = (-1)^k xi•eta - (-1)^{(k+1)l} eta•xi   (k = deg xi, l = deg eta)
// so that it restricts to the Lie bracket / Lie derivative / directional
// derivative on low degrees and satisfies the graded Jacobi identity.
PolyVec schouten(const PolyVec& xi, const PolyVec& eta);

// Wedge product of fields.  Function factors act by plain multiplication.
PolyVec wedge(const PolyVec& a, const PolyVec& b);

// Enumerates the full (signed) tensor of a field: calls f(tuple, sign, comp)
// for every permutation of every stored increasing tuple.  Used by the state
// sum and the NR kernels.
void for_each_tensor_entry(
    const PolyVec& v,
    const std::function<void(const PolyVec::Tuple&, int, const Poly&)>& f);

} // namespace kstar
