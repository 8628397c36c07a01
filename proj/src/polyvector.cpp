#include "kstar/polyvector.hpp"

#include <algorithm>
#include <sstream>

namespace kstar {

namespace {

// Sorts t in place, returns the sign of the sorting permutation, or 0 if an
// index repeats.
int sort_sign(PolyVec::Tuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i)
    for (size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
      std::swap(t[j], t[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

int parity(long long a) { return (a % 2 + 2) % 2; }

} // namespace

bool PolyVec::is_zero() const {
  if (deg_ == -1) return scalar_.is_zero();
  return comps_.empty();
}

Poly PolyVec::component(const Tuple& t) const {
  if ((int)t.size() != deg_ + 1)
    throw std::invalid_argument("component tuple length != degree+1");
  if (deg_ == -1) return scalar_;
  Tuple s = t;
  int sg = sort_sign(s);
  if (sg == 0) return Poly(dim_);
  auto it = comps_.find(s);
  if (it == comps_.end()) return Poly(dim_);
  return sg == 1 ? it->second : -it->second;
}

void PolyVec::add_wedge(const Tuple& t, const Poly& c) {
  if ((int)t.size() != deg_ + 1)
    throw std::invalid_argument("wedge tuple length != degree+1");
  if (c.is_zero()) return;
  if (deg_ == -1) {
    scalar_ += c;
    return;
  }
  Tuple s = t;
  int sg = sort_sign(s);
  if (sg == 0) return;
  auto it = comps_.find(s);
  if (it == comps_.end()) it = comps_.emplace(s, Poly(dim_)).first;
  if (sg == 1)
    it->second += c;
  else
    it->second -= c;
  if (it->second.is_zero()) comps_.erase(it);
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
  if (dim_ != o.dim_) throw dim_mismatch{};
  // Zero is degree-agnostic: adding it never changes the other side, and an
  // accumulator that is still zero adopts the shape of its first summand.
  if (o.is_zero()) return *this;
  if (is_zero() && deg_ != o.deg_) {
    *this = o;
    return *this;
  }
  if (deg_ != o.deg_)
    throw std::invalid_argument("polyvector degree mismatch in +=");
  if (deg_ == -1) {
    scalar_ += o.scalar_;
    return *this;
  }
  for (const auto& [t, c] : o.comps_) add_wedge(t, c);
  return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) {
  return *this += -o;
}

PolyVec PolyVec::operator-() const {
  PolyVec r(dim_, deg_);
  r.scalar_ = -scalar_;
  for (const auto& [t, c] : comps_) r.comps_.emplace(t, -c);
  return r;
}

PolyVec& PolyVec::operator*=(const Rat& c) {
  if (c.is_zero()) {
    comps_.clear();
    scalar_ = Poly(dim_);
    return *this;
  }
  scalar_ *= c;
  for (auto& [t, v] : comps_) v *= c;
  return *this;
}

bool operator==(const PolyVec& a, const PolyVec& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.deg_ == b.deg_ && a.scalar_ == b.scalar_ && a.comps_ == b.comps_;
}

std::string PolyVec::str() const {
  if (deg_ == -1) return scalar_.str();
  if (comps_.empty()) return "0";
  // One monomial per printed term so the output stays inside the expression
  // grammar (no parentheses): "c*x1^2*d1^d2 + ...".
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : comps_) {
    for (const auto& [e, r] : c.terms()) {
      if (!first) out << " + ";
      first = false;
      out << r.str();
      for (int i = 0; i < dim_; ++i) {
        if (e[i] == 0) continue;
        out << "*x" << (i + 1);
        if (e[i] > 1) out << "^" << e[i];
      }
      for (size_t i = 0; i < t.size(); ++i)
        out << (i == 0 ? "*d" : "^d") << (t[i] + 1);
    }
  }
  return out.str();
}

void for_each_tensor_entry(
    const PolyVec& v,
    const std::function<void(const PolyVec::Tuple&, int, const Poly&)>& f) {
  if (v.deg() == -1) {
    f({}, 1, v.scalar());
    return;
  }
  for (const auto& [t, c] : v.components()) {
    PolyVec::Tuple perm = t;
    // Entries of an increasing tuple are distinct, so std::next_permutation
    // enumerates each arrangement exactly once.
    do {
      // Sign of perm relative to the sorted tuple.
      PolyVec::Tuple s = perm;
      int sg = sort_sign(s);
      f(perm, sg, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

PolyVec nr_bullet_r(const PolyVec& xi, const PolyVec& eta, int r) {
  if (xi.dim() != eta.dim()) throw dim_mismatch{};
  const int k = xi.deg(), l = eta.deg();
  if (k < 0) throw std::invalid_argument("nr_bullet_r: first factor has no slots");
  if (r < 0 || r > k) throw std::invalid_argument("nr_bullet_r: slot out of range");
  PolyVec out(xi.dim(), k + l);
  for_each_tensor_entry(xi, [&](const PolyVec::Tuple& I, int sI, const Poly& cI) {
    for_each_tensor_entry(eta, [&](const PolyVec::Tuple& J, int sJ, const Poly& cJ) {
      Poly term = cI * cJ.derivative(I[r]);
      if (term.is_zero()) return;
      if (sI * sJ < 0) term = -term;
      PolyVec::Tuple target;
      target.reserve(k + l + 1);
      for (int a = 0; a <= k; ++a)
        if (a != r) target.push_back(I[a]);
      for (int b = 0; b <= l; ++b) target.push_back(J[b]);
      out.add_wedge(target, term);
    });
  });
  // The two tensor sweeps overcount each wedge component: all orderings of
  // the k+1 xi slots and of the l+1 eta slots land on the same wedge, and
  // on antisymmetric components every choice of the contracted slot agrees.
  out *= Rat(1) / (factorial(k + 1) * factorial(l + 1));
  return out;
}

PolyVec nr_bullet(const PolyVec& xi, const PolyVec& eta) {
  if (xi.dim() != eta.dim()) throw dim_mismatch{};
  const int k = xi.deg(), l = eta.deg();
  // Functions have no slots.  The formal degree k+l can drop below -1 (two
  // functions); clamp the zero result into the function grade.
  if (k < 0) return PolyVec(xi.dim(), std::max(k + l, -1));
  // Direct kernel on the stored increasing components: pulling the contracted
  // index out of position p of a stored tuple costs (-1)^p, and on
  // antisymmetric components the alternating sum over slots collapses to this
  // single sweep.  nr_bullet_r gives the equivalent per-slot tensor formula.
  PolyVec out(xi.dim(), k + l);
  auto contract = [&](const PolyVec::Tuple& T, const Poly& c,
                      const PolyVec::Tuple& J, const Poly& d) {
    PolyVec::Tuple target(k + l + 1);
    for (int p = 0; p <= k; ++p) {
      Poly term = c * d.derivative(T[p]);
      if (term.is_zero()) continue;
      if (p % 2 != 0) term = -term;
      int idx = 0;
      for (int a = 0; a <= k; ++a)
        if (a != p) target[idx++] = T[a];
      for (int b = 0; b <= l; ++b) target[idx++] = J[b];
      out.add_wedge(target, term);
    }
  };
  static const PolyVec::Tuple kEmpty;
  if (eta.is_function()) {
    for (const auto& [T, c] : xi.components()) contract(T, c, kEmpty, eta.scalar());
  } else {
    for (const auto& [T, c] : xi.components())
      for (const auto& [J, d] : eta.components()) contract(T, c, J, d);
  }
  return out;
}

PolyVec schouten(const PolyVec& xi, const PolyVec& eta) {
  const int k = xi.deg(), l = eta.deg();
  // Assembled as (-1)^k xi•eta - (-1)^{(k+1)l} eta•xi.  The grade twists on
  // the commutator are forced by the graded Jacobi identity together with the
  // low-degree anchors ([X,Y] = Lie bracket, [X,f] = Xf, [X,B] = L_X B).
  PolyVec a = nr_bullet(xi, eta);
  PolyVec b = nr_bullet(eta, xi);
  if (parity(k) != 0) a = -a;
  if (parity((long long)(k + 1) * l) == 0) b = -b;
  return a + b;
}

PolyVec wedge(const PolyVec& a, const PolyVec& b) {
  if (a.dim() != b.dim()) throw dim_mismatch{};
  if (a.is_function() && b.is_function())
    return PolyVec(a.scalar() * b.scalar());
  if (a.is_function() || b.is_function()) {
    const Poly& f = a.is_function() ? a.scalar() : b.scalar();
    const PolyVec& v = a.is_function() ? b : a;
    PolyVec out(v.dim(), v.deg());
    for (const auto& [T, c] : v.components()) out.add_wedge(T, f * c);
    return out;
  }
  PolyVec out(a.dim(), a.deg() + b.deg() + 1);
  for (const auto& [T, c] : a.components())
    for (const auto& [J, d] : b.components()) {
      Poly val = c * d;
      if (val.is_zero()) continue;
      PolyVec::Tuple target = T;
      target.insert(target.end(), J.begin(), J.end());
      out.add_wedge(target, val);
    }
  return out;
}

} // namespace kstar
