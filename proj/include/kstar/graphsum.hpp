// Exact rational linear combinations of graphs.
//
// Boundary vertices are ordered but internal vertices are not: the vector
// space is spanned by one canonical representative per relabeling class,
// oriented by the total order on its edge list.  A graph handed to inject()
// contributes with the parity of the edge permutation taking its stored
// order to the representative's order under the relabeling; swapping two
// edges flips the sign.  Classes admitting a relabeling that fixes the graph
// but permutes the edges oddly are zero and are silently dropped.

#pragma once

#include "kstar/graph.hpp"
#include "kstar/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace kstar {

// Canonical representative of raw's relabeling class (smallest edge list
// over all internal relabelings) and the sign relating raw to it: +1/-1 for
// the edge-permutation parity, 0 when the class vanishes because of an odd
// automorphism.
std::pair<Graph, int> orient(const Graph& raw);

// True iff the graph is the canonical representative of a nonzero class.
bool is_oriented(const Graph& g);

class GraphSum {
 public:
  GraphSum() = default;
  GraphSum(const Graph& g, const Rat& c) { inject(g, c); }
  explicit GraphSum(const Graph& g) { inject(g, Rat(1)); }

  // Adds c times the orientation class of `raw`.
  void inject(const Graph& raw, const Rat& c);

  const std::map<Graph, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of g's class (g may carry any labeling and edge order).
  Rat coeff(const Graph& g) const;

  // Terms of one bidegree.
  GraphSum component(int p, int q) const;

  GraphSum& operator+=(const GraphSum& o);
  GraphSum& operator-=(const GraphSum& o);
  GraphSum& operator*=(const Rat& c);
  friend GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
  friend GraphSum operator-(GraphSum a, const GraphSum& b) { return a -= b; }
  friend GraphSum operator*(const Rat& c, GraphSum a) { return a *= c; }
  GraphSum operator-() const;
  friend bool operator==(const GraphSum&, const GraphSum&) = default;

  // One line per term: "<rational> * <canonical key>", in key order.
  std::string str() const;
  static GraphSum parse(const std::string& text);

 private:
  std::map<Graph, Rat> terms_;
};

// Orthonormal-basis pairing: sum over common graphs of the coefficient
// products.
Rat pairing(const GraphSum& a, const GraphSum& b);

} // namespace kstar
