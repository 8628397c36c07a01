// Insertion products, brackets and differentials on graph sums.
//
// circ_i grafts a graph into a boundary vertex, bullet_i into an internal
// vertex; both sum over the ways edges of the host that touched the replaced
// vertex re-attach inside the grafted graph.  Each term's sign is the parity
// of the edge permutation taking (host edges, grafted edges) to the term's
// canonical edge order — edges behave like odd generators — and the
// alternating sums over the insertion position carry the degree prefactors
// fixed at the top of dgla.cpp by the identity suite in the tests
// (d1^2 = d2^2 = 0, anticommutation, Leibniz, graded Jacobi, adjointness).

#pragma once

#include "kstar/graphsum.hpp"

#include <vector>

namespace kstar {

// Inserts phi into the i-th boundary vertex of psi (1-based); edges of psi
// that ended there re-attach to every vertex of phi independently.
GraphSum circ_i(const Graph& psi, const Graph& phi, int i);

// Inserts phi (which must have no boundary vertices) into the i-th internal
// vertex of psi; in- and out-edges of that vertex re-attach to every vertex
// of phi independently.
GraphSum bullet_i(const Graph& psi, const Graph& phi, int i);

// One labelled output term of a single insertion, before reduction to
// orientation classes: the graph exactly as assembled (host labels kept,
// grafted internal vertices appended after the host's) together with the
// parity of the edge reordering the assembly induced.  Keeping the labels
// fixed matters to the operator-level checks in calculus.cpp: the state sum
// attaches one coefficient per internal vertex, so terms of these lists line
// up slot by slot with a tuple of decorations, which the class-level
// GraphSum results (quotiented by relabelling) cannot do.
struct LabeledTerm {
  Graph g;
  Rat c;
};

// Re-attachment terms of circ_i with labels kept: psi's internal vertices
// stay 1..n(psi), phi's become n(psi)+1..; boundary slots j < i keep their
// index, slot i is replaced by phi's boundary run, slots j > i shift up by
// m(phi)-1.  Terms whose re-attachment doubles an edge are dropped (their
// state-sum value vanishes against the antisymmetric vertex coefficient).
std::vector<LabeledTerm> circ_terms(const Graph& psi, const Graph& phi, int i);

// Terms splitting internal vertex i into an edge i -> i+1 (labels above i
// shift up by one), with the same conventions.
std::vector<LabeledTerm> split_terms(const Graph& g, int i);

// Signed sums of circ_i / bullet_i over all positions, extended bilinearly;
// circ alternates over the slot, bullet carries one global degree sign.
// circ has bidegree (p1+p2, q1+q2), bullet (p1+p2, q1+q2-1).
GraphSum circ(const Graph& psi, const Graph& phi);
GraphSum circ(const GraphSum& x, const GraphSum& y);
GraphSum bullet(const Graph& psi, const Graph& phi);
GraphSum bullet(const GraphSum& x, const GraphSum& y);

// Graded commutator of circ on the total degree p+q.
GraphSum bracket(const GraphSum& x, const GraphSum& y);

// The distinguished graphs: the bare two-point boundary graph and the
// one-edge two-vertex graph whose insertion splits a vertex.
const Graph& b02();
const Graph& edge_graph();

// d1 = [b02, .], degree (1,0); d2 = bullet with the one-edge graph, degree
// (0,1); d2_i splits only vertex i (the new vertex becomes i+1, labels above
// shift).  d_total = d1 + d2 is the square-zero total differential.
GraphSum d1(const GraphSum& x);
GraphSum d2(const GraphSum& x);
GraphSum d2_i(const Graph& g, int i);
GraphSum d_total(const GraphSum& x);

// Adjoint of d2 under the orthonormal pairing: sums the admissible
// single-edge contractions of g, each weighted by the coefficient with
// which g reappears when d2 splits the contracted class again.
GraphSum d2_star(const Graph& g);
GraphSum d2_star(const GraphSum& x);

// Adjoint of the bracket: splits g along proper boundary-type normal
// subgraphs (any internal subset plus a consecutive — possibly empty — run
// of boundary vertices; each side keeps at least one internal vertex) and
// reports every ordered pair of factor classes with the coefficient of g
// in their bracket.  One entry per pair, zero coefficients dropped, output
// sorted by (left, right).
struct CobracketTerm {
  Graph left;
  Graph right;
  Rat c;
};
std::vector<CobracketTerm> cobracket(const Graph& g);

// All orientation representatives with the given vertex counts and at most
// max_edges edges, in key order.
std::vector<Graph> oriented_basis(int n, int m, int max_edges);

} // namespace kstar
