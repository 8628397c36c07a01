// Graphs as polydifferential operators.
//
// A graph with n internal and m boundary vertices, decorated with one
// polyvector field per internal vertex, evaluates to an m-ary operator by a
// state sum: color every edge with a coordinate direction 1..d; an internal
// vertex contributes the component of its decoration selected by the colors
// of its out-edges (in edge order, times |out|!), differentiated along the
// colors of its in-edges; edges into boundary vertex j become derivatives on
// the j-th argument; sum over all colorings.  The value is zero unless every
// internal vertex has out-degree deg(decoration) + 1.
//
// The morphism_check_* functions compare this evaluation with the graph
// surgeries of dgla.hpp at the level of labelled terms, and the ce_*
// operations assemble the antisymmetrized (wedge-slot) versions used by the
// deformation-quantization layer.

#pragma once

#include "kstar/dgla.hpp"
#include "kstar/diffop.hpp"
#include "kstar/graphsum.hpp"
#include "kstar/polyvector.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace kstar {

// A graph together with the data it is evaluated on.
struct DecoratedGraph {
  Graph g;
  std::vector<PolyVec> xis; // one per internal vertex, in label order
  std::vector<Poly> fs;     // one per boundary vertex, in arc order
};

// Thrown when the number of decorations or arguments does not match the
// graph's vertex counts, or when input dimensions disagree.
struct decoration_mismatch : std::invalid_argument {
  decoration_mismatch() : std::invalid_argument("decoration count mismatch") {}
};

// The state-sum operator of g decorated by xis, in ambient dimension dim.
// Returns the zero operator (arity m) when some out-degree does not match
// its decoration's degree; throws dim_mismatch when a decoration lives in a
// different dimension and decoration_mismatch on a count mismatch.
DiffOp U_as_operator(const Graph& g, const std::vector<PolyVec>& xis, int dim);

// The operator applied to one polynomial per boundary vertex.  The ambient
// dimension is inferred from the inputs (an undecorated, argument-free graph
// evaluates to the constant 1 in dimension 0).
Poly evaluate_U(const Graph& g, const std::vector<PolyVec>& xis,
                const std::vector<Poly>& fs);
Poly evaluate_U(const DecoratedGraph& dg);

// Compatibility checks between evaluation and surgery, at the level of
// labelled terms (fixed internal labels, no orientation-class reduction).
// Each compares operators exactly and additionally their values on fs.

// Insertion: U(g1) composed into slot i of its output arguments with U(g2)
// against the sum of evaluations of circ_terms(g1, g2, i).  xis decorates
// g1's internal vertices first, then g2's.
bool morphism_check_circ(const Graph& g1, const Graph& g2, int i,
                         const std::vector<PolyVec>& xis,
                         const std::vector<Poly>& fs);

// Vertex splitting against the bullet product: the signed sum of
// evaluations of split_terms(g, i) on q+1 decorations against U(g) with
// decorations i, i+1 merged by nr_bullet.
bool morphism_check_d2(const Graph& g, int i, const std::vector<PolyVec>& xis,
                       const std::vector<Poly>& fs);

// The Hochschild differential of U(g) against the signed sum of boundary
// insertions of the bare two-point product graph into g and of g into it.
bool morphism_check_d1(const Graph& g, const std::vector<PolyVec>& xis,
                       const std::vector<Poly>& fs);

// A multilinear map from polyvector tuples to operators: the common shape
// of evaluated graph sums and of their images under the differentials
// below, kept as a closure so the differentials compose.
using CEMap = std::function<DiffOp(const std::vector<PolyVec>&)>;

// A graph sum regarded as such a map on wedge-power slots, together with
// the ambient dimension.  The stored graphs are expected to share the same
// number of internal vertices and the same degree p (homogeneous element);
// graphs whose vertex count differs from the number of supplied arguments
// contribute zero.
struct CEElement {
  GraphSum rep;
  int dim = 0;
};

// Antisymmetrized evaluation: (1/q!) sum over permutations of the inputs,
// signed by the Koszul rule in the degrees deg+1, of the evaluations of the
// stored graphs.  With this shift two equal bivector arguments survive
// (their swap is even) while equal vector fields cancel.
DiffOp ce_evaluate(const CEElement& F, const std::vector<PolyVec>& gammas);
CEMap ce_map(const CEElement& F);

// The induced bracket: (1/(q1!q2!)) Σ_σ ±(σ) [F(first q1), H(last q2)] with
// the Gerstenhaber bracket of operators on the right.
DiffOp ce_bracket(const CEElement& F, const CEElement& H,
                  const std::vector<PolyVec>& gammas);

// The two differentials, as maps so they can be iterated.  horizontal is
// the operator-side degree p of the argument (it flips the sign of the
// vertical differential so that the two anticommute; ce_d1 raises it by
// one).  The element-level overloads read p off the stored graphs.
CEMap ce_d1(const CEMap& F);
CEMap ce_d2(const CEMap& F, int dim, int horizontal);
DiffOp ce_d1(const CEElement& F, const std::vector<PolyVec>& gammas);
DiffOp ce_d2(const CEElement& F, const std::vector<PolyVec>& gammas);

} // namespace kstar
