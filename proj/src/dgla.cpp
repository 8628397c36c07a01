#include "kstar/dgla.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace kstar {
namespace {

// Alternating-sum and commutator sign rules.  The exponents below are pinned
// by the identity suite (squares of the differentials, Leibniz, Jacobi,
// adjointness): any choice passing all of them is equivalent for our
// purposes, and these are the ones that do.
int parity(long long v) { return static_cast<int>((v % 2 + 2) % 2); }

// Position sign for the boundary insertion sum: (-1)^{(i-1+e(psi))(m(phi)-1)}.
// The (i-1) part is the alternating Gerstenhaber composition of multilinear
// maps; the e(psi) part moves phi's boundary block past psi's (odd) edges.
// Graded as a whole by total degree p+q, which matches m-1+e mod 2.
int circ_position_parity(int i, const Graph& psi, const Graph& phi) {
  return parity(static_cast<long long>(i - 1 + psi.e()) * (phi.m() - 1));
}

// Position sign for the internal insertion sum: no dependence on the slot
// (internal slots are unordered in the class model), but a global
// (-1)^{m(psi)-1+e(psi)} = (-1)^{p+q} making the insertion interact correctly
// with the boundary sum; the mixed-square and Leibniz sweeps pin this down.
int bullet_position_parity(int i, const Graph& psi, const Graph& phi) {
  (void)i;
  (void)phi;
  return parity(static_cast<long long>(psi.m()) - 1 + psi.e());
}

int total_degree(const Graph& g) { return g.p() + g.q(); }

// One candidate edge of a composite graph, remembering its position in the
// reference order (host edges first, then grafted edges): the term's sign is
// the parity of the permutation between the two orders.
struct TaggedEdge {
  VRef src;
  VRef dst;
  int rpos;
};

// Builds the graph of one assembled edge sequence together with the parity
// sign of its reordering; sign 0 when a re-attachment collides into a
// multiple edge and the term is dropped.
std::pair<Graph, int> term_of_seq(int n, int m, bool sphere,
                                  const std::vector<TaggedEdge>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[b].rpos < seq[a].rpos) ++inv;
  std::vector<std::pair<VRef, VRef>> raw;
  raw.reserve(seq.size());
  for (const TaggedEdge& e : seq) raw.emplace_back(e.src, e.dst);
  try {
    return {validate(n, m, raw, sphere), inv % 2 == 0 ? 1 : -1};
  } catch (const multiple_edge&) {
    return {Graph(), 0};
  }
}

// Steps a mixed-radix counter; returns false once it wraps around.
bool advance(std::vector<int>& digits, int base) {
  for (int& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

using SeqSink = std::function<void(const std::vector<TaggedEdge>&)>;

// Enumerates the assembled edge sequences of circ_i, one per way the edges
// of psi that pointed at boundary vertex i re-attach inside phi.
void for_each_circ_seq(const Graph& psi, const Graph& phi, int i,
                       const SeqSink& sink) {
  if (i < 1 || i > psi.m())
    throw std::out_of_range("circ_i: boundary index out of range");
  if (psi.on_sphere() || phi.on_sphere())
    throw std::invalid_argument("circ_i: boundary insertion needs disk graphs");
  const int n1 = psi.n(), e1 = psi.e(), m2 = phi.m(), n2 = phi.n();

  // Result labels of phi's vertices, the landing slots for re-attached edges.
  std::vector<VRef> slots;
  for (int v = 1; v <= n2; ++v) slots.push_back(VRef::internal(n1 + v));
  for (int j = 1; j <= m2; ++j) slots.push_back(VRef::bnd(i - 1 + j));

  std::vector<int> redirected(e1, -1); // edge index -> position in choice[]
  int in_degree = 0;
  for (int k = 0; k < e1; ++k)
    if (psi.edges()[k].dst == VRef::bnd(i)) redirected[k] = in_degree++;

  auto remap_boundary = [&](int j) {
    return j < i ? j : j + m2 - 1; // j == i never survives unredirected
  };

  if (slots.empty() && in_degree > 0) return; // nowhere to re-attach
  std::vector<int> choice(in_degree, 0);
  do {
    std::vector<TaggedEdge> seq;
    seq.reserve(e1 + phi.e());
    for (int k = 0; k < e1; ++k) {
      const Edge& e = psi.edges()[k];
      VRef t;
      if (redirected[k] >= 0)
        t = slots[choice[redirected[k]]];
      else if (e.dst.boundary)
        t = VRef::bnd(remap_boundary(e.dst.id));
      else
        t = e.dst;
      seq.push_back({VRef::internal(e.src), t, k});
    }
    for (int k = 0; k < phi.e(); ++k) {
      const Edge& e = phi.edges()[k];
      VRef t = e.dst.boundary ? VRef::bnd(i - 1 + e.dst.id)
                              : VRef::internal(n1 + e.dst.id);
      seq.push_back({VRef::internal(n1 + e.src), t, e1 + k});
    }
    sink(seq);
  } while (advance(choice, static_cast<int>(slots.size())));
}

// Enumerates the assembled edge sequences of bullet_i, one per way the edges
// touching internal vertex i re-attach to a vertex of phi.
void for_each_bullet_seq(const Graph& psi, const Graph& phi, int i,
                         const SeqSink& sink) {
  if (i < 1 || i > psi.n())
    throw std::out_of_range("bullet_i: internal index out of range");
  if (phi.m() != 0)
    throw std::invalid_argument(
        "bullet_i: grafted graph may not have boundary vertices");
  const int e1 = psi.e(), n2 = phi.n();

  auto map_vertex = [&](int v) { return v < i ? v : v + n2 - 1; };

  // Edges touching the split vertex, in edge order: both ends re-attach.
  std::vector<int> moved(e1, -1);
  int touching = 0;
  for (int k = 0; k < e1; ++k) {
    const Edge& e = psi.edges()[k];
    if (e.src == i || (!e.dst.boundary && e.dst.id == i)) moved[k] = touching++;
  }

  if (n2 == 0 && touching > 0) return; // nowhere to re-attach
  std::vector<int> choice(touching, 0);
  do {
    // Group the result by source label: psi vertices below i, then phi's
    // block (phi's own edges first, re-attached out-edges after, keeping
    // their old order), then psi vertices above i.
    std::vector<TaggedEdge> seq;
    seq.reserve(e1 + phi.e());
    auto psi_edge = [&](int k) {
      const Edge& e = psi.edges()[k];
      int src = e.src == i ? i + choice[moved[k]] : map_vertex(e.src);
      VRef t;
      if (e.dst.boundary)
        t = e.dst;
      else if (e.dst.id == i)
        t = VRef::internal(i + choice[moved[k]]);
      else
        t = VRef::internal(map_vertex(e.dst.id));
      return TaggedEdge{VRef::internal(src), t, k};
    };
    for (int k = 0; k < e1; ++k)
      if (psi.edges()[k].src < i) seq.push_back(psi_edge(k));
    for (int w = 1; w <= n2; ++w) {
      for (int k = 0; k < phi.e(); ++k) {
        const Edge& e = phi.edges()[k];
        if (e.src != w) continue;
        seq.push_back({VRef::internal(i + w - 1),
                       VRef::internal(i + e.dst.id - 1), e1 + k});
      }
      for (int k = 0; k < e1; ++k) {
        const Edge& e = psi.edges()[k];
        if (e.src == i && choice[moved[k]] == w - 1) seq.push_back(psi_edge(k));
      }
    }
    for (int k = 0; k < e1; ++k)
      if (psi.edges()[k].src > i) seq.push_back(psi_edge(k));
    sink(seq);
  } while (advance(choice, n2));
}

} // namespace

GraphSum circ_i(const Graph& psi, const Graph& phi, int i) {
  const int n = psi.n() + phi.n(), m = psi.m() + phi.m() - 1;
  GraphSum out;
  for_each_circ_seq(psi, phi, i, [&](const std::vector<TaggedEdge>& seq) {
    auto [g, s] = term_of_seq(n, m, false, seq);
    if (s != 0) out.inject(g, Rat(s));
  });
  return out;
}

GraphSum bullet_i(const Graph& psi, const Graph& phi, int i) {
  const int n = psi.n() + phi.n() - 1, m = psi.m();
  GraphSum out;
  for_each_bullet_seq(psi, phi, i, [&](const std::vector<TaggedEdge>& seq) {
    auto [g, s] = term_of_seq(n, m, psi.on_sphere(), seq);
    if (s != 0) out.inject(g, Rat(s));
  });
  return out;
}

std::vector<LabeledTerm> circ_terms(const Graph& psi, const Graph& phi,
                                    int i) {
  const int n = psi.n() + phi.n(), m = psi.m() + phi.m() - 1;
  std::vector<LabeledTerm> out;
  for_each_circ_seq(psi, phi, i, [&](const std::vector<TaggedEdge>& seq) {
    auto [g, s] = term_of_seq(n, m, false, seq);
    if (s != 0) out.push_back({g, Rat(s)});
  });
  return out;
}

std::vector<LabeledTerm> split_terms(const Graph& g, int i) {
  const Graph& ed = edge_graph();
  std::vector<LabeledTerm> out;
  for_each_bullet_seq(g, ed, i, [&](const std::vector<TaggedEdge>& seq) {
    auto [t, s] = term_of_seq(g.n() + 1, g.m(), g.on_sphere(), seq);
    if (s != 0) out.push_back({t, Rat(s)});
  });
  return out;
}

GraphSum circ(const Graph& psi, const Graph& phi) {
  GraphSum out;
  for (int i = 1; i <= psi.m(); ++i) {
    GraphSum t = circ_i(psi, phi, i);
    if (circ_position_parity(i, psi, phi)) t *= Rat(-1);
    out += t;
  }
  return out;
}

GraphSum bullet(const Graph& psi, const Graph& phi) {
  GraphSum out;
  for (int i = 1; i <= psi.n(); ++i) {
    GraphSum t = bullet_i(psi, phi, i);
    if (bullet_position_parity(i, psi, phi)) t *= Rat(-1);
    out += t;
  }
  return out;
}

GraphSum circ(const GraphSum& x, const GraphSum& y) {
  GraphSum out;
  for (const auto& [g1, c1] : x.terms())
    for (const auto& [g2, c2] : y.terms()) {
      GraphSum t = circ(g1, g2);
      t *= c1 * c2;
      out += t;
    }
  return out;
}

GraphSum bullet(const GraphSum& x, const GraphSum& y) {
  GraphSum out;
  for (const auto& [g1, c1] : x.terms())
    for (const auto& [g2, c2] : y.terms()) {
      GraphSum t = bullet(g1, g2);
      t *= c1 * c2;
      out += t;
    }
  return out;
}

GraphSum bracket(const GraphSum& x, const GraphSum& y) {
  GraphSum out;
  for (const auto& [g1, c1] : x.terms())
    for (const auto& [g2, c2] : y.terms()) {
      GraphSum a = circ(g1, g2);
      a *= c1 * c2;
      out += a;
      GraphSum b = circ(g2, g1);
      b *= c1 * c2;
      if (parity(static_cast<long long>(total_degree(g1)) *
                 total_degree(g2)) == 0)
        out -= b;
      else
        out += b;
    }
  return out;
}

const Graph& b02() {
  static const Graph g = parse_graph("n=0;m=2;E=[]");
  return g;
}

const Graph& edge_graph() {
  static const Graph g = parse_graph("n=2;m=0;E=[(1,2)]");
  return g;
}

GraphSum d1(const GraphSum& x) { return bracket(GraphSum(b02()), x); }

GraphSum d2(const GraphSum& x) { return bullet(x, GraphSum(edge_graph())); }

GraphSum d2_i(const Graph& g, int i) { return bullet_i(g, edge_graph(), i); }

GraphSum d_total(const GraphSum& x) { return d1(x) + d2(x); }

GraphSum d2_star(const Graph& g) {
  // Direct adjoint: the only classes one splitting away from g are its
  // single-edge contractions, so collect those and give each the
  // coefficient with which g appears in its image under d2.
  GraphSum out;
  std::set<Graph> seen;
  const auto& edges = g.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].dst.boundary) continue;
    const int a = edges[k].src, b = edges[k].dst.id;
    std::vector<std::pair<VRef, VRef>> raw;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j == k) continue;
      int s = edges[j].src == b ? a : edges[j].src;
      if (s > b) --s;
      VRef t = edges[j].dst;
      if (!t.boundary) {
        int v = t.id == b ? a : t.id;
        if (v > b) --v;
        t = VRef::internal(v);
      }
      raw.emplace_back(VRef::internal(s), t);
    }
    std::stable_sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
      return x.first.id < y.first.id;
    });
    Graph contracted;
    try {
      contracted = validate(g.n() - 1, g.m(), raw, g.on_sphere());
    } catch (const graph_error&) {
      continue; // contraction not admissible (loop or doubled edge)
    }
    auto [rep, sign] = orient(contracted);
    if (sign == 0) continue;
    if (!seen.insert(rep).second) continue;
    Rat c = d2(GraphSum(rep)).coeff(g);
    if (!(c == Rat(0))) out += GraphSum(rep, c);
  }
  return out;
}

GraphSum d2_star(const GraphSum& x) {
  GraphSum out;
  for (const auto& [g, c] : x.terms()) {
    GraphSum t = d2_star(g);
    t *= c;
    out += t;
  }
  return out;
}

namespace {

// Collapses the piece (internal subset S plus the boundary run lo..hi,
// empty when hi == lo-1) onto one boundary vertex at position lo.  Returns
// false when the piece has an edge leaving it or the result is not
// admissible.
bool collapse_piece(const Graph& g, const std::set<int>& S, int lo, int hi,
                    Graph& out) {
  const int n = g.n(), m = g.m();
  const int run = hi - lo + 1; // 0 for an insertion gap
  std::vector<int> newlab(n + 1, 0);
  int next = 1;
  for (int v = 1; v <= n; ++v)
    if (!S.count(v)) newlab[v] = next++;
  std::vector<std::pair<VRef, VRef>> raw;
  for (const Edge& e : g.edges()) {
    bool s_in = S.count(e.src) != 0;
    bool t_in = e.dst.boundary ? (e.dst.id >= lo && e.dst.id <= hi)
                               : S.count(e.dst.id) != 0;
    if (s_in && t_in) continue;
    if (s_in) return false; // the piece may not source edges elsewhere
    VRef t;
    if (t_in)
      t = VRef::bnd(lo);
    else if (e.dst.boundary)
      t = VRef::bnd(e.dst.id < lo ? e.dst.id : e.dst.id - run + 1);
    else
      t = VRef::internal(newlab[e.dst.id]);
    raw.emplace_back(VRef::internal(newlab[e.src]), t);
  }
  std::stable_sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
    return x.first.id < y.first.id;
  });
  try {
    out = validate(n - static_cast<int>(S.size()), m - run + 1, raw,
                   g.on_sphere());
  } catch (const graph_error&) {
    return false;
  }
  return true;
}

} // namespace

std::vector<CobracketTerm> cobracket(const Graph& g) {
  // Direct adjoint of the bracket: enumerate the splittings of g into a
  // normal piece (any internal subset together with a consecutive run of
  // boundary vertices, possibly empty) and the collapsed remainder, keeping
  // an internal vertex on each side; every such ordered pair of classes is
  // a candidate tensor factor, with the coefficient of g in their bracket.
  const int n = g.n(), m = g.m();
  std::set<std::pair<Graph, Graph>> cands;
  for (unsigned mask = 1; n > 0 && mask + 1 < (1u << n); ++mask) {
    std::set<int> S;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) S.insert(v);
    for (int lo = 1; lo <= m + 1; ++lo)
      for (int hi = lo - 1; hi <= m; ++hi) {
        Graph outer;
        if (!collapse_piece(g, S, lo, hi, outer)) continue;
        Selector sel;
        sel.internal = S;
        for (int j = lo; j <= hi; ++j) sel.boundary.insert(j);
        Graph inner;
        try {
          inner = induced(g, sel);
        } catch (const graph_error&) {
          continue;
        }
        auto [in_rep, in_sign] = orient(inner);
        auto [out_rep, out_sign] = orient(outer);
        if (in_sign == 0 || out_sign == 0) continue;
        cands.insert({out_rep, in_rep});
        cands.insert({in_rep, out_rep});
      }
  }
  std::vector<CobracketTerm> out;
  for (const auto& [a, b] : cands) {
    Rat c = bracket(GraphSum(a), GraphSum(b)).coeff(g);
    if (!(c == Rat(0))) out.push_back({a, b, c});
  }
  return out;
}

std::vector<Graph> oriented_basis(int n, int m, int max_edges) {
  std::vector<Graph> out;
  for (const Graph& g : enumerate_graphs(n, m))
    if (g.e() <= max_edges && is_oriented(g)) out.push_back(g);
  return out;
}

} // namespace kstar
