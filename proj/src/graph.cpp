#include "kstar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <utility>

namespace kstar {

int Graph::out_degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (e.src == v) ++d;
  return d;
}

std::vector<int> Graph::out_edges(int v) const {
  std::vector<int> out;
  for (int i = 0; i < e(); ++i)
    if (edges_[i].src == v) out.push_back(i);
  return out;
}

std::string Graph::key() const {
  std::string s = "n=" + std::to_string(n_) + ";";
  s += sphere_ ? "sphere" : "m=" + std::to_string(m_);
  s += ";E=[";
  for (int i = 0; i < e(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(edges_[i].src) + ",";
    if (edges_[i].dst.boundary) s += "B";
    s += std::to_string(edges_[i].dst.id) + ")";
  }
  s += "]";
  return s;
}

Graph validate(int n, int m, const std::vector<std::pair<VRef, VRef>>& raw,
               bool sphere) {
  if (n < 0 || m < 0) throw bad_numbering("negative vertex count");
  if (sphere && m != 0) throw bad_numbering("sphere graph with boundary");
  Graph g;
  g.n_ = n;
  g.m_ = m;
  g.sphere_ = sphere;
  g.edges_.reserve(raw.size());
  int prev_src = 0;
  std::set<std::pair<int, VRef>> seen;
  for (const auto& [s, t] : raw) {
    if (s.boundary) throw boundary_source();
    if (s.id < 1 || s.id > n) throw bad_numbering("edge source out of range");
    if (t.boundary) {
      if (t.id < 1 || t.id > m)
        throw bad_numbering("edge target out of range");
    } else {
      if (t.id < 1 || t.id > n)
        throw bad_numbering("edge target out of range");
      if (t.id == s.id) throw loop_edge();
    }
    if (!seen.insert({s.id, t}).second) throw multiple_edge();
    if (s.id < prev_src)
      throw bad_numbering("edge list not grouped by source");
    prev_src = s.id;
    g.edges_.push_back(Edge{s.id, t});
  }
  return g;
}

namespace {

// Minimal scanner for the key grammar.
struct Cursor {
  const std::string& s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw bad_numbering("parse error at offset " + std::to_string(i) + ": " +
                        why);
  }
  bool eat(char c) {
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(const char* word) {
    for (const char* p = word; *p; ++p) expect(*p);
  }
  int number() {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data() + i) fail("expected a number");
    i = ptr - s.data();
    return value;
  }
};

} // namespace

Graph parse_graph(const std::string& text) {
  Cursor c{text};
  c.expect("n=");
  int n = c.number();
  c.expect(';');
  bool sphere = false;
  int m = 0;
  if (c.eat('s')) {
    c.expect("phere");
    sphere = true;
  } else {
    c.expect("m=");
    m = c.number();
  }
  c.expect(";E=[");
  std::vector<std::pair<VRef, VRef>> raw;
  if (!c.eat(']')) {
    for (;;) {
      c.expect('(');
      int src = c.number();
      c.expect(',');
      VRef dst;
      if (c.eat('B'))
        dst = VRef::bnd(c.number());
      else
        dst = VRef::internal(c.number());
      c.expect(')');
      raw.emplace_back(VRef::internal(src), dst);
      if (c.eat(']')) break;
      c.expect(',');
    }
  }
  if (c.i != text.size()) c.fail("trailing characters");
  return validate(n, m, raw, sphere);
}

namespace {

// Appends, for internal vertex v, every ordered choice of `remaining` further
// distinct targets, then recurses to the next vertex.
void enumerate_rec(int n, int m, const std::vector<int>& profile, int v,
                   std::vector<std::pair<VRef, VRef>>& acc,
                   std::vector<Graph>& out) {
  if (v > n) {
    out.push_back(validate(n, m, acc));
    return;
  }
  std::vector<VRef> targets;
  for (int w = 1; w <= n; ++w)
    if (w != v) targets.push_back(VRef::internal(w));
  for (int j = 1; j <= m; ++j) targets.push_back(VRef::bnd(j));

  int lo = profile.empty() ? 0 : profile[v - 1];
  int hi = profile.empty() ? static_cast<int>(targets.size()) : lo;

  std::vector<VRef> chosen;
  std::vector<char> used(targets.size(), 0);
  auto rec = [&](auto&& self, int want) -> void {
    if (want == 0) {
      for (const VRef& t : chosen) acc.emplace_back(VRef::internal(v), t);
      enumerate_rec(n, m, profile, v + 1, acc, out);
      acc.resize(acc.size() - chosen.size());
      return;
    }
    for (size_t k = 0; k < targets.size(); ++k) {
      if (used[k]) continue;
      used[k] = 1;
      chosen.push_back(targets[k]);
      self(self, want - 1);
      chosen.pop_back();
      used[k] = 0;
    }
  };
  for (int deg = lo; deg <= hi; ++deg) rec(rec, deg);
}

} // namespace

std::vector<Graph> enumerate_graphs(int n, int m,
                                    const std::vector<int>& profile) {
  if (!profile.empty() && static_cast<int>(profile.size()) != n)
    throw bad_numbering("out-degree profile length differs from n");
  for (int d : profile)
    if (d < 1) throw bad_numbering("out-degree profile entry < 1");
  std::vector<Graph> out;
  std::vector<std::pair<VRef, VRef>> acc;
  enumerate_rec(n, m, profile, 1, acc, out);
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return a.key() < b.key(); });
  return out;
}

Graph quotient(const Graph& g, const Selector& sel) {
  for (int v : sel.internal)
    if (v < 1 || v > g.n())
      throw not_contractible("selected internal vertex out of range");
  for (int j : sel.boundary)
    if (j < 1 || j > g.m())
      throw not_contractible("selected boundary vertex out of range");
  if (sel.internal.empty() && sel.boundary.empty())
    throw not_contractible("empty selection");
  const bool to_boundary = !sel.boundary.empty();
  if (to_boundary) {
    int lo = *sel.boundary.begin();
    int hi = *sel.boundary.rbegin();
    if (hi - lo + 1 != static_cast<int>(sel.boundary.size()))
      throw not_contractible("selected boundary vertices not consecutive");
  }

  // Renumber survivors in place; the new vertex takes the slot of the
  // smallest collapsed label on its side.
  std::vector<int> imap(g.n() + 1, 0); // old internal id -> new id, 0 = gone
  std::vector<int> bmap(g.m() + 1, 0); // old boundary id -> new id
  int nn = 0;
  VRef vphi;
  for (int v = 1; v <= g.n(); ++v) {
    if (sel.internal.count(v)) {
      if (!to_boundary && v == *sel.internal.begin()) {
        imap[v] = ++nn;
        vphi = VRef::internal(imap[v]);
      }
    } else {
      imap[v] = ++nn;
    }
  }
  int nm = 0;
  for (int j = 1; j <= g.m(); ++j) {
    if (sel.boundary.count(j)) {
      if (j == *sel.boundary.begin()) {
        bmap[j] = ++nm;
        vphi = VRef::bnd(bmap[j]);
      }
    } else {
      bmap[j] = ++nm;
    }
  }

  std::vector<std::pair<VRef, VRef>> raw;
  for (const Edge& e : g.edges()) {
    bool src_in = sel.internal.count(e.src) != 0;
    bool dst_in = e.dst.boundary ? sel.boundary.count(e.dst.id) != 0
                                 : sel.internal.count(e.dst.id) != 0;
    if (src_in && dst_in) continue; // interior edge of the collapsed part
    VRef s = src_in ? vphi : VRef::internal(imap[e.src]);
    VRef t;
    if (dst_in)
      t = vphi;
    else if (e.dst.boundary)
      t = VRef::bnd(bmap[e.dst.id]);
    else
      t = VRef::internal(imap[e.dst.id]);
    raw.emplace_back(s, t);
  }
  // Restore the source grouping; stable, so each vertex keeps the relative
  // order its surviving edges had before.
  std::stable_sort(raw.begin(), raw.end(),
                   [](const auto& a, const auto& b) {
                     return a.first.id < b.first.id;
                   });
  try {
    return validate(nn, nm, raw, g.on_sphere());
  } catch (const loop_edge&) {
    throw not_admissible_quotient("collapse creates a loop");
  } catch (const multiple_edge&) {
    throw not_admissible_quotient("collapse creates a multiple edge");
  } catch (const boundary_source&) {
    throw not_admissible_quotient("collapse creates a boundary source");
  }
}

Graph induced(const Graph& g, const Selector& sel) {
  auto rank = [](const std::set<int>& s, int v) {
    return static_cast<int>(std::distance(s.begin(), s.find(v))) + 1;
  };
  std::vector<std::pair<VRef, VRef>> raw;
  for (const Edge& e : g.edges()) {
    if (!sel.internal.count(e.src)) continue;
    bool in = e.dst.boundary ? sel.boundary.count(e.dst.id) != 0
                             : sel.internal.count(e.dst.id) != 0;
    if (!in) continue;
    VRef t = e.dst.boundary ? VRef::bnd(rank(sel.boundary, e.dst.id))
                            : VRef::internal(rank(sel.internal, e.dst.id));
    raw.emplace_back(VRef::internal(rank(sel.internal, e.src)), t);
  }
  std::stable_sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    return a.first.id < b.first.id;
  });
  return validate(static_cast<int>(sel.internal.size()),
                  static_cast<int>(sel.boundary.size()), raw);
}

bool is_normal(const Graph& g, const Selector& sel) {
  try {
    quotient(g, sel);
    return true;
  } catch (const graph_error&) {
    return false;
  }
}

std::vector<Selector> normal_subgraphs(const Graph& g, CollapseKind kind) {
  std::vector<Selector> out;
  auto consider = [&](Selector sel) {
    // Proper: never the empty subgraph (by construction) or the whole graph.
    if (static_cast<int>(sel.internal.size()) == g.n() &&
        static_cast<int>(sel.boundary.size()) == g.m())
      return;
    if (is_normal(g, sel)) out.push_back(std::move(sel));
  };
  if (kind == CollapseKind::internal) {
    for (unsigned mask = 1; mask < (1u << g.n()); ++mask) {
      Selector sel;
      for (int v = 1; v <= g.n(); ++v)
        if (mask & (1u << (v - 1))) sel.internal.insert(v);
      consider(std::move(sel));
    }
  } else {
    for (int lo = 1; lo <= g.m(); ++lo)
      for (int hi = lo; hi <= g.m(); ++hi)
        for (unsigned mask = 0; mask < (1u << g.n()); ++mask) {
          Selector sel;
          for (int j = lo; j <= hi; ++j) sel.boundary.insert(j);
          for (int v = 1; v <= g.n(); ++v)
            if (mask & (1u << (v - 1))) sel.internal.insert(v);
          consider(std::move(sel));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_forest(const Graph& g) {
  std::vector<int> parent(g.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (e.dst.boundary) continue;
    int a = find(e.src), b = find(e.dst.id);
    if (a == b) return false; // parallel/opposite edges count as cycles too
    parent[a] = b;
  }
  return true;
}

} // namespace kstar
