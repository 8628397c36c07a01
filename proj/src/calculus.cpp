#include "kstar/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kstar {
namespace {

// Steps a mixed-radix counter; returns false once it wraps around.
bool advance(std::vector<int>& digits, int base) {
  for (int& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

int sign_of(long long s) { return (s % 2 + 2) % 2 == 0 ? 1 : -1; }

int infer_dim(const std::vector<PolyVec>& xis, const std::vector<Poly>& fs) {
  if (!xis.empty()) return xis.front().dim();
  if (!fs.empty()) return fs.front().dim();
  return 0;
}

// Koszul sign of a permutation (perm[k] = original position of the k-th
// argument after permuting) in the shifted degrees deg+1: each pair brought
// out of order contributes (-1)^{(d_i+1)(d_j+1)}.  The shift makes two
// bivector slots commute and two vector-field slots anticommute, matching
// the parity with which relabelling internal vertices permutes graph edges
// (a transposition of two vertices moves out-degree-sized edge blocks past
// each other).
int koszul_shifted(const std::vector<int>& perm, const std::vector<int>& degs) {
  long long s = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b])
        s += static_cast<long long>(degs[perm[a]] + 1) * (degs[perm[b]] + 1);
  return sign_of(s);
}

// The number of internal vertices shared by the graphs of a stored sum.
int element_q(const CEElement& F) {
  int q = -1;
  for (const auto& [g, c] : F.rep.terms()) {
    (void)c;
    if (q == -1)
      q = g.q();
    else if (g.q() != q)
      throw std::invalid_argument("graph sum mixes vertex counts");
  }
  return q == -1 ? 0 : q;
}

// The shared operator-side degree p of the stored graphs.
int element_p(const CEElement& F) {
  int p = 0;
  bool seen = false;
  for (const auto& [g, c] : F.rep.terms()) {
    (void)c;
    if (!seen) {
      p = g.p();
      seen = true;
    } else if (g.p() != p) {
      throw std::invalid_argument("graph sum mixes operator degrees");
    }
  }
  return p;
}

} // namespace

DiffOp U_as_operator(const Graph& g, const std::vector<PolyVec>& xis,
                     int dim) {
  if (g.on_sphere())
    throw std::invalid_argument("state sum is defined for disk graphs");
  if (static_cast<int>(xis.size()) != g.n()) throw decoration_mismatch{};
  for (const PolyVec& xi : xis)
    if (xi.dim() != dim) throw dim_mismatch{};

  const int n = g.n(), m = g.m(), e = g.e();
  DiffOp op(dim, m);
  for (int r = 1; r <= n; ++r)
    if (xis[r - 1].deg() != g.out_degree(r) - 1) return op;
  if (e > 0 && dim == 0) return op; // no colorings exist

  // Edge indices by the vertex they enter / leave; out-lists keep edge
  // order, which is what the component tuples below are read in.
  std::vector<std::vector<int>> out_idx(n), in_idx(n), bnd_idx(m);
  for (int k = 0; k < e; ++k) {
    const Edge& ed = g.edges()[k];
    out_idx[ed.src - 1].push_back(k);
    if (ed.dst.boundary)
      bnd_idx[ed.dst.id - 1].push_back(k);
    else
      in_idx[ed.dst.id - 1].push_back(k);
  }

  Rat fact(1);
  for (int r = 0; r < n; ++r)
    fact *= factorial(static_cast<int>(out_idx[r].size()));

  std::vector<int> color(e, 0); // direction of each edge, 0-based
  do {
    Poly coeff = Poly::constant(dim, fact);
    bool dead = false;
    for (int r = 0; r < n; ++r) {
      PolyVec::Tuple t;
      t.reserve(out_idx[r].size());
      for (int k : out_idx[r]) t.push_back(color[k]);
      Poly comp = xis[r].component(t);
      if (!in_idx[r].empty()) {
        std::vector<int> dirs;
        dirs.reserve(in_idx[r].size());
        for (int k : in_idx[r]) dirs.push_back(color[k]);
        comp = comp.derivative(dirs);
      }
      if (comp.is_zero()) {
        dead = true;
        break;
      }
      coeff *= comp;
    }
    if (!dead) {
      DiffOp::Key key(m);
      for (int j = 0; j < m; ++j) {
        for (int k : bnd_idx[j]) key[j].push_back(color[k]);
        std::sort(key[j].begin(), key[j].end());
      }
      op.add_term(key, coeff);
    }
  } while (advance(color, dim));
  return op;
}

Poly evaluate_U(const Graph& g, const std::vector<PolyVec>& xis,
                const std::vector<Poly>& fs) {
  if (static_cast<int>(fs.size()) != g.m()) throw decoration_mismatch{};
  const int dim = infer_dim(xis, fs);
  for (const Poly& f : fs)
    if (f.dim() != dim) throw dim_mismatch{};
  return U_as_operator(g, xis, dim).evaluate(fs);
}

Poly evaluate_U(const DecoratedGraph& dg) {
  return evaluate_U(dg.g, dg.xis, dg.fs);
}

bool morphism_check_circ(const Graph& g1, const Graph& g2, int i,
                         const std::vector<PolyVec>& xis,
                         const std::vector<Poly>& fs) {
  if (static_cast<int>(xis.size()) != g1.n() + g2.n())
    throw decoration_mismatch{};
  if (static_cast<int>(fs.size()) != g1.m() + g2.m() - 1)
    throw decoration_mismatch{};
  const int dim = infer_dim(xis, fs);

  std::vector<PolyVec> x1(xis.begin(), xis.begin() + g1.n());
  std::vector<PolyVec> x2(xis.begin() + g1.n(), xis.end());
  DiffOp lhs = gerst_circ_i(U_as_operator(g1, x1, dim),
                            U_as_operator(g2, x2, dim), i - 1);

  DiffOp rhs(dim, g1.m() + g2.m() - 1);
  for (const LabeledTerm& t : circ_terms(g1, g2, i))
    rhs += U_as_operator(t.g, xis, dim) * t.c;

  return lhs == rhs && lhs.evaluate(fs) == rhs.evaluate(fs);
}

bool morphism_check_d2(const Graph& g, int i, const std::vector<PolyVec>& xis,
                       const std::vector<Poly>& fs) {
  if (static_cast<int>(xis.size()) != g.n() + 1) throw decoration_mismatch{};
  if (static_cast<int>(fs.size()) != g.m()) throw decoration_mismatch{};
  if (i < 1 || i > g.n())
    throw std::out_of_range("merge slot out of range");
  const int dim = infer_dim(xis, fs);

  DiffOp lhs(dim, g.m());
  for (const LabeledTerm& t : split_terms(g, i))
    lhs += U_as_operator(t.g, xis, dim) * t.c;

  std::vector<PolyVec> merged;
  merged.reserve(g.n());
  for (int r = 0; r + 1 < i; ++r) merged.push_back(xis[r]);
  merged.push_back(nr_bullet(xis[i - 1], xis[i]));
  for (int r = i + 1; r <= g.n(); ++r) merged.push_back(xis[r]);
  DiffOp rhs = U_as_operator(g, merged, dim);

  return lhs == rhs && lhs.evaluate(fs) == rhs.evaluate(fs);
}

bool morphism_check_d1(const Graph& g, const std::vector<PolyVec>& xis,
                       const std::vector<Poly>& fs) {
  if (static_cast<int>(xis.size()) != g.n()) throw decoration_mismatch{};
  if (static_cast<int>(fs.size()) != g.m() + 1) throw decoration_mismatch{};
  const int dim = infer_dim(xis, fs);
  const int mm = g.m();

  DiffOp lhs = hochschild_d(U_as_operator(g, xis, dim));

  // Mirror [mu, U]_G term by term, replacing each operator substitution by
  // the matching boundary-insertion sum: mu with U in either slot minus
  // (-1)^{hdeg U} the alternating sum of U with mu in each slot.
  const Graph& b = b02();
  DiffOp rhs(dim, mm + 1);
  auto add = [&](const Graph& a1, const Graph& a2, int slot, int sign) {
    for (const LabeledTerm& t : circ_terms(a1, a2, slot))
      rhs += U_as_operator(t.g, xis, dim) * (t.c * Rat(sign));
  };
  for (int i = 0; i <= 1; ++i) add(b, g, i + 1, sign_of(i * (mm - 1)));
  for (int i = 0; i < mm; ++i) add(g, b, i + 1, -sign_of(mm - 1 + i));

  return lhs == rhs && lhs.evaluate(fs) == rhs.evaluate(fs);
}

DiffOp ce_evaluate(const CEElement& F, const std::vector<PolyVec>& gammas) {
  const int q = static_cast<int>(gammas.size());
  for (const PolyVec& gm : gammas)
    if (gm.dim() != F.dim) throw dim_mismatch{};
  std::vector<int> degs(q);
  for (int r = 0; r < q; ++r) degs[r] = gammas[r].deg();

  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  DiffOp acc;
  bool have = false;
  do {
    const Rat sg(koszul_shifted(perm, degs));
    std::vector<PolyVec> args;
    args.reserve(q);
    for (int r = 0; r < q; ++r) args.push_back(gammas[perm[r]]);
    for (const auto& [g, c] : F.rep.terms()) {
      if (g.q() != q) continue; // needs one decoration per internal vertex
      DiffOp t = U_as_operator(g, args, F.dim);
      if (t.is_zero()) continue;
      t *= c * sg;
      if (!have) {
        acc = t;
        have = true;
      } else {
        if (acc.arity() != t.arity())
          throw std::invalid_argument("graph sum mixes arities under U");
        acc += t;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have) return DiffOp(F.dim, 0);
  acc *= Rat(1) / factorial(q);
  return acc;
}

CEMap ce_map(const CEElement& F) {
  return [F](const std::vector<PolyVec>& gs) { return ce_evaluate(F, gs); };
}

DiffOp ce_bracket(const CEElement& F, const CEElement& H,
                  const std::vector<PolyVec>& gammas) {
  const int q1 = element_q(F), q2 = element_q(H);
  const int q = q1 + q2;
  if (static_cast<int>(gammas.size()) != q) throw decoration_mismatch{};
  if (F.dim != H.dim) throw dim_mismatch{};
  std::vector<int> degs(q);
  for (int r = 0; r < q; ++r) degs[r] = gammas[r].deg();

  std::vector<int> perm(q);
  std::iota(perm.begin(), perm.end(), 0);
  DiffOp acc;
  bool have = false;
  do {
    const int sg = koszul_shifted(perm, degs);
    std::vector<PolyVec> a1, a2;
    a1.reserve(q1);
    a2.reserve(q2);
    for (int r = 0; r < q1; ++r) a1.push_back(gammas[perm[r]]);
    for (int r = q1; r < q; ++r) a2.push_back(gammas[perm[r]]);
    DiffOp fa = ce_evaluate(F, a1);
    if (fa.is_zero()) continue;
    DiffOp hb = ce_evaluate(H, a2);
    if (hb.is_zero()) continue;
    DiffOp t = gerst_bracket(fa, hb) * Rat(sg);
    if (t.is_zero()) continue;
    if (!have) {
      acc = t;
      have = true;
    } else {
      if (acc.arity() != t.arity())
        throw std::invalid_argument("bracket terms mix arities");
      acc += t;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!have) return DiffOp(F.dim, 0);
  acc *= Rat(1) / (factorial(q1) * factorial(q2));
  return acc;
}

CEMap ce_d1(const CEMap& F) {
  return [F](const std::vector<PolyVec>& gs) { return hochschild_d(F(gs)); };
}

CEMap ce_d2(const CEMap& F, int dim, int horizontal) {
  return [F, dim, horizontal](const std::vector<PolyVec>& gs) -> DiffOp {
    const int qq = static_cast<int>(gs.size());
    std::vector<int> degs(qq);
    for (int r = 0; r < qq; ++r) degs[r] = gs[r].deg();
    DiffOp acc;
    bool have = false;
    for (int i = 0; i < qq; ++i) {
      for (int j = i + 1; j < qq; ++j) {
        // Bring slots i then j to the front (shifted Koszul), feed their
        // bracket into the first slot.  The extra (-1)^{deg} makes the
        // bracket symmetric in the shifted grading, and (-1)^{horizontal}
        // makes the vertical differential anticommute with ce_d1.
        long long s = 0;
        for (int a = 0; a < i; ++a)
          s += static_cast<long long>(degs[a] + 1) * (degs[i] + 1);
        for (int a = 0; a < j; ++a)
          if (a != i) s += static_cast<long long>(degs[a] + 1) * (degs[j] + 1);
        s += degs[i] + horizontal;
        std::vector<PolyVec> args;
        args.reserve(qq - 1);
        args.push_back(schouten(gs[i], gs[j]));
        for (int a = 0; a < qq; ++a)
          if (a != i && a != j) args.push_back(gs[a]);
        DiffOp t = F(args);
        if (t.is_zero()) continue;
        t *= Rat(sign_of(s));
        if (!have) {
          acc = t;
          have = true;
        } else {
          if (acc.arity() != t.arity())
            throw std::invalid_argument("differential terms mix arities");
          acc += t;
        }
      }
    }
    if (!have) return DiffOp(dim, 0);
    return acc;
  };
}

DiffOp ce_d1(const CEElement& F, const std::vector<PolyVec>& gammas) {
  return hochschild_d(ce_evaluate(F, gammas));
}

DiffOp ce_d2(const CEElement& F, const std::vector<PolyVec>& gammas) {
  return ce_d2(ce_map(F), F.dim, element_p(F))(gammas);
}

} // namespace kstar
