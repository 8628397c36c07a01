#include "kstar/graphsum.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kstar {

std::pair<Graph, int> orient(const Graph& raw) {
  // Internal vertices are unordered: canonicalise over all relabelings,
  // keeping the lexicographically smallest edge list.  The sign is the
  // parity of the edge permutation from the stored order to the sorted
  // relabeled order.  If two relabelings reach the smallest list with
  // opposite parities the graph has an odd automorphism and the class is
  // zero, reported as sign 0.
  const int n = raw.n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::vector<std::pair<VRef, VRef>> best;
  int best_parity = 0;
  bool first = true, dead = false;
  do {
    std::vector<std::pair<VRef, VRef>> mapped;
    mapped.reserve(raw.edges().size());
    for (const Edge& e : raw.edges()) {
      VRef t =
          e.dst.boundary ? e.dst : VRef::internal(perm[e.dst.id - 1]);
      mapped.emplace_back(VRef::internal(perm[e.src - 1]), t);
    }
    int inv = 0;
    for (std::size_t a = 0; a < mapped.size(); ++a)
      for (std::size_t b = a + 1; b < mapped.size(); ++b)
        if (mapped[b] < mapped[a]) ++inv;
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = std::move(mapped);
      best_parity = inv % 2;
      first = false;
    } else if (mapped == best && inv % 2 != best_parity) {
      dead = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Graph g = validate(n, raw.m(), best, raw.on_sphere());
  if (dead) return {g, 0};
  return {g, best_parity == 0 ? 1 : -1};
}

bool is_oriented(const Graph& g) {
  auto [canon, sign] = orient(g);
  return sign == 1 && canon == g;
}

void GraphSum::inject(const Graph& raw, const Rat& c) {
  if (c == Rat(0)) return;
  auto [g, sign] = orient(raw);
  if (sign == 0) return; // odd automorphism: the class vanishes
  Rat& slot = terms_[g];
  slot += sign < 0 ? -c : c;
  if (slot == Rat(0)) terms_.erase(g);
}

Rat GraphSum::coeff(const Graph& g) const {
  auto [canon, sign] = orient(g);
  if (sign == 0) return Rat(0);
  auto it = terms_.find(canon);
  if (it == terms_.end()) return Rat(0);
  return sign < 0 ? -it->second : it->second;
}

GraphSum GraphSum::component(int p, int q) const {
  GraphSum out;
  for (const auto& [g, c] : terms_)
    if (g.p() == p && g.q() == q) out.terms_.emplace(g, c);
  return out;
}

GraphSum& GraphSum::operator+=(const GraphSum& o) {
  for (const auto& [g, c] : o.terms_) {
    Rat& slot = terms_[g];
    slot += c;
    if (slot == Rat(0)) terms_.erase(g);
  }
  return *this;
}

GraphSum& GraphSum::operator-=(const GraphSum& o) {
  for (const auto& [g, c] : o.terms_) {
    Rat& slot = terms_[g];
    slot -= c;
    if (slot == Rat(0)) terms_.erase(g);
  }
  return *this;
}

GraphSum& GraphSum::operator*=(const Rat& c) {
  if (c == Rat(0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

GraphSum GraphSum::operator-() const {
  GraphSum out(*this);
  for (auto& [g, v] : out.terms_) v = -v;
  return out;
}

std::string GraphSum::str() const {
  std::string out;
  for (const auto& [g, c] : terms_) {
    out += c.str();
    out += " * ";
    out += g.key();
    out += "\n";
  }
  return out;
}

GraphSum GraphSum::parse(const std::string& text) {
  GraphSum out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto star = line.find('*');
    if (star == std::string::npos)
      throw bad_numbering("graph sum line lacks '*': " + line);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    Rat c = Rat::parse(strip(line.substr(0, star)));
    Graph g = parse_graph(strip(line.substr(star + 1)));
    out.inject(g, c);
  }
  return out;
}

Rat pairing(const GraphSum& a, const GraphSum& b) {
  Rat out(0);
  for (const auto& [g, c] : a.terms()) {
    auto it = b.terms().find(g);
    if (it != b.terms().end()) out += c * it->second;
  }
  return out;
}

} // namespace kstar
