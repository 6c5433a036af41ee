#include "tracepar/core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "tracepar/errors.hpp"

namespace tracepar {

int popcount(Mask m) { return std::popcount(m); }

std::vector<int> members(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

namespace {

void check_letter_name(const std::string& s) {
  if (s.empty()) throw GraphError("empty letter name");
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') throw GraphError("letter name with whitespace: '" + s + "'");
}

}  // namespace

DependenceGraph DependenceGraph::build(std::vector<std::string> letters,
                                       const std::vector<std::pair<std::string, std::string>>& relation,
                                       RelationKind kind) {
  if (letters.empty()) throw GraphError("empty alphabet");
  if (letters.size() > static_cast<std::size_t>(kMaxLetters))
    throw ResourceError("at most " + std::to_string(kMaxLetters) + " letters are supported");
  std::map<std::string, int> ids;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    check_letter_name(letters[i]);
    if (!ids.emplace(letters[i], static_cast<int>(i)).second) throw GraphError("duplicate letter '" + letters[i] + "'");
  }
  std::vector<Mask> rel(letters.size(), 0);
  for (const auto& [x, y] : relation) {
    auto ix = ids.find(x);
    auto iy = ids.find(y);
    if (ix == ids.end()) throw GraphError("unknown letter '" + x + "'");
    if (iy == ids.end()) throw GraphError("unknown letter '" + y + "'");
    if (ix->second == iy->second) throw GraphError("self-pair ('" + x + "', '" + y + "') supplied explicitly");
    rel[static_cast<std::size_t>(ix->second)] |= Mask{1} << iy->second;
    rel[static_cast<std::size_t>(iy->second)] |= Mask{1} << ix->second;
  }
  DependenceGraph g;
  g.letters_ = std::move(letters);
  const Mask full = g.all();
  g.dep_.resize(g.letters_.size());
  for (std::size_t a = 0; a < g.letters_.size(); ++a) {
    Mask self = Mask{1} << a;
    g.dep_[a] = kind == RelationKind::dependence ? (rel[a] | self) : ((full & ~rel[a]) | self);
  }
  return g;
}

DependenceGraph DependenceGraph::from_masks(std::vector<std::string> letters, std::vector<Mask> dep) {
  if (letters.empty()) throw GraphError("empty alphabet");
  if (letters.size() != dep.size()) throw GraphError("letter and relation sizes differ");
  DependenceGraph g;
  g.letters_ = std::move(letters);
  g.dep_ = std::move(dep);
  const Mask full = g.all();
  for (std::size_t a = 0; a < g.dep_.size(); ++a) g.dep_[a] = (g.dep_[a] & full) | (Mask{1} << a);
  for (std::size_t a = 0; a < g.dep_.size(); ++a)
    for (int b : members(g.dep_[a])) g.dep_[static_cast<std::size_t>(b)] |= Mask{1} << a;
  return g;
}

Mask DependenceGraph::all() const {
  return letters_.size() >= 64 ? ~Mask{0} : (Mask{1} << letters_.size()) - 1;
}

std::optional<int> DependenceGraph::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::pair<int, int>> DependenceGraph::dependence_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (depends(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> DependenceGraph::independence_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (!depends(a, b)) out.emplace_back(a, b);
  return out;
}

bool clique_less(Mask a, Mask b) {
  int pa = popcount(a);
  int pb = popcount(b);
  if (pa != pb) return pa < pb;
  return members(a) < members(b);
}

std::vector<Mask> enumerate_cliques(const DependenceGraph& g, std::size_t cap) {
  std::vector<Mask> out;
  // extend(current, candidates): candidates are independent of every member
  // and larger than the largest member
  auto extend = [&](auto&& self, Mask current, Mask candidates) -> void {
    while (candidates) {
      int b = std::countr_zero(candidates);
      candidates &= candidates - 1;
      Mask next = current | (Mask{1} << b);
      if (out.size() >= cap) throw ResourceError("clique count exceeds the cap of " + std::to_string(cap));
      out.push_back(next);
      self(self, next, candidates & g.indep(b));
    }
  };
  extend(extend, 0, g.all());
  std::sort(out.begin(), out.end(), clique_less);
  return out;
}

std::string clique_name(const DependenceGraph& g, Mask c) {
  std::string s;
  for (int a : members(c)) {
    if (!s.empty()) s += ".";
    s += g.name(a);
  }
  return s;
}

bool is_cf_admissible(Mask u, Mask v, const DependenceGraph& g) {
  for (int b : members(v))
    if ((g.dep(b) & u) == 0) return false;
  return true;
}

int Trace::length() const {
  int n = 0;
  for (Mask f : factors) n += popcount(f);
  return n;
}

Trace project_word(const DependenceGraph& g, const std::vector<int>& word) {
  std::vector<int> top(static_cast<std::size_t>(g.size()), 0);
  Trace t;
  for (int a : word) {
    if (a < 0 || a >= g.size()) throw GraphError("unknown letter id " + std::to_string(a));
    int level = 0;
    for (int b : members(g.dep(a))) level = std::max(level, top[static_cast<std::size_t>(b)]);
    ++level;
    top[static_cast<std::size_t>(a)] = level;
    if (static_cast<int>(t.factors.size()) < level) t.factors.resize(static_cast<std::size_t>(level), 0);
    t.factors[static_cast<std::size_t>(level - 1)] |= Mask{1} << a;
  }
  return t;
}

Trace project_word(const DependenceGraph& g, const std::vector<std::string>& word) {
  std::vector<int> ids;
  ids.reserve(word.size());
  for (const auto& s : word) {
    auto id = g.index_of(s);
    if (!id) throw GraphError("unknown letter '" + s + "'");
    ids.push_back(*id);
  }
  return project_word(g, ids);
}

void heap_push_inplace(HeapState& s, int a, const DependenceGraph& g) {
  if (a < 0 || a >= g.size()) throw GraphError("unknown letter id " + std::to_string(a));
  long level = 0;
  for (Mask m = g.dep(a); m; m &= m - 1) level = std::max(level, s.tops[static_cast<std::size_t>(std::countr_zero(m))]);
  s.tops[static_cast<std::size_t>(a)] = level + 1;
  s.max = std::max(s.max, level + 1);
}

HeapState heap_push(const HeapState& s, int a, const DependenceGraph& g) {
  HeapState r = s;
  heap_push_inplace(r, a, g);
  return r;
}

std::vector<Mask> connected_components(const DependenceGraph& g) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int a = 0; a < g.size(); ++a) {
    if ((seen >> a) & 1U) continue;
    Mask comp = Mask{1} << a;
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (int b : members(frontier)) next |= g.dep(b);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const DependenceGraph& g) { return connected_components(g).size() == 1; }

DependenceGraph induced(const DependenceGraph& g, Mask letters) {
  std::vector<int> ids = members(letters & g.all());
  if (ids.empty()) throw GraphError("induced subgraph on no letters");
  std::vector<std::string> names;
  std::vector<Mask> dep;
  for (int a : ids) {
    names.push_back(g.name(a));
    Mask m = 0;
    for (std::size_t j = 0; j < ids.size(); ++j)
      if (g.depends(a, ids[j])) m |= Mask{1} << j;
    dep.push_back(m);
  }
  return DependenceGraph::from_masks(std::move(names), std::move(dep));
}

DependenceGraph disjoint_union(const DependenceGraph& a, const DependenceGraph& b) {
  if (a.size() + b.size() > kMaxLetters) throw ResourceError("disjoint union has too many letters");
  std::vector<std::string> names = a.letters();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& n : b.letters()) {
    std::string m = n;
    for (int k = 2; used.count(m); ++k) m = n + "_" + std::to_string(k);
    used.insert(m);
    names.push_back(m);
  }
  std::vector<Mask> dep;
  for (int x = 0; x < a.size(); ++x) dep.push_back(a.dep(x));
  for (int x = 0; x < b.size(); ++x) dep.push_back(b.dep(x) << a.size());
  return DependenceGraph::from_masks(std::move(names), std::move(dep));
}

bool is_free_commutative(const DependenceGraph& g) {
  for (int a = 0; a < g.size(); ++a)
    if (g.dep(a) != (Mask{1} << a)) return false;
  return true;
}

bool is_free(const DependenceGraph& g) {
  for (int a = 0; a < g.size(); ++a)
    if (g.dep(a) != g.all()) return false;
  return true;
}

int max_clique_size(const DependenceGraph& g) {
  int best = 0;
  auto extend = [&](auto&& self, int size, Mask candidates) -> void {
    best = std::max(best, size);
    if (size + popcount(candidates) <= best) return;
    while (candidates) {
      int b = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, size + 1, candidates & g.indep(b));
    }
  };
  extend(extend, 0, g.all());
  return best;
}

std::optional<std::vector<int>> find_isomorphism(const DependenceGraph& a, const DependenceGraph& b) {
  const int n = a.size();
  if (n != b.size()) return std::nullopt;
  auto degree_profile = [](const DependenceGraph& g) {
    std::vector<int> d;
    for (int x = 0; x < g.size(); ++x) d.push_back(popcount(g.dep(x)));
    return d;
  };
  std::vector<int> da = degree_profile(a);
  std::vector<int> db = degree_profile(b);
  {
    auto sa = da;
    auto sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  Mask used = 0;
  auto assign = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if ((used >> y) & 1U) continue;
      if (da[static_cast<std::size_t>(x)] != db[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z)
        ok = a.depends(x, z) == b.depends(y, perm[static_cast<std::size_t>(z)]);
      if (!ok) continue;
      perm[static_cast<std::size_t>(x)] = y;
      used |= Mask{1} << y;
      if (self(self, x + 1)) return true;
      used &= ~(Mask{1} << y);
    }
    return false;
  };
  if (assign(assign, 0)) return perm;
  return std::nullopt;
}

bool isomorphic(const DependenceGraph& a, const DependenceGraph& b) { return find_isomorphism(a, b).has_value(); }

std::vector<DependenceGraph> all_graphs(int k) {
  if (k < 1 || k > 6) throw ResourceError("all_graphs supports 1 to 6 letters");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) edges.emplace_back(a, b);
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::vector<std::vector<int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  auto edge_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == std::pair{a, b}) return i;
    return edges.size();
  };
  std::set<std::uint32_t> seen;
  std::vector<DependenceGraph> out;
  std::vector<std::string> names;
  for (int a = 0; a < k; ++a) names.emplace_back(1, static_cast<char>('a' + a));
  const std::uint32_t total = std::uint32_t{1} << edges.size();
  for (std::uint32_t code = 0; code < total; ++code) {
    std::uint32_t canon = code;
    for (const auto& p : perms) {
      std::uint32_t c = 0;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if ((code >> e) & 1U)
          c |= std::uint32_t{1} << edge_index(p[static_cast<std::size_t>(edges[e].first)],
                                              p[static_cast<std::size_t>(edges[e].second)]);
      canon = std::min(canon, c);
    }
    if (!seen.insert(canon).second) continue;
    std::vector<Mask> dep(static_cast<std::size_t>(k), 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((canon >> e) & 1U) {
        dep[static_cast<std::size_t>(edges[e].first)] |= Mask{1} << edges[e].second;
        dep[static_cast<std::size_t>(edges[e].second)] |= Mask{1} << edges[e].first;
      }
    out.push_back(DependenceGraph::from_masks(names, dep));
  }
  return out;
}

namespace {

std::vector<std::string> plain_names(int k) {
  std::vector<std::string> names;
  for (int a = 0; a < k; ++a)
    names.push_back(k <= 26 ? std::string(1, static_cast<char>('a' + a)) : "x" + std::to_string(a + 1));
  return names;
}

void check_family(int k, int lo) {
  if (k < lo) throw GraphError("family parameter must be at least " + std::to_string(lo));
  if (k > kMaxLetters) throw ResourceError("too many letters");
}

}  // namespace

DependenceGraph free_monoid(int k) {
  check_family(k, 1);
  return DependenceGraph::from_masks(plain_names(k), std::vector<Mask>(static_cast<std::size_t>(k), ~Mask{0}));
}

DependenceGraph free_commutative(int k) {
  check_family(k, 1);
  return DependenceGraph::from_masks(plain_names(k), std::vector<Mask>(static_cast<std::size_t>(k), 0));
}

DependenceGraph cocktail_party(int n) {
  check_family(2 * n, 2);
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> indep;
  for (int i = 1; i <= n; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
    indep.emplace_back(names[names.size() - 2], names.back());
  }
  return DependenceGraph::build(std::move(names), indep, RelationKind::independence);
}

DependenceGraph t4() {
  return DependenceGraph::build({"a12", "a13", "a14", "a23", "a24", "a34"},
                                {{"a12", "a34"}, {"a13", "a24"}, {"a14", "a23"}}, RelationKind::independence);
}

DependenceGraph star_graph(int k) {
  check_family(k, 1);
  std::vector<Mask> dep(static_cast<std::size_t>(k), 1);
  dep[0] = ~Mask{0};
  return DependenceGraph::from_masks(plain_names(k), dep);
}

DependenceGraph direct_product(int k, int c) {
  check_family(k, 1);
  check_family(c, 1);
  check_family(k * c, 1);
  std::vector<Mask> dep(static_cast<std::size_t>(k * c));
  for (int b = 0; b < k; ++b) {
    Mask block = ((c == 64) ? ~Mask{0} : (Mask{1} << c) - 1) << (b * c);
    for (int i = 0; i < c; ++i) dep[static_cast<std::size_t>(b * c + i)] = block;
  }
  return DependenceGraph::from_masks(plain_names(k * c), dep);
}

}  // namespace tracepar
