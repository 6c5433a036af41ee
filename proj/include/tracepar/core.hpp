#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tracepar {

/// Letter sets are bitmasks over dense letter ids.
using Mask = std::uint64_t;

inline constexpr int kMaxLetters = 64;
inline constexpr std::size_t kDefaultCliqueCap = std::size_t{1} << 20;

enum class RelationKind { dependence, independence };

int popcount(Mask m);
std::vector<int> members(Mask m);

/// Alphabet with a reflexive symmetric dependence relation.
class DependenceGraph {
 public:
  /// Pairs are unordered, between distinct known letters; the relation is
  /// symmetrised and the complementary relation derived.
  static DependenceGraph build(std::vector<std::string> letters,
                               const std::vector<std::pair<std::string, std::string>>& relation,
                               RelationKind kind);
  /// dep[a] is the set of letters dependent on a; a itself is added.
  static DependenceGraph from_masks(std::vector<std::string> letters, std::vector<Mask> dep);

  int size() const { return static_cast<int>(letters_.size()); }
  Mask all() const;
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& name(int a) const { return letters_[static_cast<std::size_t>(a)]; }
  std::optional<int> index_of(const std::string& name) const;

  /// Letters dependent on a, including a.
  Mask dep(int a) const { return dep_[static_cast<std::size_t>(a)]; }
  Mask indep(int a) const { return all() & ~dep(a); }
  bool depends(int a, int b) const { return (dep(a) >> b) & 1U; }

  /// Unordered pairs a < b.
  std::vector<std::pair<int, int>> dependence_pairs() const;
  std::vector<std::pair<int, int>> independence_pairs() const;

  friend bool operator==(const DependenceGraph& a, const DependenceGraph& b) {
    return a.letters_ == b.letters_ && a.dep_ == b.dep_;
  }

 private:
  std::vector<std::string> letters_;
  std::vector<Mask> dep_;
};

/// Non-empty sets of pairwise independent letters, ordered by size and then
/// lexicographically by letter ids.
std::vector<Mask> enumerate_cliques(const DependenceGraph& g, std::size_t cap = kDefaultCliqueCap);
bool clique_less(Mask a, Mask b);
std::string clique_name(const DependenceGraph& g, Mask c);

/// Every letter of v depends on some letter of u.
bool is_cf_admissible(Mask u, Mask v, const DependenceGraph& g);

/// A trace in Cartier-Foata normal form.
struct Trace {
  std::vector<Mask> factors;

  int height() const { return static_cast<int>(factors.size()); }
  int length() const;
  friend bool operator==(const Trace&, const Trace&) = default;
  friend auto operator<=>(const Trace&, const Trace&) = default;
};

Trace project_word(const DependenceGraph& g, const std::vector<int>& word);
Trace project_word(const DependenceGraph& g, const std::vector<std::string>& word);

/// Upper contour of a heap of pieces.
struct HeapState {
  std::vector<long> tops;
  long max = 0;

  explicit HeapState(int letters = 0) : tops(static_cast<std::size_t>(letters), 0) {}
};

HeapState heap_push(const HeapState& s, int a, const DependenceGraph& g);
void heap_push_inplace(HeapState& s, int a, const DependenceGraph& g);

/// Connected components of (letters, D), ordered by smallest letter.
std::vector<Mask> connected_components(const DependenceGraph& g);
bool is_connected(const DependenceGraph& g);
/// D restricted to the given letters, ids renumbered in increasing order.
DependenceGraph induced(const DependenceGraph& g, Mask letters);
/// Letters of b are renamed when they clash with letters of a.
DependenceGraph disjoint_union(const DependenceGraph& a, const DependenceGraph& b);
bool is_free_commutative(const DependenceGraph& g);
bool is_free(const DependenceGraph& g);
/// Largest clique size.
int max_clique_size(const DependenceGraph& g);

/// perm[a] is the letter of b matched with letter a of a.
std::optional<std::vector<int>> find_isomorphism(const DependenceGraph& a, const DependenceGraph& b);
bool isomorphic(const DependenceGraph& a, const DependenceGraph& b);

/// One representative of every dependence relation on k letters up to
/// isomorphism, letters named a, b, c, ...
std::vector<DependenceGraph> all_graphs(int k);

/// Named families. Letters are a, b, c, ... unless stated.
DependenceGraph free_monoid(int k);
DependenceGraph free_commutative(int k);
/// 2n letters a1, b1, ..., an, bn; ai and bi are the only independent pairs.
DependenceGraph cocktail_party(int n);
/// Letters a12 .. a34; pairs with disjoint indices commute.
DependenceGraph t4();
/// a depends on everything, the k-1 other letters commute.
DependenceGraph star_graph(int k);
/// k blocks of c letters, dependent exactly within a block.
DependenceGraph direct_product(int k, int c);

}  // namespace tracepar
