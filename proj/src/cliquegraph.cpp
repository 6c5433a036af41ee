#include "tracepar/cliquegraph.hpp"

#include <algorithm>
#include <map>

#include "tracepar/errors.hpp"

namespace tracepar {

bool CliqueGraph::arc(int i, int j) const {
  const auto& s = succ[static_cast<std::size_t>(i)];
  return std::binary_search(s.begin(), s.end(), j);
}

CliqueGraph build_clique_graph(const DependenceGraph& g, std::size_t cap) {
  CliqueGraph cg;
  cg.nodes = enumerate_cliques(g, cap);
  const std::size_t n = cg.nodes.size();
  if (n > 20000) throw ResourceError("graph of cliques too large for a dense representation");
  cg.succ.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_cf_admissible(cg.nodes[i], cg.nodes[j], g)) cg.succ[i].push_back(static_cast<int>(j));
  return cg;
}

Condensation condensation(const CliqueGraph& cg) {
  const int n = cg.size();
  Condensation out;
  out.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int counter = 0;

  // iterative Tarjan: frames of (node, next successor position)
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto uv = static_cast<std::size_t>(v);
      if (pos == 0 && index[uv] < 0) {
        index[uv] = low[uv] = counter++;
        stack.push_back(v);
        on_stack[uv] = true;
      }
      const auto& s = cg.succ[uv];
      bool descended = false;
      while (pos < s.size()) {
        int w = s[pos++];
        const auto uw = static_cast<std::size_t>(w);
        if (index[uw] < 0) {
          frames.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[uw]) low[uv] = std::min(low[uv], index[uw]);
      }
      if (descended) continue;
      if (low[uv] == index[uv]) {
        std::vector<int> comp;
        int w = -1;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          out.component_of[static_cast<std::size_t>(w)] = static_cast<int>(out.components.size());
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
      int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto pu = static_cast<std::size_t>(frames.back().first);
        low[pu] = std::min(low[pu], low[static_cast<std::size_t>(finished)]);
      }
    }
  }

  // renumber components by smallest member
  std::vector<int> order(out.components.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return out.components[static_cast<std::size_t>(a)].front() < out.components[static_cast<std::size_t>(b)].front();
  });
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> comps(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) comps[i] = std::move(out.components[static_cast<std::size_t>(order[i])]);
  out.components = std::move(comps);
  for (auto& c : out.component_of) c = rank[static_cast<std::size_t>(c)];

  out.dag.assign(out.components.size(), {});
  for (int v = 0; v < n; ++v)
    for (int w : cg.succ[static_cast<std::size_t>(v)]) {
      int a = out.component_of[static_cast<std::size_t>(v)];
      int b = out.component_of[static_cast<std::size_t>(w)];
      if (a != b) out.dag[static_cast<std::size_t>(a)].push_back(b);
    }
  out.final.assign(out.components.size(), false);
  for (std::size_t c = 0; c < out.dag.size(); ++c) {
    auto& d = out.dag[c];
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    out.final[c] = d.empty();
  }
  return out;
}

namespace {

EquitablePartition from_colors(const CliqueGraph& cg, const std::vector<int>& color) {
  const int n = cg.size();
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < n; ++v) by_color[color[static_cast<std::size_t>(v)]].push_back(v);
  EquitablePartition p;
  for (auto& [c, cell] : by_color) p.cells.push_back(std::move(cell));
  std::sort(p.cells.begin(), p.cells.end(), [&](const auto& a, const auto& b) {
    int la = cg.length(a.front());
    int lb = cg.length(b.front());
    if (la != lb) return la < lb;
    return a.front() < b.front();
  });
  p.cell_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    p.cell_length.push_back(cg.length(p.cells[i].front()));
    for (int v : p.cells[i]) p.cell_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return p;
}

// Row-constant successor counts, or nullopt.
std::optional<std::vector<std::vector<long>>> coloration(const CliqueGraph& cg, const EquitablePartition& p) {
  const std::size_t s = p.cells.size();
  std::vector<std::vector<long>> a(s, std::vector<long>(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < p.cells[i].size(); ++k) {
      std::vector<long> row(s, 0);
      for (int w : cg.succ[static_cast<std::size_t>(p.cells[i][k])]) ++row[static_cast<std::size_t>(p.cell_of[static_cast<std::size_t>(w)])];
      if (k == 0)
        a[i] = row;
      else if (row != a[i])
        return std::nullopt;
    }
  }
  return a;
}

}  // namespace

namespace {

EquitablePartition refine_colors(const CliqueGraph& cg, std::vector<int> color) {
  const int n = cg.size();
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> ids;
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::map<int, int> counts;
      for (int w : cg.succ[static_cast<std::size_t>(v)]) ++counts[color[static_cast<std::size_t>(w)]];
      sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], {counts.begin(), counts.end()}};
      ids.emplace(sig[static_cast<std::size_t>(v)], 0);
    }
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = ids[sig[static_cast<std::size_t>(v)]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  EquitablePartition p = from_colors(cg, color);
  auto a = coloration(cg, p);
  if (!a) throw NumericError("color refinement produced a non-equitable partition");
  p.coloration = std::move(*a);
  return p;
}

}  // namespace

EquitablePartition coarsest_equitable_partition(const CliqueGraph& cg) {
  std::vector<int> color(static_cast<std::size_t>(cg.size()));
  for (int v = 0; v < cg.size(); ++v) color[static_cast<std::size_t>(v)] = cg.length(v);
  return refine_colors(cg, std::move(color));
}

EquitablePartition refine_partition(const CliqueGraph& cg, const std::vector<std::vector<int>>& cells) {
  std::vector<int> color(static_cast<std::size_t>(cg.size()), -1);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (int v : cells[i]) {
      if (v < 0 || v >= cg.size() || color[static_cast<std::size_t>(v)] >= 0) throw ShapeError("cells are not a partition");
      color[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  for (int c : color)
    if (c < 0) throw ShapeError("cells are not a partition");
  return refine_colors(cg, std::move(color));
}

EquitablePartition discrete_partition(const CliqueGraph& cg) {
  std::vector<std::vector<int>> cells;
  for (int v = 0; v < cg.size(); ++v) cells.push_back({v});
  return *is_equitable(cg, cells);
}

std::optional<EquitablePartition> is_equitable(const CliqueGraph& cg, const std::vector<std::vector<int>>& cells) {
  const int n = cg.size();
  EquitablePartition p;
  p.cell_of.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].empty()) throw ShapeError("empty cell");
    for (int v : cells[i]) {
      if (v < 0 || v >= n) throw ShapeError("cell member out of range");
      if (p.cell_of[static_cast<std::size_t>(v)] >= 0) throw ShapeError("cells overlap");
      p.cell_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v : p.cell_of)
    if (v < 0) throw ShapeError("cells do not cover every node");
  p.cells = cells;
  for (const auto& c : cells) p.cell_length.push_back(cg.length(c.front()));
  auto a = coloration(cg, p);
  if (!a) return std::nullopt;
  p.coloration = std::move(*a);
  return p;
}

}  // namespace tracepar
