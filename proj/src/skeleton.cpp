#include "fmbend/skeleton.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "fmbend/error.hpp"

namespace fmb {

std::string_view to_string(GxClass c) {
  switch (c) {
    case GxClass::Path: return "path";
    case GxClass::Cycle: return "cycle";
    case GxClass::Cactus: return "cactus";
    case GxClass::Tree: return "tree";
    case GxClass::Other: return "other";
  }
  return "?";
}

namespace {

bool connected(const IntersectionGraph& gx) { return gx.size() <= 1 || gx.components().size() == 1; }

std::size_t max_degree(const IntersectionGraph& gx) {
  std::size_t d = 0;
  for (const auto& a : gx.adjacency) d = std::max(d, a.size());
  return d;
}

bool is_path(const IntersectionGraph& gx) {
  return gx.size() >= 1 && connected(gx) && gx.edge_count() + 1 == gx.size() && max_degree(gx) <= 2;
}

bool is_cycle(const IntersectionGraph& gx) {
  if (gx.size() < 3 || !connected(gx) || gx.edge_count() != gx.size()) return false;
  return std::all_of(gx.adjacency.begin(), gx.adjacency.end(), [](const auto& a) { return a.size() == 2; });
}

std::vector<char> propagate(const CellGraph& cg, std::size_t from, const std::vector<char>& active, std::size_t to,
                            const std::vector<char>& allowed, std::vector<std::size_t>* pred = nullptr) {
  std::vector<char> out(cg.cell_count(to), 0);
  if (pred) pred->assign(cg.cell_count(to), 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    if (!allowed[c]) continue;
    for (std::size_t a = 0; a < active.size(); ++a) {
      if (active[a] && cg.adjacent(from, a, to, c)) {
        out[c] = 1;
        if (pred) (*pred)[c] = a;
        break;
      }
    }
  }
  return out;
}

bool any(const std::vector<char>& v) { return std::find(v.begin(), v.end(), 1) != v.end(); }

std::optional<std::size_t> first(const std::vector<char>& v) {
  auto it = std::find(v.begin(), v.end(), 1);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

GxClass classify_intersection_graph(const IntersectionGraph& gx) {
  if (!connected(gx)) throw Error(ErrorCode::InvalidInput, "intersection graph is not connected");
  if (is_path(gx)) return GxClass::Path;
  if (gx.edge_count() + 1 == gx.size()) return GxClass::Tree;
  if (is_cycle(gx)) return GxClass::Cycle;
  try {
    decompose_cactus(gx);
    return GxClass::Cactus;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotACactus) throw;
  }
  return GxClass::Other;
}

std::vector<std::size_t> path_order(const IntersectionGraph& gx) {
  if (!is_path(gx)) throw Error(ErrorCode::NotAPath, "intersection graph is not a path");
  std::size_t start = 0;
  while (gx.adjacency[start].size() > 1) ++start;
  std::vector<std::size_t> order{start};
  while (order.size() < gx.size()) {
    std::size_t cur = order.back();
    for (std::size_t nb : gx.adjacency[cur]) {
      if (order.size() < 2 || nb != order[order.size() - 2]) {
        order.push_back(nb);
        break;
      }
    }
  }
  return order;
}

std::vector<std::size_t> cycle_order(const IntersectionGraph& gx) {
  if (!is_cycle(gx)) throw Error(ErrorCode::NotACycle, "intersection graph is not a cycle");
  std::vector<std::size_t> order{0, gx.adjacency[0][0]};
  while (order.size() < gx.size()) {
    std::size_t cur = order.back(), prev = order[order.size() - 2];
    order.push_back(gx.adjacency[cur][0] == prev ? gx.adjacency[cur][1] : gx.adjacency[cur][0]);
  }
  return order;
}

CellMask full_mask(const CellGraph& cg) {
  CellMask m;
  for (std::size_t i = 0; i < cg.size(); ++i) m.emplace_back(cg.cell_count(i), 1);
  return m;
}

std::optional<Skeleton> solve_path(const CellGraph& cg, const IntersectionGraph& gx,
                                   const std::vector<std::size_t>& order) {
  if (!is_path(gx) || order.size() != gx.size()) throw Error(ErrorCode::NotAPath, "intersection graph is not a path");
  for (std::size_t j = 1; j < order.size(); ++j) {
    if (!gx.adjacent(order[j - 1], order[j])) throw Error(ErrorCode::NotAPath, "order does not follow the path");
  }
  std::vector<std::vector<char>> act(order.size());
  std::vector<std::vector<std::size_t>> pred(order.size());
  act[0].assign(cg.cell_count(order[0]), 1);
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<char> all(cg.cell_count(order[j]), 1);
    act[j] = propagate(cg, order[j - 1], act[j - 1], order[j], all, &pred[j]);
  }
  auto last = first(act.back());
  if (!last) return std::nullopt;
  Skeleton s;
  s.cells.assign(cg.size(), 0);
  std::size_t c = *last;
  for (std::size_t j = order.size(); j-- > 0;) {
    s.cells[order[j]] = c;
    if (j > 0) c = pred[j][c];
  }
  return s;
}

CycleAnalysis analyze_cycle(const CellGraph& cg, const std::vector<std::size_t>& order, CellMask initial) {
  const std::size_t L = order.size();
  CellMask& A = initial;
  // Forward.
  for (std::size_t j = 1; j < L; ++j) A[j] = propagate(cg, order[j - 1], A[j - 1], order[j], A[j]);
  // Backward.
  for (std::size_t j = L - 1; j-- > 0;) A[j] = propagate(cg, order[j + 1], A[j + 1], order[j], A[j]);
  // Endpoints must see each other across the closing edge.
  std::vector<char> a0 = propagate(cg, order[L - 1], A[L - 1], order[0], A[0]);
  std::vector<char> aL = propagate(cg, order[0], a0, order[L - 1], A[L - 1]);
  A[0] = std::move(a0);
  A[L - 1] = std::move(aL);

  std::vector<char> conf0(A[0].size(), 0), confL(A[L - 1].size(), 0);
  for (std::size_t v = 0; v < A[0].size(); ++v) {
    if (!A[0][v]) continue;
    std::vector<char> reach(A[0].size(), 0);
    reach[v] = 1;
    for (std::size_t j = 1; j < L; ++j) reach = propagate(cg, order[j - 1], reach, order[j], A[j]);
    for (std::size_t w = 0; w < reach.size(); ++w) {
      if (reach[w] && cg.adjacent(order[0], v, order[L - 1], w)) {
        conf0[v] = 1;
        confL[w] = 1;
      }
    }
  }
  A[0] = std::move(conf0);
  A[L - 1] = std::move(confL);
  CycleAnalysis out;
  out.feasible = any(A[0]);
  out.alive = std::move(A);
  return out;
}

std::optional<std::vector<std::size_t>> reconstruct_cycle(const CellGraph& cg, const std::vector<std::size_t>& order,
                                                          const CycleAnalysis& analysis, std::size_t first_cell) {
  const std::size_t L = order.size();
  const CellMask& A = analysis.alive;
  if (first_cell >= A[0].size() || !A[0][first_cell]) return std::nullopt;
  std::vector<std::vector<std::size_t>> pred(L);
  std::vector<char> reach(A[0].size(), 0);
  reach[first_cell] = 1;
  for (std::size_t j = 1; j < L; ++j) reach = propagate(cg, order[j - 1], reach, order[j], A[j], &pred[j]);
  std::optional<std::size_t> w;
  for (std::size_t c = 0; c < reach.size() && !w; ++c) {
    if (reach[c] && cg.adjacent(order[0], first_cell, order[L - 1], c)) w = c;
  }
  if (!w) return std::nullopt;
  std::vector<std::size_t> cells(L);
  std::size_t c = *w;
  for (std::size_t j = L; j-- > 1;) {
    cells[j] = c;
    c = pred[j][c];
  }
  cells[0] = first_cell;
  return cells;
}

std::optional<Skeleton> solve_cycle(const CellGraph& cg, const IntersectionGraph& gx,
                                    const std::vector<std::size_t>& cyclic_order) {
  if (!is_cycle(gx) || cyclic_order.size() != gx.size()) throw Error(ErrorCode::NotACycle, "intersection graph is not a cycle");
  for (std::size_t j = 0; j < cyclic_order.size(); ++j) {
    if (!gx.adjacent(cyclic_order[j], cyclic_order[(j + 1) % cyclic_order.size()])) {
      throw Error(ErrorCode::NotACycle, "order does not follow the cycle");
    }
  }
  CellMask init;
  for (std::size_t c : cyclic_order) init.emplace_back(cg.cell_count(c), 1);
  CycleAnalysis an = analyze_cycle(cg, cyclic_order, std::move(init));
  if (!an.feasible) return std::nullopt;
  auto cells = reconstruct_cycle(cg, cyclic_order, an, *first(an.alive[0]));
  if (!cells) return std::nullopt;
  Skeleton s;
  s.cells.assign(cg.size(), 0);
  for (std::size_t j = 0; j < cyclic_order.size(); ++j) s.cells[cyclic_order[j]] = (*cells)[j];
  return s;
}

CactusDecomposition decompose_cactus(const IntersectionGraph& gx) {
  const std::size_t n = gx.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty intersection graph");
  if (!connected(gx)) throw Error(ErrorCode::InvalidInput, "intersection graph is not connected");

  struct Block {
    std::size_t top;
    std::vector<std::size_t> members;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
  };
  std::vector<Block> blocks;
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::size_t timer = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    disc[u] = low[u] = ++timer;
    for (std::size_t v : gx.adjacency[u]) {
      if (v == parent) continue;
      if (!disc[v]) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          Block b{u, {}, {}};
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            if (e == std::make_pair(u, v)) break;
          }
          for (auto [x, y] : b.edges) {
            b.members.push_back(x);
            b.members.push_back(y);
          }
          std::sort(b.members.begin(), b.members.end());
          b.members.erase(std::unique(b.members.begin(), b.members.end()), b.members.end());
          blocks.push_back(std::move(b));
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  dfs(0, std::numeric_limits<std::size_t>::max());

  std::vector<std::vector<std::size_t>> blocks_at(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.edges.size() != 1 && b.edges.size() != b.members.size()) {
      throw Error(ErrorCode::NotACactus, "an edge lies on more than one cycle");
    }
    blocks_at[b.top].push_back(i);
  }
  for (auto& list : blocks_at) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return blocks[a].members < blocks[b].members; });
  }

  auto cycle_from = [&](const Block& b) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [x, y] : b.edges) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<std::size_t> order{b.top, adj[b.top][0]};
    while (order.size() < b.members.size()) {
      std::size_t cur = order.back(), prev = order[order.size() - 2];
      order.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
    }
    return order;
  };

  CactusDecomposition out;
  out.nodes.push_back(CactusNode{false, {0}, std::nullopt, 0, {}});
  out.root = 0;
  for (std::size_t k = 0; k < out.nodes.size(); ++k) {
    std::vector<std::size_t> home;
    if (out.nodes[k].is_cycle) {
      home.assign(out.nodes[k].clusters.begin() + 1, out.nodes[k].clusters.end());
    } else {
      home = out.nodes[k].clusters;
    }
    for (std::size_t x : home) {
      for (std::size_t bi : blocks_at[x]) {
        const Block& b = blocks[bi];
        CactusNode child;
        child.parent = k;
        child.attach = x;
        if (b.edges.size() == 1) {
          child.clusters = {b.members[0] == x ? b.members[1] : b.members[0]};
        } else {
          child.is_cycle = true;
          child.clusters = cycle_from(b);
        }
        out.nodes[k].children.push_back(out.nodes.size());
        out.nodes.push_back(std::move(child));
      }
    }
  }
  return out;
}

std::optional<Skeleton> solve_cactus(const CellGraph& cg, const IntersectionGraph& gx, CactusTrace* trace) {
  CactusDecomposition T = decompose_cactus(gx);
  const std::size_t N = T.nodes.size();
  std::vector<CycleAnalysis> analysis(N);
  std::vector<std::vector<char>> active(N);
  if (trace) {
    trace->node_alive.assign(N, {});
    trace->active.assign(N, {});
  }

  for (std::size_t k = N; k-- > 0;) {
    const CactusNode& mu = T.nodes[k];
    CellMask alive;
    for (std::size_t c : mu.clusters) alive.emplace_back(cg.cell_count(c), 1);
    for (std::size_t ch : mu.children) {
      const CactusNode& nu = T.nodes[ch];
      std::size_t pos = static_cast<std::size_t>(std::find(mu.clusters.begin(), mu.clusters.end(), nu.attach) -
                                                 mu.clusters.begin());
      if (nu.coincident()) {
        for (std::size_t a = 0; a < alive[pos].size(); ++a) alive[pos][a] = alive[pos][a] && active[ch][a];
      } else {
        alive[pos] = propagate(cg, nu.anchor(), active[ch], nu.attach, alive[pos]);
      }
    }
    if (mu.is_cycle) {
      analysis[k] = analyze_cycle(cg, mu.clusters, std::move(alive));
      active[k] = analysis[k].feasible ? analysis[k].alive[0] : std::vector<char>(cg.cell_count(mu.anchor()), 0);
    } else {
      analysis[k].alive = std::move(alive);
      analysis[k].feasible = any(analysis[k].alive[0]);
      active[k] = analysis[k].alive[0];
    }
    if (trace) {
      trace->node_alive[k] = analysis[k].alive;
      trace->active[k] = active[k];
    }
    if (!any(active[k])) return std::nullopt;
  }

  Skeleton s;
  s.cells.assign(cg.size(), 0);
  std::function<void(std::size_t, std::size_t)> assign = [&](std::size_t k, std::size_t cell) {
    const CactusNode& mu = T.nodes[k];
    if (mu.is_cycle) {
      auto cells = reconstruct_cycle(cg, mu.clusters, analysis[k], cell);
      if (!cells) throw Error(ErrorCode::InvariantError, "cactus reconstruction failed");
      for (std::size_t j = 0; j < mu.clusters.size(); ++j) s.cells[mu.clusters[j]] = (*cells)[j];
    } else {
      s.cells[mu.anchor()] = cell;
    }
    for (std::size_t ch : mu.children) {
      const CactusNode& nu = T.nodes[ch];
      std::size_t x = s.cells[nu.attach];
      if (nu.coincident()) {
        assign(ch, x);
        continue;
      }
      std::optional<std::size_t> pick;
      for (std::size_t b = 0; b < active[ch].size() && !pick; ++b) {
        if (active[ch][b] && cg.adjacent(nu.attach, x, nu.anchor(), b)) pick = b;
      }
      if (!pick) throw Error(ErrorCode::InvariantError, "cactus reconstruction failed");
      assign(ch, *pick);
    }
  };
  assign(T.root, *first(active[T.root]));
  return s;
}

std::uint64_t selection_space(const CellGraph& cg) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < cg.size(); ++i) {
    std::uint64_t c = cg.cell_count(i);
    if (c == 0) return 0;
    if (p > std::numeric_limits<std::uint64_t>::max() / c) return std::numeric_limits<std::uint64_t>::max();
    p *= c;
  }
  return p;
}

void enumerate_skeletons(const CellGraph& cg, const IntersectionGraph& gx,
                         const std::function<bool(const Skeleton&)>& visit) {
  const std::size_t n = cg.size();
  // Forward checking: domain[j][b] counts how many assigned neighbours rule b out.
  std::vector<std::vector<std::size_t>> later(n);
  for (auto [u, v] : gx.edges()) later[u].push_back(v);
  std::vector<std::vector<std::size_t>> blocked(n);
  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocked[i].assign(cg.cell_count(i), 0);
    alive[i] = cg.cell_count(i);
  }
  Skeleton s;
  s.cells.assign(n, 0);
  bool stop = false;
  auto apply = [&](std::size_t i, std::size_t c, int delta) {
    bool wiped = false;
    for (std::size_t j : later[i]) {
      for (std::size_t b = 0; b < cg.cell_count(j); ++b) {
        if (cg.adjacent(i, c, j, b)) continue;
        if (delta > 0) {
          if (blocked[j][b]++ == 0 && --alive[j] == 0) wiped = true;
        } else if (--blocked[j][b] == 0) {
          ++alive[j];
        }
      }
    }
    return !wiped;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (!visit(s)) stop = true;
      return;
    }
    for (std::size_t c = 0; c < cg.cell_count(i) && !stop; ++c) {
      if (blocked[i][c]) continue;
      s.cells[i] = c;
      if (apply(i, c, 1)) go(i + 1);
      apply(i, c, -1);
    }
  };
  if (std::all_of(alive.begin(), alive.end(), [](std::size_t a) { return a > 0; })) go(0);
}

std::optional<Skeleton> brute_force_skeleton(const CellGraph& cg, const IntersectionGraph& gx, std::uint64_t cap) {
  std::uint64_t space = selection_space(cg);
  if (space > cap) {
    throw Error(ErrorCode::CapExceeded, "selection space " + std::to_string(space) + " exceeds cap " + std::to_string(cap));
  }
  std::optional<Skeleton> found;
  enumerate_skeletons(cg, gx, [&](const Skeleton& s) {
    found = s;
    return false;
  });
  return found;
}

SkeletonSolution solve_skeleton(const CellGraph& cg, const IntersectionGraph& gx, std::uint64_t cap) {
  SkeletonSolution out;
  Skeleton merged;
  merged.cells.assign(cg.size(), 0);
  bool none = false, unsupported = false;
  for (const auto& comp : gx.components()) {
    auto [scg, sgx] = restrict_instance(cg, gx, comp);
    ComponentReport rep{comp, classify_intersection_graph(sgx), {}};
    std::optional<Skeleton> sol;
    bool solved = true;
    switch (rep.kind) {
      case GxClass::Path:
        rep.method = "path-propagation";
        sol = solve_path(scg, sgx, path_order(sgx));
        break;
      case GxClass::Cycle:
        rep.method = "cycle-propagation";
        sol = solve_cycle(scg, sgx, cycle_order(sgx));
        break;
      case GxClass::Tree:
      case GxClass::Cactus:
        rep.method = "cactus-tree";
        sol = solve_cactus(scg, sgx);
        break;
      case GxClass::Other:
        if (selection_space(scg) <= cap) {
          rep.method = "brute-force";
          sol = brute_force_skeleton(scg, sgx, cap);
        } else {
          rep.method = "unsupported";
          solved = false;
          unsupported = true;
        }
        break;
    }
    if (solved && !sol) none = true;
    if (sol) {
      for (std::size_t i = 0; i < comp.size(); ++i) merged.cells[comp[i]] = sol->cells[i];
    }
    out.components.push_back(std::move(rep));
  }
  if (none) {
    out.verdict = SkeletonVerdict::None;
  } else if (unsupported) {
    out.verdict = SkeletonVerdict::Unsupported;
  } else {
    out.verdict = SkeletonVerdict::Exists;
    out.skeleton = std::move(merged);
  }
  return out;
}

}  // namespace fmb
