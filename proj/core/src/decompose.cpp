#include "eafc/decompose.hpp"

#include "decompose_internal.hpp"
#include "eafc/base.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace eafc {
namespace detail {

std::vector<VertexSubset> components_within(const ArtinSystem& sys, const VertexSubset& S) {
  std::vector<int> comp(sys.vertex_count(), -1);
  std::vector<VertexSubset> out;
  for (int s : S.idx) {
    if (comp[s] != -1) continue;
    std::vector<int> part;
    std::queue<int> q;
    comp[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      part.push_back(x);
      for (int y : S.idx) {
        if (comp[y] == -1 && sys.adjacent(x, y)) {
          comp[y] = 1;
          q.push(y);
        }
      }
    }
    out.push_back(VertexSubset(std::move(part)));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSubset& a, const VertexSubset& b) { return a.idx[0] < b.idx[0]; });
  return out;
}

std::vector<VertexSubset> direct_factor_partition_within(const ArtinSystem& sys,
                                                         const VertexSubset& S) {
  // Union vertices that must share a factor: pairs that are non-adjacent or
  // joined by a label other than 2.
  const int n = static_cast<int>(S.idx.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto m = sys.label_opt(S.idx[i], S.idx[j]);
      if (!m || *m != 2) {
        int a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }
    }
  std::vector<std::vector<int>> buckets(n);
  for (int i = 0; i < n; ++i) buckets[find(i)].push_back(S.idx[i]);
  std::vector<VertexSubset> out;
  for (auto& b : buckets)
    if (!b.empty()) out.push_back(VertexSubset(std::move(b)));
  std::sort(out.begin(), out.end(),
            [](const VertexSubset& a, const VertexSubset& b) { return a.idx[0] < b.idx[0]; });
  return out;
}

bool complete_within(const ArtinSystem& sys, const VertexSubset& S) {
  for (size_t i = 0; i < S.idx.size(); ++i)
    for (size_t j = i + 1; j < S.idx.size(); ++j)
      if (!sys.adjacent(S.idx[i], S.idx[j])) return false;
  return true;
}

VertexSubset link_within(const ArtinSystem& sys, const VertexSubset& S, int v) {
  std::vector<int> out;
  for (int s : S.idx)
    if (s != v && sys.adjacent(v, s)) out.push_back(s);
  return VertexSubset(std::move(out));
}

std::vector<CompleteFactor> complete_factorization_within(const ArtinSystem& sys,
                                                          const VertexSubset& S) {
  std::vector<CompleteFactor> out;
  std::vector<char> used(sys.vertex_count(), 0);
  for (const Edge& e : sys.edges()) {
    if (e.m <= 2 || !S.contains(e.u) || !S.contains(e.v)) continue;
    if (used[e.u] || used[e.v]) continue;  // cannot happen on valid input
    used[e.u] = used[e.v] = 1;
    out.push_back({CompleteFactor::Dihedral, e.u, e.v, e.m / 2});
  }
  for (int s : S.idx)
    if (!used[s]) out.push_back({CompleteFactor::Cyclic, s, -1, 0});
  return out;
}

CaseInfo analyze_subsystem(const ArtinSystem& sys, const VertexSubset& S,
                           const DecomposeOptions& opts) {
  CaseInfo info;
  auto comps = components_within(sys, S);
  if (comps.size() > 1) {
    info.kind = NodeKind::FreeProduct;
    info.parts = std::move(comps);
    return info;
  }
  auto parts = direct_factor_partition_within(sys, S);
  if (parts.size() > 1) {
    info.kind = NodeKind::DirectProduct;
    info.parts = std::move(parts);
    return info;
  }
  if (complete_within(sys, S)) {
    info.kind = NodeKind::CompleteBase;
    info.factors = complete_factorization_within(sys, S);
    return info;
  }
  info.kind = NodeKind::Amalgam;
  int best = -1;
  size_t best_star = 0;
  for (int v : S.idx) {
    VertexSubset lk = link_within(sys, S, v);
    if (lk.idx.size() + 1 == S.idx.size()) continue;  // full star: no split here
    size_t star_size = lk.idx.size() + 1;
    if (best == -1 || star_size < best_star) {
      best = v;
      best_star = star_size;
    }
  }
  // best != -1: a connected non-complete graph has a vertex with non-full star.
  if (opts.split_vertex) {
    auto ov = sys.find_vertex(*opts.split_vertex);
    if (!ov) throw input_error("unknown split vertex '" + *opts.split_vertex + "'");
    if (S.contains(*ov)) {
      VertexSubset lk = link_within(sys, S, *ov);
      if (lk.idx.size() + 1 != S.idx.size()) best = *ov;
    }
  }
  info.apex = best;
  info.link = link_within(sys, S, best);
  info.star = info.link;
  info.star.idx.insert(std::lower_bound(info.star.idx.begin(), info.star.idx.end(), best), best);
  info.delta = S.without(best);
  return info;
}

}  // namespace detail

namespace {

DecompositionNode decompose_rec(const ArtinSystem& sys, const VertexSubset& S,
                                const DecomposeOptions& opts) {
  DecompositionNode node;
  node.vertices = S;
  detail::CaseInfo info = detail::analyze_subsystem(sys, S, opts);
  node.kind = info.kind;
  switch (info.kind) {
    case NodeKind::FreeProduct:
    case NodeKind::DirectProduct:
      for (const auto& part : info.parts) node.children.push_back(decompose_rec(sys, part, opts));
      break;
    case NodeKind::CompleteBase:
      node.factors = std::move(info.factors);
      break;
    case NodeKind::Amalgam:
      node.apex = info.apex;
      node.link = info.link;
      node.children.push_back(decompose_rec(sys, info.star, opts));
      node.children.push_back(decompose_rec(sys, info.delta, opts));
      break;
  }
  return node;
}

}  // namespace

DecompositionNode decompose(const ArtinSystem& sys, const DecomposeOptions& opts) {
  EafcCheck chk = validate_eafc(sys);
  if (!chk.ok)
    throw input_error("system is not of FC type: triangle " + sys.name(chk.triangle[0]) + "," +
                      sys.name(chk.triangle[1]) + "," + sys.name(chk.triangle[2]) +
                      " has more than one label exceeding 2");
  return decompose_rec(sys, VertexSubset::full(sys), opts);
}

std::vector<CompleteFactor> complete_factorization(const ArtinSystem& sys) {
  VertexSubset all = VertexSubset::full(sys);
  if (!detail::complete_within(sys, all))
    throw input_error("complete_factorization requires a complete defining graph");
  return detail::complete_factorization_within(sys, all);
}

Presentation emit_presentation(const ArtinSystem& sys) {
  Presentation p;
  for (int i = 0; i < sys.vertex_count(); ++i) p.generators.push_back(sys.name(i));
  for (const Edge& e : sys.edges()) {
    Word r = artin_relator(sys, e.u, e.v);
    std::vector<std::pair<int, Int>> rel;
    for (const Syllable& s : r.syllables()) rel.emplace_back(s.gen, s.exp);
    p.relators.push_back(std::move(rel));
  }
  return p;
}

GraphOfGroups to_graph_of_groups(const ArtinSystem& sys, const DecompositionNode& node) {
  GraphOfGroups g;
  switch (node.kind) {
    case NodeKind::Amalgam:
      g.vertices.push_back({node.children[0].vertices});
      g.vertices.push_back({node.children[1].vertices});
      g.edges.push_back({0, 1, node.link});
      break;
    case NodeKind::FreeProduct:
      for (const auto& c : node.children) g.vertices.push_back({c.vertices});
      for (size_t i = 1; i < node.children.size(); ++i)
        g.edges.push_back({0, static_cast<int>(i), VertexSubset{}});
      break;
    case NodeKind::CompleteBase:
      g.vertices.push_back({node.vertices});
      break;
    case NodeKind::DirectProduct:
      throw input_error("a direct-product node has no graph-of-groups splitting");
  }
  (void)sys;
  return g;
}

std::vector<int> maximal_subtree(const GraphOfGroups& gog) {
  const int n = static_cast<int>(gog.vertices.size());
  if (n == 0) return {};
  std::vector<char> seen(n, 0);
  std::vector<int> tree;
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (size_t ei = 0; ei < gog.edges.size(); ++ei) {
      const auto& e = gog.edges[ei];
      int other = -1;
      if (e.a == x && !seen[e.b])
        other = e.b;
      else if (e.b == x && !seen[e.a])
        other = e.a;
      if (other != -1) {
        seen[other] = 1;
        tree.push_back(static_cast<int>(ei));
        q.push(other);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw input_error("maximal_subtree requires a connected graph");
  return tree;
}

int underlying_free_rank(const GraphOfGroups& gog) {
  return static_cast<int>(gog.edges.size() - maximal_subtree(gog).size());
}

}  // namespace eafc
