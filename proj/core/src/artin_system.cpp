#include "eafc/artin_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace eafc {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

VertexSubset::VertexSubset(std::vector<int> indices) : idx(std::move(indices)) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
}

VertexSubset VertexSubset::of(const ArtinSystem& sys, const std::vector<std::string>& names) {
  std::vector<int> v;
  v.reserve(names.size());
  for (const auto& n : names) v.push_back(sys.index_of(n));
  return VertexSubset(std::move(v));
}

VertexSubset VertexSubset::full(const ArtinSystem& sys) {
  std::vector<int> v(sys.vertex_count());
  std::iota(v.begin(), v.end(), 0);
  return VertexSubset(std::move(v));
}

bool VertexSubset::contains(int v) const {
  return std::binary_search(idx.begin(), idx.end(), v);
}

VertexSubset VertexSubset::intersect(const VertexSubset& o) const {
  std::vector<int> out;
  std::set_intersection(idx.begin(), idx.end(), o.idx.begin(), o.idx.end(),
                        std::back_inserter(out));
  return VertexSubset(std::move(out));
}

VertexSubset VertexSubset::unite(const VertexSubset& o) const {
  std::vector<int> out;
  std::set_union(idx.begin(), idx.end(), o.idx.begin(), o.idx.end(), std::back_inserter(out));
  return VertexSubset(std::move(out));
}

VertexSubset VertexSubset::without(int v) const {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx)
    if (i != v) out.push_back(i);
  return VertexSubset(std::move(out));
}

bool VertexSubset::subset_of(const VertexSubset& o) const {
  return std::includes(o.idx.begin(), o.idx.end(), idx.begin(), idx.end());
}

std::vector<std::string> VertexSubset::names(const ArtinSystem& sys) const {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(sys.name(i));
  return out;
}

ArtinSystem::ArtinSystem(std::vector<std::string> vertices,
                         std::vector<std::tuple<std::string, std::string, int>> edges)
    : names_(std::move(vertices)) {
  if (names_.empty()) throw input_error("vertex set must be nonempty");
  for (const auto& n : names_)
    if (!valid_name(n))
      throw input_error("invalid vertex name '" + n + "' (want [A-Za-z][A-Za-z0-9_]*)");
  {
    std::set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw input_error("duplicate vertex name '" + n + "'");
  }
  const int n = vertex_count();
  labels_.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& [a, b, m] : edges) {
    int u = index_of(a), v = index_of(b);
    if (u == v) throw input_error("loop edge at vertex '" + a + "'");
    if (m < 2 || m % 2 != 0)
      throw input_error("edge {" + a + "," + b + "} has label " + std::to_string(m) +
                        "; labels must be even and >= 2");
    if (u > v) std::swap(u, v);
    if (labels_[static_cast<size_t>(u) * n + v] != 0)
      throw input_error("duplicate edge {" + a + "," + b + "}");
    labels_[static_cast<size_t>(u) * n + v] = m;
    labels_[static_cast<size_t>(v) * n + u] = m;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (int m = labels_[static_cast<size_t>(u) * n + v]; m != 0)
        edges_.push_back(Edge{u, v, m});
}

int ArtinSystem::index_of(const std::string& name) const {
  if (auto i = find_vertex(name)) return *i;
  throw input_error("unknown vertex '" + name + "'");
}

std::optional<int> ArtinSystem::find_vertex(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool ArtinSystem::adjacent(int u, int v) const {
  return u != v && labels_[static_cast<size_t>(u) * vertex_count() + v] != 0;
}

int ArtinSystem::label(int u, int v) const {
  if (auto m = label_opt(u, v)) return *m;
  throw input_error("no edge {" + name(u) + "," + name(v) + "}");
}

std::optional<int> ArtinSystem::label_opt(int u, int v) const {
  if (u == v) return std::nullopt;
  int m = labels_[static_cast<size_t>(u) * vertex_count() + v];
  if (m == 0) return std::nullopt;
  return m;
}

int ArtinSystem::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == u && edges_[i].v == v) return static_cast<int>(i);
  throw input_error("no edge {" + name(u) + "," + name(v) + "}");
}

ArtinSystem ArtinSystem::induced(const VertexSubset& S) const {
  std::vector<std::string> vnames;
  for (int i : S.idx) vnames.push_back(name(i));
  std::vector<std::tuple<std::string, std::string, int>> es;
  for (size_t a = 0; a < S.idx.size(); ++a)
    for (size_t b = a + 1; b < S.idx.size(); ++b)
      if (auto m = label_opt(S.idx[a], S.idx[b]))
        es.emplace_back(name(S.idx[a]), name(S.idx[b]), *m);
  return ArtinSystem(std::move(vnames), std::move(es));
}

EafcCheck validate_eafc(const ArtinSystem& sys) {
  const int n = sys.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!sys.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!sys.adjacent(a, c) || !sys.adjacent(b, c)) continue;
        int big = (sys.label(a, b) > 2) + (sys.label(a, c) > 2) + (sys.label(b, c) > 2);
        if (big > 1) return EafcCheck{false, {a, b, c}};
      }
    }
  return EafcCheck{};
}

ArtinSystem gamma_le2(const ArtinSystem& sys) {
  std::vector<std::tuple<std::string, std::string, int>> es;
  for (const Edge& e : sys.edges())
    if (e.m == 2) es.emplace_back(sys.name(e.u), sys.name(e.v), 2);
  return ArtinSystem(sys.vertex_names(), std::move(es));
}

namespace {

// Lex-BFS visit sequence; ties broken toward the smallest vertex index.
std::vector<int> lex_bfs(const ArtinSystem& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best == -1 || label[v] > label[best])) best = v;
    done[best] = true;
    order.push_back(best);
    for (int w = 0; w < n; ++w)
      if (!done[w] && g.adjacent(best, w)) label[w].push_back(n - step);
  }
  return order;
}

// Hunt for a chordless cycle >= 4: for each path u-v-w with {u,w} not an
// edge, a shortest u-w path avoiding N[v]\{u,w} closes up to an induced
// cycle through v (shortestness inside the restricted graph kills every
// potential chord). Non-chordal graphs always contain such a configuration.
std::vector<int> find_hole(const ArtinSystem& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v || !g.adjacent(u, v)) continue;
      for (int w = u + 1; w < n; ++w) {
        if (w == v || !g.adjacent(w, v) || g.adjacent(u, w)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (int z = 0; z < n; ++z)
          if (z != u && z != w && g.adjacent(v, z)) blocked[z] = true;
        std::vector<int> prev(n, -1);
        std::deque<int> q{u};
        std::vector<bool> seen(n, false);
        seen[u] = true;
        while (!q.empty()) {
          int x = q.front();
          q.pop_front();
          if (x == w) break;
          for (int y = 0; y < n; ++y)
            if (!seen[y] && !blocked[y] && g.adjacent(x, y)) {
              seen[y] = true;
              prev[y] = x;
              q.push_back(y);
            }
        }
        if (!seen[w]) continue;
        std::vector<int> cycle{v};
        for (int x = w; x != -1; x = prev[x]) cycle.push_back(x);
        std::reverse(cycle.begin() + 1, cycle.end());  // v, u, ..., w
        // Canonical form: smallest vertex first, smaller neighbor second.
        auto at = [&](size_t i) { return cycle[i % cycle.size()]; };
        size_t k = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
        std::vector<int> out;
        bool fwd = at(k + 1) < at(k + cycle.size() - 1);
        for (size_t i = 0; i < cycle.size(); ++i)
          out.push_back(fwd ? at(k + i) : at(k + cycle.size() - i));
        return out;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const ArtinSystem& sys) {
  const int n = sys.vertex_count();
  std::vector<int> visit = lex_bfs(sys);
  std::vector<int> pos(n);  // elimination position = reverse visit order
  for (int i = 0; i < n; ++i) pos[visit[n - 1 - i]] = i;
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int w = 0; w < n; ++w)
      if (sys.adjacent(v, w) && pos[w] > pos[v] && (parent == -1 || pos[w] < pos[parent]))
        parent = w;
    if (parent == -1) continue;
    for (int w = 0; w < n; ++w)
      if (w != parent && sys.adjacent(v, w) && pos[w] > pos[v] && !sys.adjacent(parent, w)) {
        auto hole = find_hole(sys);
        return ChordalityResult{false, std::move(hole)};
      }
  }
  return ChordalityResult{};
}

CoherenceResult is_coherent(const ArtinSystem& sys) {
  if (auto chk = validate_eafc(sys); !chk.ok)
    throw input_error("coherence test requires an FC-type system");
  if (auto full = is_chordal(sys); !full.chordal)
    return CoherenceResult{false, false, std::move(full.witness)};
  if (auto le2 = is_chordal(gamma_le2(sys)); !le2.chordal)
    return CoherenceResult{false, true, std::move(le2.witness)};
  return CoherenceResult{};
}

VertexSubset link(const ArtinSystem& sys, int v) {
  if (v < 0 || v >= sys.vertex_count())
    throw input_error("vertex index " + std::to_string(v) + " out of range");
  std::vector<int> out;
  for (int w = 0; w < sys.vertex_count(); ++w)
    if (sys.adjacent(v, w)) out.push_back(w);
  return VertexSubset(std::move(out));
}

VertexSubset star(const ArtinSystem& sys, int v) {
  VertexSubset s = link(sys, v);
  s.idx.insert(std::lower_bound(s.idx.begin(), s.idx.end(), v), v);
  return s;
}

std::vector<VertexSubset> direct_factor_partition(const ArtinSystem& sys) {
  const int n = sys.vertex_count();
  std::vector<int> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      auto m = sys.label_opt(u, v);
      bool commute = m && *m == 2;
      if (!commute) root[find(u)] = find(v);
    }
  std::vector<std::vector<int>> buckets(n);
  for (int v = 0; v < n; ++v) buckets[find(v)].push_back(v);
  std::vector<VertexSubset> parts;
  for (auto& b : buckets)
    if (!b.empty()) parts.emplace_back(std::move(b));
  std::sort(parts.begin(), parts.end(),
            [](const VertexSubset& a, const VertexSubset& b) { return a.idx[0] < b.idx[0]; });
  return parts;
}

bool is_complete(const ArtinSystem& sys) {
  const int n = sys.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!sys.adjacent(u, v)) return false;
  return true;
}

std::vector<VertexSubset> connected_components(const ArtinSystem& sys) {
  const int n = sys.vertex_count();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::deque<int> q{s};
    comp[s] = nc;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y = 0; y < n; ++y)
        if (comp[y] == -1 && sys.adjacent(x, y)) {
          comp[y] = nc;
          q.push_back(y);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> buckets(nc);
  for (int v = 0; v < n; ++v) buckets[comp[v]].push_back(v);
  std::vector<VertexSubset> out;
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

bool is_connected(const ArtinSystem& sys) { return connected_components(sys).size() == 1; }

GroupClass classify_group(const ArtinSystem& sys) {
  bool abelian = is_complete(sys);
  for (const Edge& e : sys.edges())
    if (e.m != 2) abelian = false;
  if (abelian) return GroupClass{GroupClass::FreeAbelian, sys.vertex_count()};
  return GroupClass{GroupClass::Large, 0};
}

}  // namespace eafc
