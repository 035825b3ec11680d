#include "eafc/kernel_omega.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace eafc {

Word unchecked_word(const ArtinSystem& host, std::vector<Syllable>&& syllables);

OmegaSystem build_omega(const ArtinSystem& sys, int apex) {
  if (apex < 0 || apex >= sys.vertex_count()) throw input_error("apex vertex out of range");
  EafcCheck chk = validate_eafc(sys);
  if (!chk.ok)
    throw input_error("system is not of FC type: triangle " + sys.name(chk.triangle[0]) + "," +
                      sys.name(chk.triangle[1]) + "," + sys.name(chk.triangle[2]) +
                      " has more than one label exceeding 2");
  for (int v = 0; v < sys.vertex_count(); ++v)
    if (v != apex && !sys.adjacent(apex, v))
      throw input_error("the apex must be adjacent to every other vertex");

  std::vector<std::string> names;
  std::vector<OmegaSystem::VertexInfo> info;
  std::vector<int> first_copy(sys.vertex_count(), -1);  // omega index of u__0
  for (int u = 0; u < sys.vertex_count(); ++u) {
    if (u == apex) continue;
    int half = sys.label(apex, u) / 2;
    first_copy[u] = static_cast<int>(names.size());
    for (int j = 0; j < half; ++j) {
      names.push_back(sys.name(u) + "__" + std::to_string(j));
      info.push_back({u, j});
    }
  }
  if (names.empty()) throw input_error("the apex has no neighbours to build a kernel graph on");

  std::vector<std::tuple<std::string, std::string, int>> edges;
  for (const Edge& e : sys.edges()) {
    if (e.u == apex || e.v == apex) continue;
    int hu = sys.label(apex, e.u) / 2;
    int hv = sys.label(apex, e.v) / 2;
    for (int j = 0; j < hu; ++j)
      for (int k = 0; k < hv; ++k)
        edges.emplace_back(names[first_copy[e.u] + j], names[first_copy[e.v] + k], e.m);
  }
  return OmegaSystem{ArtinSystem(names, edges), &sys, apex, std::move(info)};
}

Word embed(const OmegaSystem& os, const Word& w) {
  if (&w.host() != &os.omega) throw input_error("word does not belong to this kernel system");
  std::vector<Syllable> out;
  auto push = [&out](int gen, const Int& exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
      out.back().exp += exp;
      if (out.back().exp == 0) out.pop_back();
      return;
    }
    out.push_back({gen, exp});
  };
  for (const Syllable& s : w.syllables()) {
    const auto& vi = os.info[static_cast<size_t>(s.gen)];
    push(os.apex, vi.shift);
    push(vi.orig, s.exp);
    push(os.apex, -vi.shift);
  }
  return unchecked_word(*os.gamma, std::move(out));
}

}  // namespace eafc
