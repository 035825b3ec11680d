#include "eafc/subgroups.hpp"

#include "eafc/dihedral.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

namespace eafc {

Word unchecked_word(const ArtinSystem& host, std::vector<Syllable>&& syllables);

G0Map G0Map::defaults(const ArtinSystem& sys) {
  G0Map map;
  for (const Edge& e : sys.edges())
    map.b_role.push_back(sys.name(e.u) < sys.name(e.v) ? e.v : e.u);
  return map;
}

namespace {

void validate_map(const ArtinSystem& sys, const G0Map& map) {
  if (map.b_role.size() != sys.edges().size())
    throw input_error("orientation map does not match the edge list");
  for (size_t i = 0; i < map.b_role.size(); ++i) {
    const Edge& e = sys.edges()[i];
    if (map.b_role[i] != e.u && map.b_role[i] != e.v)
      throw input_error("orientation map entry is not an endpoint of its edge");
  }
}

}  // namespace

std::vector<int> g0_image(const ArtinSystem& sys, const G0Map& map, const Word& w) {
  if (&w.host() != &sys) throw input_error("word does not belong to this system");
  validate_map(sys, map);
  std::vector<Int> sums(sys.vertex_count(), 0);
  for (const Syllable& s : w.syllables()) sums[s.gen] += s.exp;
  std::vector<int> out;
  out.reserve(sys.edges().size());
  for (size_t i = 0; i < sys.edges().size(); ++i) {
    int n = sys.edges()[i].m / 2;
    out.push_back(mod_floor(sums[map.b_role[i]], n));
  }
  return out;
}

bool in_g0(const ArtinSystem& sys, const G0Map& map, const Word& w) {
  auto img = g0_image(sys, map, w);
  return std::all_of(img.begin(), img.end(), [](int r) { return r == 0; });
}

Int g0_index(const ArtinSystem& sys) {
  Int prod = 1;
  for (const Edge& e : sys.edges()) prod *= e.m / 2;
  return prod;
}

SchreierData reidemeister_schreier_g0(const ArtinSystem& sys, const G0Map& map,
                                      const std::vector<Word>& gens,
                                      long long state_limit) {
  validate_map(sys, map);
  if (gens.empty()) throw input_error("subgroup generator list must be nonempty");
  for (const Word& g : gens)
    if (&g.host() != &sys) throw input_error("generator word over a different system");

  // Tracked coordinates: edges with half-label > 1.
  std::vector<size_t> tracked;
  for (size_t i = 0; i < sys.edges().size(); ++i)
    if (sys.edges()[i].m / 2 > 1) tracked.push_back(i);
  std::vector<int> state_mod(tracked.size());
  for (size_t t = 0; t < tracked.size(); ++t) state_mod[t] = sys.edges()[tracked[t]].m / 2;

  // Residue increment of each subgroup generator over the tracked coordinates.
  const int ng = static_cast<int>(gens.size());
  std::vector<std::vector<int>> delta(ng, std::vector<int>(tracked.size(), 0));
  for (int g = 0; g < ng; ++g) {
    std::vector<int> img = g0_image(sys, map, gens[g]);
    for (size_t t = 0; t < tracked.size(); ++t) delta[g][t] = img[tracked[t]];
  }

  std::map<std::vector<int>, int> state_id;
  std::vector<std::vector<int>> states;
  std::vector<Word> transversal;

  std::vector<int> zero(tracked.size(), 0);
  state_id[zero] = 0;
  states.push_back(zero);
  transversal.push_back(Word(sys));

  struct Arrow {
    int from, gen, to;
    bool tree;
  };
  std::vector<Arrow> arrows;

  for (size_t q = 0; q < states.size(); ++q) {
    for (int g = 0; g < ng; ++g) {
      std::vector<int> next = states[q];
      for (size_t t = 0; t < tracked.size(); ++t)
        next[t] = (next[t] + delta[g][t]) % state_mod[t];
      auto it = state_id.find(next);
      bool tree = false;
      int to;
      if (it == state_id.end()) {
        to = static_cast<int>(states.size());
        if (to >= state_limit) throw input_error("residue image too large to enumerate");
        state_id[next] = to;
        states.push_back(next);
        transversal.push_back(concat(transversal[q], gens[g]));
        tree = true;
      } else {
        to = it->second;
      }
      arrows.push_back({static_cast<int>(q), g, to, tree});
    }
  }

  SchreierData data;
  data.index = static_cast<Int>(states.size());
  data.transversal = transversal;
  for (const Arrow& ar : arrows) {
    if (ar.tree) continue;
    data.generators.push_back(
        concat(concat(transversal[ar.from], gens[ar.gen]), invert(transversal[ar.to])));
  }
  return data;
}

SchreierData reidemeister_schreier_g0(const ArtinSystem& sys, const G0Map& map,
                                      long long state_limit) {
  std::vector<Word> gens;
  for (int v = 0; v < sys.vertex_count(); ++v)
    gens.push_back(Word::from_syllables(sys, {{v, 1}}));
  return reidemeister_schreier_g0(sys, map, gens, state_limit);
}

long long kernel_phi_rank(const ArtinSystem& sys) {
  if (!is_connected(sys) ||
      sys.edges().size() + 1 != static_cast<size_t>(sys.vertex_count()))
    throw input_error("total-exponent kernel rank is only computed for tree systems");
  long long rank = 0;
  for (const Edge& e : sys.edges()) rank += e.m - 1;
  return rank;
}

LargenessCertificate largeness_certificate(const ArtinSystem& sys) {
  GroupClass cls = classify_group(sys);
  LargenessCertificate cert;
  if (cls.kind == GroupClass::FreeAbelian) {
    cert.kind = LargenessCertificate::FreeAbelian;
    cert.rank = cls.rank;
    return cert;
  }
  // First non-adjacent pair in canonical order: retraction onto it is free
  // of rank 2.
  for (int u = 0; u < sys.vertex_count(); ++u)
    for (int v = u + 1; v < sys.vertex_count(); ++v)
      if (!sys.adjacent(u, v)) {
        cert.kind = LargenessCertificate::FreeRetraction;
        cert.u = u;
        cert.v = v;
        return cert;
      }
  // Complete graph, so some edge has label >= 4; use the first one.
  for (const Edge& e : sys.edges()) {
    if (e.m <= 2) continue;
    int n = e.m / 2;
    cert.kind = LargenessCertificate::DihedralRoute;
    cert.u = e.u;
    cert.v = e.v;
    cert.n = n;
    // Center (uv)^n, then the free basis (uv)^i u (uv)^-i, then the other
    // generators; together they span the index-n residue kernel of this edge
    // joined with the complementary factors.
    DihedralContext ctx = DihedralContext::make(n, sys.name(e.u), sys.name(e.v));
    auto lift = [&](const Word& w) {
      std::vector<Syllable> out;
      for (const Syllable& s : w.syllables())
        out.push_back({s.gen == 0 ? e.u : e.v, s.exp});
      return unchecked_word(sys, std::move(out));
    };
    for (const Word& w : appropriate_gens(ctx)) cert.subgroup_gens.push_back(lift(w));
    for (int g = 0; g < sys.vertex_count(); ++g)
      if (g != e.u && g != e.v)
        cert.subgroup_gens.push_back(unchecked_word(sys, {{g, 1}}));
    // Quotient: kill the center and every non-dihedral generator; what is
    // left is free on the n conjugate generators.
    for (size_t i = 0; i < cert.subgroup_gens.size(); ++i)
      cert.quotient.generators.push_back("c" + std::to_string(i));
    cert.quotient.relators.push_back({{0, 1}});
    for (size_t i = 1 + static_cast<size_t>(n); i < cert.subgroup_gens.size(); ++i)
      cert.quotient.relators.push_back({{static_cast<int>(i), 1}});
    return cert;
  }
  throw input_error("internal: unclassified system");  // unreachable for valid input
}

bool verify_certificate(const ArtinSystem& sys, const LargenessCertificate& cert) {
  switch (cert.kind) {
    case LargenessCertificate::FreeAbelian: {
      GroupClass cls = classify_group(sys);
      return cls.kind == GroupClass::FreeAbelian && cls.rank == cert.rank;
    }
    case LargenessCertificate::FreeRetraction:
      return cert.u >= 0 && cert.v >= 0 && cert.u != cert.v && cert.u < sys.vertex_count() &&
             cert.v < sys.vertex_count() && !sys.adjacent(cert.u, cert.v);
    case LargenessCertificate::DihedralRoute: {
      auto m = sys.label_opt(cert.u, cert.v);
      if (!m || *m / 2 != cert.n || cert.n < 2) return false;
      if (cert.subgroup_gens.empty()) return false;
      // Every claimed subgroup generator must lie in the residue kernel of
      // the edge (exponent sum of the b-role endpoint v divisible by n).
      for (const Word& w : cert.subgroup_gens) {
        if (&w.host() != &sys) return false;
        Int sum = 0;
        for (const Syllable& s : w.syllables())
          if (s.gen == cert.v) sum += s.exp;
        if (mod_floor(sum, cert.n) != 0) return false;
      }
      // The quotient presentation must visibly be free of rank >= 2: every
      // relator kills a single generator outright, and at least two
      // generators survive.
      if (cert.quotient.generators.size() != cert.subgroup_gens.size()) return false;
      std::vector<char> killed(cert.quotient.generators.size(), 0);
      for (const auto& rel : cert.quotient.relators) {
        if (rel.size() != 1) return false;
        auto [gen, exp] = rel[0];
        if (gen < 0 || static_cast<size_t>(gen) >= killed.size() || (exp != 1 && exp != -1))
          return false;
        killed[gen] = 1;
      }
      size_t surviving = 0;
      for (char k : killed)
        if (!k) ++surviving;
      if (surviving < 2) return false;
      AbelianInvariants inv = abelianization_invariants(cert.quotient);
      return inv.torsion.empty() && inv.free_rank == static_cast<int>(surviving);
    }
  }
  return false;
}

EquationOutcome check_equation_property(const WordProblemSolver& solver, const G0Map& map,
                                        const Word& x, const Word& y, const Word& z) {
  const ArtinSystem& sys = solver.system();
  if (!in_g0(sys, map, x) || !in_g0(sys, map, y) || !in_g0(sys, map, z))
    return EquationOutcome::Vacuous;
  if (!solver.are_equal(conjugate(y, x), y)) return EquationOutcome::Vacuous;
  if (!solver.are_equal(conjugate(x, z), y)) return EquationOutcome::Vacuous;
  return solver.are_equal(x, y) ? EquationOutcome::Confirmed : EquationOutcome::Violation;
}

}  // namespace eafc
