#include "eafc/word_problem.hpp"

#include "decompose_internal.hpp"
#include "eafc/dihedral.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace eafc {

Word unchecked_word(const ArtinSystem& host, std::vector<Syllable>&& syllables);

namespace {

void append_syllable(std::vector<Syllable>& out, int gen, const Int& exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back({gen, exp});
}

std::vector<Syllable> concat_reduced(const std::vector<Syllable>& a,
                                     const std::vector<Syllable>& b) {
  std::vector<Syllable> out;
  out.reserve(a.size() + b.size());
  out = a;
  for (const Syllable& s : b) append_syllable(out, s.gen, s.exp);
  return out;
}

std::vector<Syllable> invert_syllables(const std::vector<Syllable>& w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

std::vector<Syllable> restrict_reduced(const std::vector<Syllable>& w, const VertexSubset& S) {
  std::vector<Syllable> out;
  for (const Syllable& s : w)
    if (S.contains(s.gen)) append_syllable(out, s.gen, s.exp);
  return out;
}

// Every even Artin relator is balanced per generator, so exponent sums are
// homomorphisms to Z; any nonzero sum certifies nontriviality.
bool abelian_image_zero(const std::vector<Syllable>& w) {
  std::vector<std::pair<int, Int>> sums;
  sums.reserve(8);
  for (const Syllable& s : w) {
    bool found = false;
    for (auto& [g, sum] : sums)
      if (g == s.gen) {
        sum += s.exp;
        found = true;
        break;
      }
    if (!found) sums.emplace_back(s.gen, s.exp);
  }
  for (const auto& [g, sum] : sums)
    if (sum != 0) return false;
  return true;
}

struct AmalgamPiece {
  bool side_star;
  std::vector<Syllable> syl;
};

std::vector<AmalgamPiece> build_pieces(int apex, const VertexSubset& link,
                                       const std::vector<Syllable>& w) {
  std::vector<AmalgamPiece> pieces;
  std::vector<Syllable> pending;  // leading letters from the edge subgroup
  for (const Syllable& s : w) {
    if (link.contains(s.gen)) {
      if (pieces.empty())
        append_syllable(pending, s.gen, s.exp);
      else
        append_syllable(pieces.back().syl, s.gen, s.exp);
      continue;
    }
    bool star_side = (s.gen == apex);
    if (!pieces.empty() && pieces.back().side_star == star_side) {
      append_syllable(pieces.back().syl, s.gen, s.exp);
    } else {
      AmalgamPiece p{star_side, std::move(pending)};
      pending.clear();
      append_syllable(p.syl, s.gen, s.exp);
      pieces.push_back(std::move(p));
    }
  }
  if (pieces.empty() && !pending.empty()) pieces.push_back({false, std::move(pending)});
  return pieces;
}

}  // namespace

std::vector<SyllablePiece> amalgam_syllable_decomposition(const ArtinSystem& sys, int apex,
                                                          const Word& w) {
  if (&w.host() != &sys) throw input_error("word does not belong to this system");
  if (apex < 0 || apex >= sys.vertex_count()) throw input_error("apex vertex out of range");
  VertexSubset lk = link(sys, apex);
  std::vector<SyllablePiece> out;
  for (auto& p : build_pieces(apex, lk, w.syllables()))
    out.push_back({p.side_star, std::move(p.syl)});
  return out;
}

struct WordProblemSolver::Impl {
  const ArtinSystem* sys;
  DecomposeOptions opts;

  struct DihedralFactor {
    int u, v;  // root indices; u -> ctx generator a, v -> ctx generator b
    DihedralContext ctx;
  };
  struct NodeData {
    detail::CaseInfo info;
    std::vector<int> comp_of;             // FreeProduct: vertex -> part index
    std::vector<DihedralFactor> dihedrals;  // CompleteBase
  };

  mutable std::mutex mu;
  mutable std::map<std::vector<int>, std::shared_ptr<const NodeData>> memo;

  explicit Impl(const ArtinSystem& s, DecomposeOptions o) : sys(&s), opts(std::move(o)) {
    EafcCheck chk = validate_eafc(s);
    if (!chk.ok)
      throw input_error("system is not of FC type: triangle " + s.name(chk.triangle[0]) + "," +
                        s.name(chk.triangle[1]) + "," + s.name(chk.triangle[2]) +
                        " has more than one label exceeding 2");
    if (opts.split_vertex && !s.find_vertex(*opts.split_vertex))
      throw input_error("unknown split vertex '" + *opts.split_vertex + "'");
  }

  std::shared_ptr<const NodeData> node_for(const VertexSubset& S) const {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = memo.find(S.idx);
      if (it != memo.end()) return it->second;
    }
    auto data = std::make_shared<NodeData>();
    data->info = detail::analyze_subsystem(*sys, S, opts);
    if (data->info.kind == NodeKind::FreeProduct) {
      data->comp_of.assign(sys->vertex_count(), -1);
      for (size_t k = 0; k < data->info.parts.size(); ++k)
        for (int v : data->info.parts[k].idx) data->comp_of[v] = static_cast<int>(k);
    } else if (data->info.kind == NodeKind::CompleteBase) {
      for (const CompleteFactor& f : data->info.factors)
        if (f.kind == CompleteFactor::Dihedral)
          data->dihedrals.push_back(
              {f.u, f.v, DihedralContext::make(f.n, sys->name(f.u), sys->name(f.v))});
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = memo.emplace(S.idx, std::move(data));
    return it->second;
  }

  bool trivial_on(const VertexSubset& S, const std::vector<Syllable>& w) const {
    if (w.empty()) return true;
    if (!abelian_image_zero(w)) return false;
    auto data = node_for(S);
    const detail::CaseInfo& info = data->info;
    switch (info.kind) {
      case NodeKind::FreeProduct: {
        // Alternating pieces per component; delete trivial pieces and merge
        // neighbours until stable. Every surviving piece is nontrivial in its
        // factor, so the normal form is nonempty iff any piece survives.
        struct Piece {
          int comp;
          std::vector<Syllable> syl;
        };
        std::vector<Piece> pieces;
        for (const Syllable& s : w) {
          int c = data->comp_of[s.gen];
          if (!pieces.empty() && pieces.back().comp == c)
            append_syllable(pieces.back().syl, s.gen, s.exp);
          else
            pieces.push_back({c, {s}});
        }
        bool changed = true;
        while (changed) {
          changed = false;
          for (size_t i = 0; i < pieces.size(); ++i) {
            if (!trivial_on(info.parts[pieces[i].comp], pieces[i].syl)) continue;
            pieces.erase(pieces.begin() + static_cast<long>(i));
            if (i > 0 && i < pieces.size() && pieces[i - 1].comp == pieces[i].comp) {
              pieces[i - 1].syl = concat_reduced(pieces[i - 1].syl, pieces[i].syl);
              pieces.erase(pieces.begin() + static_cast<long>(i));
            }
            changed = true;
            break;
          }
        }
        return pieces.empty();
      }
      case NodeKind::DirectProduct: {
        for (const VertexSubset& part : info.parts) {
          std::vector<Syllable> proj = restrict_reduced(w, part);
          if (!trivial_on(part, proj)) return false;
        }
        return true;
      }
      case NodeKind::CompleteBase: {
        // Cyclic factors are settled by the exponent-sum filter above; the
        // dihedral factors need the full normal form.
        for (const auto& f : data->dihedrals) {
          std::vector<Syllable> proj;
          for (const Syllable& s : w) {
            if (s.gen == f.u)
              append_syllable(proj, f.ctx.a(), s.exp);
            else if (s.gen == f.v)
              append_syllable(proj, f.ctx.b(), s.exp);
          }
          if (proj.empty()) continue;
          if (!is_trivial_dihedral(f.ctx, unchecked_word(f.ctx.sys(), std::move(proj))))
            return false;
        }
        return true;
      }
      case NodeKind::Amalgam: {
        std::vector<AmalgamPiece> pieces = build_pieces(info.apex, info.link, w);
        for (;;) {
          if (pieces.empty()) return true;
          if (pieces.size() == 1) {
            const AmalgamPiece& p = pieces[0];
            return trivial_on(p.side_star ? info.star : info.delta, p.syl);
          }
          // Find a piece that lies in the edge subgroup <C>: p is in <C> iff
          // p equals its retraction onto C inside its side group.
          size_t found = pieces.size();
          std::vector<Syllable> repl;
          for (size_t i = 0; i < pieces.size(); ++i) {
            const VertexSubset& side = pieces[i].side_star ? info.star : info.delta;
            std::vector<Syllable> c = restrict_reduced(pieces[i].syl, info.link);
            std::vector<Syllable> diff = concat_reduced(pieces[i].syl, invert_syllables(c));
            if (trivial_on(side, diff)) {
              found = i;
              repl = std::move(c);
              break;
            }
          }
          if (found == pieces.size()) return false;  // >= 2 essential pieces
          // Replace the found piece by its edge-subgroup form and merge it
          // into the neighbours (which share a side with each other).
          if (found > 0 && found + 1 < pieces.size()) {
            pieces[found - 1].syl = concat_reduced(
                concat_reduced(pieces[found - 1].syl, repl), pieces[found + 1].syl);
            pieces.erase(pieces.begin() + static_cast<long>(found),
                         pieces.begin() + static_cast<long>(found) + 2);
          } else if (found > 0) {
            pieces[found - 1].syl = concat_reduced(pieces[found - 1].syl, repl);
            pieces.pop_back();
          } else {
            pieces[1].syl = concat_reduced(repl, pieces[1].syl);
            pieces.erase(pieces.begin());
          }
        }
      }
    }
    return false;  // unreachable
  }

  void require_host(const Word& w) const {
    if (&w.host() != sys) throw input_error("word does not belong to this solver's system");
  }
  void require_subset(const VertexSubset& S) const {
    for (int v : S.idx)
      if (v < 0 || v >= sys->vertex_count()) throw input_error("vertex index out of range");
  }
};

WordProblemSolver::WordProblemSolver(const ArtinSystem& sys, DecomposeOptions opts)
    : impl_(std::make_shared<Impl>(sys, std::move(opts))) {}

const ArtinSystem& WordProblemSolver::system() const { return *impl_->sys; }

bool WordProblemSolver::is_trivial(const Word& w) const {
  impl_->require_host(w);
  return impl_->trivial_on(VertexSubset::full(*impl_->sys), w.syllables());
}

bool WordProblemSolver::are_equal(const Word& a, const Word& b) const {
  impl_->require_host(a);
  impl_->require_host(b);
  return impl_->trivial_on(VertexSubset::full(*impl_->sys),
                           concat_reduced(a.syllables(), invert_syllables(b.syllables())));
}

bool WordProblemSolver::in_standard_parabolic(const VertexSubset& S, const Word& w) const {
  impl_->require_host(w);
  impl_->require_subset(S);
  // w lies in <S> iff w equals its retraction onto S (the retraction is a
  // homomorphism fixing <S> pointwise).
  std::vector<Syllable> rho = restrict_reduced(w.syllables(), S);
  return impl_->trivial_on(VertexSubset::full(*impl_->sys),
                           concat_reduced(w.syllables(), invert_syllables(rho)));
}

bool WordProblemSolver::in_parabolic(const VertexSubset& S, const Word& conjugator,
                                     const Word& w) const {
  impl_->require_host(conjugator);
  impl_->require_host(w);
  // w in c<S>c^-1 iff c^-1 w c in <S>.
  std::vector<Syllable> u = concat_reduced(
      concat_reduced(invert_syllables(conjugator.syllables()), w.syllables()),
      conjugator.syllables());
  return in_standard_parabolic(S, unchecked_word(*impl_->sys, std::move(u)));
}

bool WordProblemSolver::in_quasi_centralizer(const VertexSubset& S, const Word& g) const {
  impl_->require_host(g);
  impl_->require_subset(S);
  VertexSubset full = VertexSubset::full(*impl_->sys);
  for (int s : S.idx) {
    // g s g^-1 s^-1 must vanish.
    std::vector<Syllable> w = g.syllables();
    w = concat_reduced(w, {{s, 1}});
    w = concat_reduced(w, invert_syllables(g.syllables()));
    w = concat_reduced(w, {{s, -1}});
    if (!impl_->trivial_on(full, w)) return false;
  }
  return true;
}

bool is_trivial(const ArtinSystem& sys, const Word& w) {
  return WordProblemSolver(sys).is_trivial(w);
}

bool are_equal_words(const ArtinSystem& sys, const Word& a, const Word& b) {
  return WordProblemSolver(sys).are_equal(a, b);
}

RootClosureReport check_root_closure(const WordProblemSolver& solver, const VertexSubset& S,
                                     const Word& conjugator, const Word& w, int max_n) {
  if (max_n < 1) throw input_error("root closure scan needs max_n >= 1");
  RootClosureReport report;
  bool base_in = solver.in_parabolic(S, conjugator, w);
  Word pw = w;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) pw = concat(pw, w);
    bool power_in = solver.in_parabolic(S, conjugator, pw);
    report.rows.push_back({n, power_in, base_in});
    if (power_in && !base_in) report.violation = true;
  }
  return report;
}

}  // namespace eafc
