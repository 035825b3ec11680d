#include "eafc/dihedral.hpp"

#include <algorithm>

namespace eafc {

namespace {

constexpr long long kExpansionLimit = 2'000'000;

void require_host(const DihedralContext& ctx, const Word& w) {
  if (&w.host() != &ctx.sys())
    throw input_error("word is not over this dihedral context");
}

void push_ax(AxWord& out, AxGen g, const Int& e) {
  if (e == 0) return;
  if (!out.empty() && out.back().gen == g) {
    out.back().exp += e;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(AxSyllable{g, e});
}

}  // namespace

DihedralContext DihedralContext::make(int n, std::string a, std::string b) {
  if (n < 1) throw input_error("dihedral parameter n must be >= 1");
  auto sys = std::make_shared<const ArtinSystem>(
      std::vector<std::string>{a, b},
      std::vector<std::tuple<std::string, std::string, int>>{{a, b, 2 * n}});
  return DihedralContext(n, std::move(sys));
}

AxWord to_ax(const DihedralContext& ctx, const Word& w) {
  require_host(ctx, w);
  AxWord out;
  for (const Syllable& s : w.syllables()) {
    if (s.gen == ctx.a()) {
      push_ax(out, AxGen::A, s.exp);
      continue;
    }
    // b^k = (a^-1 x)^k; no closed form in F(a,x), so expand letter by letter.
    if (abs(s.exp) > kExpansionLimit)
      throw input_error("b-exponent too large to expand over {a,x}");
    long long k = to_ll(s.exp);
    for (long long i = 0; i < std::abs(k); ++i) {
      if (k > 0) {
        push_ax(out, AxGen::A, -1);
        push_ax(out, AxGen::X, 1);
      } else {
        push_ax(out, AxGen::X, -1);
        push_ax(out, AxGen::A, 1);
      }
    }
  }
  return out;
}

CentralCoords central_coords(const DihedralContext& ctx, const AxWord& w) {
  const int n = ctx.n();
  CentralCoords cc;
  cc.x_exponent_sum = 0;
  for (const AxSyllable& s : w) {
    if (s.gen == AxGen::A) {
      if (!cc.syllables.empty() && !cc.syllables.back().is_x) {
        cc.syllables.back().a_exp += s.exp;
        if (cc.syllables.back().a_exp == 0) cc.syllables.pop_back();
      } else {
        cc.syllables.push_back(CentralSyllable{false, s.exp, 0});
      }
    } else {
      cc.x_exponent_sum += s.exp;
      int cls = mod_floor(s.exp, n);
      if (cls == 0) continue;
      if (!cc.syllables.empty() && cc.syllables.back().is_x) {
        cc.syllables.back().x_cls = (cc.syllables.back().x_cls + cls) % n;
        if (cc.syllables.back().x_cls == 0) cc.syllables.pop_back();
      } else {
        cc.syllables.push_back(CentralSyllable{true, 0, cls});
      }
    }
  }
  return cc;
}

CentralCoords central_coords(const DihedralContext& ctx, const Word& w) {
  return central_coords(ctx, to_ax(ctx, w));
}

bool is_trivial_dihedral(const DihedralContext& ctx, const Word& w) {
  return central_coords(ctx, w).trivial();
}

int cn_quotient_image(const DihedralContext& ctx, const Word& w) {
  require_host(ctx, w);
  Int b_exp = 0;
  for (const Syllable& s : w.syllables())
    if (s.gen == ctx.b()) b_exp += s.exp;
  return mod_floor(b_exp, ctx.n());
}

namespace {

using KernelLetters = std::vector<std::pair<Int, Int>>;  // (index, exponent), reduced

void push_kernel(KernelLetters& out, const Int& idx, const Int& exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().first == idx) {
    out.back().second += exp;
    if (out.back().second == 0) out.pop_back();
    return;
  }
  out.emplace_back(idx, exp);
}

}  // namespace

SemidirectCoords semidirect_coords(const DihedralContext& ctx, const Word& w) {
  require_host(ctx, w);
  const int n = ctx.n();
  // Schreier rewrite along the coset line of <b>'s exponent: a never shifts
  // the coset, so a^e at state s contributes a_s^e; b only moves the state.
  KernelLetters letters;
  Int state = 0;
  for (const Syllable& s : w.syllables()) {
    if (s.gen == ctx.a())
      push_kernel(letters, state, s.exp);
    else
      state += s.exp;
  }

  // Shift indices into the basis range [0, n) one relation step at a time,
  // farthest index first. Each step rewrites one letter a_j as a conjugate of
  // a_{j -+ n} by n-1 consecutive basis-side letters, strictly shrinking the
  // distance profile.
  auto distance = [&](const Int& j) -> Int {
    if (j < 0) return -j;
    if (j >= n) return j - (n - 1);
    return 0;
  };
  for (;;) {
    size_t worst = letters.size();
    Int worst_d = 0;
    for (size_t i = 0; i < letters.size(); ++i)
      if (Int d = distance(letters[i].first); d > worst_d) {
        worst_d = d;
        worst = i;
      }
    if (worst == letters.size()) break;
    auto [j, e] = letters[worst];
    KernelLetters repl;
    if (j >= n) {
      // a_j^e = (a_{j-n+1}..a_{j-1})^-1 a_{j-n}^e (a_{j-n+1}..a_{j-1})
      for (Int i = j - 1; i >= j - n + 1; --i) push_kernel(repl, i, -1);
      push_kernel(repl, j - n, e);
      for (Int i = j - n + 1; i <= j - 1; ++i) push_kernel(repl, i, 1);
    } else {
      // a_j^e = (a_{j+1}..a_{j+n-1}) a_{j+n}^e (a_{j+1}..a_{j+n-1})^-1
      for (Int i = j + 1; i <= j + n - 1; ++i) push_kernel(repl, i, 1);
      push_kernel(repl, j + n, e);
      for (Int i = j + n - 1; i >= j + 1; --i) push_kernel(repl, i, -1);
    }
    KernelLetters next;
    for (size_t i = 0; i < worst; ++i) push_kernel(next, letters[i].first, letters[i].second);
    for (auto& [idx, ex] : repl) push_kernel(next, idx, ex);
    for (size_t i = worst + 1; i < letters.size(); ++i)
      push_kernel(next, letters[i].first, letters[i].second);
    letters = std::move(next);
    if (letters.size() > static_cast<size_t>(kExpansionLimit))
      throw input_error("kernel rewriting exceeded the expansion limit");
  }

  SemidirectCoords sc;
  sc.t_exponent = state;
  sc.kernel.reserve(letters.size());
  for (auto& [idx, exp] : letters) sc.kernel.emplace_back(static_cast<int>(idx), exp);
  return sc;
}

std::vector<Word> kernel_basis(const DihedralContext& ctx) {
  std::vector<Word> basis;
  for (int i = 0; i < ctx.n(); ++i) {
    std::vector<Syllable> syl;
    for (int k = 0; k < i; ++k) {
      syl.push_back(Syllable{ctx.a(), 1});
      syl.push_back(Syllable{ctx.b(), 1});
    }
    syl.push_back(Syllable{ctx.a(), 1});
    for (int k = 0; k < i; ++k) {
      syl.push_back(Syllable{ctx.b(), -1});
      syl.push_back(Syllable{ctx.a(), -1});
    }
    basis.push_back(Word::from_syllables(ctx.sys(), std::move(syl)));
  }
  return basis;
}

std::vector<Word> appropriate_gens(const DihedralContext& ctx) {
  std::vector<Syllable> center;
  for (int k = 0; k < ctx.n(); ++k) {
    center.push_back(Syllable{ctx.a(), 1});
    center.push_back(Syllable{ctx.b(), 1});
  }
  std::vector<Word> gens{Word::from_syllables(ctx.sys(), std::move(center))};
  for (Word& b : kernel_basis(ctx)) gens.push_back(std::move(b));
  return gens;
}

}  // namespace eafc
