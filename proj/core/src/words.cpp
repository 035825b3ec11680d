#include "eafc/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace eafc {

namespace {

// Append one syllable to a reduced prefix, keeping it reduced. Cancellation
// can cascade only one level per push, so a running stack stays reduced.
void push_reduced(std::vector<Syllable>& out, int gen, const Int& exp) {
  if (exp == 0) return;
  if (!out.empty() && out.back().gen == gen) {
    out.back().exp += exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(Syllable{gen, exp});
}

std::vector<Syllable> reduce(std::vector<Syllable> in) {
  std::vector<Syllable> out;
  out.reserve(in.size());
  for (auto& s : in) push_reduced(out, s.gen, s.exp);
  return out;
}

}  // namespace

Word unchecked_word(const ArtinSystem& host, std::vector<Syllable>&& reduced) {
  Word w(host);
  w.syl_ = std::move(reduced);
  return w;
}

Word Word::from_syllables(const ArtinSystem& host, std::vector<Syllable> syllables) {
  for (const auto& s : syllables)
    if (s.gen < 0 || s.gen >= host.vertex_count())
      throw input_error("syllable generator index out of range");
  return unchecked_word(host, reduce(std::move(syllables)));
}

Int Word::length() const {
  Int n = 0;
  for (const auto& s : syl_) n += abs(s.exp);
  return n;
}

Word parse_word(const ArtinSystem& sys, std::string_view text) {
  std::vector<Syllable> syl;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;
    std::string_view name = tok;
    Int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      name = tok.substr(0, caret);
      std::string_view es = tok.substr(caret + 1);
      if (es.empty()) throw input_error("malformed token '" + std::string(tok) + "'");
      try {
        exp = Int(std::string(es));
      } catch (const std::exception&) {
        throw input_error("malformed exponent in token '" + std::string(tok) + "'");
      }
      if (exp == 0)
        throw input_error("zero exponent in token '" + std::string(tok) + "'");
    }
    auto v = sys.find_vertex(std::string(name));
    if (!v) throw input_error("unknown generator '" + std::string(name) + "'");
    push_reduced(syl, *v, exp);
  }
  return unchecked_word(sys, std::move(syl));
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << w.host().name(s.gen);
    if (s.exp != 1) os << '^' << s.exp.str();
  }
  return os.str();
}

Word artin_relator(const ArtinSystem& sys, int u, int v) {
  int m = sys.label(u, v);
  std::vector<Syllable> syl;
  for (int i = 0; i < m / 2; ++i) {  // prod(u,v,m) = (uv)^(m/2), m even
    syl.push_back(Syllable{u, 1});
    syl.push_back(Syllable{v, 1});
  }
  for (int i = 0; i < m / 2; ++i) {  // (prod(v,u,m))^-1
    syl.push_back(Syllable{u, -1});
    syl.push_back(Syllable{v, -1});
  }
  return Word::from_syllables(sys, std::move(syl));
}

Word retraction(const VertexSubset& S, const Word& w) {
  std::vector<Syllable> out;
  for (const auto& s : w.syllables())
    if (S.contains(s.gen)) push_reduced(out, s.gen, s.exp);
  return unchecked_word(w.host(), std::move(out));
}

std::vector<Int> abelian_image(const Word& w) {
  std::vector<Int> img(w.host().vertex_count(), 0);
  for (const auto& s : w.syllables()) img[s.gen] += s.exp;
  return img;
}

Int total_exponent(const Word& w) {
  Int t = 0;
  for (const auto& s : w.syllables()) t += s.exp;
  return t;
}

Word invert(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables().size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    out.push_back(Syllable{it->gen, -it->exp});
  return unchecked_word(w.host(), std::move(out));
}

Word concat(const Word& a, const Word& b) {
  if (&a.host() != &b.host()) throw input_error("word host mismatch");
  std::vector<Syllable> out = a.syllables();
  for (const auto& s : b.syllables()) push_reduced(out, s.gen, s.exp);
  return unchecked_word(a.host(), std::move(out));
}

Word conjugate(const Word& w, const Word& c) { return concat(concat(c, w), invert(c)); }

Word power(const Word& w, const Int& k) {
  if (k == 0 || w.empty()) return Word(w.host());
  if (k < 0) return invert(power(w, -k));
  // Cyclic reduction: w = h r h^-1 with r cyclically reduced, so w^k = h r^k h^-1.
  // A single-syllable core takes any exponent via plain multiplication; a
  // longer core concatenates without seam cancellation.
  std::vector<Syllable> body = w.syllables();
  std::vector<Syllable> head;
  while (body.size() >= 2 && body.front().gen == body.back().gen) {
    Syllable f = body.front(), b = body.back();
    head.push_back(f);
    body.erase(body.begin());
    body.pop_back();
    if (Int sum = f.exp + b.exp; sum != 0) {
      body.push_back(Syllable{f.gen, sum});  // merged wrap-around syllable
      break;                                 // now cyclically reduced
    }
  }
  std::vector<Syllable> out = head;
  if (body.size() == 1) {
    out.push_back(Syllable{body[0].gen, body[0].exp * k});
  } else {
    if (k * Int(body.size()) > 4'000'000)
      throw input_error("power result too large to materialize");
    for (long long i = 0, kk = to_ll(k); i < kk; ++i)
      out.insert(out.end(), body.begin(), body.end());
  }
  for (auto it = head.rbegin(); it != head.rend(); ++it)
    out.push_back(Syllable{it->gen, -it->exp});
  return Word::from_syllables(w.host(), std::move(out));
}

}  // namespace eafc
