#pragma once

#include "eafc/artin_system.hpp"
#include "eafc/base.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eafc {

struct Syllable {
  int gen;  // vertex index in the host system
  Int exp;  // nonzero
  bool operator==(const Syllable&) const = default;
};

// A group element as a freely reduced syllable word over the generators of a
// host system. Words are always stored reduced; every constructor and
// operation re-establishes that. The host is referenced, not owned: the
// system must outlive its words (same contract as string_view).
class Word {
 public:
  explicit Word(const ArtinSystem& host) : host_(&host) {}
  static Word from_syllables(const ArtinSystem& host, std::vector<Syllable> syllables);

  const ArtinSystem& host() const { return *host_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  Int length() const;  // sum of |exponent|

  bool operator==(const Word& o) const { return host_ == o.host_ && syl_ == o.syl_; }

 private:
  friend Word unchecked_word(const ArtinSystem&, std::vector<Syllable>&&);
  const ArtinSystem* host_;
  std::vector<Syllable> syl_;
};

// Syntax: whitespace-separated tokens `name` or `name^k`, k a nonzero integer
// (possibly negative). Empty/blank text is the identity.
Word parse_word(const ArtinSystem& sys, std::string_view text);
std::string format_word(const Word& w);  // inverse of parse_word

// prod(u,v,m) * prod(v,u,m)^-1 for the edge {u,v}; m even, so this is
// (uv)^(m/2) * ((vu)^(m/2))^-1.
Word artin_relator(const ArtinSystem& sys, int u, int v);

// Retraction onto the standard parabolic on S: delete syllables outside S and
// freely reduce. The result stays hosted by the same system (supported on S).
Word retraction(const VertexSubset& S, const Word& w);

// Exponent-sum vector over all generators (a homomorphism to Z^V: every even
// Artin relator has zero exponent sum in each generator).
std::vector<Int> abelian_image(const Word& w);
Int total_exponent(const Word& w);

Word invert(const Word& w);
Word concat(const Word& a, const Word& b);      // throws input_error on host mismatch
Word conjugate(const Word& w, const Word& c);   // c w c^-1
Word power(const Word& w, const Int& k);

// Generic finite presentation (independent of any Artin system); relators are
// freely reduced syllable sequences over generator indices.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::pair<int, Int>>> relators;
};

}  // namespace eafc
