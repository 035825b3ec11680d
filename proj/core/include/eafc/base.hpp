#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace eafc {

// Arbitrary-precision integer used for word exponents, abelian images and
// integer matrix work. Small values stay inline (no allocation).
using Int = boost::multiprecision::cpp_int;

// Errors caused by user-supplied data (files, words, subsets, flags).
// Anything else escaping the library is a bug, not an input problem.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Floor modulus: result always in [0, n) for n > 0.
inline int mod_floor(const Int& x, int n) {
  Int r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

inline long long to_ll(const Int& x) { return static_cast<long long>(x); }

}  // namespace eafc
