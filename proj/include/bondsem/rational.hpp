#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bondsem {

// Exact rational scalar. mpq_class keeps values canonical (reduced fraction,
// positive denominator), so equality is plain value equality and there is no
// rounding anywhere in the library.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" (base 10). Throws std::invalid_argument on
// malformed text or a zero denominator.
inline Rat rat_from_string(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace bondsem
