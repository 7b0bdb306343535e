#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace diagramma {

// Exact arithmetic scalars. mpq_class keeps denominators positive and
// fractions reduced, which is exactly the Rational contract we need.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rat& q) { return q.get_str(); }

inline Rat pow_rat(const Rat& q, unsigned e) {
    Rat r = 1;
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace diagramma
