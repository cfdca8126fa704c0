#pragma once

#include <gmpxx.h>

#include <string>

namespace qvp {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p/q" with the "/q" omitted for integers.
inline std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sgn(const Rat& r) { return ::sgn(r); }

}  // namespace qvp
