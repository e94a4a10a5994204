#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace rbond {

// Exact rational arithmetic for average degrees and bound values.
// All quantities at play are tiny (degrees, vertex counts), so a
// 64-bit numerator/denominator never overflows in practice.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

}  // namespace rbond
