#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace msf7 {

// Exact rational; mpq_class keeps values canonical after every operation.
using Scalar = mpq_class;
using Integer = mpz_class;

// Accepts "3", "-1/2", "+4/6" (reduced on read).
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace msf7
