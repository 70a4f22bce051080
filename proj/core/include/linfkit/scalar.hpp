#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lk {

// Exact rational. Arithmetic keeps it reduced; Scalar(p, q) does not, so
// call canonicalize() unless p/q is already in lowest terms.
using Scalar = mpq_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Scalar parse_scalar(std::string_view text);

bool is_scalar_token(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& s);

inline int sign_of(const Scalar& s) { return sgn(s); }

}  // namespace lk
