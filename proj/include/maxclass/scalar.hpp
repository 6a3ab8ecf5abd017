#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace maxclass {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Scalar = mpq_class;

// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_string(const Scalar& value);

// Accepts "num/den" or a bare integer "num". Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

}  // namespace maxclass
