#pragma once

#include <gmpxx.h>

#include <string>

namespace cellstrat {

/// Exact integer used for boundary matrices and Smith invariants.
using BigInt = mpz_class;
/// Exact rational used for arrangement coefficients and feasibility.
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace cellstrat
