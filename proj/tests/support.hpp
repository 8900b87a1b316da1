#pragma once

#include "seifertq/numeric.hpp"

namespace seifertq::test {

inline BigComplex cx(const char* re, const char* im) { return BigComplex(Real(re), Real(im)); }

inline bool near(const BigComplex& a, const BigComplex& b, const char* tol) { return abs(a - b) < Real(tol); }
inline bool near(const Real& a, const Real& b, const char* tol) { return abs(a - b) < Real(tol); }

}  // namespace seifertq::test
