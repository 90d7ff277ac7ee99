#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hilb2 {

// Arbitrary-precision integers and exact rationals. All decision paths in
// this library compare exact values; no floating point is used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical rational num/den with den > 0 and gcd(|num|, den) = 1.
// Throws std::invalid_argument on zero denominator.
Rat make_rat(const Int& num, const Int& den);

// Search caps were exceeded (rank cap, Pell fallback cap). The CLI maps
// this to its own exit code, distinct from invalid input.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SqrtResult {
    Int root;        // floor(sqrt(n))
    bool is_square;  // root * root == n
};

// Integer square root of n >= 0. Negative input throws std::domain_error.
SqrtResult isqrt(const Int& n);

// A solution of x^2 - n y^2 = c with a, b > 0 and a minimal among all
// positive solutions of that equation.
struct PellSolution {
    Int a;
    Int b;
    Int n;
    Int c;
};

// Minimal positive solution of x^2 - n y^2 = 1 for n > 0 not a perfect
// square, from the continued-fraction expansion of sqrt(n). The first
// convergent p/q with p^2 - n q^2 = 1 is the fundamental solution.
PellSolution pell_unit_min(const Int& n);

// Minimal positive solution of x^2 - n y^2 = c for n > 0 non-square and
// c > 0, or nullopt when the equation has no solution with y > 0.
//
// Completeness: for each square divisor g^2 | c the primitive equation
// x^2 - n y^2 = c/g^2 is solved and the results rescaled.
//  - c/g^2 < sqrt(n): every positive primitive solution is a convergent
//    of sqrt(n); two full periods of the expansion are scanned.
//  - otherwise: every orbit of solutions under the unit group has its
//    least positive member x + y sqrt(n) in (sqrt(c'), sqrt(c') * eps]
//    with eps the fundamental unit, which bounds y; that range is
//    searched directly. If the bound exceeds the configured cap
//    (HILB2_PELL_Y_CAP, default 10^7) a CapExceededError is thrown.
std::optional<PellSolution> pell_general_min(const Int& n, const Int& c);

}  // namespace hilb2
