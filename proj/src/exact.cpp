#include "hilb2/exact.hpp"

#include <cstdlib>

namespace hilb2 {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

SqrtResult isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    return {root, rem == 0};
}

namespace {

// Continued-fraction state for sqrt(n), n non-square: tracks the
// (P + sqrt(n)) / Q triple and the last two convergents p/q.
struct CfSqrt {
    Int n, a0;
    Int P{0}, Q{1};
    Int a;
    Int p_prev{1}, p;
    Int q_prev{0}, q{1};

    explicit CfSqrt(const Int& n_) : n(n_) {
        a0 = isqrt(n).root;
        a = a0;
        p = a0;
    }

    // Advance to the next convergent.
    void step() {
        P = a * Q - P;
        Q = (n - P * P) / Q;
        a = (a0 + P) / Q;
        Int pn = a * p + p_prev;
        Int qn = a * q + q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
    }

    Int value() const { return p * p - n * q * q; }
};

long pell_y_cap() {
    if (const char* s = std::getenv("HILB2_PELL_Y_CAP")) {
        long v = std::atol(s);
        if (v > 0) return v;
    }
    return 10000000L;
}

// First convergent of sqrt(n) with p^2 - n q^2 == c, scanning two full
// periods (detected by the second occurrence of value 1). Convergent
// numerators increase strictly, so the first hit is the minimal solution.
std::optional<PellSolution> convergent_scan(const Int& n, const Int& c) {
    CfSqrt cf(n);
    int unit_hits = 0;
    while (true) {
        Int v = cf.value();
        if (v == c) return PellSolution{cf.p, cf.q, n, c};
        if (v == 1 && ++unit_hits == 2) return std::nullopt;
        cf.step();
    }
}

// Direct search for the minimal positive solution of x^2 - n y^2 = c,
// c >= sqrt(n). The least positive member of every unit-orbit lies in
// (sqrt(c), sqrt(c) * eps], so y <= sqrt(c) * eps / (2 sqrt(n)); any
// integer overestimate of that bound keeps the search complete.
std::optional<PellSolution> bounded_orbit_scan(const Int& n, const Int& c,
                                               const PellSolution& unit) {
    Int sqrt_c_up = isqrt(c).root + 1;
    Int sqrt_n_dn = isqrt(n).root;  // n non-square so this is a strict floor
    Int eps_up = unit.a + unit.b * (sqrt_n_dn + 1);
    Int y_max = sqrt_c_up * eps_up / (2 * sqrt_n_dn) + 1;
    if (y_max > pell_y_cap())
        throw CapExceededError("pell_general_min: orbit search bound " +
                               y_max.get_str() + " exceeds HILB2_PELL_Y_CAP");
    for (Int y = 1; y <= y_max; ++y) {
        auto s = isqrt(c + n * y * y);
        if (s.is_square) return PellSolution{s.root, y, n, c};
    }
    return std::nullopt;
}

}  // namespace

PellSolution pell_unit_min(const Int& n) {
    if (n <= 0) throw std::domain_error("pell_unit_min: n must be positive");
    if (isqrt(n).is_square)
        throw std::domain_error("pell_unit_min: n must not be a perfect square");
    CfSqrt cf(n);
    while (cf.value() != 1) cf.step();
    return {cf.p, cf.q, n, Int(1)};
}

std::optional<PellSolution> pell_general_min(const Int& n, const Int& c) {
    if (n <= 0) throw std::domain_error("pell_general_min: n must be positive");
    if (isqrt(n).is_square)
        throw std::domain_error("pell_general_min: n must not be a perfect square");
    if (c <= 0) throw std::domain_error("pell_general_min: c must be positive");

    PellSolution unit = pell_unit_min(n);
    std::optional<PellSolution> best;
    for (Int g = 1; g * g <= c; ++g) {
        if (c % (g * g) != 0) continue;
        Int cp = c / (g * g);
        std::optional<PellSolution> prim;
        if (cp == 1) {
            prim = unit;
        } else if (cp * cp < n) {
            prim = convergent_scan(n, cp);
        } else {
            prim = bounded_orbit_scan(n, cp, unit);
        }
        if (prim) {
            Int a = g * prim->a, b = g * prim->b;
            if (!best || a < best->a) best = PellSolution{a, b, n, c};
        }
    }
    return best;
}

}  // namespace hilb2
