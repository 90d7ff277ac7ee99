#include "hilb2/rank1.hpp"

namespace hilb2 {

const char* to_string(ConeCase c) {
    switch (c) {
        case ConeCase::SquareNoPell5: return "SquareNoPell5";
        case ConeCase::PellUnit: return "PellUnit";
        case ConeCase::Pell5: return "Pell5";
    }
    return "?";
}

const char* to_string(VanishingCertificate c) {
    switch (c) {
        case VanishingCertificate::KVAmple: return "KVAmple";
        case VanishingCertificate::KVBigNefBoundary: return "KVBigNefBoundary";
        case VanishingCertificate::IsotropicFibration: return "IsotropicFibration";
        case VanishingCertificate::Verbitsky: return "Verbitsky";
        case VanishingCertificate::NoCertificate: return "NoCertificate";
    }
    return "?";
}

namespace {

// Minimal positive solution of x^2 - (2t)^2 y^2 = c for square
// coefficient d = t^2, by pairing divisors of c: (x - 2ty)(x + 2ty) = c.
std::optional<PellSolution> pell5_square_coeff(const Int& t, const Int& c) {
    std::optional<PellSolution> best;
    for (Int r = 1; r * r <= c; ++r) {
        if (c % r != 0) continue;
        Int s = c / r;
        if ((s - r) % 2 != 0) continue;
        Int x = (r + s) / 2;
        Int fourty = s - x;  // = 2ty
        if (fourty <= 0) continue;
        if (fourty % (2 * t) != 0) continue;
        Int y = fourty / (2 * t);
        if (!best || x < best->a) best = PellSolution{x, y, 4 * t * t, c};
    }
    return best;
}

}  // namespace

ConeDescription nef_cone(const Int& d) {
    if (d <= 0) throw std::domain_error("nef_cone: d must be positive");
    auto root = isqrt(d);
    std::optional<PellSolution> five;
    if (root.is_square)
        five = pell5_square_coeff(root.root, 5);
    else
        five = pell_general_min(4 * d, 5);

    if (five) {
        // Nef boundary L - 2d(b/a) delta, dual ray L - a/(2b) delta.
        return {make_rat(2 * d * five->b, five->a), make_rat(five->a, 2 * five->b),
                ConeCase::Pell5, five};
    }
    if (root.is_square) {
        Rat t(root.root);
        return {t, t, ConeCase::SquareNoPell5, std::nullopt};
    }
    PellSolution u = pell_unit_min(d);
    return {make_rat(d * u.b, u.a), make_rat(u.a, u.b), ConeCase::PellUnit, u};
}

VanishingCertificate vanishing_certificate(const Int& d, const Int& n) {
    if (d <= 0 || n <= 0)
        throw std::domain_error("vanishing_certificate: d and n must be positive");
    ConeDescription cone = nef_cone(d);
    Rat nn(n);
    if (nn < cone.nef_slope) return VanishingCertificate::KVAmple;
    if (nn == cone.nef_slope) {
        Int q = 2 * d - 2 * n * n;
        if (q > 0) return VanishingCertificate::KVBigNefBoundary;
        if (q == 0) return VanishingCertificate::IsotropicFibration;
        // q < 0 on the nef boundary cannot occur; fall through to the
        // dual-slope test so the function stays total.
    }
    if (nn >= cone.dual_slope) return VanishingCertificate::Verbitsky;
    return VanishingCertificate::NoCertificate;
}

Rank1Gauss gauss_surjective_rank1(const Int& d, const Int& k) {
    if (d <= 0) throw std::domain_error("gauss_surjective_rank1: d must be positive");
    if (k < 0) throw std::domain_error("gauss_surjective_rank1: k must be non-negative");
    VanishingCertificate cert = vanishing_certificate(d, k + 2);
    return {cert != VanishingCertificate::NoCertificate, cert};
}

bool p2_gauss_surjective(const Int& a, const Int& k) {
    if (a < 1) throw std::domain_error("p2_gauss_surjective: a must be >= 1");
    if (k < 0) throw std::domain_error("p2_gauss_surjective: k must be non-negative");
    return a >= k - 1;
}

}  // namespace hilb2
