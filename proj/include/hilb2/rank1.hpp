#pragma once

#include <optional>

#include "hilb2/exact.hpp"

namespace hilb2 {

// Which arm of the Pell case split produced the nef boundary.
enum class ConeCase { SquareNoPell5, PellUnit, Pell5 };

const char* to_string(ConeCase c);

// The nef cone of the Hilbert scheme of two points on a degree-2d K3
// with cyclic Picard group, as two exact boundary slopes in the (L, delta)
// plane: L - s*delta is nef iff s <= nef_slope, and the dual cone is
// spanned by delta and L - dual_slope*delta.
struct ConeDescription {
    Rat nef_slope;
    Rat dual_slope;
    ConeCase case_tag;
    std::optional<PellSolution> witness;  // absent only for SquareNoPell5
};

// Case split on x^2 - 4d y^2 = 5, then d square, then x^2 - d y^2 = 1.
// d <= 0 is rejected.
ConeDescription nef_cone(const Int& d);

// How the vanishing of H^1 of L - n*delta is certified, in priority
// order: interior of the nef cone (Kawamata-Viehweg), big-nef boundary,
// isotropic boundary fibration, or at/beyond the dual-cone slope.
enum class VanishingCertificate {
    KVAmple,
    KVBigNefBoundary,
    IsotropicFibration,
    Verbitsky,
    NoCertificate,
};

const char* to_string(VanishingCertificate c);

VanishingCertificate vanishing_certificate(const Int& d, const Int& n);

struct Rank1Gauss {
    bool surjective;
    VanishingCertificate cert;
};

// Surjectivity of the k-th Gaussian map of the degree-2d polarization on
// a K3 with cyclic Picard group: certified by the vanishing certificate
// at n = k + 2.
Rank1Gauss gauss_surjective_rank1(const Int& d, const Int& k);

// The projective plane: the k-th Gaussian map of a*H is surjective for
// a >= k - 1 (nef cone of the Hilbert square spanned by H and H - delta).
bool p2_gauss_surjective(const Int& a, const Int& k);

}  // namespace hilb2
