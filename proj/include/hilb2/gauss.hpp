#pragma once

#include <optional>
#include <string>

#include "hilb2/positivity.hpp"
#include "hilb2/rank1.hpp"

namespace hilb2 {

// The inequality actually evaluated for a threshold verdict.
struct BoundsReport {
    Rat threshold;
    Rat actual;
    bool strict;  // actual must exceed (strict) or reach (non-strict) the threshold
    bool holds() const { return strict ? actual > threshold : actual >= threshold; }
    std::string str() const;
};

// Surjectivity verdict for a higher Gaussian map. Yes always carries a
// certificate: a rank-1 vanishing certificate, a positivity verdict for
// the Kawamata-Viehweg route, or an evaluated inequality chain. Unknown
// is never upgraded; it carries the blocking reason and any witnesses.
struct GaussVerdict {
    bool surjective;
    std::optional<VanishingCertificate> vanishing;
    std::optional<PositivityVerdict> positivity;
    std::optional<BoundsReport> bounds;
    std::string reason;  // set when not surjective
};

// Surjectivity of the k-th Gaussian map of an ample L on the surface,
// via vanishing of H^1 of L - (k+2)delta on the Hilbert square. Rank 1
// with L the generator uses the full certificate chain; otherwise the
// class must be big and nef by the obstruction enumerator.
GaussVerdict gauss_surjective_k3(const PicLattice& lat, const SurfaceClass& L, const Int& k);

// Gaussian maps of a smooth hyperplane section of a degree-2d K3 with
// cyclic Picard group: surjective when d >= 4(k+2)^2 + 5/4, for k > 1.
GaussVerdict curve_gauss_rank1(const Int& d, const Int& k);

// Arbitrary Picard rank: d > 9(k+2)^2 plus the high-degree movable and
// big-nef scans for L - (k+2)delta, for k > 1.
GaussVerdict curve_gauss_general(const PicLattice& lat, const SurfaceClass& L, const Int& k);

// Genus thresholds for surjectivity on the general curve: the direct
// bound (least g with g > 4(k+2)^2) and the conservative one obtained
// through the degree route (g = d + 1 with d the least integer at or
// above 4(k+2)^2 + 5/4).
struct MinGenus {
    Int bound;
    Int conservative_bound;
};

MinGenus min_genus(const Int& k);

// Bigness and nefness threshold on the projectivized cotangent bundle:
// holds iff d >= 4(k+2)^2 + 5/4.
bool gounelas_ottem_bound(const Int& d, const Int& k);

}  // namespace hilb2
