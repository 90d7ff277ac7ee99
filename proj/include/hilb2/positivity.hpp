#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "hilb2/lattice.hpp"

namespace hilb2 {

// q(L - a delta) <= 0: the positivity criteria do not apply.
struct DegenerateSquareError : std::domain_error {
    using std::domain_error::domain_error;
};

// High-degree shortcut called below its degree bound; use the full scan.
struct BoundNotMetError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class WitnessKind { MinusTwo, MinusTen };

const char* to_string(WitnessKind k);

// A wall class kappa obstructing positivity of L - a*delta:
// kappa = D - b*delta with q(kappa) = -2, or kappa = 2D - b*delta with
// q(kappa) = -10 and divisibility two. 'pairing' is q(L - a delta, kappa)
// and d_part is D itself (the effective surface class).
struct ObstructionWitness {
    WitnessKind kind;
    Hilb2Class kappa;
    Int pairing;
    SurfaceClass d_part;
    Effectivity eff;
};

// An effective class violating the k-very-ampleness window
// 2 D^2 <= L.D <= D^2 + k + 1 <= 2k + 2.
struct KnutsenWitness {
    SurfaceClass d;
    Int square;  // D^2
    Int deg;     // L.D
    Int k;
    Effectivity eff;
};

// A failed scalar inequality, e.g. L^2 >= 4k.
struct DegreeShortfall {
    Int lhs;
    Int rhs;
    std::string what;
};

using Witness = std::variant<ObstructionWitness, KnutsenWitness, DegreeShortfall>;

struct PositivityVerdict {
    enum class Kind { Yes, No, Indeterminate } kind;
    std::optional<Witness> witness;      // set iff No
    std::vector<SurfaceClass> pending;   // set iff Indeterminate: classes of unknown effectivity

    bool yes() const { return kind == Kind::Yes; }
    static PositivityVerdict pass() { return {Kind::Yes, std::nullopt, {}}; }
    static PositivityVerdict fail(Witness w) { return {Kind::No, std::move(w), {}}; }
    static PositivityVerdict indeterminate(std::vector<SurfaceClass> p) {
        return {Kind::Indeterminate, std::nullopt, std::move(p)};
    }
};

const char* to_string(PositivityVerdict::Kind k);

enum class PositivityMode { BigNef, Ample };

// All (-2)-wall candidates kappa = D - b*delta against L - a*delta:
// b^2 <= d/(d - a^2), D^2 = 2b^2 - 2, L.D in [max(1, ceil(sqrt(2d D^2))), 2ab],
// pairing <= 0, surface part not NotEffective. Requires d > a^2 where
// L^2 = 2d; otherwise DegenerateSquareError.
std::vector<ObstructionWitness> minus2_candidates(const PicLattice& lat, const SurfaceClass& L,
                                                  const Int& a);

// All (-10)-wall candidates kappa = 2D - b*delta: b odd,
// b^2 <= 5d/(d - a^2), D^2 = (b^2 - 5)/2, L.D <= ab.
std::vector<ObstructionWitness> minus10_candidates(const PicLattice& lat, const SurfaceClass& L,
                                                   const Int& a);

// L - a*delta lies in the interior of the movable cone iff no (-2)-wall
// candidate exists.
PositivityVerdict is_movable(const PicLattice& lat, const SurfaceClass& L, const Int& a);

// Ample: movable and no (-10) candidate with pairing <= 0.
// BigNef: movable and no (-10) candidate with pairing < 0 (a wall through
// the class leaves it on the nef boundary, still big since q > 0).
PositivityVerdict is_positive(const PicLattice& lat, const SurfaceClass& L, const Int& a,
                              PositivityMode mode);

// d > 4a^2/3: movable iff no effective D with D^2 = 0 and L.D <= 2a.
PositivityVerdict movable_highdeg(const PicLattice& lat, const SurfaceClass& L, const Int& a);

// d > 9a^2/4: ample (resp. big and nef) iff movable and no effective D
// with D^2 = -2 and L.D <= a (resp. < a).
PositivityVerdict positive_highdeg(const PicLattice& lat, const SurfaceClass& L, const Int& a,
                                   PositivityMode mode);

// k-very ampleness of L (big and nef, asserted by the caller): L^2 >= 4k
// and no effective divisor in the Knutsen window.
PositivityVerdict knutsen_k_very_ample(const PicLattice& lat, const SurfaceClass& L, const Int& k);

// mL - delta very ample iff mL is 2-very ample; guaranteed for m >= 7.
PositivityVerdict very_ample_mL_minus_delta(const PicLattice& lat, const SurfaceClass& L,
                                            const Int& m);

// L - delta ample iff L is very ample with no lines (effective D, D^2 = -2,
// L.D = 1), or L = 2B with B^2 = 2 and no effective F with F^2 = 0, B.F = 1.
PositivityVerdict h_minus_delta_ample(const PicLattice& lat, const SurfaceClass& L);

// L - 2delta ample iff L is 3-very ample, or L = 2B with B^2 = 4 and no
// effective E (E^2 = -2, B.E = 1) nor F (F^2 = 0, B.F = 2).
PositivityVerdict h_minus_2delta_ample(const PicLattice& lat, const SurfaceClass& L);

}  // namespace hilb2
