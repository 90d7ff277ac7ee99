#pragma once

#include <string>
#include <vector>

#include "hilb2/exact.hpp"

namespace hilb2 {

// A divisor class on the surface, as coordinates in the lattice basis.
struct SurfaceClass {
    std::vector<Int> coords;

    bool operator==(const SurfaceClass&) const = default;
    bool is_zero() const;
    SurfaceClass operator-() const;
    SurfaceClass scaled(const Int& m) const;
    // True when every coordinate is even; half() then divides by two.
    bool all_even() const;
    SurfaceClass half() const;
    std::string str() const;
};

// A class D - a*delta on the Hilbert scheme of two points; a > 0 points
// away from the exceptional direction.
struct Hilb2Class {
    SurfaceClass surf;
    Int a;

    bool operator==(const Hilb2Class&) const = default;
    std::string str() const;
};

enum class EffectivityKind { Effective, NotEffective, Unknown };

struct Effectivity {
    EffectivityKind kind;
    std::string reason;  // set for Unknown

    bool operator==(const EffectivityKind k) const { return kind == k; }
};

const char* to_string(EffectivityKind k);

// The Picard lattice of a polarized K3 surface: an even symmetric Gram
// matrix of signature (1, rank-1) together with a distinguished ample
// class. Immutable after construction; construction verifies the
// signature by exact congruence diagonalization.
class PicLattice {
  public:
    PicLattice(int rank, std::vector<Int> gram_row_major, SurfaceClass ample,
               std::vector<std::string> labels = {});

    int rank() const { return rank_; }
    const std::vector<Int>& gram() const { return gram_; }
    const Int& gram_at(int i, int j) const { return gram_[static_cast<size_t>(i) * rank_ + j]; }
    const SurfaceClass& ample() const { return ample_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Intersection pairing on the surface.
    Int inner(const SurfaceClass& u, const SurfaceClass& v) const;
    Int self(const SurfaceClass& v) const { return inner(v, v); }
    Int degree(const SurfaceClass& v) const { return inner(ample_, v); }

    // Beauville-Bogomolov form on H^2 of the Hilbert scheme:
    // q(D - a delta, E - b delta) = D.E - 2ab, q(delta) = -2.
    Int q_self(const Hilb2Class& v) const;
    Int q_pair(const Hilb2Class& u, const Hilb2Class& v) const;

    // True when the surface part is divisible by two, the reduced normal
    // form for divisibility-2 classes. The zero class is rejected.
    bool divisibility_two(const Hilb2Class& kappa) const;

    // All D with D.D = square and ample.D = degree (degree > 0), in
    // lexicographic coordinate order. Complete by decomposing against
    // the polarization: the orthogonal complement is negative definite,
    // so the residual equation is an exact ellipsoid enumeration.
    std::vector<SurfaceClass> enumerate_classes(const Int& square, const Int& degree) const;

    // Same, with the degree measured against an arbitrary class of
    // positive self-intersection instead of the stored ample class.
    std::vector<SurfaceClass> enumerate_classes_wrt(const SurfaceClass& pol, const Int& square,
                                                    const Int& degree) const;

    // Riemann-Roch effectivity rule: D != 0 with D.D >= -2 is effective
    // (resp. not) as ample.D is positive (resp. negative). Outside that
    // range the rule is inconclusive and Unknown is returned.
    Effectivity is_effective(const SurfaceClass& v) const;

  private:
    void check_class(const SurfaceClass& v) const;

    int rank_;
    std::vector<Int> gram_;
    SurfaceClass ample_;
    std::vector<std::string> labels_;
};

// Enumeration rank cap (default 6, override via HILB2_RANK_CAP).
int rank_cap();

}  // namespace hilb2
