#include "hilb2/positivity.hpp"

namespace hilb2 {

const char* to_string(WitnessKind k) {
    return k == WitnessKind::MinusTwo ? "MinusTwo" : "MinusTen";
}

const char* to_string(PositivityVerdict::Kind k) {
    switch (k) {
        case PositivityVerdict::Kind::Yes: return "Yes";
        case PositivityVerdict::Kind::No: return "No";
        case PositivityVerdict::Kind::Indeterminate: return "Indeterminate";
    }
    return "?";
}

namespace {

// L^2 = 2d with d > a^2, else the criteria degenerate.
Int half_square_checked(const PicLattice& lat, const SurfaceClass& L, const Int& a,
                        const char* who) {
    Int ell2 = lat.self(L);
    if (ell2 <= 0) throw std::invalid_argument(std::string(who) + ": L must have positive square");
    Int d = ell2 / 2;
    if (a <= 0) throw std::domain_error(std::string(who) + ": a must be positive");
    if (d <= a * a)
        throw DegenerateSquareError(std::string(who) + ": q(L - " + a.get_str() +
                                    "d) = " + Int(ell2 - 2 * a * a).get_str() +
                                    " <= 0 (DegenerateSquare)");
    return d;
}

// Smallest y >= 1 with y^2 >= 2 d x (the Hodge-index floor for D^2 = x > 0).
Int hodge_floor(const Int& d, const Int& x) {
    if (x <= 0) return 1;
    auto r = isqrt(2 * d * x);
    return r.is_square ? r.root : r.root + 1;
}

// First-effective / any-unknown reduction shared by every scan.
struct ScanState {
    std::optional<Witness> first_no;
    std::vector<SurfaceClass> pending;

    void feed(Witness w, const Effectivity& eff, const SurfaceClass& d_part) {
        if (eff.kind == EffectivityKind::Effective) {
            if (!first_no) first_no = std::move(w);
        } else if (eff.kind == EffectivityKind::Unknown) {
            pending.push_back(d_part);
        }
    }
    PositivityVerdict verdict() const {
        if (first_no) return PositivityVerdict::fail(*first_no);
        if (!pending.empty()) return PositivityVerdict::indeterminate(pending);
        return PositivityVerdict::pass();
    }
};

}  // namespace

std::vector<ObstructionWitness> minus2_candidates(const PicLattice& lat, const SurfaceClass& L,
                                                  const Int& a) {
    Int d = half_square_checked(lat, L, a, "minus2_candidates");
    std::vector<ObstructionWitness> out;
    for (Int b = 1; b * b * (d - a * a) <= d; ++b) {
        Int x = 2 * b * b - 2;  // D^2 forced by q(kappa) = -2
        Int ymax = 2 * a * b;
        for (Int y = hodge_floor(d, x); y <= ymax; ++y) {
            for (auto& D : lat.enumerate_classes_wrt(L, x, y)) {
                Effectivity eff = lat.is_effective(D);
                if (eff.kind == EffectivityKind::NotEffective) continue;
                Int pairing = y - 2 * a * b;
                out.push_back({WitnessKind::MinusTwo, Hilb2Class{D, b}, pairing, D, eff});
            }
        }
    }
    return out;
}

std::vector<ObstructionWitness> minus10_candidates(const PicLattice& lat, const SurfaceClass& L,
                                                   const Int& a) {
    Int d = half_square_checked(lat, L, a, "minus10_candidates");
    std::vector<ObstructionWitness> out;
    for (Int b = 1; b * b * (d - a * a) <= 5 * d; b += 2) {
        Int x = (b * b - 5) / 2;  // even since b is odd
        Int ymax = a * b;
        for (Int y = hodge_floor(d, x); y <= ymax; ++y) {
            for (auto& D : lat.enumerate_classes_wrt(L, x, y)) {
                Effectivity eff = lat.is_effective(D);
                if (eff.kind == EffectivityKind::NotEffective) continue;
                Int pairing = 2 * y - 2 * a * b;
                out.push_back(
                    {WitnessKind::MinusTen, Hilb2Class{D.scaled(2), b}, pairing, D, eff});
            }
        }
    }
    return out;
}

PositivityVerdict is_movable(const PicLattice& lat, const SurfaceClass& L, const Int& a) {
    ScanState st;
    for (auto& w : minus2_candidates(lat, L, a)) {
        Effectivity eff = w.eff;
        SurfaceClass dp = w.d_part;
        st.feed(std::move(w), eff, dp);
    }
    return st.verdict();
}

PositivityVerdict is_positive(const PicLattice& lat, const SurfaceClass& L, const Int& a,
                              PositivityMode mode) {
    PositivityVerdict mv = is_movable(lat, L, a);
    if (!mv.yes()) return mv;
    ScanState st;
    for (auto& w : minus10_candidates(lat, L, a)) {
        bool blocks = mode == PositivityMode::Ample ? w.pairing <= 0 : w.pairing < 0;
        if (!blocks) continue;
        Effectivity eff = w.eff;
        SurfaceClass dp = w.d_part;
        st.feed(std::move(w), eff, dp);
    }
    return st.verdict();
}

PositivityVerdict movable_highdeg(const PicLattice& lat, const SurfaceClass& L, const Int& a) {
    Int ell2 = lat.self(L);
    if (ell2 <= 0) throw std::invalid_argument("movable_highdeg: L must have positive square");
    if (a <= 0) throw std::domain_error("movable_highdeg: a must be positive");
    Int d = ell2 / 2;
    if (3 * d <= 4 * a * a)
        throw BoundNotMetError("movable_highdeg: requires d > 4a^2/3 (d = " + d.get_str() +
                               ", a = " + a.get_str() + "); use is_movable");
    ScanState st;
    for (Int y = 1; y <= 2 * a; ++y) {
        for (auto& D : lat.enumerate_classes_wrt(L, 0, y)) {
            Effectivity eff = lat.is_effective(D);
            if (eff.kind == EffectivityKind::NotEffective) continue;
            ObstructionWitness w{WitnessKind::MinusTwo, Hilb2Class{D, Int(1)}, y - 2 * a, D, eff};
            st.feed(std::move(w), eff, D);
        }
    }
    return st.verdict();
}

PositivityVerdict positive_highdeg(const PicLattice& lat, const SurfaceClass& L, const Int& a,
                                   PositivityMode mode) {
    Int ell2 = lat.self(L);
    if (ell2 <= 0) throw std::invalid_argument("positive_highdeg: L must have positive square");
    if (a <= 0) throw std::domain_error("positive_highdeg: a must be positive");
    Int d = ell2 / 2;
    if (4 * d <= 9 * a * a)
        throw BoundNotMetError("positive_highdeg: requires d > 9a^2/4 (d = " + d.get_str() +
                               ", a = " + a.get_str() + "); use is_positive");
    PositivityVerdict mv = movable_highdeg(lat, L, a);
    if (!mv.yes()) return mv;
    // Walls 2D - delta: ample is blocked at L.D <= a, big-and-nef only at
    // L.D < a (pairing q(L - a d, 2D - d) = 2(L.D - a)).
    Int ymax = mode == PositivityMode::Ample ? a : a - 1;
    ScanState st;
    for (Int y = 1; y <= ymax; ++y) {
        for (auto& D : lat.enumerate_classes_wrt(L, -2, y)) {
            Effectivity eff = lat.is_effective(D);
            if (eff.kind == EffectivityKind::NotEffective) continue;
            ObstructionWitness w{WitnessKind::MinusTen, Hilb2Class{D.scaled(2), Int(1)},
                                 2 * (y - a), D, eff};
            st.feed(std::move(w), eff, D);
        }
    }
    return st.verdict();
}

PositivityVerdict knutsen_k_very_ample(const PicLattice& lat, const SurfaceClass& L,
                                       const Int& k) {
    if (k < 0) throw std::domain_error("knutsen_k_very_ample: k must be non-negative");
    Int ell2 = lat.self(L);
    if (ell2 < 4 * k)
        return PositivityVerdict::fail(
            DegreeShortfall{ell2, 4 * k, "L^2 >= 4k fails"});
    ScanState st;
    Int s = -k;
    if (s % 2 != 0) s += 1;  // smallest even value >= -k
    for (; s <= k + 1; s += 2) {
        Int ylo = 2 * s;
        if (ylo < 1) ylo = 1;
        Int yhi = s + k + 1;
        if (yhi > 2 * k + 2) yhi = 2 * k + 2;
        for (Int y = ylo; y <= yhi; ++y) {
            for (auto& D : lat.enumerate_classes_wrt(L, s, y)) {
                Effectivity eff = lat.is_effective(D);
                if (eff.kind == EffectivityKind::NotEffective) continue;
                st.feed(KnutsenWitness{D, s, y, k, eff}, eff, D);
            }
        }
    }
    return st.verdict();
}

PositivityVerdict very_ample_mL_minus_delta(const PicLattice& lat, const SurfaceClass& L,
                                            const Int& m) {
    if (m < 1) throw std::domain_error("very_ample_mL_minus_delta: m must be >= 1");
    PositivityVerdict v = knutsen_k_very_ample(lat, L.scaled(m), 2);
    if (m >= 7 && !v.yes())
        throw std::logic_error(
            "very_ample_mL_minus_delta: enumerator contradicts the m >= 7 guarantee");
    return v;
}

PositivityVerdict h_minus_delta_ample(const PicLattice& lat, const SurfaceClass& L) {
    Int ell2 = lat.self(L);
    if (ell2 <= 0) throw std::invalid_argument("h_minus_delta_ample: L must have positive square");
    if (ell2 < 4)
        return PositivityVerdict::fail(
            DegreeShortfall{ell2 - 2, 1, "q(L - d) = L^2 - 2 <= 0, never ample"});

    if (L.all_even()) {
        SurfaceClass B = L.half();
        if (lat.self(B) == 2) {
            // Double of a degree-2 class: decided by isotropic F with B.F = 1.
            ScanState st;
            for (auto& F : lat.enumerate_classes_wrt(B, 0, 1)) {
                Effectivity eff = lat.is_effective(F);
                if (eff.kind == EffectivityKind::NotEffective) continue;
                ObstructionWitness w{WitnessKind::MinusTwo, Hilb2Class{F, Int(1)},
                                     2 * lat.inner(B, F) - 2, F, eff};
                st.feed(std::move(w), eff, F);
            }
            return st.verdict();
        }
    }
    PositivityVerdict va = knutsen_k_very_ample(lat, L, 1);
    if (!va.yes()) return va;
    // Lines: effective D with D^2 = -2 and L.D = 1.
    ScanState st;
    for (auto& D : lat.enumerate_classes_wrt(L, -2, 1)) {
        Effectivity eff = lat.is_effective(D);
        if (eff.kind == EffectivityKind::NotEffective) continue;
        ObstructionWitness w{WitnessKind::MinusTen, Hilb2Class{D.scaled(2), Int(1)}, Int(0), D,
                             eff};
        st.feed(std::move(w), eff, D);
    }
    return st.verdict();
}

PositivityVerdict h_minus_2delta_ample(const PicLattice& lat, const SurfaceClass& L) {
    Int ell2 = lat.self(L);
    if (ell2 <= 0)
        throw std::invalid_argument("h_minus_2delta_ample: L must have positive square");

    if (L.all_even()) {
        SurfaceClass B = L.half();
        if (lat.self(B) == 4) {
            ScanState st;
            for (auto& E : lat.enumerate_classes_wrt(B, -2, 1)) {
                Effectivity eff = lat.is_effective(E);
                if (eff.kind == EffectivityKind::NotEffective) continue;
                ObstructionWitness w{WitnessKind::MinusTen, Hilb2Class{E.scaled(2), Int(1)},
                                     2 * (lat.inner(L, E) - 2), E, eff};
                st.feed(std::move(w), eff, E);
            }
            for (auto& F : lat.enumerate_classes_wrt(B, 0, 2)) {
                Effectivity eff = lat.is_effective(F);
                if (eff.kind == EffectivityKind::NotEffective) continue;
                ObstructionWitness w{WitnessKind::MinusTwo, Hilb2Class{F, Int(1)},
                                     lat.inner(L, F) - 4, F, eff};
                st.feed(std::move(w), eff, F);
            }
            return st.verdict();
        }
    }
    return knutsen_k_very_ample(lat, L, 3);
}

}  // namespace hilb2
