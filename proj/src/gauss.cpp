#include "hilb2/gauss.hpp"

#include <sstream>

namespace hilb2 {

std::string BoundsReport::str() const {
    std::ostringstream os;
    os << actual.get_str() << (strict ? " > " : " >= ") << threshold.get_str() << ": "
       << (holds() ? "holds" : "fails");
    return os.str();
}

namespace {

bool is_primitive_generator(const SurfaceClass& L) {
    // Rank-1 coordinate vector (+-1).
    return L.coords.size() == 1 && (L.coords[0] == 1 || L.coords[0] == -1);
}

GaussVerdict from_positivity(PositivityVerdict v) {
    GaussVerdict g;
    g.surjective = v.yes();
    if (!g.surjective)
        g.reason = v.kind == PositivityVerdict::Kind::No
                       ? "obstruction class blocks big-and-nefness of L - (k+2)d"
                       : "effectivity of listed classes undecided";
    g.positivity = std::move(v);
    return g;
}

}  // namespace

GaussVerdict gauss_surjective_k3(const PicLattice& lat, const SurfaceClass& L, const Int& k) {
    if (k < 0) throw std::domain_error("gauss_surjective_k3: k must be non-negative");
    if (lat.self(L) <= 0 || lat.degree(L) <= 0)
        throw std::invalid_argument("gauss_surjective_k3: L is not ample");

    if (lat.rank() == 1 && is_primitive_generator(L)) {
        Int d = lat.self(L) / 2;
        Rank1Gauss r = gauss_surjective_rank1(d, k);
        GaussVerdict g;
        g.surjective = r.surjective;
        g.vanishing = r.cert;
        if (!r.surjective) g.reason = "no vanishing certificate at n = k + 2";
        return g;
    }
    try {
        return from_positivity(is_positive(lat, L, k + 2, PositivityMode::BigNef));
    } catch (const DegenerateSquareError& e) {
        GaussVerdict g;
        g.surjective = false;
        g.reason = std::string("DegenerateSquare: ") + e.what();
        return g;
    }
}

GaussVerdict curve_gauss_rank1(const Int& d, const Int& k) {
    if (k <= 1) throw std::domain_error("curve_gauss_rank1: requires k > 1");
    if (d <= 0) throw std::domain_error("curve_gauss_rank1: d must be positive");
    BoundsReport br{make_rat(16 * (k + 2) * (k + 2) + 5, 4), Rat(d), false};
    GaussVerdict g;
    g.surjective = br.holds();
    g.bounds = br;
    if (!g.surjective) g.reason = "degree below threshold: " + br.str();
    return g;
}

GaussVerdict curve_gauss_general(const PicLattice& lat, const SurfaceClass& L, const Int& k) {
    if (k <= 1) throw std::domain_error("curve_gauss_general: requires k > 1");
    if (lat.self(L) <= 0 || lat.degree(L) <= 0)
        throw std::invalid_argument("curve_gauss_general: L is not ample");
    Int d = lat.self(L) / 2;
    BoundsReport br{Rat(9 * (k + 2) * (k + 2)), Rat(d), true};
    if (!br.holds()) {
        GaussVerdict g;
        g.surjective = false;
        g.bounds = br;
        g.reason = "degree bound fails: " + br.str();
        return g;
    }
    PositivityVerdict mv = movable_highdeg(lat, L, k + 2);
    if (!mv.yes()) {
        GaussVerdict g = from_positivity(std::move(mv));
        g.bounds = br;
        return g;
    }
    GaussVerdict g = from_positivity(positive_highdeg(lat, L, k + 2, PositivityMode::BigNef));
    g.bounds = br;
    return g;
}

MinGenus min_genus(const Int& k) {
    if (k <= 1) throw std::domain_error("min_genus: requires k > 1");
    Int base = 4 * (k + 2) * (k + 2);
    // Least degree passing the rank-1 curve criterion is base + 2, and a
    // hyperplane section of a degree-2d K3 has genus d + 1.
    return {base + 1, base + 3};
}

bool gounelas_ottem_bound(const Int& d, const Int& k) {
    if (d <= 0) throw std::domain_error("gounelas_ottem_bound: d must be positive");
    if (k < 0) throw std::domain_error("gounelas_ottem_bound: k must be non-negative");
    return 4 * d >= 16 * (k + 2) * (k + 2) + 5;
}

}  // namespace hilb2
