#include "hilb2/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hilb2 {

bool SurfaceClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

SurfaceClass SurfaceClass::operator-() const {
    SurfaceClass r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

SurfaceClass SurfaceClass::scaled(const Int& m) const {
    SurfaceClass r = *this;
    for (auto& c : r.coords) c *= m;
    return r;
}

bool SurfaceClass::all_even() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c % 2 == 0; });
}

SurfaceClass SurfaceClass::half() const {
    SurfaceClass r = *this;
    for (auto& c : r.coords) c /= 2;
    return r;
}

std::string SurfaceClass::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i];
    }
    os << ")";
    return os.str();
}

std::string Hilb2Class::str() const {
    std::ostringstream os;
    os << surf.str();
    if (a >= 0)
        os << " - " << a << "d";
    else
        os << " + " << -a << "d";
    return os.str();
}

const char* to_string(EffectivityKind k) {
    switch (k) {
        case EffectivityKind::Effective: return "Effective";
        case EffectivityKind::NotEffective: return "NotEffective";
        case EffectivityKind::Unknown: return "Unknown";
    }
    return "?";
}

int rank_cap() {
    if (const char* s = std::getenv("HILB2_RANK_CAP")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 6;
}

namespace {

// Inertia of a symmetric rational matrix by congruence diagonalization
// (Sylvester): returns (positive, negative, zero) pivot counts.
struct Inertia {
    int pos = 0, neg = 0, zero = 0;
};

Inertia inertia_of(std::vector<Rat> m, int n) {
    auto at = [&](int i, int j) -> Rat& { return m[static_cast<size_t>(i) * n + j]; };
    Inertia out;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (!done[i] && at(i, i) != 0) piv = i;
        if (piv < 0) {
            // No nonzero diagonal left: find an off-diagonal entry and
            // fold it onto the diagonal (char 0, so u+v works).
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (at(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
                }
            }
            if (a < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) out.zero++;
                return out;
            }
            for (int k = 0; k < n; ++k) at(a, k) += at(b, k);
            for (int k = 0; k < n; ++k) at(k, a) += at(k, b);
            piv = a;
        }
        Rat d = at(piv, piv);
        if (d > 0)
            out.pos++;
        else
            out.neg++;
        for (int i = 0; i < n; ++i) {
            if (i == piv || done[i]) continue;
            Rat f = at(i, piv) / d;
            if (f == 0) continue;
            for (int k = 0; k < n; ++k) at(i, k) -= f * at(piv, k);
            for (int k = 0; k < n; ++k) at(k, i) -= f * at(k, piv);
        }
        done[piv] = true;
    }
    return out;
}

// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

PicLattice::PicLattice(int rank, std::vector<Int> gram_row_major, SurfaceClass ample,
                       std::vector<std::string> labels)
    : rank_(rank), gram_(std::move(gram_row_major)), ample_(std::move(ample)),
      labels_(std::move(labels)) {
    if (rank_ < 1) throw std::invalid_argument("lattice: rank must be >= 1");
    if (gram_.size() != static_cast<size_t>(rank_) * rank_)
        throw std::invalid_argument("lattice: gram matrix size does not match rank");
    if (ample_.coords.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("lattice: ample vector length does not match rank");
    if (!labels_.empty() && labels_.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("lattice: labels length does not match rank");
    for (int i = 0; i < rank_; ++i) {
        if (gram_at(i, i) % 2 != 0)
            throw std::invalid_argument("lattice: diagonal entries must be even");
        for (int j = i + 1; j < rank_; ++j)
            if (gram_at(i, j) != gram_at(j, i))
                throw std::invalid_argument("lattice: gram matrix must be symmetric");
    }
    std::vector<Rat> m(gram_.begin(), gram_.end());
    Inertia in = inertia_of(std::move(m), rank_);
    if (in.pos != 1 || in.zero != 0 || in.neg != rank_ - 1)
        throw std::invalid_argument("lattice: signature must be (1, rank-1), got (" +
                                    std::to_string(in.pos) + ", " + std::to_string(in.neg) +
                                    ") with " + std::to_string(in.zero) + " radical directions");
    if (self(ample_) <= 0)
        throw std::invalid_argument("lattice: ample class must have positive self-intersection");
}

void PicLattice::check_class(const SurfaceClass& v) const {
    if (v.coords.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("lattice: class length does not match rank");
}

Int PicLattice::inner(const SurfaceClass& u, const SurfaceClass& v) const {
    check_class(u);
    check_class(v);
    Int acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u.coords[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < rank_; ++j) row += gram_at(i, j) * v.coords[j];
        acc += u.coords[i] * row;
    }
    return acc;
}

Int PicLattice::q_self(const Hilb2Class& v) const { return self(v.surf) - 2 * v.a * v.a; }

Int PicLattice::q_pair(const Hilb2Class& u, const Hilb2Class& v) const {
    return inner(u.surf, v.surf) - 2 * u.a * v.a;
}

bool PicLattice::divisibility_two(const Hilb2Class& kappa) const {
    check_class(kappa.surf);
    if (kappa.surf.is_zero() && kappa.a == 0)
        throw std::invalid_argument("divisibility_two: zero class has no divisibility");
    return kappa.surf.all_even();
}

std::vector<SurfaceClass> PicLattice::enumerate_classes(const Int& square,
                                                        const Int& degree) const {
    return enumerate_classes_wrt(ample_, square, degree);
}

std::vector<SurfaceClass> PicLattice::enumerate_classes_wrt(const SurfaceClass& pol,
                                                            const Int& square,
                                                            const Int& degree) const {
    check_class(pol);
    if (degree <= 0) throw std::invalid_argument("enumerate_classes: degree must be positive");
    if (self(pol) <= 0)
        throw std::invalid_argument("enumerate_classes: polarization must have positive square");
    if (rank_ > rank_cap())
        throw CapExceededError("enumerate_classes: rank " + std::to_string(rank_) +
                               " exceeds cap " + std::to_string(rank_cap()) +
                               " (override with HILB2_RANK_CAP)");

    const int r = rank_;
    // w = Gram * pol, so w.D is the pairing pol.D.
    std::vector<Int> w(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) w[i] += gram_at(i, j) * pol.coords[j];

    // Unimodular U with w^T U = (g, 0, ..., 0), g > 0.
    std::vector<Int> U(static_cast<size_t>(r) * r, 0);
    auto u_at = [&](int i, int j) -> Int& { return U[static_cast<size_t>(i) * r + j]; };
    for (int i = 0; i < r; ++i) u_at(i, i) = 1;
    Int g = w[0];
    for (int j = 1; j < r; ++j) {
        Int gn, s, t;
        ext_gcd(g, w[j], gn, s, t);
        Int f0 = w[j] / gn, fj = g / gn;
        for (int i = 0; i < r; ++i) {
            Int c0 = s * u_at(i, 0) + t * u_at(i, j);
            Int cj = -f0 * u_at(i, 0) + fj * u_at(i, j);
            u_at(i, 0) = c0;
            u_at(i, j) = cj;
        }
        g = gn;
    }
    if (g < 0) {
        g = -g;
        for (int i = 0; i < r; ++i) u_at(i, 0) = -u_at(i, 0);
    }

    std::vector<SurfaceClass> out;
    if (degree % g != 0) return out;
    Int z1 = degree / g;

    // Particular solution c0 and kernel basis K (columns 1..r-1 of U).
    SurfaceClass c0{std::vector<Int>(r)};
    for (int i = 0; i < r; ++i) c0.coords[i] = u_at(i, 0) * z1;

    const int m = r - 1;
    if (m == 0) {
        if (self(c0) == square) out.push_back(c0);
        return out;
    }

    // Residual equation over the kernel: z^T M z - 2 b^T z = e with
    // M = -K^T G K positive definite (pol-orthogonal complement).
    auto col = [&](int j) {
        SurfaceClass v{std::vector<Int>(r)};
        for (int i = 0; i < r; ++i) v.coords[i] = u_at(i, j + 1);
        return v;
    };
    std::vector<SurfaceClass> K;
    for (int j = 0; j < m; ++j) K.push_back(col(j));
    std::vector<Rat> M(static_cast<size_t>(m) * m);
    std::vector<Rat> b(m);
    for (int i = 0; i < m; ++i) {
        b[i] = Rat(inner(K[i], c0));
        for (int j = 0; j < m; ++j) M[static_cast<size_t>(i) * m + j] = Rat(-inner(K[i], K[j]));
    }
    Rat e = Rat(self(c0) - square);

    // Center zc solves M zc = b (exact Gaussian elimination).
    std::vector<Rat> A(M);
    std::vector<Rat> rhs(b);
    auto a_at = [&](int i, int j) -> Rat& { return A[static_cast<size_t>(i) * m + j]; };
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    for (int cphase = 0; cphase < m; ++cphase) {
        int piv = -1;
        for (int i = cphase; i < m; ++i)
            if (a_at(i, cphase) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::logic_error("enumerate_classes: complement form is degenerate");
        if (piv != cphase) {
            for (int j = 0; j < m; ++j) std::swap(a_at(piv, j), a_at(cphase, j));
            std::swap(rhs[piv], rhs[cphase]);
        }
        for (int i = cphase + 1; i < m; ++i) {
            if (a_at(i, cphase) == 0) continue;
            Rat f = a_at(i, cphase) / a_at(cphase, cphase);
            for (int j = cphase; j < m; ++j) a_at(i, j) -= f * a_at(cphase, j);
            rhs[i] -= f * rhs[cphase];
        }
    }
    std::vector<Rat> zc(m);
    for (int i = m - 1; i >= 0; --i) {
        Rat acc = rhs[i];
        for (int j = i + 1; j < m; ++j) acc -= a_at(i, j) * zc[j];
        zc[i] = acc / a_at(i, i);
    }

    // Squared radius of the solution ellipsoid (z - zc)^T M (z - zc) = R.
    Rat R = e;
    for (int i = 0; i < m; ++i) R += b[i] * zc[i];
    if (R < 0) return out;

    // Exact Cholesky-style completion: M = sum_i d_i (z_i + sum_{j>i} l_ij z_j)^2.
    std::vector<Rat> d(m);
    std::vector<Rat> l(static_cast<size_t>(m) * m);
    {
        std::vector<Rat> Mw(M);
        auto m_at = [&](int i, int j) -> Rat& { return Mw[static_cast<size_t>(i) * m + j]; };
        for (int i = 0; i < m; ++i) {
            d[i] = m_at(i, i);
            if (d[i] <= 0)
                throw std::logic_error("enumerate_classes: complement form not negative definite");
            for (int j = i + 1; j < m; ++j) l[static_cast<size_t>(i) * m + j] = m_at(i, j) / d[i];
            for (int j = i + 1; j < m; ++j)
                for (int k = i + 1; k < m; ++k)
                    m_at(j, k) -= m_at(i, j) * m_at(i, k) / d[i];
        }
    }

    // Recursive enumeration from the last coordinate down; bounds are
    // exact (integer square roots of rational radicands), membership is
    // confirmed on the reconstructed class.
    std::vector<Int> z(m);
    auto emit = [&]() {
        SurfaceClass D = c0;
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < r; ++i) D.coords[i] += K[j].coords[i] * z[j];
        if (self(D) == square) out.push_back(D);
    };
    auto descend = [&](auto&& self_fn, int level, const Rat& rem) -> void {
        if (rem < 0) return;
        // offset s = sum_{j > level} l_{level,j} (z_j - zc_j)
        Rat center = zc[level];
        for (int j = level + 1; j < m; ++j)
            center -= l[static_cast<size_t>(level) * m + j] * (Rat(z[j]) - zc[j]);
        // d_level * (z - center)^2 <= rem
        Rat bound2 = rem / d[level];
        Int cn = center.get_num(), cd = center.get_den();
        // |z*cd - cn| <= sqrt(bound2 * cd^2); integer part taken exactly.
        Rat pq = bound2 * cd * cd;
        Int mmax = isqrt(pq.get_num() / pq.get_den()).root;
        Int zlo, zhi;
        mpz_cdiv_q(zlo.get_mpz_t(), Int(cn - mmax).get_mpz_t(), cd.get_mpz_t());
        mpz_fdiv_q(zhi.get_mpz_t(), Int(cn + mmax).get_mpz_t(), cd.get_mpz_t());
        for (Int zi = zlo; zi <= zhi; ++zi) {
            z[level] = zi;
            if (level == 0) {
                emit();
            } else {
                Rat u = Rat(zi) - center;
                self_fn(self_fn, level - 1, rem - d[level] * u * u);
            }
        }
    };
    descend(descend, m - 1, R);

    std::sort(out.begin(), out.end(),
              [](const SurfaceClass& x, const SurfaceClass& y) { return x.coords < y.coords; });
    return out;
}

Effectivity PicLattice::is_effective(const SurfaceClass& v) const {
    check_class(v);
    if (v.is_zero()) return {EffectivityKind::NotEffective, {}};
    Int s = self(v);
    if (s <= -4)
        return {EffectivityKind::Unknown,
                "square " + s.get_str() + " <= -4 is outside the effectivity rule"};
    Int t = degree(v);
    if (t > 0) return {EffectivityKind::Effective, {}};
    if (t < 0) return {EffectivityKind::NotEffective, {}};
    return {EffectivityKind::Unknown, "degree 0 boundary class, rule inconclusive"};
}

}  // namespace hilb2
