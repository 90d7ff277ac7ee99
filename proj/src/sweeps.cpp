#include "hilb2/sweeps.hpp"

#include <stdexcept>

namespace hilb2 {

namespace {

void check_ranges(long d_lo, long d_hi, long n_lo, long n_hi) {
    if (d_lo < 1 || d_hi < d_lo) throw std::invalid_argument("sweep: bad d range");
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("sweep: bad n range");
}

CertificateRow row_for(long d, long n_lo, long n_hi) {
    CertificateRow row;
    row.d = d;
    row.cone = nef_cone(Int(d));
    row.certs.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (long n = n_lo; n <= n_hi; ++n) {
        // Inline the certificate decision against the precomputed cone;
        // one Pell solve per row instead of one per cell.
        Rat nn(n);
        VanishingCertificate c = VanishingCertificate::NoCertificate;
        Int q = 2 * Int(d) - 2 * Int(n) * Int(n);
        if (nn < row.cone.nef_slope)
            c = VanishingCertificate::KVAmple;
        else if (nn == row.cone.nef_slope && q > 0)
            c = VanishingCertificate::KVBigNefBoundary;
        else if (nn == row.cone.nef_slope && q == 0)
            c = VanishingCertificate::IsotropicFibration;
        else if (nn >= row.cone.dual_slope)
            c = VanishingCertificate::Verbitsky;
        row.certs.push_back(c);
    }
    return row;
}

}  // namespace

std::vector<CertificateRow> certificate_sweep_serial(long d_lo, long d_hi, long n_lo, long n_hi) {
    check_ranges(d_lo, d_hi, n_lo, n_hi);
    std::vector<CertificateRow> rows(static_cast<size_t>(d_hi - d_lo + 1));
    for (long d = d_lo; d <= d_hi; ++d) rows[static_cast<size_t>(d - d_lo)] = row_for(d, n_lo, n_hi);
    return rows;
}

std::vector<CertificateRow> certificate_sweep_parallel(long d_lo, long d_hi, long n_lo,
                                                       long n_hi) {
    check_ranges(d_lo, d_hi, n_lo, n_hi);
    const long count = d_hi - d_lo + 1;
    std::vector<CertificateRow> rows(static_cast<size_t>(count));
    // Pell periods vary wildly with d, so dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < count; ++i) rows[static_cast<size_t>(i)] = row_for(d_lo + i, n_lo, n_hi);
    return rows;
}

std::vector<std::pair<long, long>> no_certificate_points(long d_lo, long d_hi, long n_lo,
                                                         long n_hi) {
    auto rows = certificate_sweep_parallel(d_lo, d_hi, n_lo, n_hi);
    std::vector<std::pair<long, long>> out;
    for (const auto& row : rows)
        for (size_t i = 0; i < row.certs.size(); ++i)
            if (row.certs[i] == VanishingCertificate::NoCertificate)
                out.emplace_back(row.d, n_lo + static_cast<long>(i));
    return out;
}

}  // namespace hilb2
