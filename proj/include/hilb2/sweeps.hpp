#pragma once

#include <cstdint>
#include <vector>

#include "hilb2/rank1.hpp"

namespace hilb2 {

// One degree row of a certificate table: the nef cone of the Hilbert
// square at degree 2d plus the vanishing certificate for each requested n.
struct CertificateRow {
    long d;
    ConeDescription cone;
    std::vector<VanishingCertificate> certs;  // certs[i] for n = n_lo + i
};

// Rows for d in [d_lo, d_hi], n in [n_lo, n_hi], inclusive. The parallel
// kernel distributes rows over OpenMP threads (every cell is a pure
// function of (d, n)); results are identical to the serial reference,
// which is kept for testing and benchmarking.
std::vector<CertificateRow> certificate_sweep_serial(long d_lo, long d_hi, long n_lo, long n_hi);
std::vector<CertificateRow> certificate_sweep_parallel(long d_lo, long d_hi, long n_lo, long n_hi);

// Positions (d, n) in the same grid with no vanishing certificate.
std::vector<std::pair<long, long>> no_certificate_points(long d_lo, long d_hi, long n_lo,
                                                         long n_hi);

}  // namespace hilb2
