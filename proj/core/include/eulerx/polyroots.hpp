#pragma once

#include <complex>
#include <vector>

namespace eulerx {

/// All complex roots of c[0] + c[1] z + ... + c[d] z^d (Durand-Kerner).
/// Intended for the small, well-separated polynomials in this project
/// (degree <= ~16).
std::vector<std::complex<double>> poly_roots(
    const std::vector<std::complex<double>>& coeffs);

}  // namespace eulerx
