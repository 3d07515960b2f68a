#pragma once

#include "netft/matrix.hpp"

namespace netft {

/// Forward 2D DFT, unnormalized convention:
///   W[u][v] = sum_{j,k} x[j][k] * exp(-2*pi*i*(u*j/n + v*k/m)).
complex_matrix dft2(const real_matrix& x);
complex_matrix dft2(const complex_matrix& x);

/// Inverse 2D DFT with the 1/(n*m) factor, so idft2(dft2(x)) == x up to
/// floating error.
complex_matrix idft2(const complex_matrix& w);

/// Real parts of x. Throws numeric_error if any imaginary component
/// exceeds max_imag; the spectra produced by thresholding a real signal's
/// DFT stay conjugate-symmetric, so the residue is rounding noise only.
real_matrix real_part(const complex_matrix& x, double max_imag = 1e-6);

/// Largest absolute imaginary component.
double max_imag_abs(const complex_matrix& x);

/// Zero every entry whose absolute value is strictly below the mean
/// absolute value over all entries (zeros included in the mean).
/// Surviving entries keep their original signed value.
real_matrix abs_threshold(const real_matrix& x);

/// Zero every complex entry whose magnitude is strictly below the mean
/// magnitude. Conjugate-symmetric inputs stay conjugate-symmetric because
/// conjugate pairs share a magnitude and therefore a keep/zero decision.
complex_matrix magnitude_threshold(const complex_matrix& w);

/// True exactly where the entry is zero.
bool_matrix sparsity_pattern(const real_matrix& x);

/// True iff the two patterns agree at every position. Shapes must match.
bool sparse_match(const bool_matrix& a, const bool_matrix& b);

/// Best rank-k approximation U[:,1:k] S[1:k,1:k] V[:,1:k]^T from the SVD.
/// Requires 1 <= k <= min(rows, cols).
real_matrix truncated_svd_reconstruct(const real_matrix& x, std::size_t k);

} // namespace netft
