#pragma once

// Coherent states |z,m> of A^2_m(C^n): normalization, overlaps, the
// resolution of identity and the lower symbol of a multiplication operator.

#include <functional>

#include "bargmann/kernel.hpp"

namespace bargmann {

/// N(z) = pi^{-n} binom(n+m-1, m) e^{|z|^2}; equals K_m(z, z).
double normalization_factor(SpaceParams params, const CPoint& z);

/// <z,m|w,m> = (N(z) N(w))^{-1/2} K_m(z, w), evaluated in log form so large
/// |z|, |w| do not overflow.
Complex overlap(SpaceParams params, const CPoint& z, const CPoint& w);

/// \int |<z,m|w,m>|^2 N(w) e^{-|w|^2} dmu(w) over the disk |w| <= quad_radius
/// (n = 1). Should be 1. Throws std::invalid_argument when the Gaussian tail
/// outside the disk exceeds 1e-12 and AccuracyError when two radial rule
/// sizes disagree by more than 1e-9.
double resolution_check(int m, const CPoint& z, double quad_radius);

using ScalarField = std::function<Complex(Complex)>;

struct ExpectationConfig {
  int radial_nodes = 64;    // Gauss-Laguerre in |w - z|^2
  int angular_nodes = 128;  // trapezoid
};

/// <z,m| A_phi |z,m> = (1/pi) \int e^{-|v|^2} L_m(|v|^2)^2 phi(z + v) dmu(v), n = 1.
/// phi is called concurrently only if the caller parallelizes; here it is
/// called sequentially.
Complex expectation_quadrature(int m, const ScalarField& phi, const CPoint& z,
                               ExpectationConfig cfg = {});

}  // namespace bargmann
