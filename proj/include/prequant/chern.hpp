#pragma once

#include <complex>
#include <functional>

#include "prequant/torus_bundle.hpp"

namespace prequant {

// Curvature density Omega(a, b) relative to da ^ db.
using CurvatureSampler = std::function<std::complex<double>(double a, double b)>;

// Holonomy of a piecewise-linear loop/path in moduli coordinates.
using TransportOracle = std::function<std::complex<double>(const LinePath&)>;

// The standard bundle under study: constant curvature -4 pi i.
CurvatureSampler constantCurvatureSampler();

// Curvature recovered from the connection form by centered finite
// differences (step h); exact here since the form is linear.
CurvatureSampler curvatureFromConnection(double h = 1e-4);

TransportOracle prequantumTransportOracle();
TransportOracle trivialTransportOracle();

// First Chern number by the curvature integral: (1 / -2 pi i) * midpoint
// quadrature of Omega over the fundamental cell [0,1]^2 on an n x n grid.
// orientation = -1 integrates against the reversed orientation.
double chernWeil(const CurvatureSampler& omega, int n, int orientation = +1);

// First Chern number from link transports on an n x n grid (n >= 4):
// plaquette phases on the principal branch, summed and divided by 2 pi.
// Throws AdmissibilityError if any phase comes within `margin` of +-pi, and
// NonIntegralDegreeError if the sum is not an integer multiple of 2 pi to
// within integerTol. Returns the exact integer.
int latticeChern(const TransportOracle& transport, int n, int orientation = +1,
                 double margin = 1e-6, double integerTol = 1e-9);

// First Chern number by accumulating branch-tracked logarithms of cell
// holonomies over an initialGrid x initialGrid subdivision, refining (up to
// maxRefinements doublings) whenever neighboring phases jump by more than
// pi/2. Returns a real number; should agree with chernWeil to ~1e-6.
double holonomyDegree(const TransportOracle& transport, int initialGrid = 8,
                      int orientation = +1, int maxRefinements = 4);

// Degree downstairs = degree upstairs / covering degree; the division must be
// exact (NonIntegralDegreeError otherwise).
int degreeFromCovering(int upstairsDegree, int coveringDegree);

}  // namespace prequant
