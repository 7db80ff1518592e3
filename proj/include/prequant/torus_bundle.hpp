#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "prequant/su2.hpp"

namespace prequant {

// The moduli cover of flat T-connections on the torus, coordinatized so that
// (a, b) is the connection A = X (a dx + b dy) on surface coordinates
// x, y in [0, 2pi); the holonomies are exp(2 pi a X) and exp(2 pi b X).
// The integer lattice acts by gauge transformations, the Weyl flip by
// (a, b) -> (-a, -b).
struct TorusModuliPoint {
    double a = 0.0;
    double b = 0.0;
};

// An element (m, n, w) of the extended gauge lattice: translation by (m, n)
// after an optional Weyl flip (w = -1).
struct GaugeCharacter {
    int m = 0;
    int n = 0;
    int weyl = +1;
};

TorusModuliPoint gaugeAction(const GaugeCharacter& c, const TorusModuliPoint& p);

// Composition law of the semidirect product: apply `second` first.
GaugeCharacter compose(const GaugeCharacter& first, const GaugeCharacter& second);

// su(2)-valued gauge field on the slab [0,1] x T^2, sampled with t at cell
// midpoints (i + 1/2)/nt and x, y at the periodic nodes 2 pi j / nx,
// 2 pi k / ny. Storage is t-major, then x, then y.
class CSField {
public:
    CSField(int nt, int nx, int ny);

    static CSField sample(int nt, int nx, int ny,
                          const std::function<std::array<Su2Vector, 3>(double t, double x, double y)>& f);

    int nt() const { return nt_; }
    int nx() const { return nx_; }
    int ny() const { return ny_; }

    // component 0 = dt part, 1 = dx part, 2 = dy part
    Su2Vector& at(int comp, int it, int ix, int iy);
    const Su2Vector& at(int comp, int it, int ix, int iy) const;

    double tCoord(int it) const;
    double xCoord(int ix) const;
    double yCoord(int iy) const;

private:
    int nt_, nx_, ny_;
    std::vector<Su2Vector> data_;  // 3 components, each nt*nx*ny, t-major
};

// Chern-Simons functional (1/4pi) Int Tr(A dA + 2/3 A^3) over the slab.
// Midpoint rule in t, periodic rectangle rule in x and y; derivatives by
// centered differences (one-sided at the two t boundary layers). The sum is
// associative and order-independent, so it parallelizes as a map-reduce;
// the implementation here is the plain serial fold. Grid sizes must be >= 8.
double csFunctional(const CSField& field);

// The interpolation slab A + t g^-1 dg from A(p) to its (m, n)-gauge
// transform; dt component zero, dx component (a + t m) X, dy (b + t n) X.
CSField gaugeInterpolationField(const TorusModuliPoint& p, const GaugeCharacter& c, int nt,
                                int nx, int ny);

// exp(i * csFunctional) of the interpolation slab. Weyl flag must be +1.
std::complex<double> cocycleNumeric(const TorusModuliPoint& p, const GaugeCharacter& c,
                                    int nt = 32, int nx = 8, int ny = 8);

// Closed form exp(-2 pi i (m b - n a)). Weyl flag must be +1.
std::complex<double> cocycleExact(const TorusModuliPoint& p, const GaugeCharacter& c);

// Connection 1-form omega = -2 pi i (a db - b da), returned as its
// (da, db) components (2 pi i b, -2 pi i a).
std::array<std::complex<double>, 2> connectionForm(const TorusModuliPoint& p);

// Piecewise-linear path in moduli coordinates; consecutive points distinct.
struct LinePath {
    std::vector<TorusModuliPoint> points;
};

LinePath makePath(std::initializer_list<TorusModuliPoint> pts);
LinePath rectanglePath(double a0, double b0, double a1, double b1);  // counterclockwise

// Parallel transport exp(-Int_path omega); per-segment closed form, unit
// modulus. Curvature d omega = -4 pi i da db, so a counterclockwise loop
// encloses exp(+4 pi i Area).
std::complex<double> parallelTransport(const LinePath& path);

// Consistency of (transport, cocycle) under the character c applied to a
// path: returns | T(c path) * Theta(c-) - Theta(c+) * T(path) | where the
// cocycle factors are evaluated at the (flipped, for weyl = -1) endpoints.
// Zero (to roundoff) exactly when the two structures glue to a bundle on the
// quotient.
double equivarianceCheck(const LinePath& path, const GaugeCharacter& c);

}  // namespace prequant
