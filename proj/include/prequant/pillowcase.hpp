#pragma once
// The pillowcase: quotient of the torus moduli square by the involution
// (a, b) -> (-a, -b), embedded through invariant coordinates, together with
// the preimage count that identifies the quotient map as a 2:1 branched cover.

#include <random>
#include <vector>

#include "prequant/chern.hpp"
#include "prequant/torus_bundle.hpp"

namespace prequant {

// Invariant coordinates (u, v, w) = (cos 2pi a, cos 2pi b, sin 2pi a sin 2pi b).
// Genuine image points satisfy (1 - u^2)(1 - v^2) = w^2.
struct PillowcasePoint {
    double u = 1.0;
    double v = 1.0;
    double w = 0.0;
};

// Residual |(1 - u^2)(1 - v^2) - w^2| of the defining relation.
double relationDefect(const PillowcasePoint& q);

// Euclidean distance in invariant coordinates.
double pillowcaseDistance(const PillowcasePoint& q1, const PillowcasePoint& q2);

// Representative in [0, 1).
double reduceMod1(double x);

// Wrap-around Euclidean distance on the unit-square torus.
double torusDistance(const TorusModuliPoint& p1, const TorusModuliPoint& p2);

// Orbit {(a, b), (-a, -b)} reduced mod 1; a singleton exactly at the four
// half-integer fixed points.
std::vector<TorusModuliPoint> weylOrbit(const TorusModuliPoint& p);

// The involution's fixed points {0, 1/2}^2.
std::vector<TorusModuliPoint> fixedPoints();

PillowcasePoint quotientMap(const TorusModuliPoint& p);

// Images of the four fixed points: (+-1, +-1, 0).
std::vector<PillowcasePoint> branchImages();

// Distance from q to the nearest branch image.
double minBranchDistance(const PillowcasePoint& q);

// All torus points mapping to q, found by inverting the two cosines and
// resolving the four-fold sign ambiguity with w. Throws BranchProximityError
// when q lies within branchTol of a branch image, where the count degenerates.
std::vector<TorusModuliPoint> preimages(const PillowcasePoint& q,
                                        double branchTol = 1e-3);

// Draws random regular values (redrawing any that land near a branch image),
// counts preimages at each, checks the count never changes, and returns it.
// Throws InconsistentCountError when two samples disagree or a sampled source
// point is missing from its own fiber.
int coveringDegree(int samples, std::mt19937_64& rng, double branchTol = 1e-3);

// Max over an n x n grid of |omega(a, b) - omega(-a, -b)|. The curvature
// density descends to the quotient only when this vanishes.
double weylInvarianceDefect(const CurvatureSampler& omega, int gridN);

}  // namespace prequant
