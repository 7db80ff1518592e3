#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "prequant/chern.hpp"
#include "prequant/random.hpp"

using namespace prequant;

namespace {

constexpr double kFourPi = 4.0 * M_PI;

// Transport of a synthetic abelian connection sigma (a db - b da): per
// segment the line integral is sigma (a0 b1 - a1 b0), so a counterclockwise
// plaquette of area 1/n^2 picks up phase -2 sigma / n^2.
TransportOracle scaledTransportOracle(double sigma) {
    return [sigma](const LinePath& path) {
        double area2 = 0.0;
        for (std::size_t i = 1; i < path.points.size(); ++i) {
            const TorusModuliPoint& p = path.points[i - 1];
            const TorusModuliPoint& q = path.points[i];
            area2 += p.a * q.b - q.a * p.b;
        }
        return std::polar(1.0, -sigma * area2);
    };
}

}  // namespace

TEST_CASE("curvature from the connection matches the constant sampler") {
    CurvatureSampler exact = constantCurvatureSampler();
    CurvatureSampler numeric = curvatureFromConnection();
    auto rng = makeStream(81);
    for (int i = 0; i < 50; ++i) {
        double a = uniformIn(rng, -2.0, 2.0), b = uniformIn(rng, -2.0, 2.0);
        CHECK(std::abs(exact(a, b) - std::complex<double>(0.0, -kFourPi)) == 0.0);
        CHECK(std::abs(numeric(a, b) - exact(a, b)) < 1e-8);
    }
}

TEST_CASE("curvature quadrature: constant integrands and exact perturbations") {
    CHECK(chernWeil(constantCurvatureSampler(), 16) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(chernWeil(constantCurvatureSampler(), 3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(chernWeil([](double, double) { return std::complex<double>(0.0, 0.0); }, 16) == 0.0);

    // adding d(f db) with f = sin(2 pi a) cos(2 pi b) / (2 pi) shifts the
    // density by cos(2 pi a) cos(2 pi b) but not the integral
    CurvatureSampler perturbed = [](double a, double b) {
        double bump = std::cos(2.0 * M_PI * a) * std::cos(2.0 * M_PI * b);
        return std::complex<double>(0.0, -kFourPi + 2.0 * M_PI * bump);
    };
    CHECK(chernWeil(perturbed, 16) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(chernWeil(perturbed, 64) == doctest::Approx(2.0).epsilon(1e-6));

    CHECK(chernWeil(constantCurvatureSampler(), 16, -1) ==
          doctest::Approx(-2.0).epsilon(1e-12));
    CHECK_THROWS_AS(chernWeil(constantCurvatureSampler(), 0), std::invalid_argument);
    CHECK_THROWS_AS(chernWeil(constantCurvatureSampler(), 16, 2), std::invalid_argument);
}

TEST_CASE("plaquette sums give the exact integer on every admissible grid") {
    TransportOracle transport = prequantumTransportOracle();
    for (int n : {4, 8, 16, 32, 64}) {
        CHECK(latticeChern(transport, n) == 2);
    }
    CHECK(latticeChern(trivialTransportOracle(), 8) == 0);
    CHECK(latticeChern(transport, 8, -1) == -2);
}

TEST_CASE("plaquette method rejects coarse grids and branch-cut phases") {
    CHECK_THROWS_AS(latticeChern(prequantumTransportOracle(), 2), AdmissibilityError);
    CHECK_THROWS_AS(latticeChern(prequantumTransportOracle(), 3), AdmissibilityError);

    // plaquette phase -pi (1 - 1e-8) sits well inside the 1e-6 margin
    double n = 4;
    TransportOracle hot = scaledTransportOracle(M_PI * n * n / 2.0 * (1.0 - 1e-8));
    CHECK_THROWS_AS(latticeChern(hot, static_cast<int>(n)), AdmissibilityError);

    // constant phase -0.1 per plaquette sums to -1.6, not a multiple of 2 pi
    TransportOracle skewed = scaledTransportOracle(0.05 * n * n);
    CHECK_THROWS_AS(latticeChern(skewed, static_cast<int>(n)), NonIntegralDegreeError);

    CHECK_THROWS_AS(latticeChern(prequantumTransportOracle(), 8, 3), std::invalid_argument);
}

TEST_CASE("branch-tracked log holonomy agrees with the quadrature") {
    CHECK(holonomyDegree(prequantumTransportOracle()) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(holonomyDegree(trivialTransportOracle()) == doctest::Approx(0.0));
    CHECK(holonomyDegree(prequantumTransportOracle(), 8, -1) ==
          doctest::Approx(-2.0).epsilon(1e-6));
    CHECK_THROWS_AS(holonomyDegree(prequantumTransportOracle(), 1), std::invalid_argument);
}

TEST_CASE("all three algorithms agree on the standard and trivial bundles") {
    double byQuadrature = chernWeil(constantCurvatureSampler(), 16);
    int byPlaquettes = latticeChern(prequantumTransportOracle(), 8);
    double byTracking = holonomyDegree(prequantumTransportOracle());
    CHECK(byQuadrature == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(byPlaquettes == 2);
    CHECK(byTracking == doctest::Approx(2.0).epsilon(1e-6));

    CHECK(chernWeil([](double, double) { return std::complex<double>(); }, 16) == 0.0);
    CHECK(latticeChern(trivialTransportOracle(), 4) == 0);
    CHECK(holonomyDegree(trivialTransportOracle()) == 0.0);
}

TEST_CASE("plaquette count is stable under refinement") {
    int at8 = latticeChern(prequantumTransportOracle(), 8);
    int at16 = latticeChern(prequantumTransportOracle(), 16);
    int at32 = latticeChern(prequantumTransportOracle(), 32);
    CHECK(at8 == at16);
    CHECK(at16 == at32);
}

TEST_CASE("division by the covering degree must be exact") {
    CHECK(degreeFromCovering(2, 2) == 1);
    CHECK(degreeFromCovering(0, 2) == 0);
    CHECK(degreeFromCovering(-2, 2) == -1);
    CHECK(degreeFromCovering(6, 3) == 2);
    CHECK_THROWS_AS(degreeFromCovering(2, 4), NonIntegralDegreeError);
    CHECK_THROWS_AS(degreeFromCovering(3, 2), NonIntegralDegreeError);
    CHECK_THROWS_AS(degreeFromCovering(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(degreeFromCovering(2, -2), std::invalid_argument);
}
