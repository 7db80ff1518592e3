#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "prequant/random.hpp"
#include "prequant/su2.hpp"

using namespace prequant;

namespace {

const Su2Vector kE1(1.0, 0.0, 0.0);
const Su2Vector kE2(0.0, 1.0, 0.0);
const Su2Vector kE3(0.0, 0.0, 1.0);

SU2Element basisElement(const Su2Vector& e) { return SU2Element::fromParts(0.0, e); }

Su2Vector randomVector(std::mt19937_64& rng) {
    return Su2Vector(gaussian(rng), gaussian(rng), gaussian(rng));
}

double matrixDistance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    return (a - b).norm();
}

}  // namespace

TEST_CASE("trace form matches the matrix trace and the -2 dot product rule") {
    CHECK(traceForm(basisX(), basisX()) == -2.0);
    CHECK(traceForm(kE1, Su2Vector::Zero()) == 0.0);
    CHECK(traceForm(kE1, kE2) == 0.0);
    CHECK(traceForm(kE2, kE3) == 0.0);

    auto rng = makeStream(11);
    for (int i = 0; i < 100; ++i) {
        Su2Vector u = randomVector(rng);
        Su2Vector v = randomVector(rng);
        std::complex<double> tr = (su2Matrix(u) * su2Matrix(v)).trace();
        CHECK(std::abs(tr.imag()) < 1e-14);
        CHECK(traceForm(u, v) == doctest::Approx(tr.real()).epsilon(1e-12));
        CHECK(traceForm(u, u) == doctest::Approx(-2.0 * u.squaredNorm()).epsilon(1e-12));
    }
}

TEST_CASE("group product: identity, basis squares, inverses") {
    auto rng = makeStream(12);
    SU2Element g = haarSU2(rng);

    CHECK(groupDistance(SU2Element::identity() * g, g) < 1e-15);
    CHECK(groupDistance(g * SU2Element::identity(), g) < 1e-15);

    // each basis direction squares to -identity
    for (const Su2Vector& e : {kE1, kE2, kE3}) {
        SU2Element sq = basisElement(e) * basisElement(e);
        CHECK(sq.w() == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(sq.vec().norm() < 1e-15);
    }

    for (int i = 0; i < 100; ++i) {
        SU2Element h = haarSU2(rng);
        CHECK(identityDefect(h * h.inverse()) < 1e-12);
    }
}

TEST_CASE("quaternion product agrees with 2x2 matrix multiplication") {
    auto rng = makeStream(13);
    for (int i = 0; i < 100; ++i) {
        SU2Element g = haarSU2(rng);
        SU2Element h = haarSU2(rng);
        CHECK(matrixDistance((g * h).matrix(), g.matrix() * h.matrix()) < 1e-12);
    }
}

TEST_CASE("matrix form is special unitary") {
    auto rng = makeStream(14);
    for (int i = 0; i < 50; ++i) {
        Eigen::Matrix2cd m = haarSU2(rng).matrix();
        CHECK(matrixDistance(m * m.adjoint(), Eigen::Matrix2cd::Identity()) < 1e-12);
        CHECK(std::abs(m.determinant() - 1.0) < 1e-12);
    }
}

TEST_CASE("fromMatrix inverts matrix()") {
    auto rng = makeStream(15);
    for (int i = 0; i < 50; ++i) {
        SU2Element g = haarSU2(rng);
        CHECK(groupDistance(SU2Element::fromMatrix(g.matrix()), g) < 1e-12);
    }
}

TEST_CASE("exponential map: zero, the half-turn, and line homomorphism") {
    CHECK(identityDefect(expMap(Su2Vector::Zero())) == 0.0);

    SU2Element halfTurn = expMap(M_PI * basisX());
    CHECK(halfTurn.w() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(halfTurn.vec().norm() < 1e-15);

    auto rng = makeStream(16);
    for (int i = 0; i < 100; ++i) {
        Su2Vector xi = randomVector(rng);
        double s = uniformIn(rng, -2.0, 2.0);
        double t = uniformIn(rng, -2.0, 2.0);
        CHECK(groupDistance(expMap((s + t) * xi), expMap(s * xi) * expMap(t * xi)) < 1e-10);
    }
}

TEST_CASE("logarithm: principal branch round trips, branch point rejected") {
    CHECK(logMap(SU2Element::identity()).norm() == 0.0);

    Su2Vector xi = 0.3 * basisX();
    CHECK((logMap(expMap(xi)) - xi).norm() < 1e-12);

    auto rng = makeStream(17);
    for (int i = 0; i < 100; ++i) {
        Su2Vector v = randomVector(rng);
        if (v.norm() < 1e-6) continue;
        Su2Vector inside = (uniformIn(rng, 0.01, 0.99) * M_PI / v.norm()) * v;
        CHECK((logMap(expMap(inside)) - inside).norm() < 1e-10);
        CHECK(groupDistance(expMap(logMap(expMap(inside))), expMap(inside)) < 1e-10);
    }

    CHECK_THROWS_AS(logMap(SU2Element::fromParts(-1.0, Su2Vector::Zero())), BranchPointError);
    CHECK_THROWS_AS(logMap(SU2Element::fromParts(-1.0, Su2Vector(1e-12, 0, 0))),
                    BranchPointError);
}

TEST_CASE("adjoint action: fixed directions, matrix conjugation, trace invariance") {
    auto rng = makeStream(18);

    Su2Vector xi = randomVector(rng);
    CHECK((adjoint(SU2Element::identity(), xi) - xi).norm() < 1e-15);

    // a torus element fixes its own axis
    SU2Element t = expMap(0.7 * basisX());
    CHECK((adjoint(t, basisX()) - basisX()).norm() < 1e-15);

    for (int i = 0; i < 100; ++i) {
        SU2Element g = haarSU2(rng);
        Su2Vector u = randomVector(rng);
        Su2Vector v = randomVector(rng);

        Eigen::Matrix2cd conj = g.matrix() * su2Matrix(u) * g.matrix().adjoint();
        CHECK(matrixDistance(su2Matrix(adjoint(g, u)), conj) < 1e-12);
        CHECK((adjointMatrix(g) * u - adjoint(g, u)).norm() < 1e-13);
        CHECK(traceForm(adjoint(g, u), adjoint(g, v)) ==
              doctest::Approx(traceForm(u, v)).epsilon(1e-12));
    }
}

TEST_CASE("lie bracket matches the matrix commutator") {
    auto rng = makeStream(19);
    for (int i = 0; i < 50; ++i) {
        Su2Vector u = randomVector(rng);
        Su2Vector v = randomVector(rng);
        Eigen::Matrix2cd comm = su2Matrix(u) * su2Matrix(v) - su2Matrix(v) * su2Matrix(u);
        CHECK(matrixDistance(su2Matrix(lieBracket(u, v)), comm) < 1e-12);
    }
}

TEST_CASE("group commutator: identity absorbers and the Pauli half-turn") {
    auto rng = makeStream(20);
    SU2Element g = haarSU2(rng);
    CHECK(identityDefect(groupCommutator(g, SU2Element::identity())) < 1e-15);
    CHECK(identityDefect(groupCommutator(SU2Element::identity(), g)) < 1e-15);

    SU2Element c = groupCommutator(basisElement(kE1), basisElement(kE2));
    CHECK(c.w() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(c.vec().norm() < 1e-15);

    // coaxial elements commute
    for (int i = 0; i < 20; ++i) {
        SU2Element conj = haarSU2(rng);
        Su2Vector axis = adjoint(conj, basisX());
        SU2Element a = expMap(uniformIn(rng, -3.0, 3.0) * axis);
        SU2Element b = expMap(uniformIn(rng, -3.0, 3.0) * axis);
        CHECK(identityDefect(groupCommutator(a, b)) < 1e-12);
    }
}

TEST_CASE("angle is conjugation invariant and matches the eigenvalue phase") {
    auto rng = makeStream(21);
    for (int i = 0; i < 50; ++i) {
        double theta = uniformIn(rng, 0.0, M_PI);
        SU2Element g = expMap(theta * basisX());
        CHECK(g.angle() == doctest::Approx(theta).epsilon(1e-12));
        SU2Element c = haarSU2(rng);
        CHECK((c * g * c.inverse()).angle() == doctest::Approx(theta).epsilon(1e-10));
    }
}

TEST_CASE("fromPartsExact keeps components and rejects non-unit quaternions") {
    double w = std::sqrt(1.0 - 0.25 - 0.09 - 0.01);
    Su2Vector v(0.5, 0.3, 0.1);
    SU2Element g = SU2Element::fromPartsExact(w, v);
    CHECK(g.w() == w);
    CHECK(g.vec() == v);

    CHECK_THROWS_AS(SU2Element::fromPartsExact(1.0, Su2Vector(0.1, 0.0, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(SU2Element::fromPartsExact(0.0, Su2Vector::Zero()), std::invalid_argument);
}

TEST_CASE("haar draws are deterministic per seed and stream") {
    auto rngA = makeStream(42, 7);
    auto rngB = makeStream(42, 7);
    for (int i = 0; i < 10; ++i) {
        SU2Element a = haarSU2(rngA);
        SU2Element b = haarSU2(rngB);
        CHECK(a.w() == b.w());
        CHECK(a.vec() == b.vec());
    }

    auto rngC = makeStream(42, 8);
    SU2Element a = haarSU2(rngA);
    SU2Element c = haarSU2(rngC);
    CHECK(groupDistance(a, c) > 1e-6);
}
