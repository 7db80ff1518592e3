#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "prequant/errors.hpp"
#include "prequant/random.hpp"

namespace prequant {

// Conventions used throughout the library (fixed here, nowhere else):
//
//   su(2) basis      e1 = i*sigma1, e2 = i*sigma2, e3 = i*sigma3.
//   Su2Vector        coefficients (v1, v2, v3) of v1*e1 + v2*e2 + v3*e3.
//   basisX()         the distinguished torus direction X = diag(i, -i) = e3.
//   traceForm        Tr(xi * eta) = -2 <u, v>;  traceForm(X, X) = -2.
//   SU2Element       unit quaternion (w, v) with matrix w*I + v . (i sigma).
//
// The basis multiplication rule is (i sigma_a)(i sigma_b) =
// -delta_ab I - eps_abc (i sigma_c), which is Hamilton's quaternion algebra
// with the sign of the cross product flipped. Group, exp, log and adjoint
// below all use this one rule, so matrix() is an exact homomorphism with no
// compensating signs anywhere else.

using Su2Vector = Eigen::Vector3d;

inline Su2Vector basisX() { return Su2Vector(0.0, 0.0, 1.0); }

inline double traceForm(const Su2Vector& u, const Su2Vector& v) { return -2.0 * u.dot(v); }

inline Su2Vector lieBracket(const Su2Vector& u, const Su2Vector& v) { return -2.0 * u.cross(v); }

// Matrix form v . (i sigma) of an algebra element.
inline Eigen::Matrix2cd su2Matrix(const Su2Vector& v) {
    using namespace std::complex_literals;
    Eigen::Matrix2cd m;
    m << 1i * v.z(), v.y() + 1i * v.x(),  //
        -v.y() + 1i * v.x(), -1i * v.z();
    return m;
}

class SU2Element {
public:
    SU2Element() : w_(1.0), v_(Su2Vector::Zero()) {}

    static SU2Element identity() { return SU2Element(); }

    // Renormalizes, so accumulated products stay on the unit sphere.
    static SU2Element fromParts(double w, const Su2Vector& v) {
        SU2Element g;
        double n = std::sqrt(w * w + v.squaredNorm());
        g.w_ = w / n;
        g.v_ = v / n;
        return g;
    }

    // Keeps the components bit-for-bit (loaders depend on this); rejects
    // quaternions farther than tol from the unit sphere instead of fixing
    // them up silently.
    static SU2Element fromPartsExact(double w, const Su2Vector& v, double tol = 1e-9) {
        double n = std::sqrt(w * w + v.squaredNorm());
        if (std::abs(n - 1.0) > tol) {
            throw std::invalid_argument("fromPartsExact: quaternion norm " + std::to_string(n) +
                                        " is not 1 within " + std::to_string(tol));
        }
        SU2Element g;
        g.w_ = w;
        g.v_ = v;
        return g;
    }

    static SU2Element fromMatrix(const Eigen::Matrix2cd& u) {
        double w = 0.5 * (u(0, 0) + u(1, 1)).real();
        Su2Vector v(0.5 * (u(0, 1) + u(1, 0)).imag(),  //
                    0.5 * (u(0, 1) - u(1, 0)).real(),  //
                    0.5 * (u(0, 0) - u(1, 1)).imag());
        return fromParts(w, v);
    }

    double w() const { return w_; }
    const Su2Vector& vec() const { return v_; }

    Eigen::Matrix2cd matrix() const {
        return w_ * Eigen::Matrix2cd::Identity() + su2Matrix(v_);
    }

    SU2Element inverse() const {
        SU2Element g;
        g.w_ = w_;
        g.v_ = -v_;
        return g;
    }

    // Eigenvalues are exp(+-i angle); angle in [0, pi]. Well defined
    // everywhere, unlike the logarithm's axis.
    double angle() const { return std::atan2(v_.norm(), w_); }

    friend SU2Element operator*(const SU2Element& p, const SU2Element& q) {
        return fromParts(p.w_ * q.w_ - p.v_.dot(q.v_),
                         p.w_ * q.v_ + q.w_ * p.v_ - p.v_.cross(q.v_));
    }

private:
    double w_;
    Su2Vector v_;
};

// Operator 2-norm of (matrix(g) - I); exact formula sqrt(2 - 2w) evaluated
// in the cancellation-free form hypot(1 - w, |v|).
inline double identityDefect(const SU2Element& g) {
    return std::hypot(1.0 - g.w(), g.vec().norm());
}

// Operator 2-norm distance between two group elements.
inline double groupDistance(const SU2Element& a, const SU2Element& b) {
    return identityDefect(a.inverse() * b);
}

inline SU2Element expMap(const Su2Vector& xi) {
    double t = xi.norm();
    // sin(t)/t with the small-angle series; exp stays exactly on the sphere
    double sinc = (t < 1e-8) ? 1.0 - t * t / 6.0 : std::sin(t) / t;
    return SU2Element::fromParts(std::cos(t), sinc * xi);
}

// Principal logarithm; result norm lies in [0, pi). Throws BranchPointError
// within 1e-9 of -identity, where the principal branch is undefined.
inline Su2Vector logMap(const SU2Element& g) {
    double s = g.vec().norm();
    if (std::hypot(1.0 + g.w(), s) < 1e-9) {
        throw BranchPointError("logMap: element at the -identity branch point");
    }
    double theta = std::atan2(s, g.w());
    if (s < 1e-12) {
        // set of measure zero away from the branch point: g = +-identity + dust
        return (g.w() > 0 ? 1.0 : -1.0) * g.vec();
    }
    return (theta / s) * g.vec();
}

// Ad_g as a 3x3 orthogonal matrix in the basis above:
// Ad_g v = (w^2 - |u|^2) v + 2 (u.v) u - 2 w (u x v)  for g = (w, u).
inline Eigen::Matrix3d adjointMatrix(const SU2Element& g) {
    const Su2Vector& u = g.vec();
    double w = g.w();
    Eigen::Matrix3d cross;
    cross << 0, -u.z(), u.y(),  //
        u.z(), 0, -u.x(),       //
        -u.y(), u.x(), 0;
    return (w * w - u.squaredNorm()) * Eigen::Matrix3d::Identity() +
           2.0 * (u * u.transpose()) - 2.0 * w * cross;
}

inline Su2Vector adjoint(const SU2Element& g, const Su2Vector& xi) {
    const Su2Vector& u = g.vec();
    double w = g.w();
    return (w * w - u.squaredNorm()) * xi + 2.0 * u.dot(xi) * u - 2.0 * w * u.cross(xi);
}

inline SU2Element groupCommutator(const SU2Element& a, const SU2Element& b) {
    return a * b * a.inverse() * b.inverse();
}

// Haar-uniform draw: normalized 4-vector of gaussians.
inline SU2Element haarSU2(std::mt19937_64& rng) {
    while (true) {
        double w = gaussian(rng);
        Su2Vector v(gaussian(rng), gaussian(rng), gaussian(rng));
        double n2 = w * w + v.squaredNorm();
        if (n2 > 1e-12) return SU2Element::fromParts(w, v);
    }
}

}  // namespace prequant
