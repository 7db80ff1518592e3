#include "prequant/representation.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "prequant/errors.hpp"

namespace prequant {

SU2Element evalWord(const Representation& rho, const Word& w) {
    SU2Element out;
    for (const Letter& l : w.letters()) {
        if (l.generator < 0 || l.generator >= 2 * rho.genus) {
            throw std::out_of_range("evalWord: generator index out of range");
        }
        const SU2Element& h = rho.holonomies[l.generator];
        out = out * (l.exponent == +1 ? h : h.inverse());
    }
    return out;
}

double relatorDefect(const Representation& rho) {
    return identityDefect(evalWord(rho, standardPresentation(rho.genus).relator));
}

Representation sampleCommutingPair(std::mt19937_64& rng) {
    SU2Element c = haarSU2(rng);
    double alpha = uniformIn(rng, -M_PI, M_PI);
    double beta = uniformIn(rng, -M_PI, M_PI);
    Representation rho;
    rho.genus = 1;
    rho.holonomies = {c * expMap(alpha * basisX()) * c.inverse(),
                      c * expMap(beta * basisX()) * c.inverse()};
    return rho;
}

namespace {

// SU(2) element whose adjoint rotates unit vector `from` onto unit vector `to`.
SU2Element axisAligner(const Su2Vector& from, const Su2Vector& to) {
    double c = from.dot(to);
    Su2Vector axis = from.cross(to);
    double s = axis.norm();
    if (s < 1e-12) {
        if (c > 0) return SU2Element::identity();
        // antiparallel: rotate by pi about any perpendicular axis
        Su2Vector perp = from.unitOrthogonal();
        SU2Element g = expMap((M_PI / 2.0) * perp);
        if ((adjoint(g, from) - to).norm() > 1e-9) g = g.inverse();
        return g;
    }
    axis /= s;
    double psi = std::atan2(s, c);
    // Ad_{exp(t u)} rotates about u by angle -2t in this basis, hence the sign.
    return expMap((-psi / 2.0) * axis);
}

}  // namespace

std::pair<SU2Element, SU2Element> solveCommutator(const SU2Element& target) {
    const double targetAngle = target.angle();

    if (targetAngle < 1e-12) {
        // commutator identity: any commuting pair works
        return {SU2Element::identity(), SU2Element::identity()};
    }
    if (targetAngle > M_PI - 1e-12) {
        // target is -identity; (i sigma_1, i sigma_2) has commutator exactly -I
        return {expMap((M_PI / 2.0) * Su2Vector::UnitX()),
                expMap((M_PI / 2.0) * Su2Vector::UnitY())};
    }

    const SU2Element b0 = expMap((M_PI / 2.0) * Su2Vector::UnitX());
    auto commAngle = [&](double s) {
        return groupCommutator(expMap(s * basisX()), b0).angle();
    };

    // commAngle(0) = 0, commAngle(pi/2) = pi; bisect on the continuous sweep
    double lo = 0.0, hi = M_PI / 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        (commAngle(mid) < targetAngle ? lo : hi) = mid;
    }
    if (hi - lo > 1e-12) throw ConvergenceError("solveCommutator: bisection stalled");

    double s = 0.5 * (lo + hi);
    SU2Element a = expMap(s * basisX());
    SU2Element c0 = groupCommutator(a, b0);

    // same angle => conjugate; rotate the commutator axis onto the target axis
    Su2Vector axis0 = c0.vec().normalized();
    Su2Vector axis1 = target.vec().normalized();
    SU2Element conj = axisAligner(axis0, axis1);
    return {conj * a * conj.inverse(), conj * b0 * conj.inverse()};
}

Representation sampleFlat(int genus, std::mt19937_64& rng) {
    if (genus < 1) throw std::invalid_argument("sampleFlat: genus must be >= 1");
    if (genus == 1) return sampleCommutingPair(rng);

    Representation rho;
    rho.genus = genus;
    SU2Element partial;  // product of the first g-1 commutators
    for (int i = 0; i < genus - 1; ++i) {
        SU2Element a = haarSU2(rng), b = haarSU2(rng);
        rho.holonomies.push_back(a);
        rho.holonomies.push_back(b);
        partial = partial * groupCommutator(a, b);
    }
    auto [ag, bg] = solveCommutator(partial.inverse());
    rho.holonomies.push_back(ag);
    rho.holonomies.push_back(bg);
    return rho;
}

bool isIrreducible(const Representation& rho, double rankTol) {
    // Commutant of the holonomies inside 2x2 complex matrices, as a real
    // linear system: for each holonomy U, the map M -> U M - M U. Unknown M
    // has 8 real coordinates; stack 8 real equations per holonomy.
    const int n = static_cast<int>(rho.holonomies.size());
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(8 * n, 8);
    for (int k = 0; k < n; ++k) {
        Eigen::Matrix2cd u = rho.holonomies[k].matrix();
        // unknown entry M_{ij} = x_{ij} + i y_{ij}, column order
        // (x00, y00, x01, y01, x10, y10, x11, y11)
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int l = 0; l < 2; ++l) {
                    // (U M)_{ij} picks up U_{il} M_{lj}; (M U)_{ij} picks M_{il} U_{lj}
                    std::complex<double> cu = u(i, l);
                    std::complex<double> cv = -u(l, j);
                    int row = 8 * k + 4 * i + 2 * j;
                    int colU = 4 * l + 2 * j;
                    int colV = 4 * i + 2 * l;
                    sys(row, colU) += cu.real();
                    sys(row, colU + 1) += -cu.imag();
                    sys(row + 1, colU) += cu.imag();
                    sys(row + 1, colU + 1) += cu.real();
                    sys(row, colV) += cv.real();
                    sys(row, colV + 1) += -cv.imag();
                    sys(row + 1, colV) += cv.imag();
                    sys(row + 1, colV + 1) += cv.real();
                }
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys);
    const auto& sv = svd.singularValues();
    double cutoff = rankTol * sv(0);
    int nullity = 0;
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) <= cutoff) ++nullity;
    }
    // the complex scalars are always in the commutant (2 real dimensions)
    return nullity == 2;
}

Representation conjugate(const Representation& rho, const SU2Element& g) {
    Representation out = rho;
    for (SU2Element& h : out.holonomies) h = g * h * g.inverse();
    return out;
}

Representation pullbackToGenus(const Representation& torusRep, int genus, double flatnessTol) {
    if (torusRep.genus != 1 || torusRep.holonomies.size() != 2) {
        throw std::invalid_argument("pullbackToGenus: input must be a torus representation");
    }
    if (genus < 1) throw std::invalid_argument("pullbackToGenus: target genus must be >= 1");
    if (relatorDefect(torusRep) > flatnessTol) {
        throw std::invalid_argument("pullbackToGenus: input representation is not flat");
    }
    Representation out;
    out.genus = genus;
    out.holonomies.assign(2 * genus, SU2Element::identity());
    out.holonomies[0] = torusRep.holonomies[0];
    out.holonomies[1] = torusRep.holonomies[1];
    return out;
}

std::vector<double> traceCoordinates(const Representation& rho, const std::vector<Word>& words) {
    std::vector<double> out;
    out.reserve(words.size());
    for (const Word& w : words) out.push_back(2.0 * evalWord(rho, w).w());
    return out;
}

}  // namespace prequant
