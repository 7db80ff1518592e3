#include "prequant/chern.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "prequant/errors.hpp"

namespace prequant {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

CurvatureSampler constantCurvatureSampler() {
    return [](double, double) { return std::complex<double>(0.0, -2.0 * kTwoPi); };
}

CurvatureSampler curvatureFromConnection(double h) {
    return [h](double a, double b) {
        auto aPlus = connectionForm({a + h, b});
        auto aMinus = connectionForm({a - h, b});
        auto bPlus = connectionForm({a, b + h});
        auto bMinus = connectionForm({a, b - h});
        // Omega = d omega = (d_a omega_b - d_b omega_a) da ^ db
        return (aPlus[1] - aMinus[1]) / (2.0 * h) - (bPlus[0] - bMinus[0]) / (2.0 * h);
    };
}

TransportOracle prequantumTransportOracle() {
    return [](const LinePath& path) { return parallelTransport(path); };
}

TransportOracle trivialTransportOracle() {
    return [](const LinePath&) { return std::complex<double>(1.0, 0.0); };
}

double chernWeil(const CurvatureSampler& omega, int n, int orientation) {
    if (n < 1) throw std::invalid_argument("chernWeil: grid must be positive");
    if (orientation != 1 && orientation != -1) {
        throw std::invalid_argument("chernWeil: orientation must be +-1");
    }
    std::complex<double> sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            sum += omega((i + 0.5) / n, (j + 0.5) / n);
        }
    }
    std::complex<double> integral = sum / static_cast<double>(n) / static_cast<double>(n);
    std::complex<double> c1 = integral / std::complex<double>(0.0, -kTwoPi);
    return orientation * c1.real();
}

namespace {

LinePath cellLoop(int i, int j, int n, int orientation) {
    double a0 = static_cast<double>(i) / n, a1 = static_cast<double>(i + 1) / n;
    double b0 = static_cast<double>(j) / n, b1 = static_cast<double>(j + 1) / n;
    if (orientation == +1) return rectanglePath(a0, b0, a1, b1);
    return makePath({{a0, b0}, {a0, b1}, {a1, b1}, {a1, b0}, {a0, b0}});
}

}  // namespace

int latticeChern(const TransportOracle& transport, int n, int orientation, double margin,
                 double integerTol) {
    if (n < 4) throw AdmissibilityError("latticeChern: grid " + std::to_string(n) + " too coarse");
    if (orientation != 1 && orientation != -1) {
        throw std::invalid_argument("latticeChern: orientation must be +-1");
    }
    // Links along the grid edges; the plaquette holonomy is the product
    // Ux(i,j) Uy(i+1,j) Ux(i,j+1)^-1 Uy(i,j)^-1, i.e. the counterclockwise
    // cell boundary. Multiplicativity of the oracle over concatenation makes
    // this the same as one loop call per cell.
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::complex<double> u = transport(cellLoop(i, j, n, orientation));
            double phase = std::arg(u);
            if (std::abs(phase) > M_PI - margin) {
                throw AdmissibilityError("latticeChern: plaquette phase " + std::to_string(phase) +
                                         " within margin of the branch cut; grid too coarse");
            }
            sum += phase;
        }
    }
    double k = sum / kTwoPi;
    double rounded = std::round(k);
    if (std::abs(k - rounded) > integerTol) {
        throw NonIntegralDegreeError("latticeChern: phase sum " + std::to_string(k) +
                                     " * 2 pi is not an integer");
    }
    return static_cast<int>(rounded);
}

double holonomyDegree(const TransportOracle& transport, int initialGrid, int orientation,
                      int maxRefinements) {
    if (initialGrid < 2) throw std::invalid_argument("holonomyDegree: grid must be >= 2");
    if (orientation != 1 && orientation != -1) {
        throw std::invalid_argument("holonomyDegree: orientation must be +-1");
    }
    int n = initialGrid;
    for (int level = 0; level <= maxRefinements; ++level, n *= 2) {
        double total = 0.0;
        double ref = 0.0;  // phase of the previously visited cell
        bool ambiguous = false;
        for (int i = 0; i < n && !ambiguous; ++i) {
            for (int j = 0; j < n && !ambiguous; ++j) {
                double raw = std::arg(transport(cellLoop(i, j, n, orientation)));
                // choose the branch nearest the neighboring cell's phase
                double phase = raw + kTwoPi * std::round((ref - raw) / kTwoPi);
                if (std::abs(phase - ref) > M_PI / 2.0) {
                    ambiguous = true;
                    break;
                }
                total += phase;
                ref = phase;
            }
        }
        if (!ambiguous) return total / kTwoPi;
    }
    throw BranchTrackingError("holonomyDegree: branch tracking failed after refinement");
}

int degreeFromCovering(int upstairsDegree, int coveringDegree) {
    if (coveringDegree <= 0) {
        throw std::invalid_argument("degreeFromCovering: covering degree must be positive");
    }
    if (upstairsDegree % coveringDegree != 0) {
        throw NonIntegralDegreeError("degreeFromCovering: " + std::to_string(upstairsDegree) +
                                     " is not divisible by " + std::to_string(coveringDegree));
    }
    return upstairsDegree / coveringDegree;
}

}  // namespace prequant
