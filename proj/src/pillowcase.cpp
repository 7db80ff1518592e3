#include "prequant/pillowcase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prequant/errors.hpp"
#include "prequant/random.hpp"

namespace prequant {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double wrapDelta(double x, double y) {
    double d = std::abs(reduceMod1(x) - reduceMod1(y));
    return std::min(d, 1.0 - d);
}

}  // namespace

double relationDefect(const PillowcasePoint& q) {
    return std::abs((1.0 - q.u * q.u) * (1.0 - q.v * q.v) - q.w * q.w);
}

double pillowcaseDistance(const PillowcasePoint& q1, const PillowcasePoint& q2) {
    return std::hypot(q1.u - q2.u, q1.v - q2.v, q1.w - q2.w);
}

double reduceMod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;
    return r;
}

double torusDistance(const TorusModuliPoint& p1, const TorusModuliPoint& p2) {
    return std::hypot(wrapDelta(p1.a, p2.a), wrapDelta(p1.b, p2.b));
}

std::vector<TorusModuliPoint> weylOrbit(const TorusModuliPoint& p) {
    TorusModuliPoint rep{reduceMod1(p.a), reduceMod1(p.b)};
    TorusModuliPoint mirror{reduceMod1(-p.a), reduceMod1(-p.b)};
    if (rep.a == mirror.a && rep.b == mirror.b) return {rep};
    return {rep, mirror};
}

std::vector<TorusModuliPoint> fixedPoints() {
    return {{0.0, 0.0}, {0.0, 0.5}, {0.5, 0.0}, {0.5, 0.5}};
}

PillowcasePoint quotientMap(const TorusModuliPoint& p) {
    double sa = std::sin(kTwoPi * p.a);
    double sb = std::sin(kTwoPi * p.b);
    return {std::cos(kTwoPi * p.a), std::cos(kTwoPi * p.b), sa * sb};
}

std::vector<PillowcasePoint> branchImages() {
    std::vector<PillowcasePoint> out;
    out.reserve(4);
    for (const auto& p : fixedPoints()) out.push_back(quotientMap(p));
    return out;
}

double minBranchDistance(const PillowcasePoint& q) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& img : branchImages())
        best = std::min(best, pillowcaseDistance(q, img));
    return best;
}

std::vector<TorusModuliPoint> preimages(const PillowcasePoint& q,
                                        double branchTol) {
    if (minBranchDistance(q) < branchTol)
        throw BranchProximityError(
            "target lies within " + std::to_string(branchTol) +
            " of a branch image; the preimage count degenerates there");

    // Invert the cosines. alpha and beta land in [0, 1/2], where the sines
    // are nonnegative; the mirrored candidates 1 - alpha, 1 - beta carry the
    // opposite sine sign, so w singles out two of the four combinations.
    double alpha = std::acos(std::clamp(q.u, -1.0, 1.0)) / kTwoPi;
    double beta = std::acos(std::clamp(q.v, -1.0, 1.0)) / kTwoPi;

    constexpr double wTol = 1e-12;
    std::vector<TorusModuliPoint> out;
    if (std::abs(q.w) <= wTol) {
        // One cosine is at +-1 (the branch guard rules out both at once), so
        // the sign ambiguity collapses on that factor and survives on the
        // other: the fiber is the two points differing by the mirrored angle.
        if (1.0 - std::abs(q.u) <= 1.0 - std::abs(q.v)) {
            out.push_back({alpha, beta});
            out.push_back({alpha, reduceMod1(1.0 - beta)});
        } else {
            out.push_back({alpha, beta});
            out.push_back({reduceMod1(1.0 - alpha), beta});
        }
    } else if (q.w > 0.0) {
        out.push_back({alpha, beta});
        out.push_back({reduceMod1(1.0 - alpha), reduceMod1(1.0 - beta)});
    } else {
        out.push_back({alpha, reduceMod1(1.0 - beta)});
        out.push_back({reduceMod1(1.0 - alpha), beta});
    }

    // Coincident candidates would indicate a branch point; the guard above
    // keeps them apart, but dedupe anyway so the count stays honest.
    if (torusDistance(out[0], out[1]) < 1e-9) out.pop_back();
    return out;
}

int coveringDegree(int samples, std::mt19937_64& rng, double branchTol) {
    if (samples < 1)
        throw std::invalid_argument("coveringDegree needs at least one sample");

    int commonCount = -1;
    for (int s = 0; s < samples; ++s) {
        TorusModuliPoint p{};
        PillowcasePoint q{};
        int attempts = 0;
        for (;;) {
            p = {uniformUnit(rng), uniformUnit(rng)};
            q = quotientMap(p);
            if (minBranchDistance(q) >= branchTol) break;
            if (++attempts >= 1000)
                throw BranchProximityError(
                    "could not draw a regular value away from the branch "
                    "images after 1000 attempts");
        }

        auto fiber = preimages(q, branchTol);
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& pt : fiber)
            nearest = std::min(nearest, torusDistance(pt, p));
        if (nearest > 1e-6)
            throw InconsistentCountError(
                "sampled source point is missing from its own fiber");

        int count = static_cast<int>(fiber.size());
        if (commonCount == -1) {
            commonCount = count;
        } else if (count != commonCount) {
            throw InconsistentCountError(
                "preimage count changed between samples: " +
                std::to_string(commonCount) + " vs " + std::to_string(count));
        }
    }
    return commonCount;
}

double weylInvarianceDefect(const CurvatureSampler& omega, int gridN) {
    if (gridN < 1) throw std::invalid_argument("grid must be positive");
    double worst = 0.0;
    for (int i = 0; i < gridN; ++i) {
        for (int j = 0; j < gridN; ++j) {
            double a = (i + 0.5) / gridN;
            double b = (j + 0.5) / gridN;
            worst = std::max(worst, std::abs(omega(a, b) - omega(-a, -b)));
        }
    }
    return worst;
}

}  // namespace prequant
