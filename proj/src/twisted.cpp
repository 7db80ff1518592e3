#include "prequant/twisted.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "prequant/errors.hpp"

namespace prequant {

TwistedComplex::TwistedComplex(const DeltaSurface& surface, const Representation& rho,
                               double flatnessTol)
    : surface_(surface), rho_(rho) {
    if (rho.genus != surface.genus) {
        throw std::invalid_argument("TwistedComplex: representation/surface genus mismatch");
    }
    double defect = relatorDefect(rho);
    if (defect > flatnessTol) {
        throw std::invalid_argument("TwistedComplex: representation is not flat (defect " +
                                    std::to_string(defect) + ")");
    }

    const int g = surface.genus;
    holonomy_.resize(surface.edges.size());
    for (int j = 0; j < 2 * g; ++j) holonomy_[surface.generatorEdge(j)] = rho.holonomies[j];

    // Spanning-tree gauge: radial edge 0 carries the identity, the rest the
    // running prefix product of the relator. The letter spelled along side k
    // is recorded in its triangle: the middle face is the generator edge and
    // cycleSign is the exponent.
    SU2Element prefix;
    holonomy_[surface.radialEdge(0)] = prefix;
    for (int k = 0; k + 1 < 4 * g; ++k) {
        const auto& tri = surface.triangles[k];
        const SU2Element& h = rho.holonomies[surface.edges[tri.face12].label];
        prefix = prefix * (tri.cycleSign == +1 ? h : h.inverse());
        holonomy_[surface.radialEdge(k + 1)] = prefix;
    }
}

SU2Element TwistedComplex::triangleHolonomy(int t) const {
    const auto& tr = surface_.triangles[t];
    return holonomy_[tr.face01] * holonomy_[tr.face12] * holonomy_[tr.face02].inverse();
}

double TwistedComplex::maxTriangleDefect() const {
    double worst = 0.0;
    for (int t = 0; t < triangleCount(); ++t) {
        worst = std::max(worst, identityDefect(triangleHolonomy(t)));
    }
    return worst;
}

double TwistedCochain::maxNorm() const {
    double m = 0.0;
    for (const Su2Vector& v : values) m = std::max(m, v.norm());
    return m;
}

TwistedCochain zeroCochain(const TwistedComplex& tc, int degree) {
    TwistedCochain c;
    c.degree = degree;
    std::size_t n = 0;
    switch (degree) {
        case 0: n = 2; break;
        case 1: n = tc.surface().edges.size(); break;
        case 2: n = tc.surface().triangles.size(); break;
        default: throw std::invalid_argument("zeroCochain: degree must be 0, 1 or 2");
    }
    c.values.assign(n, Su2Vector::Zero());
    return c;
}

TwistedCochain coboundary(const TwistedComplex& tc, const TwistedCochain& c) {
    const DeltaSurface& s = tc.surface();
    if (c.degree == 0) {
        if (c.values.size() != 2) throw std::invalid_argument("coboundary: bad 0-cochain size");
        TwistedCochain out = zeroCochain(tc, 1);
        for (int e = 0; e < tc.edgeCount(); ++e) {
            out.values[e] =
                adjoint(tc.edgeHolonomy(e), c.values[s.edges[e].head]) - c.values[s.edges[e].tail];
        }
        return out;
    }
    if (c.degree == 1) {
        if (c.values.size() != s.edges.size()) {
            throw std::invalid_argument("coboundary: bad 1-cochain size");
        }
        TwistedCochain out = zeroCochain(tc, 2);
        for (int t = 0; t < tc.triangleCount(); ++t) {
            const auto& tr = s.triangles[t];
            out.values[t] = adjoint(tc.edgeHolonomy(tr.face01), c.values[tr.face12]) -
                            c.values[tr.face02] + c.values[tr.face01];
        }
        return out;
    }
    throw std::invalid_argument("coboundary: only degrees 0 and 1 have a coboundary here");
}

Eigen::MatrixXd coboundaryMatrix(const TwistedComplex& tc, int degree) {
    const DeltaSurface& s = tc.surface();
    const int e = tc.edgeCount();
    if (degree == 0) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * e, 6);
        for (int i = 0; i < e; ++i) {
            m.block<3, 3>(3 * i, 3 * s.edges[i].head) += adjointMatrix(tc.edgeHolonomy(i));
            m.block<3, 3>(3 * i, 3 * s.edges[i].tail) -= Eigen::Matrix3d::Identity();
        }
        return m;
    }
    if (degree == 1) {
        const int f = tc.triangleCount();
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * f, 3 * e);
        for (int t = 0; t < f; ++t) {
            const auto& tr = s.triangles[t];
            m.block<3, 3>(3 * t, 3 * tr.face12) += adjointMatrix(tc.edgeHolonomy(tr.face01));
            m.block<3, 3>(3 * t, 3 * tr.face02) -= Eigen::Matrix3d::Identity();
            m.block<3, 3>(3 * t, 3 * tr.face01) += Eigen::Matrix3d::Identity();
        }
        return m;
    }
    throw std::invalid_argument("coboundaryMatrix: degree must be 0 or 1");
}

double cupPairing(const TwistedComplex& tc, const TwistedCochain& alpha,
                  const TwistedCochain& beta, double cocycleTol) {
    if (alpha.degree != 1 || beta.degree != 1) {
        throw std::invalid_argument("cupPairing: arguments must be 1-cochains");
    }
    double da = coboundary(tc, alpha).maxNorm();
    double db = coboundary(tc, beta).maxNorm();
    if (da > cocycleTol || db > cocycleTol) {
        throw std::invalid_argument("cupPairing: argument is not a cocycle (coboundary norm " +
                                    std::to_string(std::max(da, db)) + ")");
    }
    const DeltaSurface& s = tc.surface();
    double sum = 0.0;
    for (int t = 0; t < tc.triangleCount(); ++t) {
        const auto& tr = s.triangles[t];
        sum += tr.cycleSign * traceForm(alpha.values[tr.face01],
                                        adjoint(tc.edgeHolonomy(tr.face01), beta.values[tr.face12]));
    }
    return sum;
}

std::complex<double> goldmanForm(const TwistedComplex& tc, const TwistedCochain& alpha,
                                 const TwistedCochain& beta, double cocycleTol) {
    return std::complex<double>(0.0, 1.0 / (2.0 * M_PI)) * cupPairing(tc, alpha, beta, cocycleTol);
}

TwistedCochain tangentCocycle(const TwistedComplex& tc,
                              const std::vector<Su2Vector>& generatorDerivs) {
    const int g = tc.genus();
    if (static_cast<int>(generatorDerivs.size()) != 2 * g) {
        throw std::invalid_argument("tangentCocycle: need one derivative per generator");
    }
    const DeltaSurface& s = tc.surface();
    TwistedCochain a = zeroCochain(tc, 1);
    for (int j = 0; j < 2 * g; ++j) a.values[s.generatorEdge(j)] = generatorDerivs[j];

    // cocycle rule u(w g) = u(w) + Ad_{rho(w)} u(g), u(g^-1) = -Ad_{rho(g)^-1} u(g),
    // evaluated along the relator prefixes carried by the radial edges; the
    // letter of side k sits in its triangle (generator edge + cycle sign)
    a.values[s.radialEdge(0)] = Su2Vector::Zero();
    for (int k = 0; k + 1 < 4 * g; ++k) {
        const auto& tri = s.triangles[k];
        const int gen = s.edges[tri.face12].label;
        const SU2Element& prefix = tc.edgeHolonomy(s.radialEdge(k));
        Su2Vector step;
        if (tri.cycleSign == +1) {
            step = adjoint(prefix, generatorDerivs[gen]);
        } else {
            const SU2Element& h = tc.rep().holonomies[gen];
            step = -adjoint(prefix * h.inverse(), generatorDerivs[gen]);
        }
        a.values[s.radialEdge(k + 1)] = a.values[s.radialEdge(k)] + step;
    }
    return a;
}

namespace {

struct RankSplit {
    int rank = 0;
    double smallestKept = std::numeric_limits<double>::infinity();
    double largestDropped = 0.0;
};

RankSplit splitSpectrum(const Eigen::VectorXd& sv, double cutoff) {
    // guard band of 10^1.5 on either side of the cutoff: inside it the rank
    // decision is declared ambiguous rather than guessed
    const double band = std::pow(10.0, 1.5);
    RankSplit out;
    for (int i = 0; i < sv.size(); ++i) {
        double v = sv(i);
        if (v > cutoff / band && v < cutoff * band) {
            throw RankAmbiguityError("singular value " + std::to_string(v) +
                                     " inside the ambiguity band around cutoff " +
                                     std::to_string(cutoff));
        }
        if (v >= cutoff) {
            ++out.rank;
            out.smallestKept = std::min(out.smallestKept, v);
        } else {
            out.largestDropped = std::max(out.largestDropped, v);
        }
    }
    return out;
}

double gapOf(const RankSplit& s, double floor) {
    double denom = std::max(s.largestDropped, floor);
    return std::isinf(s.smallestKept) ? std::numeric_limits<double>::infinity()
                                      : s.smallestKept / denom;
}

}  // namespace

CohomologyBasis cohomologyBasis(const TwistedComplex& tc, double svCutoff) {
    const int e3 = 3 * tc.edgeCount();

    Eigen::MatrixXd d1 = coboundaryMatrix(tc, 1);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd1(d1, Eigen::ComputeFullV);
    RankSplit s1 = splitSpectrum(svd1.singularValues(), svCutoff);
    const int kerDim = e3 - s1.rank;
    Eigen::MatrixXd kernel = svd1.matrixV().rightCols(kerDim);  // orthonormal columns

    // project the image of d0 into kernel coordinates and take its orthogonal
    // complement there
    Eigen::MatrixXd m = kernel.transpose() * coboundaryMatrix(tc, 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svdM(m, Eigen::ComputeFullU);
    RankSplit sM = splitSpectrum(svdM.singularValues(), svCutoff);
    Eigen::MatrixXd h1 = kernel * svdM.matrixU().rightCols(kerDim - sM.rank);

    const double floor = 1e-15 * std::max(1.0, svd1.singularValues()(0));
    CohomologyBasis out;
    out.gapAcrossCutoff = std::min(gapOf(s1, floor), gapOf(sM, floor));
    for (int c = 0; c < h1.cols(); ++c) {
        TwistedCochain v = zeroCochain(tc, 1);
        for (int i = 0; i < tc.edgeCount(); ++i) v.values[i] = h1.block<3, 1>(3 * i, c);
        out.vectors.push_back(std::move(v));
    }
    return out;
}

std::array<int, 3> cohomologyDimensions(const TwistedComplex& tc, double svCutoff) {
    Eigen::MatrixXd d0 = coboundaryMatrix(tc, 0);
    Eigen::MatrixXd d1 = coboundaryMatrix(tc, 1);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd0(d0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd1(d1);
    int rank0 = splitSpectrum(svd0.singularValues(), svCutoff).rank;
    int rank1 = splitSpectrum(svd1.singularValues(), svCutoff).rank;
    int h0 = 6 - rank0;
    int h1 = (3 * tc.edgeCount() - rank1) - rank0;
    int h2 = 3 * tc.triangleCount() - rank1;
    return {h0, h1, h2};
}

Eigen::MatrixXd pairingMatrix(const TwistedComplex& tc,
                              const std::vector<TwistedCochain>& basis) {
    const int n = static_cast<int>(basis.size());
    Eigen::MatrixXd p(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p(i, j) = goldmanForm(tc, basis[i], basis[j]).imag();
        }
    }
    return p;
}

}  // namespace prequant
