#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "prequant/representation.hpp"
#include "prequant/su2.hpp"
#include "prequant/surface.hpp"

namespace prequant {

// Cochain complex of the triangulated surface with coefficients in su(2)
// twisted by Ad of a flat representation.
//
// Each stored edge e carries a holonomy h(e) transporting coefficients from
// the head frame to the tail frame. In the spanning-tree gauge the radial
// edge to corner 0 is the tree and carries the identity; the radial edge to
// corner k then carries the product of the first k relator letters, so every
// triangle is exactly flat except the last, which absorbs the relator defect.
//
// Coboundaries:
//   (d phi)(e)  = Ad_{h(e)} phi(head) - phi(tail)
//   (d alpha)(T) = Ad_{h(face01)} alpha(face12) - alpha(face02) + alpha(face01)
class TwistedComplex {
public:
    TwistedComplex(const DeltaSurface& surface, const Representation& rho,
                   double flatnessTol = 1e-10);

    const DeltaSurface& surface() const { return surface_; }
    const Representation& rep() const { return rho_; }
    const SU2Element& edgeHolonomy(int edge) const { return holonomy_[edge]; }

    int genus() const { return surface_.genus; }
    int edgeCount() const { return static_cast<int>(surface_.edges.size()); }
    int triangleCount() const { return static_cast<int>(surface_.triangles.size()); }

    // Holonomy around the boundary of triangle t (identity up to the defect).
    SU2Element triangleHolonomy(int t) const;
    double maxTriangleDefect() const;

private:
    DeltaSurface surface_;
    Representation rho_;
    std::vector<SU2Element> holonomy_;
};

// Degree-0 cochains assign an su(2) value per vertex, degree-1 per edge,
// degree-2 per triangle.
struct TwistedCochain {
    int degree = 1;
    std::vector<Su2Vector> values;

    double maxNorm() const;
};

TwistedCochain zeroCochain(const TwistedComplex& tc, int degree);
TwistedCochain coboundary(const TwistedComplex& tc, const TwistedCochain& c);

// Real matrices of the coboundaries in the basis (e1, e2, e3) per cell:
// degree 0: (3E x 3V), degree 1: (3F x 3E).
Eigen::MatrixXd coboundaryMatrix(const TwistedComplex& tc, int degree);

// Cup product of two 1-cocycles paired by the trace form and evaluated on the
// fundamental cycle:
//   sum_T cycleSign(T) * Tr( alpha(face01) * Ad_{h(face01)} beta(face12) ).
// Requires both arguments to be cocycles (coboundary sup-norm <= cocycleTol).
double cupPairing(const TwistedComplex& tc, const TwistedCochain& alpha,
                  const TwistedCochain& beta, double cocycleTol = 1e-8);

// Goldman symplectic pairing (i / 2 pi) * cupPairing; purely imaginary.
std::complex<double> goldmanForm(const TwistedComplex& tc, const TwistedCochain& alpha,
                                 const TwistedCochain& beta, double cocycleTol = 1e-8);

// The 1-cocycle of a deformation of the representation, given the right
// logarithmic derivative u_j = (d/dt rho_t(gen_j)) rho(gen_j)^{-1} of each
// generator. Values on radial edges are propagated through the triangles;
// generatorDerivs must be tangent to the relator condition for the result to
// close up (the residual lands in the last triangle's coboundary).
TwistedCochain tangentCocycle(const TwistedComplex& tc,
                              const std::vector<Su2Vector>& generatorDerivs);

// Orthonormal basis of H^1: kernel of d1 (SVD rank decision with the given
// absolute singular-value cutoff) with the image of d0 projected out.
// gapAcrossCutoff reports how cleanly the cutoff separated the spectrum
// (smallest kept / largest dropped singular value, across both decisions).
// Throws RankAmbiguityError when singular values cluster at the cutoff.
struct CohomologyBasis {
    std::vector<TwistedCochain> vectors;
    double gapAcrossCutoff = 0.0;

    int dimension() const { return static_cast<int>(vectors.size()); }
};

CohomologyBasis cohomologyBasis(const TwistedComplex& tc, double svCutoff = 1e-8);

// dim H^0, H^1, H^2 by rank counting (same cutoff policy as cohomologyBasis).
std::array<int, 3> cohomologyDimensions(const TwistedComplex& tc, double svCutoff = 1e-8);

// Pairing matrix of goldmanForm (imaginary parts) on a basis.
Eigen::MatrixXd pairingMatrix(const TwistedComplex& tc,
                              const std::vector<TwistedCochain>& basis);

}  // namespace prequant
