#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "prequant/words.hpp"

namespace prequant {

// Standard one-relator presentation of the closed orientable genus-g surface:
// generators a1, b1, ..., ag, bg and relator prod_i [a_i, b_i].
struct SurfacePresentation {
    int genus = 1;
    Word relator;

    int generatorCount() const { return 2 * genus; }
};

SurfacePresentation standardPresentation(int genus);

// "a1", "b1", "a2", ... for generator index 0, 1, 2, ...
std::string generatorName(int index);

// Triangulated model of the surface: the 4g-gon with its standard edge
// identifications, coned from a barycenter. There are exactly two vertices
// (the identified polygon corner p and the center c), 2g generator edges
// p -> p, 4g radial edges c -> p, and 4g triangles.
//
// Each triangle stores its three faces as indices into `edges`, already in
// the stored edge direction: face01 = [v0 v1], face12 = [v1 v2],
// face02 = [v0 v2]. The vertex ordering per triangle is chosen from the
// relator letter's exponent so that every face is traversed the way the edge
// is stored; this is what makes the complex an honest ordered Delta-complex
// (and, downstream, makes the cup product graded-commutative on cohomology).
// cycleSign is the triangle's coefficient in the fundamental cycle for the
// counterclockwise orientation of the polygon.
struct DeltaSurface {
    struct EdgeRec {
        int tail = 0;  // vertex index: 0 = corner p, 1 = center c
        int head = 0;
        bool isGenerator = false;
        int label = 0;  // generator index, or corner index for radial edges
    };
    struct TriangleRec {
        int face01 = 0;
        int face12 = 0;
        int face02 = 0;
        int cycleSign = +1;
        int side = 0;  // polygon side this triangle came from
    };

    int genus = 1;
    int vertexCount = 2;
    std::vector<EdgeRec> edges;        // [0, 2g): generator, [2g, 6g): radial
    std::vector<TriangleRec> triangles;  // size 4g, in polygon side order

    int generatorEdge(int generator) const { return generator; }
    int radialEdge(int corner) const { return 2 * genus + corner; }
    int eulerCharacteristic() const;
};

DeltaSurface buildDeltaComplex(const SurfacePresentation& p);

// Signed incidence matrices of the chain complex (integer entries):
// edge boundary is head - tail; triangle boundary is face12 - face02 + face01.
Eigen::MatrixXi edgeBoundaryMatrix(const DeltaSurface& d);     // V x E
Eigen::MatrixXi triangleBoundaryMatrix(const DeltaSurface& d);  // E x F

// The collapse of all handles but the first: a1 -> a, b1 -> b, every other
// generator to the trivial word. Degree-one map onto the torus.
struct CollapseMap {
    int sourceGenus = 2;

    // Image of a genus-g word as a word in the torus generators (indices 0, 1).
    Word apply(const Word& w) const;
};

CollapseMap collapseMap(int sourceGenus);

}  // namespace prequant
