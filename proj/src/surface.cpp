#include "prequant/surface.hpp"

#include <stdexcept>

namespace prequant {

SurfacePresentation standardPresentation(int genus) {
    if (genus < 1) throw std::invalid_argument("standardPresentation: genus must be >= 1");
    SurfacePresentation p;
    p.genus = genus;
    for (int i = 0; i < genus; ++i) {
        int a = 2 * i, b = 2 * i + 1;
        p.relator.push({a, +1});
        p.relator.push({b, +1});
        p.relator.push({a, -1});
        p.relator.push({b, -1});
    }
    return p;
}

std::string generatorName(int index) {
    if (index < 0) throw std::invalid_argument("generatorName: negative index");
    std::string base = (index % 2 == 0) ? "a" : "b";
    return base + std::to_string(index / 2 + 1);
}

int DeltaSurface::eulerCharacteristic() const {
    return vertexCount - static_cast<int>(edges.size()) + static_cast<int>(triangles.size());
}

DeltaSurface buildDeltaComplex(const SurfacePresentation& p) {
    if (static_cast<int>(p.relator.size()) != 4 * p.genus) {
        throw std::invalid_argument("buildDeltaComplex: relator length must be 4g");
    }
    const int g = p.genus;
    const int sides = 4 * g;

    DeltaSurface d;
    d.genus = g;
    d.vertexCount = 2;

    // generator edges p -> p (vertex 0 = p, vertex 1 = center c)
    for (int j = 0; j < 2 * g; ++j) d.edges.push_back({0, 0, true, j});
    // radial edges c -> corner k (all corners are the vertex p)
    for (int k = 0; k < sides; ++k) d.edges.push_back({1, 0, false, k});

    // Side k of the polygon runs corner k -> corner k+1 and carries letter k
    // of the relator. With exponent +1 the side runs along its generator edge
    // and the triangle is ordered (c, P_k, P_{k+1}); with exponent -1 the
    // generator direction is P_{k+1} -> P_k and the ordering (c, P_{k+1}, P_k)
    // keeps all three faces order-compatible at the cost of a -1 in the
    // fundamental cycle.
    const auto& letters = p.relator.letters();
    for (int k = 0; k < sides; ++k) {
        const Letter& l = letters[k];
        int next = (k + 1) % sides;
        DeltaSurface::TriangleRec t;
        t.side = k;
        t.face12 = d.generatorEdge(l.generator);
        if (l.exponent == +1) {
            t.face01 = d.radialEdge(k);
            t.face02 = d.radialEdge(next);
            t.cycleSign = +1;
        } else {
            t.face01 = d.radialEdge(next);
            t.face02 = d.radialEdge(k);
            t.cycleSign = -1;
        }
        d.triangles.push_back(t);
    }
    return d;
}

Eigen::MatrixXi edgeBoundaryMatrix(const DeltaSurface& d) {
    Eigen::MatrixXi m = Eigen::MatrixXi::Zero(d.vertexCount, static_cast<int>(d.edges.size()));
    for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
        m(d.edges[e].head, e) += 1;
        m(d.edges[e].tail, e) -= 1;
    }
    return m;
}

Eigen::MatrixXi triangleBoundaryMatrix(const DeltaSurface& d) {
    Eigen::MatrixXi m =
        Eigen::MatrixXi::Zero(static_cast<int>(d.edges.size()), static_cast<int>(d.triangles.size()));
    for (int t = 0; t < static_cast<int>(d.triangles.size()); ++t) {
        m(d.triangles[t].face12, t) += 1;
        m(d.triangles[t].face02, t) -= 1;
        m(d.triangles[t].face01, t) += 1;
    }
    return m;
}

Word CollapseMap::apply(const Word& w) const {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.generator == 0 || l.generator == 1) out.push(l);
        // all other generators map to the identity and vanish
    }
    return out;
}

CollapseMap collapseMap(int sourceGenus) {
    if (sourceGenus < 1) throw std::invalid_argument("collapseMap: genus must be >= 1");
    return CollapseMap{sourceGenus};
}

}  // namespace prequant
