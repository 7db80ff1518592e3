#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "prequant/random.hpp"
#include "prequant/representation.hpp"

using namespace prequant;

namespace {

Representation identityRep(int genus) {
    Representation rho;
    rho.genus = genus;
    rho.holonomies.assign(2 * genus, SU2Element::identity());
    return rho;
}

// (i sigma_1, i sigma_2) as a genus-1 assignment; its commutator is -identity,
// so the relator defect is the full ||-I - I|| = 2.
Representation pauliPair() {
    Representation rho;
    rho.genus = 1;
    rho.holonomies = {SU2Element::fromParts(0.0, Su2Vector::UnitX()),
                      SU2Element::fromParts(0.0, Su2Vector::UnitY())};
    return rho;
}

// Two handles with commutator -identity each: flat and irreducible.
Representation crossedGenus2() {
    Representation rho;
    rho.genus = 2;
    rho.holonomies = {SU2Element::fromParts(0.0, Su2Vector::UnitX()),
                      SU2Element::fromParts(0.0, Su2Vector::UnitY()),
                      SU2Element::fromParts(0.0, Su2Vector::UnitY()),
                      SU2Element::fromParts(0.0, Su2Vector::UnitZ())};
    return rho;
}

double maxHolonomyDistance(const Representation& x, const Representation& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.holonomies.size(); ++i) {
        worst = std::max(worst, groupDistance(x.holonomies[i], y.holonomies[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("word evaluation: empty word, single letters, inverses") {
    auto rng = makeStream(31);
    Representation rho = sampleFlat(2, rng);

    CHECK(identityDefect(evalWord(rho, Word())) == 0.0);
    CHECK(groupDistance(evalWord(rho, Word({{0, +1}})), rho.holonomy(0)) < 1e-15);
    CHECK(groupDistance(evalWord(rho, Word({{3, -1}})), rho.holonomy(3).inverse()) < 1e-15);

    Word w({{0, +1}, {1, +1}, {2, -1}});
    SU2Element byHand = rho.holonomy(0) * rho.holonomy(1) * rho.holonomy(2).inverse();
    CHECK(groupDistance(evalWord(rho, w), byHand) < 1e-14);

    CHECK_THROWS_AS(evalWord(rho, Word({{4, +1}})), std::out_of_range);
}

TEST_CASE("relator defect separates flat from non-flat assignments") {
    CHECK(relatorDefect(identityRep(1)) == 0.0);
    CHECK(relatorDefect(identityRep(3)) == 0.0);

    auto rng = makeStream(32);
    for (int i = 0; i < 20; ++i) {
        CHECK(relatorDefect(sampleCommutingPair(rng)) < 1e-12);
    }

    // commutator -identity sits at distance 2 from the identity
    CHECK(relatorDefect(pauliPair()) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("commuting pair sampler is flat, commuting, and deterministic") {
    auto rngA = makeStream(33);
    auto rngB = makeStream(33);
    for (int i = 0; i < 20; ++i) {
        Representation x = sampleCommutingPair(rngA);
        Representation y = sampleCommutingPair(rngB);
        CHECK(x.holonomies[0].w() == y.holonomies[0].w());
        CHECK(x.holonomies[0].vec() == y.holonomies[0].vec());
        CHECK(x.holonomies[1].w() == y.holonomies[1].w());
        CHECK(x.holonomies[1].vec() == y.holonomies[1].vec());
        CHECK(groupDistance(x.holonomies[0] * x.holonomies[1],
                            x.holonomies[1] * x.holonomies[0]) < 1e-12);
    }
}

TEST_CASE("commutator solver hits its target") {
    auto [a0, b0] = solveCommutator(SU2Element::identity());
    CHECK(identityDefect(groupCommutator(a0, b0)) < 1e-12);

    SU2Element minusI = SU2Element::fromParts(-1.0, Su2Vector::Zero());
    auto [a1, b1] = solveCommutator(minusI);
    CHECK(groupDistance(groupCommutator(a1, b1), minusI) < 1e-12);

    auto rng = makeStream(34);
    for (int i = 0; i < 100; ++i) {
        SU2Element target = haarSU2(rng);
        auto [a, b] = solveCommutator(target);
        CHECK(groupDistance(groupCommutator(a, b), target) < 1e-10);
        // trace match in particular
        CHECK(groupCommutator(a, b).w() == doctest::Approx(target.w()).epsilon(1e-10));
    }
}

TEST_CASE("flat sampler closes the relator at every genus") {
    auto rng = makeStream(35);
    for (int i = 0; i < 1000; ++i) {
        int genus = 1 + i % 3;
        Representation rho = sampleFlat(genus, rng);
        CHECK(rho.genus == genus);
        CHECK(rho.holonomies.size() == static_cast<std::size_t>(2 * genus));
        CHECK(relatorDefect(rho) < 1e-9);
    }

    CHECK_THROWS_AS(sampleFlat(0, rng), std::invalid_argument);
}

TEST_CASE("flat sampler is deterministic per seed") {
    auto rngA = makeStream(36);
    auto rngB = makeStream(36);
    Representation x = sampleFlat(3, rngA);
    Representation y = sampleFlat(3, rngB);
    for (int j = 0; j < 6; ++j) {
        CHECK(x.holonomies[j].w() == y.holonomies[j].w());
        CHECK(x.holonomies[j].vec() == y.holonomies[j].vec());
    }
}

TEST_CASE("irreducibility: commuting assignments fail, crossed handles pass") {
    CHECK_FALSE(isIrreducible(identityRep(1)));
    CHECK_FALSE(isIrreducible(identityRep(2)));

    auto rng = makeStream(37);
    for (int i = 0; i < 20; ++i) {
        CHECK_FALSE(isIrreducible(sampleCommutingPair(rng)));
    }

    CHECK(isIrreducible(crossedGenus2()));
    for (int i = 0; i < 50; ++i) {
        // random flat genus-2 draws are irreducible away from a measure-zero set
        Representation rho = sampleFlat(2, rng);
        CHECK(isIrreducible(rho));
    }
}

TEST_CASE("irreducibility is conjugation invariant") {
    auto rng = makeStream(38);
    Representation red = sampleCommutingPair(rng);
    Representation irr = crossedGenus2();
    for (int i = 0; i < 100; ++i) {
        SU2Element g = haarSU2(rng);
        CHECK_FALSE(isIrreducible(conjugate(red, g)));
        CHECK(isIrreducible(conjugate(irr, g)));
    }
}

TEST_CASE("conjugation preserves traces and composes") {
    auto rng = makeStream(39);
    Representation rho = sampleFlat(2, rng);

    CHECK(maxHolonomyDistance(conjugate(rho, SU2Element::identity()), rho) < 1e-15);
    CHECK(relatorDefect(conjugate(rho, haarSU2(rng))) < 1e-11);

    std::vector<Word> words = {Word({{0, +1}}), Word({{1, +1}, {2, +1}}),
                               Word({{3, -1}, {0, +1}, {1, -1}})};
    std::vector<double> before = traceCoordinates(rho, words);
    for (int i = 0; i < 20; ++i) {
        SU2Element g = haarSU2(rng);
        std::vector<double> after = traceCoordinates(conjugate(rho, g), words);
        for (std::size_t k = 0; k < words.size(); ++k) {
            CHECK(after[k] == doctest::Approx(before[k]).epsilon(1e-12));
        }
    }

    SU2Element g = haarSU2(rng), h = haarSU2(rng);
    CHECK(maxHolonomyDistance(conjugate(conjugate(rho, g), h), conjugate(rho, h * g)) < 1e-12);
}

TEST_CASE("pullback pads a torus representation with identity handles") {
    Representation twoHandles = pullbackToGenus(identityRep(1), 2);
    CHECK(twoHandles.genus == 2);
    CHECK(maxHolonomyDistance(twoHandles, identityRep(2)) == 0.0);

    auto rng = makeStream(40);
    Representation torus = sampleCommutingPair(rng);
    Representation lifted = pullbackToGenus(torus, 3);
    CHECK(lifted.genus == 3);
    CHECK(relatorDefect(lifted) < 1e-12);
    CHECK(groupDistance(lifted.holonomy(0), torus.holonomy(0)) == 0.0);
    CHECK(groupDistance(lifted.holonomy(1), torus.holonomy(1)) == 0.0);
    for (int j = 2; j < 6; ++j) CHECK(identityDefect(lifted.holonomy(j)) == 0.0);

    // first-handle traces survive the lift
    std::vector<Word> firstHandle = {Word({{0, +1}}), Word({{1, +1}})};
    CHECK(traceCoordinates(lifted, firstHandle) == traceCoordinates(torus, firstHandle));

    CHECK_THROWS_AS(pullbackToGenus(pauliPair(), 2), std::invalid_argument);
    CHECK_THROWS_AS(pullbackToGenus(identityRep(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(pullbackToGenus(identityRep(1), 0), std::invalid_argument);
}

TEST_CASE("pullback commutes with conjugation") {
    auto rng = makeStream(41);
    for (int i = 0; i < 20; ++i) {
        Representation torus = sampleCommutingPair(rng);
        SU2Element g = haarSU2(rng);
        Representation lhs = pullbackToGenus(conjugate(torus, g), 2, 1e-9);
        Representation rhs = conjugate(pullbackToGenus(torus, 2), g);
        CHECK(maxHolonomyDistance(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("trace coordinates: identity words, diagonal angles, class invariance") {
    Representation id = identityRep(2);
    std::vector<Word> words = {Word(), Word({{0, +1}}), Word({{2, +1}, {3, +1}})};
    for (double t : traceCoordinates(id, words)) CHECK(t == 2.0);

    double alpha = 0.77;
    Representation rho;
    rho.genus = 1;
    rho.holonomies = {expMap(alpha * basisX()), SU2Element::identity()};
    std::vector<double> coords = traceCoordinates(rho, {Word({{0, +1}})});
    CHECK(coords[0] == doctest::Approx(2.0 * std::cos(alpha)).epsilon(1e-14));
}
