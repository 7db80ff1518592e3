#pragma once

#include <random>
#include <utility>
#include <vector>

#include "prequant/su2.hpp"
#include "prequant/surface.hpp"
#include "prequant/words.hpp"

namespace prequant {

// A homomorphism of the genus-g surface group into SU(2), stored by its
// generator holonomies (a1, b1, ..., ag, bg). Flatness means the relator
// evaluates to the identity; relatorDefect measures the failure.
struct Representation {
    int genus = 1;
    std::vector<SU2Element> holonomies;

    const SU2Element& holonomy(int generator) const { return holonomies.at(generator); }
};

SU2Element evalWord(const Representation& rho, const Word& w);

// Operator-norm distance of the evaluated relator from the identity.
double relatorDefect(const Representation& rho);

// (A, B) = (C e^{alpha X} C^-1, C e^{beta X} C^-1) with Haar C and uniform
// angles: a generic commuting pair, exactly flat.
Representation sampleCommutingPair(std::mt19937_64& rng);

// A pair (A, B) with [A, B] = target, up to ~1e-10 in operator norm.
// One-parameter family A = exp(s X), B0 = exp((pi/2) e1): the commutator
// angle sweeps [0, pi] continuously, so bisection matches the target angle;
// a final conjugation aligns the commutator axis with the target's.
std::pair<SU2Element, SU2Element> solveCommutator(const SU2Element& target);

// Random flat genus-g representation: handles 1..g-1 Haar-random, the last
// pair solved so that the relator closes. Genus 1 delegates to
// sampleCommutingPair.
Representation sampleFlat(int genus, std::mt19937_64& rng);

// True iff the commutant of the holonomy set is the scalars (rank decided by
// SVD nullity with relative cutoff rankTol).
bool isIrreducible(const Representation& rho, double rankTol = 1e-8);

Representation conjugate(const Representation& rho, const SU2Element& g);

// Pull a flat torus representation back along the handle collapse: the first
// handle carries (A, B), all others the identity. Rejects non-flat input.
Representation pullbackToGenus(const Representation& torusRep, int genus,
                               double flatnessTol = 1e-10);

// Traces of the given words; coordinates on the character variety.
std::vector<double> traceCoordinates(const Representation& rho, const std::vector<Word>& words);

}  // namespace prequant
