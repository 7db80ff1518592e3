#pragma once
// Subcommand implementations behind the CLI: each one runs a verification
// pipeline against a RunConfig and returns a report. Module errors inside a
// check become failed records; only I/O and configuration errors escape.

#include <cstdint>
#include <string>

#include "prequant/report.hpp"

namespace prequant {

struct SlabGrid {
    int nt = 32;
    int nx = 8;
    int ny = 8;
};

struct RunConfig {
    std::uint64_t seed = 1;
    int grid = 16;        // moduli-square subdivision for curvature and plaquettes
    SlabGrid slabGrid;    // quadrature grid for the interpolation slab
    int genus = 1;
    int samples = 20;     // random points or representations per battery
    double tol = 1e-6;    // numeric-vs-closed-form comparison tolerance
    int mnRange = 3;      // lattice character range: |m|, |n| <= mnRange
    int orientation = +1;
    std::string outPath;  // empty = no file output
    std::string format = "json";
    int verbosity = 0;
};

// Throws std::invalid_argument on out-of-range values.
void validateConfig(const RunConfig& cfg);

// Full degree-1 pipeline on the torus moduli: curvature integral, the three
// degree algorithms, transport witnesses, equivariance, covering degree, and
// the downstairs degree.
VerificationReport cmdVerifyGenus1(const RunConfig& cfg);

// Slab quadrature versus the closed-form gauge cocycle over the configured
// character range, plus the cocycle composition identity.
VerificationReport cmdCocycleCheck(const RunConfig& cfg);

// Twisted-cohomology route to the symplectic pairing: genus 1 closed form and
// representative independence, higher-genus dimensions and nondegeneracy,
// pulled-back torus families. Writes the pairing matrix CSV to outPath.
VerificationReport cmdGoldman(const RunConfig& cfg);

// Samples flat representations and writes the dataset JSON to outPath, then
// reloads and byte-compares it.
VerificationReport cmdSampleReps(const RunConfig& cfg);

// Emits curvature heatmap, plaquette phase, and quotient scatter data as CSV
// with minimal SVG renderings, under the outPath directory.
VerificationReport cmdPlotData(const RunConfig& cfg);

}  // namespace prequant
