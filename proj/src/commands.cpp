#include "prequant/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "prequant/chern.hpp"
#include "prequant/errors.hpp"
#include "prequant/io.hpp"
#include "prequant/pillowcase.hpp"
#include "prequant/random.hpp"
#include "prequant/representation.hpp"
#include "prequant/surface.hpp"
#include "prequant/torus_bundle.hpp"
#include "prequant/twisted.hpp"

namespace prequant {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

nlohmann::json provenanceOf(const RunConfig& cfg) {
    return {{"seed", cfg.seed},
            {"grid", cfg.grid},
            {"slab_grid", {cfg.slabGrid.nt, cfg.slabGrid.nx, cfg.slabGrid.ny}},
            {"genus", cfg.genus},
            {"samples", cfg.samples},
            {"tol", cfg.tol},
            {"mn_range", cfg.mnRange},
            {"orientation", cfg.orientation},
            {"version", kVersion}};
}

// Runs one check; computation errors become failed records so the report
// always finishes. I/O is kept outside these blocks on purpose.
void guarded(VerificationReport& rep, const std::string& name, const std::string& source,
             const std::function<CheckRecord()>& fn) {
    try {
        rep.add(fn());
    } catch (const std::exception& e) {
        rep.add(CheckRecord::failed(name, source, e.what()));
    }
}

TorusModuliPoint randomModuliPoint(std::mt19937_64& rng) {
    return {uniformUnit(rng), uniformUnit(rng)};
}

GaugeCharacter randomCharacter(std::mt19937_64& rng, int range, bool allowWeyl) {
    GaugeCharacter c;
    c.m = uniformInt(rng, -range, range);
    c.n = uniformInt(rng, -range, range);
    c.weyl = allowWeyl && uniformInt(rng, 0, 1) == 1 ? -1 : +1;
    return c;
}

// A commuting pair whose common rotation angles stay away from 0 and pi,
// where the deformation space degenerates.
Representation genericCommutingPair(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Representation rho = sampleCommutingPair(rng);
        double a0 = rho.holonomy(0).angle();
        double a1 = rho.holonomy(1).angle();
        double margin = 0.1;
        if (a0 > margin && a0 < kPi - margin && a1 > margin && a1 < kPi - margin) return rho;
    }
    throw ConvergenceError("could not draw a generic commuting pair in 1000 attempts");
}

// Coordinate tangent directions at a commuting pair: both holonomies rotate
// about a common axis, and one full moduli period sweeps the angle by 2 pi.
Su2Vector moduliTangentDirection(const Representation& rho) {
    Su2Vector axis = logMap(rho.holonomy(0));
    double n = axis.norm();
    if (n < 1e-12) throw ConvergenceError("holonomy too close to the identity for a tangent axis");
    return (2.0 * kPi / n) * axis;
}

TwistedCochain addCochain(const TwistedCochain& a, const TwistedCochain& b) {
    TwistedCochain out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
    return out;
}

std::string heatmapSvg(int n, const std::vector<double>& values) {
    const int cell = 16;
    double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    double span = hi - lo;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell << "\" height=\""
        << n * cell << "\">\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double v = values[static_cast<std::size_t>(i) * n + j];
            int shade = span > 0.0 ? static_cast<int>(255.0 * (v - lo) / span) : 128;
            out << "<rect x=\"" << i * cell << "\" y=\"" << (n - 1 - j) * cell << "\" width=\""
                << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << shade << "," << shade
                << ",255)\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string scatterSvg(const std::vector<PillowcasePoint>& points) {
    const int size = 400;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\">\n<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    for (const auto& q : points) {
        // (u, v) in [-1, 1]^2 mapped to the canvas; w > 0 blue, w < 0 red
        double x = (q.u + 1.0) / 2.0 * (size - 20) + 10;
        double y = (1.0 - (q.v + 1.0) / 2.0) * (size - 20) + 10;
        out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\""
            << (q.w >= 0.0 ? "blue" : "red") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

void validateConfig(const RunConfig& cfg) {
    if (cfg.tol <= 0.0) throw std::invalid_argument("tol must be positive");
    if (cfg.genus < 1) throw std::invalid_argument("genus must be at least 1");
    if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (cfg.grid < 1) throw std::invalid_argument("grid must be at least 1");
    if (cfg.slabGrid.nt < 2 || cfg.slabGrid.nx < 2 || cfg.slabGrid.ny < 2)
        throw std::invalid_argument("slab grid sizes must be at least 2");
    if (cfg.mnRange < 0) throw std::invalid_argument("mn range must be nonnegative");
    if (cfg.orientation != +1 && cfg.orientation != -1)
        throw std::invalid_argument("orientation must be +1 or -1");
    if (cfg.format != "json" && cfg.format != "csv")
        throw std::invalid_argument("format must be json or csv");
}

VerificationReport cmdVerifyGenus1(const RunConfig& cfg) {
    validateConfig(cfg);
    VerificationReport rep;
    rep.command = "verify-genus1";
    rep.provenance = provenanceOf(cfg);
    const int o = cfg.orientation;

    guarded(rep, "curvature_integral", "closed-form curvature of the moduli connection", [&] {
        auto t0 = Clock::now();
        CurvatureSampler omega = curvatureFromConnection();
        std::complex<double> sum = 0.0;
        for (int i = 0; i < cfg.grid; ++i) {
            for (int j = 0; j < cfg.grid; ++j) {
                sum += omega((i + 0.5) / cfg.grid, (j + 0.5) / cfg.grid);
            }
        }
        std::complex<double> integral = static_cast<double>(o) * sum / double(cfg.grid * cfg.grid);
        auto r = CheckRecord::complexValue("curvature_integral", {0.0, -4.0 * kPi * o}, integral,
                                           1e-9, "closed-form curvature of the moduli connection");
        r.details = {{"method", "finite-difference curvature, midpoint rule"},
                     {"grid", cfg.grid},
                     {"runtime_ms", msSince(t0)}};
        return r;
    });

    guarded(rep, "chern_weil_degree", "curvature quadrature", [&] {
        auto t0 = Clock::now();
        double value = chernWeil(curvatureFromConnection(), cfg.grid, o);
        auto r = CheckRecord::numeric("chern_weil_degree", 2.0 * o, value, 1e-9,
                                      "curvature quadrature");
        r.details = {{"method", "chern-weil"},
                     {"grid", cfg.grid},
                     {"value", value},
                     {"admissible", true},
                     {"runtime_ms", msSince(t0)}};
        return r;
    });

    int latticeDegree = 0;
    bool haveLattice = false;
    guarded(rep, "lattice_degree", "plaquette phase sum", [&] {
        auto t0 = Clock::now();
        int value = latticeChern(prequantumTransportOracle(), cfg.grid, o);
        latticeDegree = value;
        haveLattice = true;
        auto r = CheckRecord::integer("lattice_degree", 2 * o, value, "plaquette phase sum");
        r.details = {{"method", "lattice plaquette"},
                     {"grid", cfg.grid},
                     {"value", value},
                     {"admissible", true},
                     {"runtime_ms", msSince(t0)}};
        return r;
    });

    guarded(rep, "holonomy_degree", "branch-tracked boundary holonomy", [&] {
        auto t0 = Clock::now();
        double value = holonomyDegree(prequantumTransportOracle(), 8, o);
        auto r = CheckRecord::numeric("holonomy_degree", 2.0 * o, value, 1e-6,
                                      "branch-tracked boundary holonomy");
        r.details = {{"method", "holonomy winding"},
                     {"grid", 8},
                     {"value", value},
                     {"admissible", true},
                     {"runtime_ms", msSince(t0)}};
        return r;
    });

    guarded(rep, "transport_unit_cell", "integrality of the curvature over the full cell", [&] {
        std::complex<double> t = parallelTransport(rectanglePath(0.0, 0.0, 1.0, 1.0));
        return CheckRecord::complexValue("transport_unit_cell", {1.0, 0.0}, t, 1e-10,
                                         "integrality of the curvature over the full cell");
    });

    guarded(rep, "transport_half_cell", "quarter-cell curvature integral", [&] {
        std::complex<double> t = parallelTransport(rectanglePath(0.0, 0.0, 0.5, 0.5));
        return CheckRecord::complexValue("transport_half_cell", {-1.0, 0.0}, t, 1e-10,
                                         "quarter-cell curvature integral");
    });

    guarded(rep, "equivariance_defect", "cocycle compatibility of transport", [&] {
        auto rng = makeStream(cfg.seed, 2);
        double worst = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            LinePath path;
            path.points = {randomModuliPoint(rng), randomModuliPoint(rng),
                           randomModuliPoint(rng)};
            GaugeCharacter c = randomCharacter(rng, std::max(cfg.mnRange, 1), true);
            worst = std::max(worst, equivarianceCheck(path, c));
        }
        auto r = CheckRecord::bound("equivariance_defect", worst, 1e-10,
                                    "cocycle compatibility of transport");
        r.details = {{"trials", cfg.samples}};
        return r;
    });

    int covering = 0;
    bool haveCovering = false;
    guarded(rep, "covering_degree", "regular-value preimage count", [&] {
        auto t0 = Clock::now();
        auto rng = makeStream(cfg.seed, 5);
        int value = coveringDegree(100, rng);
        covering = value;
        haveCovering = true;
        auto r = CheckRecord::integer("covering_degree", 2, value, "regular-value preimage count");
        r.details = {{"samples", 100}, {"runtime_ms", msSince(t0)}};
        return r;
    });

    guarded(rep, "bundle_degree", "upstairs degree divided by the covering degree", [&] {
        if (!haveLattice || !haveCovering) {
            throw std::runtime_error("skipped: upstairs degree or covering degree unavailable");
        }
        int value = degreeFromCovering(latticeDegree, covering);
        auto r = CheckRecord::integer("bundle_degree", o, value,
                                      "upstairs degree divided by the covering degree");
        if (o < 0) r.note = "orientation reversed: the sign tracks the fundamental class";
        return r;
    });

    return rep;
}

VerificationReport cmdCocycleCheck(const RunConfig& cfg) {
    validateConfig(cfg);
    VerificationReport rep;
    rep.command = "cocycle-check";
    rep.provenance = provenanceOf(cfg);

    auto rng = makeStream(cfg.seed, 1);
    std::vector<TorusModuliPoint> points;
    points.reserve(cfg.samples);
    for (int s = 0; s < cfg.samples; ++s) points.push_back(randomModuliPoint(rng));

    double overallWorst = 0.0;
    bool anyFailed = false;
    for (int m = -cfg.mnRange; m <= cfg.mnRange; ++m) {
        for (int n = -cfg.mnRange; n <= cfg.mnRange; ++n) {
            std::string name =
                "cocycle_m" + std::to_string(m) + "_n" + std::to_string(n);
            guarded(rep, name, "slab quadrature vs closed form", [&] {
                auto t0 = Clock::now();
                GaugeCharacter c{m, n, +1};
                double worst = 0.0;
                for (const auto& p : points) {
                    std::complex<double> numeric = cocycleNumeric(
                        p, c, cfg.slabGrid.nt, cfg.slabGrid.nx, cfg.slabGrid.ny);
                    worst = std::max(worst, std::abs(numeric - cocycleExact(p, c)));
                }
                overallWorst = std::max(overallWorst, worst);
                auto r = CheckRecord::bound(name, worst, cfg.tol,
                                            "slab quadrature vs closed form");
                r.details = {{"points", cfg.samples}, {"runtime_ms", msSince(t0)}};
                return r;
            });
            if (!rep.checks.back().pass) anyFailed = true;
        }
    }

    {
        auto r = CheckRecord::bound("cocycle_max_error", overallWorst, cfg.tol,
                                    "worst case over the character range");
        r.pass = r.pass && !anyFailed;
        rep.add(r);
    }

    guarded(rep, "cocycle_identity", "composition law of the gauge cocycle", [&] {
        auto rngId = makeStream(cfg.seed, 3);
        int range = std::max(cfg.mnRange, 1);
        double worst = 0.0;
        for (int s = 0; s < 100; ++s) {
            TorusModuliPoint p = randomModuliPoint(rngId);
            GaugeCharacter c1 = randomCharacter(rngId, range, false);
            GaugeCharacter c2 = randomCharacter(rngId, range, false);
            std::complex<double> lhs = cocycleExact(p, compose(c2, c1));
            std::complex<double> rhs = cocycleExact(p, c1) * cocycleExact(gaugeAction(c1, p), c2);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        auto r = CheckRecord::bound("cocycle_identity", worst, 1e-12,
                                    "composition law of the gauge cocycle");
        r.details = {{"triples", 100}};
        return r;
    });

    return rep;
}

namespace {

void goldmanGenus1(const RunConfig& cfg, VerificationReport& rep) {
    std::optional<TwistedComplex> tcOpt;
    TwistedCochain ta, tb;
    try {
        auto rng = makeStream(cfg.seed, 2);
        Representation rho = genericCommutingPair(rng);
        tcOpt.emplace(buildDeltaComplex(standardPresentation(1)), rho);
        Su2Vector y = moduliTangentDirection(rho);
        ta = tangentCocycle(*tcOpt, {y, Su2Vector::Zero()});
        tb = tangentCocycle(*tcOpt, {Su2Vector::Zero(), y});
    } catch (const std::exception& e) {
        rep.add(CheckRecord::failed("setup", "flat family construction", e.what()));
        return;
    }
    TwistedComplex& tc = *tcOpt;

    guarded(rep, "tangent_cocycles_closed", "deformation cocycles of a flat family", [&] {
        double defect = std::max(coboundary(tc, ta).maxNorm(), coboundary(tc, tb).maxNorm());
        return CheckRecord::bound("tangent_cocycles_closed", defect, 1e-12,
                                  "deformation cocycles of a flat family");
    });

    guarded(rep, "goldman_pairing_dual_pair", "closed form for the coordinate tangents", [&] {
        std::complex<double> value = goldmanForm(tc, ta, tb);
        return CheckRecord::complexValue("goldman_pairing_dual_pair", {0.0, -4.0 * kPi}, value,
                                         1e-8, "closed form for the coordinate tangents");
    });

    guarded(rep, "pairing_antisymmetry", "graded commutativity of the cup pairing", [&] {
        double worst = std::abs(goldmanForm(tc, ta, ta));
        worst = std::max(worst, std::abs(goldmanForm(tc, tb, tb)));
        worst = std::max(worst, std::abs(goldmanForm(tc, ta, tb) + goldmanForm(tc, tb, ta)));
        return CheckRecord::bound("pairing_antisymmetry", worst, 1e-10,
                                  "graded commutativity of the cup pairing");
    });

    guarded(rep, "cohomology_dimension", "deformation count of a generic commuting pair", [&] {
        auto dims = cohomologyDimensions(tc);
        auto r = CheckRecord::integer("cohomology_dimension", 2, dims[1],
                                      "deformation count of a generic commuting pair");
        r.details = {{"h0", dims[0]}, {"h1", dims[1]}, {"h2", dims[2]}};
        return r;
    });

    guarded(rep, "pairing_representative_independence", "cohomological invariance", [&] {
        auto rngPerturb = makeStream(cfg.seed, 3);
        std::complex<double> base = goldmanForm(tc, ta, tb);
        double worst = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            TwistedCochain phi = zeroCochain(tc, 0);
            TwistedCochain psi = zeroCochain(tc, 0);
            for (auto& v : phi.values)
                v = Su2Vector(gaussian(rngPerturb), gaussian(rngPerturb), gaussian(rngPerturb));
            for (auto& v : psi.values)
                v = Su2Vector(gaussian(rngPerturb), gaussian(rngPerturb), gaussian(rngPerturb));
            TwistedCochain ta2 = addCochain(ta, coboundary(tc, phi));
            TwistedCochain tb2 = addCochain(tb, coboundary(tc, psi));
            worst = std::max(worst, std::abs(goldmanForm(tc, ta2, tb2) - base));
        }
        auto r = CheckRecord::bound("pairing_representative_independence", worst, 1e-9,
                                    "cohomological invariance");
        r.details = {{"trials", cfg.samples}};
        return r;
    });

    if (!cfg.outPath.empty()) {
        Eigen::MatrixXd p = pairingMatrix(tc, {ta, tb});
        writeTextFile(cfg.outPath, pairingMatrixToCsv(p));
        rep.add(CheckRecord::info("pairing_matrix_written", cfg.outPath));
    }
}

void goldmanHigherGenus(const RunConfig& cfg, VerificationReport& rep) {
    auto rng = makeStream(cfg.seed, 2);
    DeltaSurface surf = buildDeltaComplex(standardPresentation(cfg.genus));
    const int expectedDim = 6 * cfg.genus - 6;

    int produced = 0;
    int skipped = 0;
    bool dimsAgree = true;
    int offendingDim = expectedDim;
    int worstH0 = 0, worstH2 = 0;
    double minGap = std::numeric_limits<double>::infinity();
    double worstAntisym = 0.0;
    double minNondegen = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd lastPairing;

    try {
        for (int s = 0; s < cfg.samples; ++s) {
            Representation rho = sampleFlat(cfg.genus, rng);
            int redraws = 0;
            while (!isIrreducible(rho)) {
                rho = sampleFlat(cfg.genus, rng);
                if (++redraws > 100)
                    throw ConvergenceError("could not draw an irreducible representation");
            }
            try {
                TwistedComplex tc(surf, rho);
                CohomologyBasis basis = cohomologyBasis(tc);
                auto dims = cohomologyDimensions(tc);
                if (dims[1] != expectedDim && dimsAgree) {
                    dimsAgree = false;
                    offendingDim = dims[1];
                }
                worstH0 = std::max(worstH0, dims[0]);
                worstH2 = std::max(worstH2, dims[2]);
                minGap = std::min(minGap, basis.gapAcrossCutoff);

                Eigen::MatrixXd p = pairingMatrix(tc, basis.vectors);
                worstAntisym =
                    std::max(worstAntisym, (p + p.transpose()).cwiseAbs().maxCoeff());
                Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
                double scale = p.cwiseAbs().maxCoeff();
                minNondegen = std::min(
                    minNondegen, svd.singularValues()(svd.singularValues().size() - 1) / scale);
                lastPairing = p;
                ++produced;
            } catch (const RankAmbiguityError& e) {
                ++skipped;
                rep.add(CheckRecord::info(
                    "skipped_sample_" + std::to_string(s),
                    std::string("rank ambiguity, sample skipped: ") + e.what()));
            }
        }
    } catch (const std::exception& e) {
        rep.add(CheckRecord::failed("sampling", "flat family sampler", e.what()));
    }

    auto requireSamples = [&] {
        if (produced == 0) throw std::runtime_error("no effective samples");
    };

    guarded(rep, "samples_effective", "sampling yield", [&] {
        auto r = CheckRecord::condition("samples_effective", produced > 0, "sampling yield");
        r.details = {{"requested", cfg.samples}, {"produced", produced}, {"skipped", skipped}};
        return r;
    });

    guarded(rep, "cohomology_dimension", "deformation count at an irreducible point", [&] {
        requireSamples();
        auto r = CheckRecord::integer("cohomology_dimension", expectedDim,
                                      dimsAgree ? expectedDim : offendingDim,
                                      "deformation count at an irreducible point");
        r.details = {{"samples", produced}, {"h0_max", worstH0}, {"h2_max", worstH2}};
        return r;
    });

    guarded(rep, "cohomology_rigidity", "no invariants at an irreducible point", [&] {
        requireSamples();
        return CheckRecord::integer("cohomology_rigidity", 0, std::max(worstH0, worstH2),
                                    "no invariants at an irreducible point");
    });

    guarded(rep, "singular_value_gap", "separation of the rank decision", [&] {
        requireSamples();
        return CheckRecord::atLeast("singular_value_gap", minGap, 1e3,
                                    "separation of the rank decision");
    });

    guarded(rep, "pairing_antisymmetry", "graded commutativity of the cup pairing", [&] {
        requireSamples();
        return CheckRecord::bound("pairing_antisymmetry", worstAntisym, 1e-8,
                                  "graded commutativity of the cup pairing");
    });

    guarded(rep, "pairing_nondegeneracy", "symplectic nondegeneracy", [&] {
        requireSamples();
        return CheckRecord::atLeast("pairing_nondegeneracy", minNondegen, 1e-6,
                                    "symplectic nondegeneracy");
    });

    guarded(rep, "pullback_pairing", "localization to the first handle", [&] {
        auto rngPull = makeStream(cfg.seed, 4);
        Representation torus = genericCommutingPair(rngPull);
        Representation pulled = pullbackToGenus(torus, cfg.genus);
        TwistedComplex tc(surf, pulled);
        Su2Vector y = moduliTangentDirection(torus);
        std::vector<Su2Vector> da(2 * cfg.genus, Su2Vector::Zero());
        std::vector<Su2Vector> db(2 * cfg.genus, Su2Vector::Zero());
        da[0] = y;
        db[1] = y;
        std::complex<double> value =
            goldmanForm(tc, tangentCocycle(tc, da), tangentCocycle(tc, db));
        return CheckRecord::complexValue("pullback_pairing", {0.0, -4.0 * kPi}, value, 1e-8,
                                         "localization to the first handle");
    });

    if (!cfg.outPath.empty() && produced > 0) {
        writeTextFile(cfg.outPath, pairingMatrixToCsv(lastPairing));
        rep.add(CheckRecord::info("pairing_matrix_written", cfg.outPath));
    }
}

}  // namespace

VerificationReport cmdGoldman(const RunConfig& cfg) {
    validateConfig(cfg);
    VerificationReport rep;
    rep.command = "goldman";
    rep.provenance = provenanceOf(cfg);
    if (cfg.genus == 1) {
        goldmanGenus1(cfg, rep);
    } else {
        goldmanHigherGenus(cfg, rep);
    }
    return rep;
}

VerificationReport cmdSampleReps(const RunConfig& cfg) {
    validateConfig(cfg);
    if (cfg.outPath.empty())
        throw std::invalid_argument("sample-reps writes a dataset and requires --out");

    VerificationReport rep;
    rep.command = "sample-reps";
    rep.provenance = provenanceOf(cfg);

    auto rng = makeStream(cfg.seed, 0);
    RepresentationDataset ds;
    ds.genus = cfg.genus;
    ds.seed = cfg.seed;
    double maxDefect = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
        Representation rho = sampleFlat(cfg.genus, rng);
        double defect = relatorDefect(rho);
        maxDefect = std::max(maxDefect, defect);
        ds.representations.push_back(std::move(rho));
        ds.defects.push_back(defect);
    }

    rep.add(CheckRecord::bound("relator_defects", maxDefect, 1e-8,
                               "flatness of the sampled representations"));

    nlohmann::json out = datasetToJson(ds);
    writeJsonFile(cfg.outPath, out);
    rep.add(CheckRecord::info("dataset_written",
                              cfg.outPath + " (" + std::to_string(cfg.samples) + " entries)"));

    guarded(rep, "round_trip_identical", "loader writes back the same bytes", [&] {
        RepresentationDataset reloaded = datasetFromJson(readJsonFile(cfg.outPath));
        bool same = datasetToJson(reloaded).dump(2) == out.dump(2);
        auto r = CheckRecord::condition("round_trip_identical", same,
                                        "loader writes back the same bytes");
        r.details = {{"entries", reloaded.representations.size()}};
        return r;
    });

    return rep;
}

VerificationReport cmdPlotData(const RunConfig& cfg) {
    validateConfig(cfg);
    if (cfg.outPath.empty())
        throw std::invalid_argument("plot-data writes files and requires --out DIR");

    VerificationReport rep;
    rep.command = "plot-data";
    rep.provenance = provenanceOf(cfg);

    std::filesystem::create_directories(cfg.outPath);
    auto under = [&](const std::string& leaf) {
        return (std::filesystem::path(cfg.outPath) / leaf).string();
    };

    const int n = cfg.grid;
    const int o = cfg.orientation;

    // curvature heatmap over the moduli square
    {
        CurvatureSampler omega = curvatureFromConnection();
        std::ostringstream csv;
        csv << "a,b,re,im\n";
        std::vector<double> magnitudes;
        magnitudes.reserve(static_cast<std::size_t>(n) * n);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double a = (i + 0.5) / n;
                double b = (j + 0.5) / n;
                std::complex<double> w = omega(a, b);
                csv << formatDouble(a) << ',' << formatDouble(b) << ',' << formatDouble(w.real())
                    << ',' << formatDouble(w.imag()) << '\n';
                magnitudes.push_back(std::abs(w));
                lo = std::min(lo, w.imag());
                hi = std::max(hi, w.imag());
            }
        }
        writeTextFile(under("curvature.csv"), csv.str());
        writeTextFile(under("curvature.svg"), heatmapSvg(n, magnitudes));
        rep.add(CheckRecord::info("curvature_files_written",
                                  under("curvature.csv") + ", " + under("curvature.svg")));
        rep.add(CheckRecord::bound("curvature_constant", hi - lo, 1e-8,
                                   "translation invariance of the curvature"));
    }

    // plaquette phases of the transport oracle
    {
        TransportOracle transport = prequantumTransportOracle();
        std::ostringstream csv;
        csv << "i,j,phase\n";
        std::vector<double> phases;
        phases.reserve(static_cast<std::size_t>(n) * n);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                LinePath cell = rectanglePath(double(i) / n, double(j) / n, double(i + 1) / n,
                                              double(j + 1) / n);
                double phase = o * std::arg(transport(cell));
                csv << i << ',' << j << ',' << formatDouble(phase) << '\n';
                phases.push_back(phase);
                sum += phase;
            }
        }
        writeTextFile(under("plaquette_phases.csv"), csv.str());
        writeTextFile(under("plaquette_phases.svg"), heatmapSvg(n, phases));
        rep.add(CheckRecord::info("plaquette_files_written",
                                  under("plaquette_phases.csv") + ", " +
                                      under("plaquette_phases.svg")));
        rep.add(CheckRecord::numeric("plaquette_phase_sum", 4.0 * kPi * o, sum, 1e-9,
                                     "total curvature of the cell decomposition"));
    }

    // quotient scatter in invariant coordinates
    {
        auto rng = makeStream(cfg.seed, 4);
        std::ostringstream csv;
        csv << "u,v,w\n";
        std::vector<PillowcasePoint> points;
        points.reserve(cfg.samples);
        double worstRelation = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            PillowcasePoint q = quotientMap(randomModuliPoint(rng));
            csv << formatDouble(q.u) << ',' << formatDouble(q.v) << ',' << formatDouble(q.w)
                << '\n';
            worstRelation = std::max(worstRelation, relationDefect(q));
            points.push_back(q);
        }
        writeTextFile(under("pillowcase.csv"), csv.str());
        writeTextFile(under("pillowcase.svg"), scatterSvg(points));
        rep.add(CheckRecord::info("pillowcase_files_written",
                                  under("pillowcase.csv") + ", " + under("pillowcase.svg")));
        rep.add(CheckRecord::bound("pillowcase_relation", worstRelation, 1e-10,
                                   "defining relation of the image surface"));
    }

    return rep;
}

}  // namespace prequant
