// Command-line front end. Subcommands run verification pipelines from the
// library and serialize their reports; exit codes separate check failures
// from configuration and I/O problems:
//   0 all checks passed, 1 some check failed, 2 bad configuration or usage,
//   3 file I/O failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prequant/commands.hpp"
#include "prequant/io.hpp"
#include "prequant/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "Numerical verification of the prequantum line bundle degree on the "
        "moduli of flat SU(2) connections over a surface"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Key-value config file; command-line flags override it");

    prequant::RunConfig cfg;
    std::string orientationFlag = "+";
    std::vector<int> slab;

    app.add_option("--seed", cfg.seed, "RNG seed; fixes every random draw")
        ->capture_default_str();
    app.add_option("--grid", cfg.grid, "Moduli-square subdivision for curvature and plaquettes")
        ->capture_default_str();
    app.add_option("--slab-grid", slab, "Quadrature grid nt nx ny for the interpolation slab")
        ->expected(3);
    app.add_option("--genus", cfg.genus, "Surface genus")->capture_default_str();
    app.add_option("--samples", cfg.samples, "Random points or representations per battery")
        ->capture_default_str();
    app.add_option("--tol", cfg.tol, "Numeric-vs-closed-form comparison tolerance")
        ->capture_default_str();
    app.add_option("--mn-range", cfg.mnRange, "Lattice character range: |m|, |n| <= this")
        ->capture_default_str();
    app.add_option("--out", cfg.outPath,
                   "Output path: report file (verify-genus1, cocycle-check), pairing matrix CSV "
                   "(goldman), dataset JSON (sample-reps), directory (plot-data)");
    app.add_option("--format", cfg.format, "Report file format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--orientation", orientationFlag, "Orientation of the moduli square")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    app.add_flag("-v,--verbose", cfg.verbosity,
                 "Show per-check lines; twice to dump the full report JSON");

    auto* verify = app.add_subcommand("verify-genus1", "Full degree pipeline on the torus moduli");
    auto* cocycle = app.add_subcommand("cocycle-check", "Slab quadrature vs the closed-form cocycle");
    auto* goldman = app.add_subcommand("goldman", "Symplectic pairing through twisted cohomology");
    auto* sampleReps = app.add_subcommand("sample-reps", "Write a flat representation dataset");
    auto* plotData = app.add_subcommand("plot-data", "Emit curvature, plaquette, and quotient plot data");
    for (auto* sub : {verify, cocycle, goldman, sampleReps, plotData}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (slab.size() == 3) cfg.slabGrid = {slab[0], slab[1], slab[2]};
    cfg.orientation = orientationFlag == "-" ? -1 : +1;

    try {
        prequant::VerificationReport rep;
        if (verify->parsed()) {
            rep = prequant::cmdVerifyGenus1(cfg);
        } else if (cocycle->parsed()) {
            rep = prequant::cmdCocycleCheck(cfg);
        } else if (goldman->parsed()) {
            rep = prequant::cmdGoldman(cfg);
        } else if (sampleReps->parsed()) {
            rep = prequant::cmdSampleReps(cfg);
        } else {
            rep = prequant::cmdPlotData(cfg);
        }

        if (!cfg.outPath.empty() && (verify->parsed() || cocycle->parsed())) {
            if (cfg.format == "json") {
                prequant::writeJsonFile(cfg.outPath, prequant::toJson(rep));
            } else {
                prequant::writeTextFile(cfg.outPath, prequant::toCsv(rep));
            }
        }

        std::cout << prequant::formatSummary(rep, cfg.verbosity);
        if (cfg.verbosity >= 2) std::cout << prequant::toJson(rep).dump(2) << "\n";
        return rep.pass() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
}
