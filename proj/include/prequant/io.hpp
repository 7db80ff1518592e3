#pragma once
// Persistence: presentations and complexes as JSON, representation datasets
// as JSON with validation on ingest, sampled fields and pairing matrices as
// CSV. All floating-point output round-trips exactly (shortest exact form).

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "prequant/representation.hpp"
#include "prequant/surface.hpp"
#include "prequant/torus_bundle.hpp"

namespace prequant {

// A collection of flat representations along with how it was produced.
struct RepresentationDataset {
    int genus = 1;
    std::uint64_t seed = 0;
    std::vector<Representation> representations;
    std::vector<double> defects;
};

// Shortest decimal form that parses back to the same double.
std::string formatDouble(double x);

nlohmann::json presentationToJson(const SurfacePresentation& pres);
SurfacePresentation presentationFromJson(const nlohmann::json& j);

nlohmann::json deltaComplexToJson(const DeltaSurface& surface);

nlohmann::json datasetToJson(const RepresentationDataset& ds);
// Validates genus, quaternion normalization, relator defects, and the stored
// defect values; throws std::runtime_error naming the offending entry.
RepresentationDataset datasetFromJson(const nlohmann::json& j,
                                      double flatnessTol = 1e-8);

void writeTextFile(const std::string& path, const std::string& contents);
std::string readTextFile(const std::string& path);

void writeJsonFile(const std::string& path, const nlohmann::json& j);
nlohmann::json readJsonFile(const std::string& path);

// CSV grid dump of a sampled connection field. Layout is one row per cell in
// t-major order (t, then x, then y), with columns
//   comp,it,ix,iy,e1,e2,e3
// where comp is 0 for the t component, 1 for x, 2 for y.
std::string fieldToCsv(const CSField& field);
CSField fieldFromCsv(const std::string& text);

// Pairing matrix as "row,col,value" lines with a header.
std::string pairingMatrixToCsv(const Eigen::MatrixXd& m);

}  // namespace prequant
