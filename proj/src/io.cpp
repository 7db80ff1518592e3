#include "prequant/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prequant {

namespace {

double parseDouble(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        double x = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("csv line " + std::to_string(line) +
                                 ": bad number '" + s + "'");
    }
}

int parseInt(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int x = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("csv line " + std::to_string(line) +
                                 ": bad integer '" + s + "'");
    }
}

std::vector<std::string> splitCsvRow(const std::string& row) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(row);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

}  // namespace

std::string formatDouble(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

nlohmann::json presentationToJson(const SurfacePresentation& pres) {
    nlohmann::json j;
    j["genus"] = pres.genus;
    auto& gens = j["generators"] = nlohmann::json::array();
    for (int i = 0; i < pres.generatorCount(); ++i) gens.push_back(generatorName(i));
    auto& rel = j["relator"] = nlohmann::json::array();
    for (const Letter& l : pres.relator.letters()) {
        rel.push_back(l.exponent > 0 ? l.generator + 1 : -(l.generator + 1));
    }
    return j;
}

SurfacePresentation presentationFromJson(const nlohmann::json& j) {
    SurfacePresentation pres;
    pres.genus = j.at("genus").get<int>();
    if (pres.genus < 1) throw std::runtime_error("presentation: genus must be >= 1");
    for (const auto& entry : j.at("relator")) {
        int v = entry.get<int>();
        if (v == 0 || std::abs(v) > pres.generatorCount()) {
            throw std::runtime_error("presentation: relator letter " + std::to_string(v) +
                                     " out of range for genus " + std::to_string(pres.genus));
        }
        pres.relator.push({std::abs(v) - 1, v > 0 ? +1 : -1});
    }
    return pres;
}

nlohmann::json deltaComplexToJson(const DeltaSurface& surface) {
    nlohmann::json j;
    j["genus"] = surface.genus;
    j["vertices"] = surface.vertexCount;
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& e : surface.edges) {
        edges.push_back({{"tail", e.tail},
                         {"head", e.head},
                         {"kind", e.isGenerator ? "generator" : "radial"},
                         {"label", e.label}});
    }
    auto& tris = j["triangles"] = nlohmann::json::array();
    for (const auto& t : surface.triangles) {
        tris.push_back({{"face01", t.face01},
                        {"face12", t.face12},
                        {"face02", t.face02},
                        {"cycleSign", t.cycleSign},
                        {"side", t.side}});
    }
    return j;
}

nlohmann::json datasetToJson(const RepresentationDataset& ds) {
    nlohmann::json j;
    j["genus"] = ds.genus;
    j["seed"] = ds.seed;
    auto& reps = j["representations"] = nlohmann::json::array();
    for (std::size_t i = 0; i < ds.representations.size(); ++i) {
        const Representation& rho = ds.representations[i];
        nlohmann::json rec;
        auto& hol = rec["holonomies"] = nlohmann::json::array();
        for (const SU2Element& g : rho.holonomies) {
            hol.push_back({g.w(), g.vec().x(), g.vec().y(), g.vec().z()});
        }
        rec["defect"] = ds.defects.at(i);
        reps.push_back(std::move(rec));
    }
    return j;
}

RepresentationDataset datasetFromJson(const nlohmann::json& j, double flatnessTol) {
    RepresentationDataset ds;
    ds.genus = j.at("genus").get<int>();
    if (ds.genus < 1) throw std::runtime_error("dataset: genus must be >= 1");
    ds.seed = j.at("seed").get<std::uint64_t>();

    int index = 0;
    for (const auto& rec : j.at("representations")) {
        Representation rho;
        rho.genus = ds.genus;
        const auto& hol = rec.at("holonomies");
        if (static_cast<int>(hol.size()) != 2 * ds.genus) {
            throw std::runtime_error("dataset entry " + std::to_string(index) + ": expected " +
                                     std::to_string(2 * ds.genus) + " holonomies, got " +
                                     std::to_string(hol.size()));
        }
        for (const auto& quad : hol) {
            if (quad.size() != 4) {
                throw std::runtime_error("dataset entry " + std::to_string(index) +
                                         ": holonomy is not a 4-tuple");
            }
            try {
                rho.holonomies.push_back(SU2Element::fromPartsExact(
                    quad[0].get<double>(),
                    Su2Vector(quad[1].get<double>(), quad[2].get<double>(),
                              quad[3].get<double>())));
            } catch (const std::invalid_argument& e) {
                throw std::runtime_error("dataset entry " + std::to_string(index) + ": " +
                                         e.what());
            }
        }
        double storedDefect = rec.at("defect").get<double>();
        double defect = relatorDefect(rho);
        if (defect > flatnessTol) {
            throw std::runtime_error("dataset entry " + std::to_string(index) +
                                     ": relator defect " + formatDouble(defect) + " exceeds " +
                                     formatDouble(flatnessTol));
        }
        if (std::abs(storedDefect - defect) > 1e-12) {
            throw std::runtime_error("dataset entry " + std::to_string(index) +
                                     ": stored defect " + formatDouble(storedDefect) +
                                     " disagrees with recomputed " + formatDouble(defect));
        }
        ds.representations.push_back(std::move(rho));
        ds.defects.push_back(storedDefect);
        ++index;
    }
    return ds;
}

void writeTextFile(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string readTextFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void writeJsonFile(const std::string& path, const nlohmann::json& j) {
    writeTextFile(path, j.dump(2) + "\n");
}

nlohmann::json readJsonFile(const std::string& path) {
    try {
        return nlohmann::json::parse(readTextFile(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string fieldToCsv(const CSField& field) {
    std::ostringstream out;
    out << "comp,it,ix,iy,e1,e2,e3\n";
    for (int comp = 0; comp < 3; ++comp) {
        for (int it = 0; it < field.nt(); ++it) {
            for (int ix = 0; ix < field.nx(); ++ix) {
                for (int iy = 0; iy < field.ny(); ++iy) {
                    const Su2Vector& v = field.at(comp, it, ix, iy);
                    out << comp << ',' << it << ',' << ix << ',' << iy << ','
                        << formatDouble(v.x()) << ',' << formatDouble(v.y()) << ','
                        << formatDouble(v.z()) << '\n';
                }
            }
        }
    }
    return out.str();
}

CSField fieldFromCsv(const std::string& text) {
    std::istringstream in(text);
    std::string row;
    if (!std::getline(in, row) || row != "comp,it,ix,iy,e1,e2,e3") {
        throw std::runtime_error("field csv: missing or wrong header row");
    }

    struct Entry {
        int comp, it, ix, iy;
        Su2Vector v;
    };
    std::vector<Entry> entries;
    int nt = 0, nx = 0, ny = 0;
    int line = 1;
    while (std::getline(in, row)) {
        ++line;
        if (row.empty()) continue;
        auto cells = splitCsvRow(row);
        if (cells.size() != 7) {
            throw std::runtime_error("csv line " + std::to_string(line) + ": expected 7 cells");
        }
        Entry e{parseInt(cells[0], line), parseInt(cells[1], line), parseInt(cells[2], line),
                parseInt(cells[3], line),
                Su2Vector(parseDouble(cells[4], line), parseDouble(cells[5], line),
                          parseDouble(cells[6], line))};
        if (e.comp < 0 || e.comp > 2 || e.it < 0 || e.ix < 0 || e.iy < 0) {
            throw std::runtime_error("csv line " + std::to_string(line) + ": index out of range");
        }
        nt = std::max(nt, e.it + 1);
        nx = std::max(nx, e.ix + 1);
        ny = std::max(ny, e.iy + 1);
        entries.push_back(e);
    }
    if (entries.size() != static_cast<std::size_t>(3 * nt * nx * ny)) {
        throw std::runtime_error("field csv: got " + std::to_string(entries.size()) +
                                 " rows for a 3 x " + std::to_string(nt) + " x " +
                                 std::to_string(nx) + " x " + std::to_string(ny) + " grid");
    }

    CSField field(nt, nx, ny);
    for (const Entry& e : entries) field.at(e.comp, e.it, e.ix, e.iy) = e.v;
    return field;
}

std::string pairingMatrixToCsv(const Eigen::MatrixXd& m) {
    std::ostringstream out;
    out << "row,col,value\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            out << i << ',' << k << ',' << formatDouble(m(i, k)) << '\n';
        }
    }
    return out.str();
}

}  // namespace prequant
