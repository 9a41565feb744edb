#include "qdiv/io_json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace qdiv {

namespace {

cplx entry_from_json(const json& e) {
    if (e.is_number()) return cplx(e.get<double>(), 0.0);
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        return cplx(e[0].get<double>(), e[1].get<double>());
    fail(ErrorKind::ConfigParse, "matrix entry must be a number or a [re, im] pair");
}

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ConfigParse, what); }

} // namespace

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be nonempty arrays");
    const int cols = static_cast<int>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) bad("matrix rows must have equal length");
        for (int c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[i][c]);
    }
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(json::array({m(i, c).real(), m(i, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

MapFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("times") || !j.contains("maps"))
        bad("family needs dim, times and maps");
    const int dim = j["dim"].get<int>();
    std::vector<double> times = j["times"].get<std::vector<double>>();
    std::vector<Superoperator> maps;
    for (const auto& mj : j["maps"]) {
        ComplexMatrix m = matrix_from_json(mj);
        if (m.rows() != dim * dim || m.cols() != dim * dim) bad("family map must be d^2 x d^2");
        maps.emplace_back(dim, std::move(m));
    }
    try {
        return MapFamily::create(dim, std::move(times), std::move(maps));
    } catch (const Error& e) {
        bad(std::string("invalid family: ") + e.what());
    }
}

json family_to_json(const MapFamily& f) {
    json j;
    j["dim"] = f.dim;
    j["times"] = f.times;
    json maps = json::array();
    for (const auto& m : f.maps) maps.push_back(matrix_to_json(m.mat));
    j["maps"] = std::move(maps);
    return j;
}

BathSpec bath_from_json(const json& j) {
    if (!j.is_object() || !j.contains("temperature") || !j.contains("modes")) bad("bath needs temperature and modes");
    std::vector<BathMode> modes;
    for (const auto& mj : j["modes"]) {
        if (!mj.contains("omega") || !mj.contains("coupling")) bad("bath mode needs omega and coupling");
        modes.push_back({mj["omega"].get<double>(), mj["coupling"].get<double>()});
    }
    try {
        return BathSpec(std::move(modes), j["temperature"].get<double>());
    } catch (const Error& e) {
        bad(std::string("invalid bath: ") + e.what());
    }
}

namespace {

RateTable rate_table_from_json(const json& j) {
    if (j.is_number()) return RateTable::constant(j.get<double>());
    if (j.is_object() && j.contains("constant")) return RateTable::constant(j["constant"].get<double>());
    if (j.is_object() && j.contains("times") && j.contains("values")) {
        RateTable t{j["times"].get<std::vector<double>>(), j["values"].get<std::vector<double>>()};
        if (t.times.size() != t.values.size() || t.times.empty()) bad("rate table size mismatch");
        return t;
    }
    bad("rate must be a number, {constant}, or {times, values}");
}

TargetTable target_table_from_json(const json& j) {
    if (j.is_array()) return TargetTable::constant(matrix_from_json(j));
    if (j.is_object() && j.contains("constant")) return TargetTable::constant(matrix_from_json(j["constant"]));
    if (j.is_object() && j.contains("times") && j.contains("values")) {
        TargetTable t;
        t.times = j["times"].get<std::vector<double>>();
        for (const auto& mj : j["values"]) t.values.push_back(matrix_from_json(mj));
        if (t.times.size() != t.values.size() || t.times.empty()) bad("target table size mismatch");
        return t;
    }
    bad("target must be a matrix, {constant}, or {times, values}");
}

} // namespace

DecayModelSpec decay_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j.contains("rates") || !j.contains("targets"))
        bad("decay model needs levels, rates and targets");
    const int levels = j["levels"].get<int>();
    std::vector<RateTable> rates;
    for (const auto& rj : j["rates"]) rates.push_back(rate_table_from_json(rj));
    std::vector<TargetTable> targets;
    for (const auto& tj : j["targets"]) targets.push_back(target_table_from_json(tj));
    try {
        return DecayModelSpec::create(levels, std::move(rates), std::move(targets));
    } catch (const Error& e) {
        bad(std::string("invalid decay model: ") + e.what());
    }
}

GeneratorInput generator_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim")) bad("generator needs dim");
    GeneratorInput g;
    g.dim = j["dim"].get<int>();
    if (j.contains("superop")) {
        ComplexMatrix m = matrix_from_json(j["superop"]);
        if (m.rows() != g.dim * g.dim || m.cols() != g.dim * g.dim) bad("superop must be d^2 x d^2");
        g.raw = true;
        g.superop = Superoperator(g.dim, std::move(m));
        return g;
    }
    if (!j.contains("terms")) bad("generator needs terms or superop");
    g.terms.dim = g.dim;
    for (const auto& tj : j["terms"]) {
        if (!tj.contains("a") || !tj.contains("b")) bad("generator term needs a and b");
        g.terms.terms.emplace_back(matrix_from_json(tj["a"]), matrix_from_json(tj["b"]));
    }
    return g;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        bad(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), ErrorKind::ModelError, "cannot open output file: " + tmp);
        out << contents;
        require(static_cast<bool>(out), ErrorKind::ModelError, "failed writing output file: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace qdiv
