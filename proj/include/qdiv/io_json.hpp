#pragma once

#include <string>

#include <json.hpp>

#include "qdiv/complex_matrix.hpp"
#include "qdiv/decay.hpp"
#include "qdiv/dephasing.hpp"
#include "qdiv/superop.hpp"

namespace qdiv {

using json = nlohmann::json;

// Matrices are arrays of rows; an entry is either a number (real) or a
// [re, im] pair.
ComplexMatrix matrix_from_json(const json& j);
json matrix_to_json(const ComplexMatrix& m);

// {"dim": d, "times": [...], "maps": [matrix, ...]}
MapFamily family_from_json(const json& j);
json family_to_json(const MapFamily& f);

BathSpec bath_from_json(const json& j);
DecayModelSpec decay_spec_from_json(const json& j);

// rho_dot = sum A rho B^dagger, {"dim": d, "terms": [{"a": M, "b": M}, ...]}
// or a raw superoperator {"dim": d, "superop": M}.
struct GeneratorInput {
    int dim = 0;
    bool raw = false;
    GeneratorSpec terms;
    Superoperator superop;
};
GeneratorInput generator_from_json(const json& j);

json load_json_file(const std::string& path);

// write-temp-then-rename
void write_file_atomic(const std::string& path, const std::string& contents);

std::string format_double(double v);  // 17 significant digits
std::uint64_t fnv1a64(const std::string& bytes);

} // namespace qdiv
