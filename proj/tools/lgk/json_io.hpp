#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lgk/galcoh.hpp"
#include "lgk/param.hpp"
#include "lgk/rootdata.hpp"

namespace lgk::io {

using json = nlohmann::json;

/// Malformed input: bad JSON syntax or a field of the wrong shape.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses text, reporting syntax errors with line and column.
json parse(const std::string& text, const std::string& source);

/// Canonical text: keys sorted, two-space indent, trailing newline.
std::string dump(const json& j);

json int_to_json(const Int& x);
Int int_from_json(const json& j, const std::string& field);
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j, const std::string& field);
json vec_to_json(const IntVec& v);
json rat_vec_to_json(const RatVec& v);
IntVec vec_from_json(const json& j, const std::string& field);
RatVec rat_vec_from_json(const json& j, const std::string& field);
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& field);
json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j, const std::string& field);

json datum_to_json(const BasedRootDatum& b);
BasedRootDatum datum_from_json(const json& j);

json param_to_json(const ParamDatum& p);
ParamDatum param_from_json(const json& j);

SublatticeSpec sublattice_from_json(const json& j, std::size_t rank);
Twist twist_from_json(const json& j, const BasedRootDatum& b);

json target_to_json(const CohomologyTarget& t, const std::string& normalization);
json torus_element_to_json(const TorusElement& t);

}  // namespace lgk::io
