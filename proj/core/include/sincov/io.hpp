#ifndef SINCOV_IO_HPP
#define SINCOV_IO_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sincov/atlas.hpp"
#include "sincov/flows.hpp"
#include "sincov/relation.hpp"
#include "sincov/sincov.hpp"

// JSON forms of the library types. Writers emit canonical documents: object
// keys sorted, arrays in the canonical order of the underlying sets. Readers
// throw ParseError on malformed input.
namespace sincov::io
{

using nlohmann::json;

// Separator between the two index ids in a system's relation keys.
inline constexpr char key_separator = '|';

json to_json(Relation const& relation);
Relation relation_from_json(json const& doc);

json to_json(SincovSystem const& system);
SincovSystem system_from_json(json const& doc);

json to_json(Atlas const& atlas);
Atlas atlas_from_json(json const& doc);

json to_json(Isomorphism const& iso);
Isomorphism isomorphism_from_json(json const& doc);

json to_json(ViolationReport const& report);
json to_json(std::vector<ViolationReport> const& reports);
json to_json(ChartViolation const& violation);
json to_json(NonIsomorphismWitness const& witness);
json to_json(AxiomReport const& report);

// {"kind": ..., "permutation": {...}?, "grid": [...], "seeds": [{"t":..,"x":..}]}
struct FlowDescriptor
{
    FlowSpec spec;
    std::set<Rational> grid;
    std::vector<Seed> seeds;
};

json to_json(FlowDescriptor const& descriptor);
FlowDescriptor flow_from_json(json const& doc);

// Parses text, mapping syntax errors to ParseError.
json parse(std::string_view text);

// Compact dump with sorted keys; the byte form used for golden comparisons.
std::string canonical(json const& doc);

} // namespace sincov::io

#endif // SINCOV_IO_HPP
