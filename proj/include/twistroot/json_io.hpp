#pragma once

#include <nlohmann/json.hpp>

#include "twistroot/classify.hpp"

namespace twistroot {

using json = nlohmann::json;

json to_json(const DataSet& d);
json to_json(const PermutingDataSet& pd);
json to_json(const OrbitDistribution& o);
json to_json(const MulticurveSpec& spec);
json to_json(const PairingWitness& w, const RootClassRecord& rec);
json to_json(const RootClassRecord& rec);

// Parses {"n":..,"g0":..,"a":[..],"cones":[[c,b]..]} without validity checks
// (golden rows may be invalid on purpose); residues reduced, lists sorted.
DataSet dataset_from_json(const json& j);
PermutingDataSet permuting_from_json(const json& j);
MulticurveSpec spec_from_json(const json& j);

}  // namespace twistroot
