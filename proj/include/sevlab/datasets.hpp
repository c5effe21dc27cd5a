#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sevlab/permutation.hpp"
#include "sevlab/simplicial.hpp"

namespace sevlab {

struct Dataset {
    std::string name;
    std::string provenance;
    std::optional<SimplicialComplex> complex;
    /// Named generators, e.g. "tau" or "r1".
    std::vector<std::pair<std::string, Permutation>> generators;
    /// Vertex number to weight label such as "(23)".
    std::map<int, std::string> dictionary;
    /// Label sets such as the nine pairs of the M1 simplex.
    std::vector<std::string> labels;
};

/// One of RP2_min, CP2_min, CP2_dictionary, CP2_generators, HP2_generators,
/// HP2_pair_table, HP2_M1. Throws UnknownDataset.
Dataset dataset(const std::string& name);
std::vector<std::string> dataset_names();

/// Canonical text form: complex (if any) in the simplicial text format, then
/// "gen name cycles", "dict vertex label" and "label text" lines.
std::string dataset_text(const Dataset& d);
nlohmann::json dataset_json(const Dataset& d);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

/// Permutation of the 15 vertices induced by a permutation of 1..6 acting on
/// pairs through the HP2 pair table.
Permutation induced_pair_action(const Permutation& on_six);

/// Vertex of the HP2 pair table for the pair {i, j}. Throws OutOfRange.
int pair_vertex(int i, int j);

}  // namespace sevlab
