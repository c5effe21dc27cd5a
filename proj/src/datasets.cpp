#include "sevlab/datasets.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sevlab/error.hpp"

namespace sevlab {

namespace {

std::vector<int> digits(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(c - '0');
    return out;
}

const char* const kCp2Facets[] = {
    "12456", "23456", "13456", "12459", "23567", "13468", "23469", "13457", "12568", "13569", "12467", "23458",
    "45789", "56789", "46789", "34578", "15689", "24679", "35679", "14678", "24589", "34689", "25678", "14579",
    "12378", "12389", "12379", "12678", "23489", "13579", "13689", "12479", "23578", "23679", "13478", "12589"};

// Vertex v carries the monomial kRp2Labels[v-1].
const char* const kRp2Labels[] = {"11", "12", "13", "22", "23", "33"};
const char* const kRp2Facets[][3] = {{"11", "12", "13"}, {"11", "22", "13"}, {"11", "22", "23"}, {"11", "12", "33"},
                                     {"12", "22", "23"}, {"12", "23", "13"}, {"12", "22", "33"}, {"11", "23", "33"},
                                     {"13", "22", "33"}, {"13", "23", "33"}};

const std::pair<const char*, int> kPairTable[] = {{"45", 1},  {"56", 2},  {"26", 3},  {"23", 4},  {"34", 5},
                                                  {"36", 6},  {"24", 7},  {"35", 8},  {"46", 9},  {"25", 10},
                                                  {"12", 11}, {"13", 12}, {"14", 13}, {"15", 14}, {"16", 15}};

int rp2_vertex(const std::string& label) {
    for (int v = 0; v < 6; ++v)
        if (label == kRp2Labels[v]) return v + 1;
    throw Error(ErrorCode::ParseError, "unknown monomial " + label);
}

}  // namespace

int pair_vertex(int i, int j) {
    if (i > j) std::swap(i, j);
    const std::string key = std::to_string(i) + std::to_string(j);
    for (const auto& [pair, v] : kPairTable)
        if (key == pair) return v;
    throw Error(ErrorCode::OutOfRange, "no vertex for pair " + key);
}

Permutation induced_pair_action(const Permutation& on_six) {
    if (on_six.degree() != 6) throw Error(ErrorCode::DegreeMismatch, "pair action needs a permutation of 1..6");
    std::vector<int> img(15);
    for (const auto& [pair, v] : kPairTable)
        img[static_cast<std::size_t>(v - 1)] = pair_vertex(on_six(pair[0] - '0'), on_six(pair[1] - '0'));
    return Permutation::from_images(img);
}

std::vector<std::string> dataset_names() {
    return {"RP2_min", "CP2_min", "CP2_dictionary", "CP2_generators", "HP2_generators", "HP2_pair_table", "HP2_M1"};
}

Dataset dataset(const std::string& name) {
    Dataset d;
    d.name = name;
    if (name == "RP2_min") {
        d.provenance = "six-vertex real projective plane; faces are the chosen decomposable terms of the degree-3 wedge";
        std::vector<std::vector<int>> facets;
        for (const auto& f : kRp2Facets) facets.push_back({rp2_vertex(f[0]), rp2_vertex(f[1]), rp2_vertex(f[2])});
        d.complex = SimplicialComplex(6, facets);
        for (int v = 0; v < 6; ++v) d.dictionary[v + 1] = std::string("(") + kRp2Labels[v] + ")";
    } else if (name == "CP2_min") {
        d.provenance = "Brehm-Kuehnel nine-vertex complex projective plane, 36 facets";
        std::vector<std::vector<int>> facets;
        for (const char* f : kCp2Facets) facets.push_back(digits(f));
        d.complex = SimplicialComplex(9, facets);
    } else if (name == "CP2_dictionary") {
        d.provenance = "weight (ij) of A tensor B to vertex of the nine-vertex complex projective plane";
        const char* labels[] = {"23", "32", "11", "21", "33", "12", "22", "31", "13"};
        for (int v = 0; v < 9; ++v) d.dictionary[v + 1] = std::string("(") + labels[v] + ")";
    } else if (name == "CP2_generators") {
        d.provenance = "Z3 x Z3 subgroup H and the normalizing involution tau of the nine-vertex complex projective plane";
        d.generators = {{"h1", Permutation::from_cycles("(147)(258)(369)", 9)},
                        {"h2", Permutation::from_cycles("(123)(456)(789)", 9)},
                        {"tau", Permutation::from_cycles("(12)(46)(89)", 9)}};
    } else if (name == "HP2_generators") {
        d.provenance = "icosahedral A5 acting on six letters, inducing the 15-vertex action";
        d.generators = {{"p", Permutation::from_cycles("(23456)", 6)},
                        {"r1", Permutation::from_cycles("(36)(45)", 6)},
                        {"s", Permutation::from_cycles("(156)(243)", 6)},
                        {"r2", Permutation::from_cycles("(36)(12)", 6)}};
    } else if (name == "HP2_pair_table") {
        d.provenance = "pairs of 1..6 to the 15 vertices of the quaternionic candidate";
        for (const auto& [pair, v] : kPairTable) d.dictionary[v] = std::string("(") + pair + ")";
    } else if (name == "HP2_M1") {
        d.provenance = "maximal simplex M1 of the quaternionic candidate as nine pairs";
        d.labels = {"(12)", "(13)", "(14)", "(15)", "(16)", "(23)", "(24)", "(25)", "(26)"};
    } else {
        throw Error(ErrorCode::UnknownDataset, "unknown dataset '" + name + "'");
    }
    return d;
}

std::string dataset_text(const Dataset& d) {
    std::ostringstream os;
    os << "name=" << d.name << "\n";
    if (d.complex) os << to_text(*d.complex);
    for (const auto& [n, p] : d.generators) os << "gen " << n << " " << p.cycle_string() << "\n";
    for (const auto& [v, l] : d.dictionary) os << "dict " << v << " " << l << "\n";
    for (const auto& l : d.labels) os << "label " << l << "\n";
    return os.str();
}

nlohmann::json dataset_json(const Dataset& d) {
    nlohmann::json j;
    j["name"] = d.name;
    j["provenance"] = d.provenance;
    if (d.complex) {
        j["n_vertices"] = d.complex->n_vertices();
        j["facets"] = d.complex->facets();
    }
    for (const auto& [n, p] : d.generators) j["generators"][n] = p.cycle_string();
    for (const auto& [v, l] : d.dictionary) j["dictionary"][std::to_string(v)] = l;
    if (!d.labels.empty()) j["labels"] = d.labels;
    return j;
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error(ErrorCode::IOError, "SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return os.str();
}

}  // namespace sevlab
