#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sevlab/branching.hpp"
#include "sevlab/cominuscule.hpp"
#include "sevlab/datasets.hpp"
#include "sevlab/error.hpp"
#include "sevlab/highrank.hpp"
#include "sevlab/simplicial.hpp"
#include "sevlab/suite.hpp"
#include "sevlab/wedge.hpp"

using namespace sevlab;
using Json = nlohmann::ordered_json;

namespace {

struct Entry {
    std::string name;
    std::string expected;
    std::string actual;
    std::string status;
};

struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<Entry> results;
    std::vector<std::string> failures;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string payload;

    void check(const std::string& name, const std::string& expected, const std::string& actual, bool pass) {
        results.push_back({name, expected, actual, pass ? "pass" : "fail"});
        if (!pass) failures.push_back(name);
    }
    void info(const std::string& name, const std::string& actual) { results.push_back({name, "", actual, "info"}); }
};

struct Globals {
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
    bool skip_optional = false;
    bool timing = false;
};

const std::map<std::string, int> kAlgebras{{"R", 1}, {"C", 2}, {"H", 4}, {"O", 8}};

template <class T>
std::string list_str(const std::vector<T>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    return os.str();
}

std::vector<BigInt> tail(const FVector& fv) { return {fv.f.begin() + 1, fv.f.end()}; }

Report cmd_faces(int a, const std::string& method) {
    Report r;
    r.params["method"] = method;
    std::vector<BigInt> klee, kostant;
    if (method != "kostant") klee = tail(klee_solve(a));
    if (method != "klee") {
        const auto seq = identify_interval(cominuscule_pair(a));
        for (int k = 1; k <= 2 * a + 1; ++k) kostant.push_back(seq.dim(k));
    }
    const auto& shown = klee.empty() ? kostant : klee;
    r.header = {"k", "f_k"};
    for (std::size_t k = 0; k < shown.size(); ++k) r.rows.push_back({std::to_string(k), shown[k].get_str()});
    if (method == "both")
        r.check("match", list_str(klee), list_str(kostant), klee == kostant);
    else
        r.info("faces", list_str(shown));
    return r;
}

Report cmd_hasse(int a, const std::string& highlight, const std::string& dot_path) {
    Report r;
    r.params["highlight"] = highlight;
    const Highlight h = highlight == "interval" ? Highlight::Interval
                        : highlight == "dual"  ? Highlight::Dual
                                               : Highlight::None;
    const auto dot = hasse_dot(cominuscule_pair(a), h);
    const auto ideals = enumerate_ideals(build_g1_poset(cominuscule_pair(a)));
    r.info("nodes", std::to_string(ideals.size()));
    if (dot_path.empty()) {
        r.payload = dot;
    } else {
        std::ofstream f(dot_path);
        if (!f) throw Error(ErrorCode::IOError, "cannot write " + dot_path);
        f << dot;
        r.info("dot", dot_path);
    }
    return r;
}

Report cmd_links(int a) {
    Report r;
    const auto fv = tail(link_f_vectors(a));
    r.header = {"k", "f_k"};
    for (std::size_t k = 0; k < fv.size(); ++k) r.rows.push_back({std::to_string(k), fv[k].get_str()});
    const std::map<int, std::pair<std::string, int>> so{{1, {"B", 2}}, {2, {"D", 3}}, {4, {"D", 4}}, {8, {"D", 6}}};
    const auto& [type, rank] = so.at(a);
    Weight w(static_cast<std::size_t>(rank), 0);
    w[0] = a;
    const auto weyl = weyl_dim(build_root_system(type, rank), w);
    const auto formula = link_facet_formula(a);
    r.check("facets_formula", weyl.get_str(), formula.get_str(), formula == weyl);
    r.check("facets_fvector", weyl.get_str(), fv.back().get_str(), fv.back() == weyl);
    return r;
}

Report cmd_triangulation(const std::string& name) {
    Report r;
    r.params["name"] = name;
    const auto d = dataset(name);
    r.payload = dataset_text(d);
    r.info("sha256", sha256_hex(r.payload));
    if (d.complex) {
        const int a = d.complex->n_vertices() == 6 ? 1 : 2;
        const auto p = check_manifold_properties(*d.complex, a);
        const auto fv = tail(f_vector(*d.complex));
        r.check("fvector", list_str(tail(klee_solve(a))), list_str(fv), fv == tail(klee_solve(a)));
        r.check("tight", "true", p.tight ? "true" : "false", p.tight);
        r.check("dual", "true", p.dual ? "true" : "false", p.dual);
        r.check("defective", "true", p.defective ? "true" : "false", p.defective);
        r.check("pseudomanifold", "true", p.pseudomanifold ? "true" : "false", p.pseudomanifold);
        r.check("euler", std::to_string(manifold_euler(a)), p.euler.get_str(), p.euler == manifold_euler(a));
        r.info("automorphisms", std::to_string(full_automorphism_group(*d.complex).order()));
    }
    return r;
}

Report cmd_wedge(int a, const std::string& expr, const std::string& action, int op) {
    Report r;
    r.params["expr"] = expr;
    r.params["action"] = action;
    const auto m = wedge_model(a);
    const auto v = parse_wedge(m, expr);
    if (action == "lower" || action == "raise") {
        r.params["op"] = op;
        const int n_ops = static_cast<int>(m.lowering.size());
        if (op < 0 || op >= n_ops)
            throw Error(ErrorCode::OutOfRange, "operator index must lie in 0.." + std::to_string(n_ops - 1));
        const auto w = action == "lower" ? lowering(m, op, v) : raising(m, op, v);
        r.info("result", w.is_zero() ? "0" : format_wedge(m, w));
        return r;
    }
    const auto span = generate_module(m, v);
    r.info("dimension", std::to_string(span.dim()));
    r.header = {"weight", "vector"};
    for (const auto& [wt, basis] : span.by_weight)
        for (const auto& b : basis) r.rows.push_back({list_str(wt), format_wedge(m, b)});
    return r;
}

Report cmd_euler(int a, int points, std::uint64_t seed) {
    Report r;
    r.params["points"] = points;
    const auto e = euler_check(a, points, seed);
    r.check("scheme", "valid", e.scheme_ok ? "valid" : "invalid", e.scheme_ok);
    r.header = {"point", "chi"};
    for (std::size_t i = 0; i < e.values.size(); ++i) {
        std::vector<std::string> coords;
        for (const auto& x : e.points[i]) coords.push_back(x.str());
        r.rows.push_back({"(" + join(coords) + ")", e.values[i].str()});
        r.check("point" + std::to_string(i), e.expected.str(), e.values[i].str(), e.values[i] == e.expected);
    }
    return r;
}

Report cmd_invariants(int a, int n) {
    Report r;
    r.params["n"] = n;
    const auto got = n == 2 ? invariant_dims(a) : higher_invariants(a, n);
    const auto expected = expected_invariant_pattern(a, n);
    r.header = {"k", "invariants"};
    for (std::size_t k = 0; k < got.size(); ++k) r.rows.push_back({std::to_string(k), std::to_string(got[k])});
    r.check("pattern", list_str(expected), list_str(got), got == expected);
    if (n == 2) {
        const auto brute = invariant_dims_bruteforce(a);
        r.check("bruteforce", list_str(got), list_str(brute), brute == got);
    }
    return r;
}

Report cmd_highrank(int a, int n) {
    Report r;
    r.params["n"] = n;
    const auto f = face_numbers(a, n);
    r.header = {"k", "f_k"};
    for (std::size_t k = 0; k < f.size(); ++k) r.rows.push_back({std::to_string(k), f[k].get_str()});
    if (a != 4) {
        std::vector<std::string> closed;
        for (int k = 0; k < static_cast<int>(f.size()); ++k) closed.push_back(f_closed_form_exact(a, n, k).str());
        r.check("closed_form", join(closed), list_str(f), join(closed) == list_str(f));
    }
    const auto alt = alternating_sum(a, n);
    const auto want = expected_alternating_sum(a, n);
    r.check("alternating_sum", want.get_str(), alt.get_str(), alt == want);
    const auto top = top_cartan_power_dim(a, n);
    r.check("top_cartan_power", top.get_str(), f.back().get_str(), top == f.back());
    return r;
}

Report cmd_verify(const std::string& suite, const Globals& g) {
    Report r;
    r.params["suite"] = suite;
    r.params["skip_optional"] = g.skip_optional;
    for (const auto& c : suite_checks(suite, g.seed, g.skip_optional)) {
        try {
            const auto res = c.run();
            r.check(c.name, res.expected, res.actual, res.pass);
        } catch (const Error& e) {
            r.check(c.name, "no error", e.what(), false);
        }
    }
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string render(const Report& r, const Globals& g, long elapsed_ms) {
    std::ostringstream os;
    if (g.format == "json") {
        Json j;
        j["command"] = r.command;
        j["params"] = r.params;
        Json results = Json::object();
        for (const auto& e : r.results)
            results[e.name] = {{"expected", e.expected}, {"actual", e.actual}, {"status", e.status}};
        j["results"] = results;
        if (!r.rows.empty()) {
            Json rows = Json::array();
            for (const auto& row : r.rows) {
                Json obj = Json::object();
                for (std::size_t i = 0; i < row.size(); ++i) obj[r.header[i]] = row[i];
                rows.push_back(obj);
            }
            j["rows"] = rows;
        }
        if (!r.payload.empty()) j["payload"] = r.payload;
        j["failures"] = r.failures;
        j["seed"] = g.seed;
        j["elapsed_ms"] = elapsed_ms;
        os << j.dump(2) << "\n";
    } else if (g.format == "csv") {
        if (!r.rows.empty()) {
            os << join(r.header) << "\n";
            for (const auto& row : r.rows) {
                std::vector<std::string> cells;
                for (const auto& c : row) cells.push_back(csv_field(c));
                os << join(cells) << "\n";
            }
        } else {
            os << "name,expected,actual,status\n";
            for (const auto& e : r.results)
                os << csv_field(e.name) << "," << csv_field(e.expected) << "," << csv_field(e.actual) << ","
                   << e.status << "\n";
        }
    } else {
        os << "command: " << r.command << "\n";
        for (const auto& [k, v] : r.params.items()) os << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        if (!r.rows.empty()) {
            os << join(r.header, " ") << "\n";
            for (const auto& row : r.rows) os << join(row, " ") << "\n";
        }
        if (!r.payload.empty()) os << r.payload;
        for (const auto& e : r.results) {
            if (e.status == "info")
                os << "info " << e.name << ": " << e.actual << "\n";
            else
                os << (e.status == "pass" ? "pass " : "FAIL ") << e.name << ": expected " << e.expected
                   << "; actual " << e.actual << "\n";
        }
        os << "failures: " << r.failures.size() << "\n";
        if (g.timing) os << "elapsed_ms: " << elapsed_ms << "\n";
    }
    return os.str();
}

bool is_usage_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::IOError:
        case ErrorCode::ParseError:
        case ErrorCode::UnsupportedCase:
        case ErrorCode::UnsupportedPair:
        case ErrorCode::UnknownDataset:
        case ErrorCode::OutOfRange:
        case ErrorCode::NotHighestWeight: return true;
        default: return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification laboratory for minimal triangulations of projective planes"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "seed for random torus points")->capture_default_str();
    app.add_option("--format", g.format, "report format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write the report (or the DOT file for hasse) to this path");
    app.add_flag("--skip-optional", g.skip_optional, "skip the long-running a=8 checks");
    app.add_flag("--timing", g.timing, "record wall-clock time in reports");

    std::string algebra = "R";
    std::string method = "klee";
    std::string highlight = "none";
    std::string name = "CP2_min";
    std::string expr;
    std::string action = "generate";
    std::string suite = "all";
    int op = 0, points = 5, n = 2;

    auto algebra_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--algebra", algebra, "R, C, H or O")->check(CLI::IsMember(allowed))->capture_default_str();
    };
    auto* faces = app.add_subcommand("faces", "face numbers of the minimal triangulation");
    algebra_opt(faces, {"R", "C", "H", "O"});
    faces->add_option("--method", method)->check(CLI::IsMember({"klee", "kostant", "both"}))->capture_default_str();
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the ideal lattice in DOT");
    algebra_opt(hasse, {"R", "C", "H", "O"});
    hasse->add_option("--highlight", highlight)
        ->check(CLI::IsMember({"none", "interval", "dual"}))
        ->capture_default_str();
    auto* links = app.add_subcommand("links", "vertex-link face numbers");
    algebra_opt(links, {"R", "C", "H", "O"});
    auto* tri = app.add_subcommand("triangulation", "show and check a bundled dataset");
    tri->add_option("--name", name)->check(CLI::IsMember(dataset_names()))->capture_default_str();
    auto* wedge_cmd = app.add_subcommand("wedge", "module generation and operators in the exterior algebra");
    algebra_opt(wedge_cmd, {"R", "C", "H"});
    wedge_cmd->add_option("--expr", expr, "wedge expression such as (11)(12)(13)")->required();
    wedge_cmd->add_option("--action", action)
        ->check(CLI::IsMember({"generate", "lower", "raise"}))
        ->capture_default_str();
    wedge_cmd->add_option("--op", op, "operator index")->capture_default_str();
    auto* euler = app.add_subcommand("euler", "Euler characteristic at random torus points");
    algebra_opt(euler, {"R", "C", "H", "O"});
    euler->add_option("--points", points)->check(CLI::Range(1, 100))->capture_default_str();
    auto* inv = app.add_subcommand("invariants", "invariant lines in the L sequence");
    algebra_opt(inv, {"R", "C", "H"});
    inv->add_option("--n", n)->check(CLI::Range(2, 8))->capture_default_str();
    auto* high = app.add_subcommand("highrank", "higher-rank face numbers and closed forms");
    algebra_opt(high, {"R", "C", "H"});
    high->add_option("--n", n)->check(CLI::Range(2, 8))->capture_default_str();
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)
        ->check(CLI::IsMember({"core", "triangulations", "characters", "highrank", "all"}))
        ->capture_default_str();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
        const int a = kAlgebras.at(algebra);
        const auto* sub = app.get_subcommands().front();
        const std::string cmd = sub->get_name();
        if (cmd == "faces") r = cmd_faces(a, method);
        else if (cmd == "hasse") r = cmd_hasse(a, highlight, g.out);
        else if (cmd == "links") r = cmd_links(a);
        else if (cmd == "triangulation") r = cmd_triangulation(name);
        else if (cmd == "wedge") r = cmd_wedge(a, expr, action, op);
        else if (cmd == "euler") r = cmd_euler(a, points, g.seed);
        else if (cmd == "invariants") r = cmd_invariants(a, n);
        else if (cmd == "highrank") r = cmd_highrank(a, n);
        else r = cmd_verify(suite, g);
        r.command = cmd;
        if (cmd != "triangulation" && cmd != "verify") {
            Json p{{"algebra", algebra}};
            p.update(r.params);
            r.params = p;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return is_usage_error(e.code()) ? 2 : 1;
    }
    const long elapsed =
        g.timing ? static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - t0)
                                         .count())
                 : 0;
    const auto text = render(r, g, elapsed);
    if (!g.out.empty() && r.command != "hasse") {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "cannot write " << g.out << "\n";
            return 2;
        }
        f << text;
    } else {
        std::cout << text;
    }
    return r.failures.empty() ? 0 : 1;
}
