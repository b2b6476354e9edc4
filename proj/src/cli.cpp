#include "turan/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "turan/exponent.hpp"
#include "turan/families.hpp"
#include "turan/family_spec.hpp"
#include "turan/graph_io.hpp"
#include "turan/path_classifier.hpp"
#include "turan/turan_search.hpp"

namespace turan::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "turan-lab/1";

/// Bad input that is not a parse error, such as a malformed --threshold value.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<int> members_json(VertexSet s) { return s.members(); }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InputError("not an integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw InputError("empty integer list");
    return out;
}

BigInt parse_positive_big(const std::string& text, const char* what) {
    BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0 || v < 1) {
        throw InputError(std::string(what) + " must be a positive integer");
    }
    return v;
}

Graph read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return from_graph6(line);
    }
    throw InputError(path + " holds no graph");
}

struct Options {
    std::string family;
    std::string format = "graph6";
    std::string roots = "leaves";

    std::string target;
    long max_den = 20;
    long s = 2, b = 1, k = 1, p = 1;

    int n = 0;
    int n_to = 0;
    int threads = 1;

    std::string graph_file;
    int j_max = 2;
    std::string L = "1", K = "1";
    int cfg_s = 2;
    std::vector<std::string> thresholds;
    std::string spider;
    std::string height_one = "by-count";
};

void construct(const Options& o, std::ostream& out) {
    const Family f = parse_family(o.family);
    if (o.format == "graph6") {
        out << to_graph6(f.graph) << '\n';
        return;
    }
    out << json{{"schema", kSchema}, {"family", f.descriptor}, {"graph6", to_graph6(f.graph)}, {"graph", to_json(f.graph)}}
               .dump()
        << '\n';
}

void check_balanced(const Options& o, std::ostream& out) {
    const Family f = parse_family(o.family);
    VertexSet roots;
    if (o.roots == "leaves") {
        f.graph.vertices().for_each([&](int v) {
            if (f.graph.degree(v) == 1) roots.insert(v);
        });
    } else {
        for (int v : parse_int_list(o.roots)) {
            if (v < 0 || v >= f.graph.order()) throw GraphError("root " + std::to_string(v) + " out of range");
            roots.insert(v);
        }
    }
    const RootedTree t(f.graph, roots);
    const DensityReport r = density(t);
    json j{{"schema", kSchema},
           {"family", f.descriptor},
           {"roots", members_json(roots)},
           {"rho", to_string(r.rho)},
           {"balanced", r.balanced},
           {"witness", members_json(r.witness)},
           {"witness_rho", to_string(r.witness_rho)},
           {"exponent", r.rho > 1 ? json(to_string(exponent_of_density(r.rho))) : json(nullptr)}};
    if (f.spider && roots == f.spider->leaf_set()) j["spider_criterion"] = spider_balanced_criterion(*f.spider);
    out << j.dump() << '\n';
}

void exponent_certify(const Options& o, std::ostream& out) {
    out << to_json(certify(parse_rational(o.target))).dump() << '\n';
}

void exponent_atlas(const Options& o, std::ostream& out) {
    if (o.max_den < 2) throw InputError("--max-den must be at least 2");
    out << atlas_csv(turan::exponent_atlas(o.max_den));
}

void exponent_constants(const Options& o, std::ostream& out) {
    const auto c = regularity_constants(o.s, o.b, o.k);
    out << json{{"schema", kSchema},
                {"s", c.s},
                {"b", c.b},
                {"k", c.k},
                {"epsilon", to_string(c.epsilon)},
                {"K", to_string(c.K)},
                {"exponent", to_string(sparse_exponent(o.s - 1, o.k, o.b))}}
               .dump()
        << '\n';
}

void exponent_dense(const Options& o, std::ostream& out) {
    out << json{{"schema", kSchema},
                {"b", o.b},
                {"p", o.p},
                {"s", o.s},
                {"k", o.k},
                {"exponent", to_string(dense_exponent(o.b, o.p, o.s, o.k))}}
               .dump()
        << '\n';
}

void ex_search(const Options& o, std::ostream& out) {
    const Family f = parse_family(o.family);
    SearchOptions so;
    so.threads = o.threads;
    if (o.n_to > 0) {
        const ExTable t = ex_table(f, o.n, o.n_to, so);
        if (o.format == "text") {
            for (auto [n, ex] : t.rows) out << n << ' ' << ex << '\n';
            return;
        }
        json j = to_json(t);
        j["family"] = f.descriptor;
        out << j.dump() << '\n';
        return;
    }
    const SearchResult r = turan_number(o.n, f, so);
    if (o.format == "text") {
        out << r.ex_value << '\n';
        return;
    }
    out << to_json(r).dump() << '\n';
}

ThresholdConfig threshold_config(const Options& o) {
    ThresholdConfig cfg;
    cfg.L = parse_positive_big(o.L, "--L");
    cfg.K = parse_positive_big(o.K, "--K");
    cfg.s = o.cfg_s;
    for (const auto& t : o.thresholds) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw InputError("--threshold expects j=COUNT");
        const auto j = parse_int_list(t.substr(0, eq));
        if (j.size() != 1) throw InputError("--threshold expects j=COUNT");
        cfg.overrides[j.front()] = parse_positive_big(t.substr(eq + 1), "threshold");
    }
    return cfg;
}

void classify(const Options& o, std::ostream& out) {
    if (o.graph_file.empty() == o.family.empty()) throw InputError("classify needs exactly one of --graph or --family");
    const Graph g = o.graph_file.empty() ? parse_family(o.family).graph : read_graph6_file(o.graph_file);
    const ThresholdConfig cfg = threshold_config(o);
    const PathClassification pc = classify_paths(g, o.j_max, cfg);
    json j = pc.to_json();
    j["graph6"] = to_graph6(g);
    if (!o.spider.empty()) {
        SpiderOptions so;
        if (o.height_one == "always-light") so.height_one = HeightOnePolicy::AlwaysLight;
        const auto sc = classify_spiders(g, parse_int_list(o.spider), cfg, pc, so);
        json spiders = sc.to_json();
        spiders.erase("schema");
        j["spider"] = spiders;
    }
    out << j.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Turan-type extremal graph toolkit", "turan-lab"};
    app.require_subcommand(1);
    Options o;

    auto* construct_cmd = app.add_subcommand("construct", "Build a graph from a family descriptor");
    construct_cmd->add_option("--family", o.family, "Family descriptor")->required();
    construct_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"graph6", "json"}));

    auto* balanced_cmd = app.add_subcommand("check-balanced", "Density and balancedness of a rooted tree");
    balanced_cmd->add_option("--family", o.family, "Tree descriptor")->required();
    balanced_cmd->add_option("--roots", o.roots, "'leaves' or a comma-separated vertex list");

    auto* exponent_cmd = app.add_subcommand("exponent", "Turan exponent certificates");
    exponent_cmd->require_subcommand(1);
    auto* certify_cmd = exponent_cmd->add_subcommand("certify", "Certify a rational in (1, 2)");
    certify_cmd->add_option("target", o.target, "Exponent such as 7/5")->required();
    auto* ex_atlas_cmd = exponent_cmd->add_subcommand("atlas", "Coverage table as CSV");
    ex_atlas_cmd->add_option("--max-den", o.max_den, "Largest denominator");
    auto* constants_cmd = exponent_cmd->add_subcommand("constants", "Almost-regular constants for (s, b, k)");
    constants_cmd->add_option("--s", o.s)->required();
    constants_cmd->add_option("--b", o.b)->required();
    constants_cmd->add_option("--k", o.k)->required();
    auto* dense_cmd = exponent_cmd->add_subcommand("dense", "2 - (kp+b)/(s(kp+b)+p)");
    dense_cmd->add_option("--b", o.b)->required();
    dense_cmd->add_option("--p", o.p)->required();
    dense_cmd->add_option("--s", o.s)->required();
    dense_cmd->add_option("--k", o.k)->required();

    auto* atlas_cmd = app.add_subcommand("atlas", "Coverage table as CSV");
    atlas_cmd->add_option("--max-den", o.max_den, "Largest denominator");

    auto* search_cmd = app.add_subcommand("ex-search", "Exact Turan numbers");
    search_cmd->add_option("--n", o.n, "Vertex count (or first of a range)")->required()->check(CLI::Range(1, kMaxSearchOrder));
    search_cmd->add_option("--to", o.n_to, "Last vertex count of a table")->check(CLI::Range(1, kMaxSearchOrder));
    search_cmd->add_option("--family", o.family, "Forbidden graph descriptor")->required();
    search_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    search_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 256));

    auto* classify_cmd = app.add_subcommand("classify", "Admissible, light and heavy paths");
    classify_cmd->add_option("--graph", o.graph_file, "graph6 file");
    classify_cmd->add_option("--family", o.family, "Host graph descriptor");
    classify_cmd->add_option("--jmax", o.j_max, "Longest path length")->check(CLI::Range(1, 6));
    classify_cmd->add_option("--L", o.L, "L");
    classify_cmd->add_option("--K", o.K, "K");
    classify_cmd->add_option("--s", o.cfg_s, "s")->check(CLI::Range(2, 1000));
    classify_cmd->add_option("--threshold", o.thresholds, "Override j=COUNT");
    classify_cmd->add_option("--spider", o.spider, "Also classify spiders with this length vector");
    classify_cmd->add_option("--height-one", o.height_one, "Height-1 spider rule")
        ->check(CLI::IsMember({"by-count", "always-light"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsageError;
    }

    if (search_cmd->parsed() && !search_cmd->count("--format")) o.format = "json";

    try {
        if (construct_cmd->parsed()) construct(o, out);
        else if (balanced_cmd->parsed()) check_balanced(o, out);
        else if (certify_cmd->parsed()) exponent_certify(o, out);
        else if (ex_atlas_cmd->parsed() || atlas_cmd->parsed()) exponent_atlas(o, out);
        else if (constants_cmd->parsed()) exponent_constants(o, out);
        else if (dense_cmd->parsed()) exponent_dense(o, out);
        else if (search_cmd->parsed()) ex_search(o, out);
        else if (classify_cmd->parsed()) classify(o, out);
    } catch (const std::invalid_argument& e) {
        out << json{{"schema", kSchema}, {"error", {{"message", e.what()}}}}.dump() << '\n';
        return kExitDomainError;
    } catch (const CertificateError& e) {
        out << json{{"schema", kSchema}, {"error", {{"message", e.what()}}}}.dump() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace turan::cli
