#include "turan/family_spec.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "turan/graph_io.hpp"

namespace turan {

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw FamilySpecError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    for (auto part : split(s, ',')) out.push_back(parse_int(part, "list entry"));
    return out;
}

/// "s=2,t=3,k=2" with exactly the keys in `keys`.
std::map<std::string, int> parse_params(std::string_view s, const std::vector<std::string>& keys) {
    std::map<std::string, int> out;
    for (auto part : split(s, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string_view::npos) throw FamilySpecError("expected key=value, got '" + std::string(part) + "'");
        std::string key(part.substr(0, eq));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw FamilySpecError("unknown parameter '" + key + "'");
        }
        if (out.count(key)) throw FamilySpecError("duplicate parameter '" + key + "'");
        out[key] = parse_int(part.substr(eq + 1), key);
    }
    for (const auto& key : keys) {
        if (!out.count(key)) throw FamilySpecError("missing parameter '" + key + "'");
    }
    return out;
}

std::pair<std::string_view, std::string_view> head_tail(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) return {spec, {}};
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

Family parse_inner(std::string_view spec) {
    auto [head, tail] = head_tail(spec);
    Family f;
    f.descriptor = std::string(spec);

    if (head == "spider") {
        Spider sp(parse_int_list(tail));
        f.graph = sp.graph();
        f.blowup = BlowupShape{sp.legs(), 1};
        f.spider = std::move(sp);
    } else if (head == "Sbk") {
        auto p = parse_params(tail, {"s", "b", "k"});
        Spider sp = spider_sbk(p["s"], p["b"], p["k"]);
        f.graph = sp.graph();
        f.blowup = BlowupShape{sp.legs(), 1};
        f.spider = std::move(sp);
    } else if (head == "blowup") {
        auto [tparam, inner] = head_tail(tail);
        auto p = parse_params(tparam, {"t"});
        Family base = parse_inner(inner);
        if (!base.spider) throw FamilySpecError("blowup is only defined over spider:... families");
        f.graph = blowup(base.spider->rooted_at_leaves(), p["t"]);
        f.blowup = BlowupShape{base.spider->legs(), p["t"]};
    } else if (head == "Kst^k") {
        auto p = parse_params(tail, {"s", "t", "k"});
        if (p["s"] < 2) throw FamilySpecError("Kst^k needs s >= 2");
        f.graph = subdivided_complete_bipartite(p["s"], p["t"], p["k"]);
        f.blowup = BlowupShape{std::vector<int>(static_cast<std::size_t>(p["s"]), p["k"]), p["t"]};
    } else if (head == "Kst") {
        auto p = parse_params(tail, {"s", "t"});
        f.graph = graphs::complete_bipartite(p["s"], p["t"]);
        if (p["s"] >= 2 && p["t"] >= 1) f.blowup = BlowupShape{std::vector<int>(static_cast<std::size_t>(p["s"]), 1), p["t"]};
    } else if (head == "Lst") {
        auto p = parse_params(tail, {"s", "t", "k"});
        f.graph = subdivided_with_apex(p["s"], p["t"], p["k"]);
        std::vector<int> legs(static_cast<std::size_t>(p["s"] + 1), p["k"]);
        legs[0] = 1;
        f.blowup = BlowupShape{legs, p["t"]};
    } else if (head == "cycle") {
        f.graph = graphs::cycle(parse_int(tail, "cycle length"));
    } else if (head == "complete") {
        f.graph = graphs::complete(parse_int(tail, "order"));
    } else if (head == "path") {
        f.graph = graphs::path(parse_int(tail, "path length"));
    } else if (head == "star") {
        f.graph = graphs::star(parse_int(tail, "leaf count"));
    } else if (head == "petersen" && tail.empty()) {
        f.graph = graphs::petersen();
    } else if (head == "kneser") {
        auto nk = parse_int_list(tail);
        if (nk.size() != 2) throw FamilySpecError("kneser needs n,k");
        f.graph = graphs::kneser(nk[0], nk[1]);
    } else if (head == "g6") {
        f.graph = from_graph6(tail);
    } else {
        throw FamilySpecError("unknown family '" + std::string(head) + "'");
    }
    return f;
}

}  // namespace

Family parse_family(std::string_view spec) {
    try {
        return parse_inner(spec);
    } catch (const FamilySpecError&) {
        throw;
    } catch (const GraphError& e) {
        throw FamilySpecError(std::string(spec) + ": " + e.what());
    }
}

}  // namespace turan
