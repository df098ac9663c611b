#include "nudcode/netcode.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "nudcode/errors.hpp"

namespace nudcode {

namespace {

// Per out-edge view of the coefficient maps.
struct Incoming {
    std::vector<std::vector<std::pair<EdgeId, Element>>> edges;     // (in-edge, c)
    std::vector<std::vector<std::pair<std::size_t, Element>>> streams;  // (stream, c)
};

Incoming incoming(const NetworkInstance& g, const LinearCode& code) {
    Incoming in;
    in.edges.resize(g.edge_count());
    in.streams.resize(g.edge_count());
    for (const auto& [key, c] : code.local) in.edges.at(key.second).emplace_back(key.first, c);
    for (const auto& [key, c] : code.source) in.streams.at(key.second).emplace_back(key.first, c);
    return in;
}

std::vector<std::vector<Element>> propagate(const NetworkInstance& g, const LinearCode& code) {
    const Incoming in = incoming(g, code);
    std::vector<std::vector<Element>> global(g.edge_count(), std::vector<Element>(code.nbar, 0));
    for (EdgeId e : topological_order(g).edges_in_order(g)) {
        auto& v = global[e];
        for (auto [s, c] : in.streams[e]) v.at(s - 1) ^= c;
        for (auto [f, c] : in.edges[e]) {
            for (std::size_t i = 0; i < code.nbar; ++i) v[i] ^= gf256::mul(c, global[f][i]);
        }
    }
    return global;
}

template <typename Draw>
LinearCode build_code(const NetworkInstance& g, const PathDecomposition& d, const std::vector<std::size_t>& stream_of,
                      std::size_t nbar, Draw&& draw) {
    LinearCode code;
    code.nbar = nbar;
    for (std::size_t p = 0; p < d.total_paths(); ++p) {
        const Path& path = d.path(p);
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i == 0) {
                auto key = std::make_pair(stream_of[p], path[0]);
                if (!code.source.count(key)) code.source[key] = draw();
            } else {
                auto key = std::make_pair(path[i - 1], path[i]);
                if (!code.local.count(key)) code.local[key] = draw();
            }
        }
    }
    code.global = propagate(g, code);
    for (std::size_t j = 0; j < d.sink_count(); ++j) {
        SinkCode sc;
        for (std::size_t k = 0; k < d.paths_to(j); ++k) {
            sc.terminal_edges.push_back(d.path({j, k}).back());
            sc.streams.push_back(stream_of[d.flat({j, k})]);
        }
        std::sort(sc.streams.begin(), sc.streams.end());
        code.sinks.push_back(std::move(sc));
    }
    return code;
}

}  // namespace

std::vector<std::vector<char>> symbolic_support(const NetworkInstance& g, const LinearCode& code) {
    const Incoming in = incoming(g, code);
    std::vector<std::vector<char>> sup(g.edge_count(), std::vector<char>(code.nbar, 0));
    for (EdgeId e : topological_order(g).edges_in_order(g)) {
        for (auto [s, c] : in.streams[e]) sup[e].at(s - 1) = 1;
        for (auto [f, c] : in.edges[e]) {
            for (std::size_t i = 0; i < code.nbar; ++i) sup[e][i] |= sup[f][i];
        }
    }
    return sup;
}

bool check_consistency(const NetworkInstance& g, const LinearCode& code) {
    if (code.global.size() != g.edge_count()) return false;
    return propagate(g, code) == code.global;
}

gf256::Matrix transfer_matrix(const LinearCode& code, std::size_t j) {
    if (j >= code.sinks.size()) throw IndexError("sink " + std::to_string(j + 1) + " out of range");
    const SinkCode& sc = code.sinks[j];
    std::vector<char> allowed(code.nbar + 1, 0);
    for (std::size_t s : sc.streams) allowed.at(s) = 1;
    gf256::Matrix m;
    for (EdgeId e : sc.terminal_edges) {
        const auto& v = code.global.at(e);
        for (std::size_t i = 0; i < code.nbar; ++i) {
            if (v[i] != 0 && !allowed[i + 1]) {
                throw SupportError("terminal edge " + std::to_string(e) + " of sink " + std::to_string(j + 1) +
                                   " carries stream " + std::to_string(i + 1) + " the sink does not hold");
            }
        }
        std::vector<Element> row;
        for (std::size_t s : sc.streams) row.push_back(v[s - 1]);
        m.push_back(std::move(row));
    }
    return m;
}

LinearCode synthesize_code(const NetworkInstance& g, const PathDecomposition& d, const StreamAssignment& a,
                           const SynthesisOptions& opts, SynthesisInfo* info) {
    if (a.stream_of_path.size() != d.total_paths()) throw ShapeError("assignment does not match decomposition");
    for (std::size_t s : a.stream_of_path) {
        if (s < 1 || s > a.nbar) throw ShapeError("assignment has a path without a valid stream");
    }
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> nonzero(1, 255);
    const std::size_t attempts = opts.mode == CoefficientMode::all_ones ? 1 : std::max<std::size_t>(1, opts.max_attempts);

    for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
        LinearCode code = opts.mode == CoefficientMode::all_ones
                              ? build_code(g, d, a.stream_of_path, a.nbar, [] { return Element{1}; })
                              : build_code(g, d, a.stream_of_path, a.nbar,
                                           [&] { return static_cast<Element>(nonzero(rng)); });
        if (info) info->attempts = attempt;

        const auto sup = symbolic_support(g, code);
        bool ok = true;
        for (EdgeId e = 0; e < g.edge_count() && ok; ++e) {
            for (std::size_t i = 0; i < a.nbar; ++i) {
                if ((code.global[e][i] != 0) != (sup[e][i] != 0)) {
                    ok = false;
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < code.sinks.size() && ok; ++j) ok = gf256::invertible(transfer_matrix(code, j));
        if (ok) return code;
    }
    throw SynthesisError("no decodable code after " + std::to_string(attempts) + " attempt(s)");
}

std::vector<Element> evaluate_edges(const NetworkInstance& g, const LinearCode& code, const std::vector<Element>& x) {
    if (x.size() != code.nbar) throw ShapeError("expected " + std::to_string(code.nbar) + " stream symbols");
    const Incoming in = incoming(g, code);
    std::vector<Element> y(g.edge_count(), 0);
    for (EdgeId e : topological_order(g).edges_in_order(g)) {
        Element v = 0;
        for (auto [s, c] : in.streams[e]) v ^= gf256::mul(c, x.at(s - 1));
        for (auto [f, c] : in.edges[e]) v ^= gf256::mul(c, y[f]);
        y[e] = v;
    }
    return y;
}

bool SimulationReport::all_exact() const {
    return std::all_of(sinks.begin(), sinks.end(), [](const SinkSimulation& s) { return s.exact == s.trials; });
}

SimulationReport simulate(const NetworkInstance& g, const LinearCode& code, std::size_t trials, std::uint64_t seed) {
    SimulationReport rep;
    rep.trials = trials;
    rep.sinks.resize(code.sinks.size());

    std::vector<std::optional<gf256::Matrix>> decoders;
    for (std::size_t j = 0; j < code.sinks.size(); ++j) {
        const gf256::Matrix m = transfer_matrix(code, j);
        if (gf256::invertible(m)) {
            decoders.emplace_back(gf256::inverse(m));
        } else {
            decoders.emplace_back(std::nullopt);
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> byte(0, 255);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<Element> x(code.nbar);
        for (auto& v : x) v = static_cast<Element>(byte(rng));
        const std::vector<Element> y = evaluate_edges(g, code, x);
        for (std::size_t j = 0; j < code.sinks.size(); ++j) {
            const SinkCode& sc = code.sinks[j];
            ++rep.sinks[j].trials;
            if (!decoders[j]) continue;
            std::vector<Element> received;
            for (EdgeId e : sc.terminal_edges) received.push_back(y[e]);
            const std::vector<Element> decoded = gf256::multiply(*decoders[j], received);
            bool exact = true;
            for (std::size_t i = 0; i < sc.streams.size(); ++i) exact = exact && decoded[i] == x[sc.streams[i] - 1];
            if (exact) ++rep.sinks[j].exact;
        }
    }
    return rep;
}

std::vector<std::vector<std::size_t>> simulate_mixing(const NetworkInstance& g, const PathDecomposition& d,
                                                      std::uint64_t seed, std::size_t trials) {
    const std::size_t total = d.total_paths();
    std::vector<std::size_t> own(total);
    for (std::size_t p = 0; p < total; ++p) own[p] = p + 1;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nonzero(1, 255);
    std::vector<std::set<std::size_t>> mixed(total);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const LinearCode code = build_code(g, d, own, total, [&] { return static_cast<Element>(nonzero(rng)); });
        for (std::size_t q = 0; q < total; ++q) {
            const auto& v = code.global[d.path(q).back()];
            for (std::size_t p = 0; p < total; ++p) {
                if (v[p] != 0 && d.id_of(p).sink != d.id_of(q).sink) mixed[p].insert(q);
            }
        }
    }
    std::vector<std::vector<std::size_t>> out(total);
    for (std::size_t p = 0; p < total; ++p) out[p].assign(mixed[p].begin(), mixed[p].end());
    return out;
}

namespace {

using ojson = nlohmann::ordered_json;

std::string hex_byte(Element b) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", b);
    return buf;
}

std::vector<Element> parse_hex(const std::string& s, std::size_t expected) {
    if (s.size() != 2 * expected) throw ValidationError("coding vector \"" + s + "\" has the wrong length");
    std::vector<Element> out;
    for (std::size_t i = 0; i < s.size(); i += 2) {
        unsigned v = 0;
        for (std::size_t k = i; k < i + 2; ++k) {
            const char c = s[k];
            unsigned digit;
            if (c >= '0' && c <= '9') digit = c - '0';
            else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
            else throw ValidationError("bad hex digit in \"" + s + "\"");
            v = v * 16 + digit;
        }
        out.push_back(static_cast<Element>(v));
    }
    return out;
}

}  // namespace

std::string code_to_json(const NetworkInstance& g, const LinearCode& code) {
    ojson j;
    j["schema"] = 1;
    j["field"] = "GF256/0x11B";
    j["nbar"] = code.nbar;
    ojson edges = ojson::object();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::string hex;
        for (Element b : code.global.at(e)) hex += hex_byte(b);
        edges[edge_label(g, e)] = hex;
    }
    j["edges"] = edges;
    ojson local = ojson::array();
    for (const auto& [key, c] : code.local) local.push_back({edge_label(g, key.first), edge_label(g, key.second), hex_byte(c)});
    j["local"] = local;
    ojson source = ojson::array();
    for (const auto& [key, c] : code.source) source.push_back({key.first, edge_label(g, key.second), hex_byte(c)});
    j["source"] = source;
    ojson sinks = ojson::object();
    for (std::size_t s = 0; s < code.sinks.size(); ++s) {
        ojson sj;
        sj["streams"] = code.sinks[s].streams;
        ojson te = ojson::array();
        for (EdgeId e : code.sinks[s].terminal_edges) te.push_back(edge_label(g, e));
        sj["edges"] = te;
        sinks[g.name(g.sink(s))] = sj;
    }
    j["sinks"] = sinks;
    return j.dump(2) + "\n";
}

LinearCode code_from_json(const NetworkInstance& g, std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw ValidationError(std::string("code file is not valid JSON: ") + e.what());
    }
    std::unordered_map<std::string, EdgeId> by_label;
    for (EdgeId e = 0; e < g.edge_count(); ++e) by_label[edge_label(g, e)] = e;
    auto edge_of = [&](const ojson& v) {
        if (!v.is_string()) throw ValidationError("edge label must be a string");
        auto it = by_label.find(v.get<std::string>());
        if (it == by_label.end()) throw ValidationError("unknown edge \"" + v.get<std::string>() + "\"");
        return it->second;
    };
    auto byte_of = [](const ojson& v) {
        if (!v.is_string()) throw ValidationError("coefficient must be a hex string");
        return parse_hex(v.get<std::string>(), 1)[0];
    };

    try {
        if (j.value("field", std::string()) != "GF256/0x11B") throw ValidationError("unsupported field");
        LinearCode code;
        code.nbar = j.at("nbar").get<std::size_t>();
        code.global.assign(g.edge_count(), std::vector<Element>(code.nbar, 0));
        for (auto it = j.at("edges").begin(); it != j.at("edges").end(); ++it) {
            code.global[edge_of(it.key())] = parse_hex(it.value().get<std::string>(), code.nbar);
        }
        for (const auto& row : j.value("local", ojson::array())) {
            code.local[{edge_of(row.at(0)), edge_of(row.at(1))}] = byte_of(row.at(2));
        }
        for (const auto& row : j.value("source", ojson::array())) {
            const auto s = row.at(0).get<std::size_t>();
            if (s < 1 || s > code.nbar) throw ValidationError("source stream out of range");
            code.source[{s, edge_of(row.at(1))}] = byte_of(row.at(2));
        }
        const ojson& sinks = j.at("sinks");
        for (std::size_t s = 0; s < g.sink_count(); ++s) {
            const ojson& sj = sinks.at(g.name(g.sink(s)));
            SinkCode sc;
            for (const auto& e : sj.at("edges")) sc.terminal_edges.push_back(edge_of(e));
            sc.streams = sj.at("streams").get<std::vector<std::size_t>>();
            for (std::size_t st : sc.streams) {
                if (st < 1 || st > code.nbar) throw ValidationError("sink stream out of range");
            }
            if (sc.streams.size() != sc.terminal_edges.size()) throw ValidationError("sink entry is not square");
            code.sinks.push_back(std::move(sc));
        }
        return code;
    } catch (const ojson::exception& e) {
        throw ValidationError(std::string("malformed code file: ") + e.what());
    }
}

}  // namespace nudcode
