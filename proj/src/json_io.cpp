#include "nudcode/json_io.hpp"

#include <set>

#include "nudcode/errors.hpp"

namespace nudcode {

namespace {

const char* berge_name(BergeStatus s) {
    switch (s) {
        case BergeStatus::berge: return "berge";
        case BergeStatus::not_berge: return "not_berge";
        case BergeStatus::unknown: return "unknown";
    }
    return "unknown";
}

std::string path_text(const NetworkInstance& g, const Path& p) {
    std::string s = g.name(g.edge(p.front()).tail);
    for (EdgeId e : p) s += " " + g.name(g.edge(e).head);
    return s;
}

}  // namespace

ojson contamination_json(const PathDecomposition& d, const ContaminationReport& r) {
    ojson j;
    ojson sets = ojson::object();
    for (std::size_t p = 0; p < r.sets.size(); ++p) {
        ojson list = ojson::array();
        for (std::size_t q : r.sets[p]) list.push_back(path_name(d.id_of(q)));
        sets[path_name(d.id_of(p))] = list;
    }
    j["contamination"] = sets;
    j["m"] = r.m;
    return j;
}

ojson witness_json(const ColoringGraph& cg, const BergeVerdict& v) {
    ojson j;
    j["verdict"] = berge_name(v.status);
    if (v.witness) {
        ojson w;
        w["kind"] = v.witness->kind == CycleKind::hole ? "hole" : "antihole";
        w["length"] = v.witness->cycle.size();
        ojson cyc = ojson::array();
        for (std::size_t x : v.witness->cycle) cyc.push_back(cg.vertex_name(x));
        w["cycle"] = cyc;
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

ojson coloring_json(const ColoringGraph& cg, const Coloring& c) {
    ojson j;
    j["schema"] = 1;
    j["budget"] = c.budget;
    ojson colors = ojson::object();
    for (std::size_t v = 0; v < c.color_of.size(); ++v) colors[cg.vertex_name(v)] = c.color_of[v];
    j["colors"] = colors;
    return j;
}

ojson assignment_json(const PathDecomposition& d, const StreamAssignment& a) {
    ojson j;
    j["schema"] = 1;
    j["nbar"] = a.nbar;
    ojson f = ojson::object();
    for (std::size_t p = 0; p < a.stream_of_path.size(); ++p) f[path_name(d.id_of(p))] = a.stream_of_path[p];
    j["assignment"] = f;
    j["rates"] = achieved_rates(d, a);
    return j;
}

ojson violations_json(const PathDecomposition& d, const VerifyResult& v) {
    ojson list = ojson::array();
    for (const Violation& x : v.violations) {
        ojson o;
        switch (x.kind) {
            case ViolationKind::unassigned: o["kind"] = "unassigned"; break;
            case ViolationKind::out_of_range: o["kind"] = "out_of_range"; break;
            case ViolationKind::duplicate_stream: o["kind"] = "duplicate_stream"; break;
            case ViolationKind::contaminant: o["kind"] = "contaminant"; break;
        }
        o["sink"] = x.sink + 1;
        o["stream"] = x.stream;
        o["path"] = path_name(d.id_of(x.path));
        o["message"] = x.message;
        list.push_back(o);
    }
    return list;
}

ojson solve_report_json(const NetworkInstance& g, const SolveReport& rep) {
    const PathDecomposition& d = rep.decomposition;
    ojson j;
    j["schema"] = 1;
    j["outcome"] = outcome_name(rep.outcome);
    j["n"] = d.n();
    ojson nj = ojson::array();
    for (std::size_t s = 0; s < d.sink_count(); ++s) nj.push_back(d.paths_to(s));
    j["n_j"] = nj;
    if (rep.assignment) {
        const StreamAssignment& a = *rep.assignment;
        j["nbar"] = a.nbar;
        j["rates"] = a.rates;
        std::set<std::size_t> used(a.stream_of_path.begin(), a.stream_of_path.end());
        j["streams"] = used.size();
        ojson f = ojson::object();
        for (std::size_t p = 0; p < a.stream_of_path.size(); ++p) f[path_name(d.id_of(p))] = a.stream_of_path[p];
        j["assignment"] = f;
    } else {
        j["nbar"] = rep.attempts.empty() ? 0 : rep.attempts.back().nbar;
        j["rates"] = nullptr;
        j["assignment"] = nullptr;
    }
    ojson paths = ojson::object();
    for (std::size_t p = 0; p < d.total_paths(); ++p) paths[path_name(d.id_of(p))] = path_text(g, d.path(p));
    j["paths"] = paths;
    ojson c = contamination_json(d, rep.contamination);
    j["contamination"] = c["contamination"];
    j["m"] = c["m"];

    ojson attempts = ojson::array();
    for (const Attempt& at : rep.attempts) {
        ojson a;
        a["nbar"] = at.nbar;
        a["outcome"] = outcome_name(at.outcome);
        a["vertices"] = at.vertices;
        a["edges"] = at.edges;
        a["omega"] = at.omega;
        if (at.berge_checked) {
            ojson b;
            b["verdict"] = berge_name(at.berge.status);
            if (at.berge.witness) {
                ojson w;
                w["kind"] = at.berge.witness->kind == CycleKind::hole ? "hole" : "antihole";
                w["length"] = at.witness_names.size();
                w["cycle"] = at.witness_names;
                b["witness"] = w;
            } else {
                b["witness"] = nullptr;
            }
            a["berge"] = b;
        } else {
            a["berge"] = nullptr;
        }
        a["two_coloring"] = at.used_two_coloring;
        a["search_nodes"] = at.coloring.nodes;
        a["note"] = at.note;
        attempts.push_back(a);
    }
    j["attempts"] = attempts;
    if (rep.coloring && rep.graph) j["coloring"] = coloring_json(*rep.graph, *rep.coloring)["colors"];
    j["diagnostic"] = rep.diagnostic;
    return j;
}

StreamAssignment assignment_from_json(const PathDecomposition& d, std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw ValidationError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("expected a JSON object");

    // "j.k" -> flat index
    auto flat_of = [&](const std::string& name) -> std::size_t {
        const auto dot = name.find('.');
        try {
            if (dot == std::string::npos) throw std::invalid_argument(name);
            const std::size_t sj = std::stoul(name.substr(0, dot));
            const std::size_t k = std::stoul(name.substr(dot + 1));
            if (sj < 1 || sj > d.sink_count() || k < 1 || k > d.paths_to(sj - 1)) throw std::out_of_range(name);
            return d.flat({sj - 1, k - 1});
        } catch (const std::logic_error&) {
            throw ValidationError("unknown path '" + name + "'");
        }
    };

    StreamAssignment a;
    a.stream_of_path.assign(d.total_paths(), 0);
    try {
        if (j.contains("assignment")) {
            a.nbar = j.at("nbar").get<std::size_t>();
            for (auto it = j["assignment"].begin(); it != j["assignment"].end(); ++it) {
                a.stream_of_path[flat_of(it.key())] = it.value().get<std::size_t>();
            }
        } else if (j.contains("colors")) {
            a.nbar = j.at("budget").get<std::size_t>();
            for (auto it = j["colors"].begin(); it != j["colors"].end(); ++it) {
                const std::string& name = it.key();
                if (name.empty()) throw ValidationError("empty vertex name");
                if (name[0] == 'w') continue;
                if (name[0] != 'v') throw ValidationError("unknown vertex '" + name + "'");
                a.stream_of_path[flat_of(name.substr(1))] = it.value().get<std::size_t>();
            }
        } else {
            throw ValidationError("expected an \"assignment\" or \"colors\" document");
        }
    } catch (const ojson::exception& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
    a.rates = achieved_rates(d, a);
    return a;
}

}  // namespace nudcode
