#include "nudcode/corpus.hpp"

#include <random>
#include <stdexcept>

#include "nudcode/errors.hpp"

namespace nudcode {

namespace {

ColoringInstance numbered(std::size_t n, std::size_t colors) {
    ColoringInstance c;
    for (std::size_t i = 1; i <= n; ++i) c.vertices.push_back("v" + std::to_string(i));
    c.colors = colors;
    return c;
}

const char* const butterfly = R"(# two sinks, one coding node (w)
source s
sink t1
sink t2
edge s u
edge s v
edge u w
edge v w
edge u t1
edge w x
edge x t1
edge x t2
edge v t2
)";

const char* const extended_butterfly = R"(# butterfly plus a private third path to t2
source s
sink t1
sink t2
edge s u
edge s v
edge u w
edge v w
edge u t1
edge w x
edge x t1
edge x t2
edge v t2
edge s y
edge y z
edge z t2
)";

// t1 has one path; both t2 paths run across it.
const char* const counterexample = R"(source s
sink t1
sink t2
edge s x1
edge x1 x2
edge x2 x3
edge x3 x4
edge x4 t1
edge s y1
edge y1 x1
edge x2 y2
edge y2 t2
edge s z1
edge z1 x3
edge x4 z2
edge z2 t2
)";

// Four sinks; p11/p31 share a1->a2, p31/p22 share b1->b2 further down p31,
// p12/p21 share c1->c2. t4 is reached by three private paths.
const char* const non_berge = R"(source s
sink t1
sink t2
sink t3
sink t4
edge s x11
edge s x12
edge s x21
edge s x22
edge s x31
edge s x32
edge s x41
edge s x42
edge s x43
edge x11 a1
edge x31 a1
edge a1 a2
edge a2 t1
edge a2 b1
edge x22 b1
edge b1 b2
edge b2 t3
edge b2 t2
edge x12 c1
edge x21 c1
edge c1 c2
edge c2 t1
edge c2 t2
edge x32 t3
edge x41 t4
edge x42 t4
edge x43 t4
)";

const char* const non_berge_paths = R"(path t1 s x11 a1 a2 t1
path t1 s x12 c1 c2 t1
path t2 s x21 c1 c2 t2
path t2 s x22 b1 b2 t2
path t3 s x31 a1 a2 b1 b2 t3
path t3 s x32 t3
path t4 s x41 t4
path t4 s x42 t4
path t4 s x43 t4
)";

}  // namespace

ColoringInstance cycle_instance(std::size_t length, std::size_t colors) {
    if (length < 3) throw ValidationError("cycle length must be at least 3");
    ColoringInstance c = numbered(length, colors);
    for (std::size_t i = 0; i < length; ++i) c.edges.emplace_back(i, (i + 1) % length);
    return c;
}

ColoringInstance complete_instance(std::size_t k, std::size_t colors) {
    ColoringInstance c = numbered(k, colors);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) c.edges.emplace_back(a, b);
    return c;
}

ColoringInstance random_gnp_instance(std::size_t vertices, double p, std::size_t colors, std::uint64_t seed) {
    if (p < 0 || p > 1) throw ValidationError("edge probability must lie in [0, 1]");
    ColoringInstance c = numbered(vertices, colors);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (std::size_t a = 0; a < vertices; ++a)
        for (std::size_t b = a + 1; b < vertices; ++b)
            if (coin(rng)) c.edges.emplace_back(a, b);
    return c;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"butterfly", butterfly, std::nullopt},
        {"extended_butterfly", extended_butterfly, std::nullopt},
        {"counterexample", counterexample, std::nullopt},
        {"non_berge", non_berge, std::string(non_berge_paths)},
    };
    return all;
}

const Fixture& fixture(std::string_view name) {
    for (const auto& f : fixtures()) {
        if (f.name == name) return f;
    }
    throw std::out_of_range("no fixture named " + std::string(name));
}

std::vector<CorpusFile> generate_corpus(std::string_view kind, const CorpusParams& params, std::uint64_t seed) {
    std::vector<CorpusFile> out;
    const std::string colors = "_n" + std::to_string(params.colors);
    if (kind == "cycle") {
        out.push_back({"c" + std::to_string(params.size) + colors + ".col",
                       serialize_coloring(cycle_instance(params.size, params.colors))});
    } else if (kind == "complete") {
        out.push_back({"k" + std::to_string(params.size) + colors + ".col",
                       serialize_coloring(complete_instance(params.size, params.colors))});
    } else if (kind == "random-gnp") {
        std::mt19937_64 seeds(seed);
        for (std::size_t i = 0; i < params.count; ++i) {
            const std::uint64_t s = params.count == 1 ? seed : seeds();
            out.push_back({"gnp" + std::to_string(params.size) + "_" + std::to_string(i + 1) + colors + ".col",
                           serialize_coloring(random_gnp_instance(params.size, params.probability, params.colors, s))});
        }
    } else if (kind == "paper-fixtures") {
        for (const auto& f : fixtures()) {
            out.push_back({f.name + ".net", f.network});
            if (f.paths) out.push_back({f.name + ".paths", *f.paths});
        }
    } else {
        throw ValidationError("unknown corpus kind '" + std::string(kind) + "'");
    }
    return out;
}

}  // namespace nudcode
