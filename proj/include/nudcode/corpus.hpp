#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nudcode/reduction.hpp"

namespace nudcode {

ColoringInstance cycle_instance(std::size_t length, std::size_t colors);
ColoringInstance complete_instance(std::size_t k, std::size_t colors);
// G(n, p) on vertices v1..vn.
ColoringInstance random_gnp_instance(std::size_t vertices, double p, std::size_t colors, std::uint64_t seed);

struct Fixture {
    std::string name;
    std::string network;              // network file text
    std::optional<std::string> paths;  // decomposition override, when needed
};

// butterfly, extended_butterfly, counterexample, non_berge.
const std::vector<Fixture>& fixtures();
// std::out_of_range for unknown names.
const Fixture& fixture(std::string_view name);

struct CorpusParams {
    std::size_t size = 5;       // cycle length, clique size, vertex count
    double probability = 0.3;   // random-gnp
    std::size_t colors = 3;
    std::size_t count = 1;      // random-gnp instances
};

struct CorpusFile {
    std::string filename;
    std::string contents;
};

// kind: cycle, complete, random-gnp, paper-fixtures. ValidationError otherwise.
std::vector<CorpusFile> generate_corpus(std::string_view kind, const CorpusParams& params, std::uint64_t seed);

}  // namespace nudcode
