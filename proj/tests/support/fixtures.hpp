#pragma once

#include <string>

#include "nudcode/corpus.hpp"
#include "nudcode/flows.hpp"
#include "nudcode/netgraph.hpp"

namespace testfx {

inline nudcode::NetworkInstance network(const std::string& name) {
    return nudcode::parse_network(nudcode::fixture(name).network);
}

// Override paths when the fixture ships them, else the canonical decomposition.
inline nudcode::PathDecomposition paths(const nudcode::NetworkInstance& g, const std::string& name) {
    const auto& f = nudcode::fixture(name);
    return f.paths ? nudcode::parse_paths(g, *f.paths) : nudcode::decompose(g);
}

}  // namespace testfx
