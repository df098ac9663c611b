#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nudcode/flows.hpp"
#include "nudcode/gf256.hpp"
#include "nudcode/netgraph.hpp"
#include "nudcode/solver.hpp"

namespace nudcode {

using gf256::Element;

struct SinkCode {
    std::vector<EdgeId> terminal_edges;  // last edge of each path, in path order
    std::vector<std::size_t> streams;    // sorted, 1-based

    friend bool operator==(const SinkCode&, const SinkCode&) = default;
};

// Scalar linear code. Streams are 1-based; global[e][i] is the coefficient
// of stream i+1 on edge e.
struct LinearCode {
    std::size_t nbar = 0;
    std::vector<std::vector<Element>> global;
    // (in-edge, out-edge) -> coefficient, for path-consecutive pairs.
    std::map<std::pair<EdgeId, EdgeId>, Element> local;
    // (stream, source out-edge) -> coefficient.
    std::map<std::pair<std::size_t, EdgeId>, Element> source;
    std::vector<SinkCode> sinks;

    friend bool operator==(const LinearCode&, const LinearCode&) = default;
};

enum class CoefficientMode { random, all_ones };

struct SynthesisOptions {
    std::uint64_t seed = 0;
    CoefficientMode mode = CoefficientMode::random;
    std::size_t max_attempts = 64;
};

struct SynthesisInfo {
    std::size_t attempts = 0;
};

// Coefficients on every path-consecutive edge pair plus one per (source edge,
// stream), global vectors by topological propagation. Retries until each
// sink's transfer matrix is invertible and no support cancels; SynthesisError
// after max_attempts. all_ones makes a single attempt.
LinearCode synthesize_code(const NetworkInstance& g, const PathDecomposition& d, const StreamAssignment& a,
                           const SynthesisOptions& opts = {}, SynthesisInfo* info = nullptr);

// Recomputes the global vectors from the local coefficients; true iff they
// match bit for bit.
bool check_consistency(const NetworkInstance& g, const LinearCode& code);

// Streams that can reach edge e along the code's coefficient structure,
// ignoring cancellation.
std::vector<std::vector<char>> symbolic_support(const NetworkInstance& g, const LinearCode& code);

// Rows: terminal edges of sink j; columns: the sink's streams. SupportError
// when a terminal vector is nonzero outside those columns.
gf256::Matrix transfer_matrix(const LinearCode& code, std::size_t j);

// Edge symbols for given stream symbols (x[i] for stream i+1), evaluated
// through the local coefficients.
std::vector<Element> evaluate_edges(const NetworkInstance& g, const LinearCode& code, const std::vector<Element>& x);

struct SinkSimulation {
    std::size_t exact = 0;
    std::size_t trials = 0;
};

struct SimulationReport {
    std::size_t trials = 0;
    std::vector<SinkSimulation> sinks;
    bool all_exact() const;
};

SimulationReport simulate(const NetworkInstance& g, const LinearCode& code, std::size_t trials, std::uint64_t seed);

// Contamination oracle: give every path its own stream, draw random codes and
// report, for each path p, the paths to other sinks whose terminal edge
// picks up p's stream in at least one trial. Sorted flat indices.
std::vector<std::vector<std::size_t>> simulate_mixing(const NetworkInstance& g, const PathDecomposition& d,
                                                      std::uint64_t seed, std::size_t trials = 4);

std::string code_to_json(const NetworkInstance& g, const LinearCode& code);
// ValidationError on malformed input or edges unknown to g.
LinearCode code_from_json(const NetworkInstance& g, std::string_view text);

}  // namespace nudcode
