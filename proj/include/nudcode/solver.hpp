#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nudcode/colorgraph.hpp"
#include "nudcode/coloring.hpp"
#include "nudcode/contamination.hpp"
#include "nudcode/flows.hpp"
#include "nudcode/netgraph.hpp"

namespace nudcode {

// f: flat path index -> stream in 1..nbar (0 = unassigned).
struct StreamAssignment {
    std::vector<std::size_t> stream_of_path;
    std::size_t nbar = 0;
    std::vector<std::size_t> rates;  // per sink
};

// rates[j] = number of assigned paths to sink j.
std::vector<std::size_t> achieved_rates(const PathDecomposition& d, const StreamAssignment& a);

enum class ViolationKind { unassigned, out_of_range, duplicate_stream, contaminant };

struct Violation {
    ViolationKind kind = ViolationKind::contaminant;
    std::size_t sink = 0;    // 0-based
    std::size_t stream = 0;  // offending stream (0 when unassigned)
    std::size_t path = 0;    // flat index: the contaminant, or the path at fault
    std::string message;
};

struct VerifyResult {
    bool ok = true;
    std::vector<Violation> violations;
    std::size_t checks = 0;  // (sink, contaminant) pairs examined
};

// Saturation plus the decodability rule: for every sink j and every path q
// contaminating a path to j, f(q) is one of the streams assigned to j.
// Lists every violation. ShapeError when `a` does not fit `d`.
VerifyResult verify_assignment(const PathDecomposition& d, const ContaminationReport& r, const StreamAssignment& a);

struct BruteForceCaps {
    std::size_t max_paths = 10;
    std::size_t max_nbar = 4;
};

// Exhaustive search over f with per-sink distinctness and a sound
// contaminant-count prune. CapError outside the caps.
std::optional<StreamAssignment> brute_force_assign(const PathDecomposition& d, const ContaminationReport& r,
                                                   std::size_t nbar, const BruteForceCaps& caps = {});

// Reads f(p_jk) off the color of v_jk.
StreamAssignment assignment_from_coloring(const PathDecomposition& d, const ColoringGraph& cg, const Coloring& c);

enum class Outcome { solution, infeasible, unknown };
const char* outcome_name(Outcome o);

struct SolveOptions {
    std::optional<std::size_t> nbar;  // default n
    bool auto_nbar = false;            // try n .. n + auto_ceiling
    std::size_t auto_ceiling = 3;
    std::uint64_t seed = 0;
    double timeout_seconds = 30;  // <= 0 means unlimited
    bool check_berge = true;
    double berge_timeout_seconds = 5;
    std::optional<PathDecomposition> paths;  // override for decompose()
};

struct Attempt {
    std::size_t nbar = 0;
    Outcome outcome = Outcome::unknown;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t omega = 0;
    BergeVerdict berge;
    bool berge_checked = false;
    std::vector<std::string> witness_names;  // berge.witness in this attempt's vertex names
    ColoringStats coloring;
    bool used_two_coloring = false;
    std::string note;
};

struct SolveReport {
    Outcome outcome = Outcome::unknown;
    std::optional<StreamAssignment> assignment;
    std::optional<Coloring> coloring;
    std::optional<ColoringGraph> graph;  // from the deciding attempt
    PathDecomposition decomposition;
    ContaminationReport contamination;
    std::vector<Attempt> attempts;
    std::string diagnostic;
    double seconds = 0;
};

SolveReport solve(const NetworkInstance& g, const SolveOptions& opts = {});

}  // namespace nudcode
