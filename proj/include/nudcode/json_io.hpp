#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nudcode/colorgraph.hpp"
#include "nudcode/coloring.hpp"
#include "nudcode/contamination.hpp"
#include "nudcode/flows.hpp"
#include "nudcode/netgraph.hpp"
#include "nudcode/solver.hpp"

namespace nudcode {

using ojson = nlohmann::ordered_json;

ojson contamination_json(const PathDecomposition& d, const ContaminationReport& r);
ojson witness_json(const ColoringGraph& cg, const BergeVerdict& v);
// {"budget": n, "colors": {"v1.1": 1, ...}}
ojson coloring_json(const ColoringGraph& cg, const Coloring& c);
// {"nbar": n, "assignment": {"1.1": 1, ...}, "rates": [...]}
ojson assignment_json(const PathDecomposition& d, const StreamAssignment& a);
ojson violations_json(const PathDecomposition& d, const VerifyResult& v);
ojson solve_report_json(const NetworkInstance& g, const SolveReport& rep);

// Reads an assignment document, or a coloring document whose regular
// vertices v<j>.<k> give f(p_jk). ValidationError on anything else.
StreamAssignment assignment_from_json(const PathDecomposition& d, std::string_view text);

}  // namespace nudcode
