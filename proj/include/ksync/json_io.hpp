#pragma once

#include <string>

#include <json.hpp>

#include "ksync/bounds.hpp"
#include "ksync/coupling_opt.hpp"
#include "ksync/model.hpp"

namespace ksync {

/// Graph file schema: {"n": int, "edges": [[i,j], ...]} with 1-indexed
/// vertices. Edge order is irrelevant; loading canonicalizes it.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// System file schema:
///   {"graph": <graph>, "omega": [...],
///    "coupling": {"scalar": K} | {"edges": [[i,j,K_ij], ...]}}
KuramotoSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const KuramotoSystem& sys);

/// Initial-state schema: {"phases": [...]} (radians).
std::vector<double> phases_from_json(const nlohmann::json& j);

nlohmann::json bound_report_to_json(const BoundReport& r);

/// Per-edge couplings, objective, and the binding constraints with their
/// (pair, delta) provenance.
nlohmann::json lp_solution_to_json(const CouplingLP& lp, const LPSolution& sol);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace ksync
