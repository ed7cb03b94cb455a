#include "ksync/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace ksync {

using nlohmann::json;

Graph graph_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
    return Graph(n, std::move(edges));
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
    return {{"n", g.n()}, {"edges", edges}};
}

KuramotoSystem system_from_json(const json& j) {
    Graph g = graph_from_json(j.at("graph"));
    auto omega = j.at("omega").get<std::vector<double>>();
    const auto& coupling = j.at("coupling");
    if (coupling.contains("scalar"))
        return KuramotoSystem(std::move(g), std::move(omega),
                              coupling.at("scalar").get<double>());
    if (coupling.contains("edges")) {
        std::vector<std::tuple<int, int, double>> k_edges;
        for (const auto& e : coupling.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw std::invalid_argument(
                    "system json: coupling edge must be [i, j, K]");
            k_edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1,
                                 e[2].get<double>());
        }
        return KuramotoSystem(std::move(g), std::move(omega), k_edges);
    }
    throw std::invalid_argument(
        "system json: coupling must contain \"scalar\" or \"edges\"");
}

json system_to_json(const KuramotoSystem& sys) {
    json edges = json::array();
    for (const auto& [i, j] : sys.graph().edges())
        edges.push_back({i + 1, j + 1, sys.coupling(i, j)});
    return {{"graph", graph_to_json(sys.graph())},
            {"omega", sys.omega()},
            {"coupling", {{"edges", edges}}}};
}

std::vector<double> phases_from_json(const json& j) {
    return j.at("phases").get<std::vector<double>>();
}

json bound_report_to_json(const BoundReport& r) {
    json out;
    out["condition"] = condition_name(r.condition);
    if (std::isfinite(r.bound))
        out["bound"] = r.bound;
    else
        out["bound"] = nullptr;
    out["feasible"] = r.feasible;
    out["phase_constraints_ok"] = r.phase_constraints_ok;
    out["details"] = r.details;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

json lp_solution_to_json(const CouplingLP& lp, const LPSolution& sol) {
    json out;
    switch (sol.status) {
        case LPSolution::Status::optimal: out["status"] = "optimal"; break;
        case LPSolution::Status::infeasible: out["status"] = "infeasible"; break;
        case LPSolution::Status::unbounded: out["status"] = "unbounded"; break;
    }
    out["d"] = lp.d;
    out["constraints"] = lp.constraints.size();
    out["constraints_generated"] = lp.origins.size();
    if (sol.status != LPSolution::Status::optimal) return out;

    out["objective"] = sol.objective;
    json couplings = json::array();
    for (std::size_t e = 0; e < lp.variables.size(); ++e)
        couplings.push_back({lp.variables[e].first + 1,
                             lp.variables[e].second + 1, sol.couplings[e]});
    out["couplings"] = couplings;

    // Binding constraints (residual below 1e-8), annotated with provenance.
    json binding = json::array();
    for (std::size_t row = 0; row < lp.constraints.size(); ++row) {
        const auto& cons = lp.constraints[row];
        double lhs = 0.0;
        for (std::size_t e = 0; e < cons.coeffs.size(); ++e)
            lhs += cons.coeffs[e] * sol.couplings[e];
        if (lhs - cons.rhs > 1e-8) continue;
        json origins = json::array();
        for (const auto& o : lp.origins) {
            if (o.constraint_index != static_cast<int>(row)) continue;
            origins.push_back({{"pair", {o.k + 1, o.l + 1}},
                               {"delta_bits", o.delta}});
        }
        binding.push_back({{"row", row},
                           {"residual", lhs - cons.rhs},
                           {"rhs", cons.rhs},
                           {"origins", origins}});
    }
    out["binding_constraints"] = binding;
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace ksync
