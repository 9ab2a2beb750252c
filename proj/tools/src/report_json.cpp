#include "mkc_cli/report_json.hpp"

namespace mkc::cli {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& x) {
    return x ? json(*x) : json(nullptr);
}

}  // namespace

json to_json(const VertexPartition& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return blocks;
}

json to_json(const CharaxVerdict& v) {
    json violations = json::array();
    for (const auto& x : v.violations) {
        violations.push_back({{"vertex", x.vertex}, {"condition", x.condition}, {"lhs", x.lhs}, {"rhs", x.rhs}});
    }
    return {{"is_eigenvector", v.is_eigenvector},
            {"eigenvalue", optional_json(v.eigenvalue)},
            {"violations", violations}};
}

json to_json(const BoundReport& r) {
    return {{"kind", std::string(to_string(r.kind))},
            {"k", r.k},
            {"bound", r.bound},
            {"integer_bound", optional_json(r.integer_bound)},
            {"extreme_eigenvalue", r.extreme_eigenvalue},
            {"extreme_multiplicity", r.extreme_multiplicity},
            {"extreme_eigenvector", r.extreme_eigenvector}};
}

json to_json(const BoundComparison& c) {
    json minimal = json::array();
    for (auto k : c.minimal) minimal.push_back(std::string(to_string(k)));
    return {{"bo1", to_json(c.bo1)}, {"bo2", to_json(c.bo2)}, {"bo3", to_json(c.bo3)}, {"minimal", minimal}};
}

json to_json(const CutValue& c) {
    return {{"value", c.value}, {"assignment", c.assignment}, {"partition", to_json(c.partition)}};
}

json to_json(const TightnessCertificate& c) {
    return {{"certified", c.certified},
            {"reason", c.reason},
            {"partition", to_json(c.partition)},
            {"cut", c.cut},
            {"bound", to_json(c.bound)},
            {"svector_verdict", to_json(c.svector_verdict)},
            {"svector_residuals", c.svector_residuals}};
}

json to_json(const WeylReport& r) {
    return {{"inequality", r.inequality == WeylReport::Inequality::UpperSum ? "upper" : "lower"},
            {"i", r.i},
            {"j", r.j},
            {"sum_index", r.sum_index},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"holds", r.holds},
            {"equality_candidate", r.equality_candidate},
            {"probe_is_common_eigenvector", optional_json(r.probe_is_common_eigenvector)}};
}

json to_json(const SVectorStructureReport& r) {
    return {{"applicable", r.applicable},
            {"mu", optional_json(r.mu)},
            {"equal_block_sizes", r.equal_block_sizes},
            {"cross_regular", r.cross_regular},
            {"cross_regular_degree", optional_json(r.cross_regular_degree)},
            {"uniform_cross_degrees", r.uniform_cross_degrees}};
}

}  // namespace mkc::cli
