#pragma once

#include <variant>
#include <vector>

#include "pkn/config.hpp"
#include "pkn/fuzzy.hpp"
#include "pkn/graph.hpp"

namespace pkn {

/// Deduplicated, insertion-ordered binding maps; every map binds every
/// variable of the evaluated conditions.
struct BindingSet {
    std::vector<Binding> bindings;

    bool operator==(const BindingSet&) const = default;
};

/// Left-to-right join over asserted facts. Comparison operators
/// (greater-than / less-than) evaluate numerically against stored `is`
/// facts; fuzzy terms accept a binding when the (modified) membership of the
/// bound numeric value reaches config.alpha. Throws UnboundComparison.
BindingSet evaluate_conditions(const KnowledgeGraph& graph,
                               const std::vector<Condition>& conditions,
                               const EngineConfig& config);

struct QuantifierResult {
    bool holds = false;
    std::size_t where_count = 0;
    std::size_t from_count = 0;
    double ratio = 0.0;
};

using QueryResult = std::variant<std::vector<Term>,  // which: head bindings
                                 std::size_t,        // count
                                 QuantifierResult>;  // few / many / most

QueryResult run_query(const KnowledgeGraph& graph, const Query& q,
                      const EngineConfig& config);

}  // namespace pkn
