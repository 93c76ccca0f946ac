#include "pkn/query.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pkn/errors.hpp"
#include "pkn/serializer.hpp"

namespace pkn {

namespace {

// internal variable name for numeric lookups; cannot clash with user
// variables because identifiers never contain '\x01'
const std::string kValueVar = "\x01v";

std::string binding_key(const Binding& b) {
    std::string key;
    for (const auto& [name, term] : b) {
        key += name;
        key += '=';
        key += serialize(term);
        key += ';';
    }
    return key;
}

void push_unique(BindingSet& set, std::set<std::string>& seen, Binding b) {
    std::string key = binding_key(b);
    if (seen.insert(std::move(key)).second) {
        set.bindings.push_back(std::move(b));
    }
}

Binding merged(const Binding& base, const Binding& extension) {
    Binding out = base;
    for (const auto& [name, term] : extension) out.emplace(name, term);
    return out;
}

/// Numeric values of `descriptor of argument is <number>` facts, with the
/// bindings that produced them.
std::vector<std::pair<double, Binding>> numeric_values(
    const KnowledgeGraph& graph, const Term& descriptor, const Term& argument) {
    PropertyStatement pattern;
    pattern.descriptor = descriptor;
    pattern.argument = argument;
    pattern.op = "is";
    pattern.referent.push_back(Variable(kValueVar));
    std::vector<std::pair<double, Binding>> out;
    for (auto& m : graph.match_properties(pattern)) {
        auto it = m.binding.find(kValueVar);
        const auto* num = std::get_if<Number>(&it->second);
        if (!num) continue;
        double v = num->value;
        m.binding.erase(it);
        out.emplace_back(v, std::move(m.binding));
    }
    return out;
}

bool is_comparison(const std::string& op) {
    return op == "greater-than" || op == "less-than";
}

void evaluate_one(const KnowledgeGraph& graph, const Condition& raw,
                  const Binding& base, const EngineConfig& config,
                  BindingSet& out, std::set<std::string>& seen) {
    Condition c = substitute(raw, base);

    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        if (is_comparison(p->op) && p->referent.size() == 1) {
            const Term& ref = p->referent.front();
            if (is_variable(ref)) {
                throw UnboundComparison("comparison against unbound ?" +
                                        std::get<Variable>(ref).name);
            }
            if (const auto* bound = std::get_if<Number>(&ref)) {
                if (is_variable(p->descriptor)) {
                    throw UnboundComparison(
                        "comparison with variable descriptor");
                }
                for (auto& [v, ext] :
                     numeric_values(graph, p->descriptor, p->argument)) {
                    bool pass = p->op == "greater-than" ? v > bound->value
                                                        : v < bound->value;
                    if (pass) push_unique(out, seen, merged(base, ext));
                }
                return;
            }
            // symbolic comparison referents fall through to plain matching
        }

        // plain match (also the symbolic route for fuzzy terms)
        for (const auto& m : graph.match_properties(*p)) {
            push_unique(out, seen, merged(base, m.binding));
        }

        // numeric route for fuzzy range terms: `age of ?x is very:old`
        if (p->op == "is" && p->referent.size() == 1) {
            const auto* term_name = std::get_if<Name>(&p->referent.front());
            const auto* quantity = std::get_if<Name>(&p->descriptor);
            if (term_name && quantity) {
                auto range = find_range_for_term(graph, *quantity,
                                                 Name(term_name->base), config);
                if (range) {
                    for (auto& [v, ext] :
                         numeric_values(graph, p->descriptor, p->argument)) {
                        double m =
                            modified_membership(graph, *range, *term_name, v);
                        if (m >= config.alpha - 1e-12) {
                            push_unique(out, seen, merged(base, ext));
                        }
                    }
                }
            }
        }
        return;
    }

    const auto& r = std::get<RelationStatement>(c);
    for (const auto& m : graph.match_relations(r)) {
        push_unique(out, seen, merged(base, m.binding));
    }
}

std::vector<Term> project(const BindingSet& set, const std::string& head) {
    std::vector<Term> out;
    std::set<std::string> seen;
    for (const auto& b : set.bindings) {
        auto it = b.find(head);
        if (it == b.end()) continue;
        if (seen.insert(serialize(it->second)).second) {
            out.push_back(it->second);
        }
    }
    return out;
}

}  // namespace

BindingSet evaluate_conditions(const KnowledgeGraph& graph,
                               const std::vector<Condition>& conditions,
                               const EngineConfig& config) {
    BindingSet current;
    current.bindings.push_back(Binding{});
    for (const auto& condition : conditions) {
        BindingSet next;
        std::set<std::string> seen;
        for (const auto& b : current.bindings) {
            evaluate_one(graph, condition, b, config, next, seen);
        }
        current = std::move(next);
    }
    return current;
}

QueryResult run_query(const KnowledgeGraph& graph, const Query& q,
                      const EngineConfig& config) {
    std::vector<Term> where = project(evaluate_conditions(graph, q.where, config),
                                      q.head);
    if (q.from.empty()) {
        if (q.quantifier == Quantifier::Which) return where;
        if (q.quantifier == Quantifier::Count) return where.size();
        throw EmptyReferenceClass("quantifier query without a from clause");
    }
    std::vector<Term> from = project(evaluate_conditions(graph, q.from, config),
                                     q.head);
    std::set<std::string> from_keys;
    for (const auto& t : from) from_keys.insert(serialize(t));
    std::vector<Term> both;
    for (const auto& t : where) {
        if (from_keys.count(serialize(t))) both.push_back(t);
    }
    switch (q.quantifier) {
        case Quantifier::Which:
            return both;
        case Quantifier::Count:
            return both.size();
        default: {
            auto v = quantifier_holds(q.quantifier, both.size(), from.size(),
                                      config);
            return QuantifierResult{v.holds, both.size(), from.size(), v.ratio};
        }
    }
}

}  // namespace pkn
