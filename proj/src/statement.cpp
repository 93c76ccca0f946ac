#include "pkn/statement.hpp"

namespace pkn {

void collect_variables(const Term& t, std::set<std::string>& out) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        out.insert(v->name);
    } else if (const auto* sg = std::get_if<SubGraph>(&t)) {
        for (const auto& st : sg->statements) {
            if (auto c = as_condition(st)) collect_variables(*c, out);
        }
    }
}

void collect_variables(const Condition& c, std::set<std::string>& out) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        collect_variables(p->descriptor, out);
        collect_variables(p->argument, out);
        for (const auto& r : p->referent) collect_variables(r, out);
        for (const auto& s : p->scope) collect_variables(s, out);
    } else {
        const auto& r = std::get<RelationStatement>(c);
        collect_variables(r.subject, out);
        collect_variables(r.relationship, out);
        collect_variables(r.object, out);
        for (const auto& s : r.scope) collect_variables(s, out);
    }
}

bool is_ground(const Condition& c) {
    std::set<std::string> vars;
    collect_variables(c, vars);
    return vars.empty();
}

std::set<std::string> ImplicationStatement::variables() const {
    std::set<std::string> out;
    for (const auto& c : antecedents) collect_variables(c, out);
    for (const auto& c : consequents) collect_variables(c, out);
    return out;
}

std::set<std::string> ImplicationStatement::free_consequent_variables() const {
    std::set<std::string> ante, cons, out;
    for (const auto& c : antecedents) collect_variables(c, ante);
    for (const auto& c : consequents) collect_variables(c, cons);
    for (const auto& v : cons) {
        if (!ante.count(v)) out.insert(v);
    }
    return out;
}

Statement to_statement(const Condition& c) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) return Statement{*p};
    return Statement{std::get<RelationStatement>(c)};
}

std::optional<Condition> as_condition(const Statement& s) {
    if (const auto* p = std::get_if<PropertyStatement>(&s.node)) return Condition{*p};
    if (const auto* r = std::get_if<RelationStatement>(&s.node)) return Condition{*r};
    return std::nullopt;
}

std::string_view to_string(Quantifier q) {
    switch (q) {
        case Quantifier::Which: return "which";
        case Quantifier::Count: return "count";
        case Quantifier::Few: return "few";
        case Quantifier::Many: return "many";
        case Quantifier::Most: return "most";
    }
    return "which";
}

}  // namespace pkn
