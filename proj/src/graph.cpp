#include "pkn/graph.hpp"

#include <algorithm>
#include <deque>

#include "pkn/errors.hpp"
#include "pkn/serializer.hpp"

namespace pkn {

namespace {

std::string term_key(const Term& t) { return serialize(t); }

std::string descriptor_op_key(const std::string& descriptor, const std::string& op) {
    return descriptor + '\x1f' + op;
}

bool subset_semantics(const std::string& op) {
    return op == "includes" || op == "excludes";
}

/// Matches each pattern referent against some unused stored referent,
/// backtracking on binding conflicts.
bool match_referent_subset(const std::vector<Term>& pattern,
                           const std::vector<Term>& stored, size_t i,
                           std::vector<bool>& used, Binding& binding) {
    if (i == pattern.size()) return true;
    for (size_t j = 0; j < stored.size(); ++j) {
        if (used[j]) continue;
        Binding saved = binding;
        if (unify_term(pattern[i], stored[j], binding)) {
            used[j] = true;
            if (match_referent_subset(pattern, stored, i + 1, used, binding))
                return true;
            used[j] = false;
        }
        binding = std::move(saved);
    }
    return false;
}

bool scope_matches(const std::vector<Term>& pattern_scope,
                   const std::vector<Term>& stored_scope) {
    if (pattern_scope.empty()) return true;
    for (const auto& p : pattern_scope) {
        bool found = false;
        for (const auto& s : stored_scope) {
            if (p == s) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

void check_no_variables(const Condition& c, const char* what) {
    std::set<std::string> vars;
    collect_variables(c, vars);
    if (!vars.empty()) {
        throw InvalidStatement(std::string("variable ?") + *vars.begin() +
                               " in asserted " + what);
    }
}

}  // namespace

bool unify_term(const Term& pattern, const Term& value, Binding& binding) {
    if (const auto* v = std::get_if<Variable>(&pattern)) {
        if (v->anonymous()) return true;
        auto it = binding.find(v->name);
        if (it != binding.end()) return it->second == value;
        binding.emplace(v->name, value);
        return true;
    }
    return pattern == value;
}

bool unify_condition(const Condition& pattern, const Condition& value,
                     Binding& binding) {
    if (const auto* pp = std::get_if<PropertyStatement>(&pattern)) {
        const auto* pv = std::get_if<PropertyStatement>(&value);
        if (!pv) return false;
        if (pp->op != pv->op) return false;
        if (!scope_matches(pp->scope, pv->scope)) return false;
        Binding saved = binding;
        if (!unify_term(pp->descriptor, pv->descriptor, binding) ||
            !unify_term(pp->argument, pv->argument, binding)) {
            binding = std::move(saved);
            return false;
        }
        bool ok;
        if (subset_semantics(pp->op)) {
            if (pp->referent.size() > pv->referent.size()) {
                ok = false;
            } else {
                std::vector<bool> used(pv->referent.size(), false);
                ok = match_referent_subset(pp->referent, pv->referent, 0, used,
                                           binding);
            }
        } else {
            ok = pp->referent.size() == pv->referent.size();
            for (size_t i = 0; ok && i < pp->referent.size(); ++i) {
                ok = unify_term(pp->referent[i], pv->referent[i], binding);
            }
        }
        if (!ok) binding = std::move(saved);
        return ok;
    }
    const auto& pr = std::get<RelationStatement>(pattern);
    const auto* rv = std::get_if<RelationStatement>(&value);
    if (!rv) return false;
    if (!scope_matches(pr.scope, rv->scope)) return false;
    Binding saved = binding;
    if (unify_term(pr.subject, rv->subject, binding) &&
        unify_term(pr.relationship, rv->relationship, binding) &&
        unify_term(pr.object, rv->object, binding)) {
        return true;
    }
    binding = std::move(saved);
    return false;
}

Term substitute(const Term& t, const Binding& binding) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        auto it = binding.find(v->name);
        if (it != binding.end()) return it->second;
        return t;
    }
    return t;
}

Condition substitute(const Condition& c, const Binding& binding) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        PropertyStatement out = *p;
        out.descriptor = substitute(out.descriptor, binding);
        out.argument = substitute(out.argument, binding);
        for (auto& r : out.referent) r = substitute(r, binding);
        for (auto& s : out.scope) s = substitute(s, binding);
        return out;
    }
    RelationStatement out = std::get<RelationStatement>(c);
    out.subject = substitute(out.subject, binding);
    out.relationship = substitute(out.relationship, binding);
    out.object = substitute(out.object, binding);
    for (auto& s : out.scope) s = substitute(s, binding);
    return out;
}

void KnowledgeGraph::validate(const Statement& s) {
    if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
        if (p->referent.empty()) throw InvalidStatement("empty referent list");
        for (size_t i = 0; i < p->referent.size(); ++i) {
            for (size_t j = i + 1; j < p->referent.size(); ++j) {
                if (p->referent[i] == p->referent[j]) {
                    throw InvalidStatement("duplicate referent " +
                                           serialize(p->referent[i]));
                }
            }
        }
        if (!is_name(p->descriptor)) {
            throw InvalidStatement("property descriptor must be a name");
        }
        check_no_variables(Condition{*p}, "property");
    } else if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
        check_no_variables(Condition{*r}, "relation");
    } else if (const auto* imp = std::get_if<ImplicationStatement>(&s.node)) {
        if (imp->antecedents.empty() || imp->consequents.empty()) {
            throw InvalidStatement("implication needs antecedents and consequents");
        }
    } else {
        const auto& a = std::get<AnalogyStatement>(s.node);
        int vars = 0;
        for (const Term* t : {&a.a, &a.b, &a.c, &a.d}) {
            if (is_variable(*t)) ++vars;
        }
        if (vars > 1) throw InvalidStatement("analogy with more than one variable");
    }
    // nested sub-graph statements obey the same rules
    auto check_term = [](const Term& t) {
        if (const auto* sg = std::get_if<SubGraph>(&t)) {
            if (sg->statements.empty()) {
                throw InvalidStatement("empty sub-graph term");
            }
            for (const auto& nested : sg->statements) validate(nested);
        }
    };
    if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
        check_term(p->argument);
        for (const auto& r : p->referent) check_term(r);
    } else if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
        check_term(r->subject);
        check_term(r->object);
    }
}

StatementId KnowledgeGraph::add_in_place(Statement s) {
    validate(s);
    std::string key = canonical_key(s);
    if (auto it = by_key_.find(key); it != by_key_.end()) return it->second;
    StatementId id = statements_.size();
    if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
        by_descriptor_op_[descriptor_op_key(std::get<Name>(p->descriptor).full(),
                                            p->op)]
            .push_back(id);
        by_head_[term_key(p->argument)].push_back(id);
    } else if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
        if (const auto* n = std::get_if<Name>(&r->relationship)) {
            by_relationship_[n->full()].push_back(id);
        }
        by_head_[term_key(r->subject)].push_back(id);
        if (term_key(r->object) != term_key(r->subject)) {
            by_head_[term_key(r->object)].push_back(id);
        }
    } else if (std::holds_alternative<ImplicationStatement>(s.node)) {
        implications_.push_back(id);
    } else {
        analogies_.push_back(id);
    }
    statements_.push_back(std::move(s));
    by_key_.emplace(std::move(key), id);
    return id;
}

KnowledgeGraph KnowledgeGraph::from_statements(const std::vector<Statement>& stmts) {
    KnowledgeGraph g;
    for (const auto& s : stmts) g.add_in_place(s);
    return g;
}

std::pair<KnowledgeGraph, StatementId> KnowledgeGraph::with_statement(
    const Statement& s) const {
    KnowledgeGraph next = *this;
    StatementId id = next.add_in_place(s);
    return {std::move(next), id};
}

std::optional<StatementId> KnowledgeGraph::find(const Statement& s) const {
    auto it = by_key_.find(canonical_key(s));
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

std::vector<StatementId> KnowledgeGraph::relations_by_name(
    const std::string& relationship) const {
    auto it = by_relationship_.find(relationship);
    if (it == by_relationship_.end()) return {};
    return it->second;
}

std::vector<StatementId> KnowledgeGraph::properties_by_descriptor(
    const std::string& descriptor) const {
    std::vector<StatementId> out;
    for (const auto& [key, ids] : by_descriptor_op_) {
        if (key.compare(0, key.find('\x1f'), descriptor) == 0 &&
            key.size() > descriptor.size() && key[descriptor.size()] == '\x1f') {
            out.insert(out.end(), ids.begin(), ids.end());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<KnowledgeGraph::Match> KnowledgeGraph::match_properties(
    const PropertyStatement& pattern) const {
    std::vector<StatementId> candidates;
    if (const auto* d = std::get_if<Name>(&pattern.descriptor)) {
        auto it = by_descriptor_op_.find(descriptor_op_key(d->full(), pattern.op));
        if (it != by_descriptor_op_.end()) candidates = it->second;
    } else if (!is_variable(pattern.argument)) {
        auto it = by_head_.find(term_key(pattern.argument));
        if (it != by_head_.end()) candidates = it->second;
    } else {
        throw UnindexablePattern(
            "property pattern with variable descriptor and argument");
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<Match> out;
    for (StatementId id : candidates) {
        const auto* stored = std::get_if<PropertyStatement>(&statements_[id].node);
        if (!stored) continue;
        Binding b;
        if (unify_condition(Condition{pattern}, Condition{*stored}, b)) {
            out.push_back({id, std::move(b)});
        }
    }
    return out;
}

std::vector<KnowledgeGraph::Match> KnowledgeGraph::match_relations(
    const RelationStatement& pattern) const {
    std::vector<StatementId> candidates;
    if (const auto* n = std::get_if<Name>(&pattern.relationship)) {
        auto it = by_relationship_.find(n->full());
        if (it != by_relationship_.end()) candidates = it->second;
    } else if (!is_variable(pattern.subject)) {
        auto it = by_head_.find(term_key(pattern.subject));
        if (it != by_head_.end()) candidates = it->second;
    } else if (!is_variable(pattern.object)) {
        auto it = by_head_.find(term_key(pattern.object));
        if (it != by_head_.end()) candidates = it->second;
    } else {
        for (StatementId id = 0; id < statements_.size(); ++id) {
            if (std::holds_alternative<RelationStatement>(statements_[id].node)) {
                candidates.push_back(id);
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    std::vector<Match> out;
    for (StatementId id : candidates) {
        const auto* stored = std::get_if<RelationStatement>(&statements_[id].node);
        if (!stored) continue;
        Binding b;
        if (unify_condition(Condition{pattern}, Condition{*stored}, b)) {
            out.push_back({id, std::move(b)});
        }
    }
    return out;
}

namespace {

std::vector<Term> kind_of_closure(const KnowledgeGraph& g, const Term& start,
                                  bool up) {
    std::vector<Term> out;
    std::vector<std::string> visited{serialize(start)};
    std::deque<Term> queue{start};
    while (!queue.empty()) {
        Term current = queue.front();
        queue.pop_front();
        RelationStatement pattern;
        pattern.relationship = Name("kind-of");
        if (up) {
            pattern.subject = current;
            pattern.object = Variable("next");
        } else {
            pattern.subject = Variable("next");
            pattern.object = current;
        }
        for (const auto& m : g.match_relations(pattern)) {
            Term next = m.binding.at("next");
            std::string key = serialize(next);
            if (std::find(visited.begin(), visited.end(), key) != visited.end())
                continue;
            visited.push_back(key);
            out.push_back(next);
            queue.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace

std::vector<Term> KnowledgeGraph::kind_of_ancestors(const Term& start) const {
    return kind_of_closure(*this, start, true);
}

std::vector<Term> KnowledgeGraph::kind_of_descendants(const Term& start) const {
    return kind_of_closure(*this, start, false);
}

bool KnowledgeGraph::audit_indexes(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto contains = [](const std::vector<StatementId>& v, StatementId id) {
        return std::find(v.begin(), v.end(), id) != v.end();
    };
    for (StatementId id = 0; id < statements_.size(); ++id) {
        const auto& s = statements_[id];
        auto key_it = by_key_.find(canonical_key(s));
        if (key_it == by_key_.end() || key_it->second != id) {
            return fail("identity index misses statement " + std::to_string(id));
        }
        if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
            auto it = by_descriptor_op_.find(
                descriptor_op_key(std::get<Name>(p->descriptor).full(), p->op));
            if (it == by_descriptor_op_.end() || !contains(it->second, id)) {
                return fail("descriptor index misses statement " + std::to_string(id));
            }
            auto hit = by_head_.find(term_key(p->argument));
            if (hit == by_head_.end() || !contains(hit->second, id)) {
                return fail("head index misses statement " + std::to_string(id));
            }
        } else if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
            if (const auto* n = std::get_if<Name>(&r->relationship)) {
                auto it = by_relationship_.find(n->full());
                if (it == by_relationship_.end() || !contains(it->second, id)) {
                    return fail("relationship index misses statement " +
                                std::to_string(id));
                }
            }
            for (const Term* t : {&r->subject, &r->object}) {
                auto hit = by_head_.find(term_key(*t));
                if (hit == by_head_.end() || !contains(hit->second, id)) {
                    return fail("head index misses statement " + std::to_string(id));
                }
            }
        } else if (std::holds_alternative<ImplicationStatement>(s.node)) {
            if (!contains(implications_, id)) {
                return fail("implication list misses statement " + std::to_string(id));
            }
        } else if (!contains(analogies_, id)) {
            return fail("analogy list misses statement " + std::to_string(id));
        }
    }
    auto check_no_stale = [&](const auto& index, const char* name) {
        for (const auto& [key, ids] : index) {
            for (StatementId id : ids) {
                if (id >= statements_.size()) {
                    return fail(std::string(name) + " references absent statement");
                }
            }
        }
        return true;
    };
    if (!check_no_stale(by_descriptor_op_, "descriptor index")) return false;
    if (!check_no_stale(by_relationship_, "relationship index")) return false;
    if (!check_no_stale(by_head_, "head index")) return false;
    for (StatementId id : implications_) {
        if (id >= statements_.size() ||
            !std::holds_alternative<ImplicationStatement>(statements_[id].node)) {
            return fail("stale implication list entry");
        }
    }
    for (StatementId id : analogies_) {
        if (id >= statements_.size() ||
            !std::holds_alternative<AnalogyStatement>(statements_[id].node)) {
            return fail("stale analogy list entry");
        }
    }
    return true;
}

}  // namespace pkn
