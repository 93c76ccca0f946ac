#include "pkn/serializer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace pkn {

namespace {

void append_term(std::string& out, const Term& t);

void append_list(std::string& out, const std::vector<Term>& terms) {
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ", ";
        append_term(out, terms[i]);
    }
}

void append_metadata(std::string& out, const Metadata& m, bool sorted) {
    if (m.empty()) return;
    auto entries = m.entries();
    if (sorted) std::sort(entries.begin(), entries.end());
    out += " (";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += entries[i].first;
        out += ' ';
        out += to_string(entries[i].second);
    }
    out += ')';
}

void append_statement(std::string& out, const Statement& s, bool sorted_meta);

void append_condition(std::string& out, const Condition& c, bool sorted_meta) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        append_term(out, p->descriptor);
        out += " of ";
        append_term(out, p->argument);
        out += ' ';
        out += p->op;
        out += ' ';
        append_list(out, p->referent);
        if (!p->scope.empty()) {
            out += " for ";
            append_list(out, p->scope);
        }
        append_metadata(out, p->metadata, sorted_meta);
    } else {
        const auto& r = std::get<RelationStatement>(c);
        append_term(out, r.subject);
        out += ' ';
        append_term(out, r.relationship);
        out += ' ';
        append_term(out, r.object);
        if (!r.scope.empty()) {
            out += " for ";
            append_list(out, r.scope);
        }
        append_metadata(out, r.metadata, sorted_meta);
    }
}

void append_analogy_atom(std::string& out, const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
        out += '?';
        out += v->name;
    } else {
        append_term(out, t);
    }
}

void append_statement(std::string& out, const Statement& s, bool sorted_meta) {
    if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
        append_condition(out, Condition{*p}, sorted_meta);
    } else if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
        append_condition(out, Condition{*r}, sorted_meta);
    } else if (const auto* imp = std::get_if<ImplicationStatement>(&s.node)) {
        for (size_t i = 0; i < imp->antecedents.size(); ++i) {
            if (i) out += " and ";
            append_condition(out, imp->antecedents[i], sorted_meta);
        }
        out += " implies ";
        for (size_t i = 0; i < imp->consequents.size(); ++i) {
            if (i) out += " and ";
            append_condition(out, imp->consequents[i], sorted_meta);
        }
        append_metadata(out, imp->metadata, sorted_meta);
    } else {
        const auto& a = std::get<AnalogyStatement>(s.node);
        append_analogy_atom(out, a.a);
        out += ':';
        append_analogy_atom(out, a.b);
        out += "::";
        append_analogy_atom(out, a.c);
        out += ':';
        append_analogy_atom(out, a.d);
    }
}

void append_term(std::string& out, const Term& t) {
    if (const auto* n = std::get_if<Name>(&t)) {
        out += n->full();
    } else if (const auto* num = std::get_if<Number>(&t)) {
        out += format_number(num->value);
    } else if (const auto* v = std::get_if<Variable>(&t)) {
        out += '?';
        out += v->name;
    } else {
        const auto& sg = std::get<SubGraph>(t);
        out += '{';
        for (size_t i = 0; i < sg.statements.size(); ++i) {
            if (i) out += '\n';
            append_statement(out, sg.statements[i], false);
        }
        out += '}';
    }
}

}  // namespace

std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string serialize(const Term& t) {
    std::string out;
    append_term(out, t);
    return out;
}

std::string serialize(const Condition& c) {
    std::string out;
    append_condition(out, c, false);
    return out;
}

std::string serialize(const Statement& s) {
    std::string out;
    append_statement(out, s, false);
    return out;
}

std::string serialize(const Query& q) {
    std::string out;
    out += to_string(q.quantifier);
    out += " ?";
    out += q.head;
    out += " where ";
    for (size_t i = 0; i < q.where.size(); ++i) {
        if (i) out += " and ";
        append_condition(out, q.where[i], false);
    }
    if (!q.from.empty()) {
        out += " from ";
        for (size_t i = 0; i < q.from.size(); ++i) {
            if (i) out += " and ";
            append_condition(out, q.from[i], false);
        }
    }
    return out;
}

std::string canonical_key(const Statement& s) {
    std::string out;
    append_statement(out, s, true);
    return out;
}

}  // namespace pkn
