#include "pkn/rdf.hpp"

#include <functional>
#include <map>
#include <set>

#include "pkn/serializer.hpp"

namespace pkn {
namespace rdf {

namespace {

bool unreserved(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
           c == '~';
}

class Exporter {
public:
    std::vector<Triple> run(const KnowledgeGraph& graph) {
        for (const auto& s : graph.statements()) statement_node(s);
        return std::move(out_);
    }

private:
    Node blank() { return {Node::Kind::Blank, "b" + std::to_string(blanks_++)}; }
    Node list() { return {Node::Kind::List, "l" + std::to_string(lists_++)}; }
    static Node vocab(std::string v) { return {Node::Kind::Vocab, std::move(v)}; }
    static Node literal(std::string v) {
        return {Node::Kind::Literal, std::move(v)};
    }

    void emit(Node s, Node p, Node o) {
        out_.push_back({std::move(s), std::move(p), std::move(o)});
    }

    Node name_node(const Name& n) {
        return {Node::Kind::Resource,
                std::string(kNamespace) + percent_encode(n.full())};
    }

    Node variable_node(const Variable& v) {
        std::string iri =
            std::string(kNamespace) + "var%2F" + percent_encode(v.name);
        Node node{Node::Kind::Resource, iri};
        if (typed_variables_.insert(iri).second) {
            emit(node, vocab("a"), vocab("pkn:Variable"));
        }
        return node;
    }

    Node collection(const std::vector<Node>& elements) {
        if (elements.empty()) return vocab("rdf:nil");
        Node head = list();
        Node current = head;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            emit(current, vocab("rdf:first"), elements[i]);
            if (i + 1 < elements.size()) {
                Node next = list();
                emit(current, vocab("rdf:rest"), next);
                current = next;
            } else {
                emit(current, vocab("rdf:rest"), vocab("rdf:nil"));
            }
        }
        return head;
    }

    Node term_node(const Term& t) {
        if (const auto* n = std::get_if<Name>(&t)) return name_node(*n);
        if (const auto* num = std::get_if<Number>(&t)) {
            return {Node::Kind::NumberLit, format_number(num->value)};
        }
        if (const auto* v = std::get_if<Variable>(&t)) return variable_node(*v);
        const auto& sg = std::get<SubGraph>(t);
        if (sg.statements.size() == 1) return statement_node(sg.statements[0]);
        std::vector<Node> nodes;
        for (const auto& s : sg.statements) nodes.push_back(statement_node(s));
        return collection(nodes);
    }

    void emit_scope_and_metadata(const Node& b, const std::vector<Term>& scope,
                                 const Metadata& metadata) {
        if (!scope.empty()) {
            std::vector<Node> nodes;
            for (const auto& s : scope) nodes.push_back(term_node(s));
            emit(b, vocab("pkn:scope"), collection(nodes));
        }
        for (const auto& [param, value] : metadata.entries()) {
            emit(b, vocab("pkn:" + param), literal(std::string(to_string(value))));
        }
    }

    Node condition_node(const Condition& c) {
        return statement_node(to_statement(c));
    }

    Node statement_node(const Statement& s) {
        Node b = blank();
        if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
            emit(b, vocab("a"), vocab("pkn:Property"));
            emit(b, vocab("pkn:descriptor"), term_node(p->descriptor));
            emit(b, vocab("pkn:argument"), term_node(p->argument));
            emit(b, vocab("pkn:operator"), literal(p->op));
            if (p->referent.size() == 1) {
                emit(b, vocab("pkn:referent"), term_node(p->referent[0]));
            } else {
                std::vector<Node> nodes;
                for (const auto& r : p->referent) nodes.push_back(term_node(r));
                emit(b, vocab("pkn:referent"), collection(nodes));
            }
            emit_scope_and_metadata(b, p->scope, p->metadata);
        } else if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
            emit(b, vocab("a"), vocab("pkn:Relation"));
            emit(b, vocab("pkn:subject"), term_node(r->subject));
            emit(b, vocab("pkn:relationship"), term_node(r->relationship));
            emit(b, vocab("pkn:object"), term_node(r->object));
            emit_scope_and_metadata(b, r->scope, r->metadata);
        } else if (const auto* imp = std::get_if<ImplicationStatement>(&s.node)) {
            emit(b, vocab("a"), vocab("pkn:Implication"));
            std::vector<Node> vars;
            for (const auto& v : imp->variables()) {
                vars.push_back(variable_node(Variable(v)));
            }
            emit(b, vocab("pkn:variables"), collection(vars));
            std::vector<Node> antes;
            for (const auto& c : imp->antecedents) {
                antes.push_back(condition_node(c));
            }
            emit(b, vocab("pkn:antecedents"), collection(antes));
            std::vector<Node> cons;
            for (const auto& c : imp->consequents) {
                cons.push_back(condition_node(c));
            }
            emit(b, vocab("pkn:consequents"), collection(cons));
            emit_scope_and_metadata(b, {}, imp->metadata);
        } else {
            const auto& a = std::get<AnalogyStatement>(s.node);
            emit(b, vocab("a"), vocab("pkn:Analogy"));
            emit(b, vocab("pkn:a"), term_node(a.a));
            emit(b, vocab("pkn:b"), term_node(a.b));
            emit(b, vocab("pkn:c"), term_node(a.c));
            emit(b, vocab("pkn:d"), term_node(a.d));
        }
        return b;
    }

    std::vector<Triple> out_;
    std::set<std::string> typed_variables_;
    std::size_t blanks_ = 0;
    std::size_t lists_ = 0;
};

std::size_t count_statements(const Statement& s);

std::size_t count_term(const Term& t) {
    if (const auto* sg = std::get_if<SubGraph>(&t)) {
        std::size_t n = 0;
        for (const auto& s : sg->statements) n += count_statements(s);
        return n;
    }
    return 0;
}

std::size_t count_condition(const Condition& c) {
    std::size_t n = 1;
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        n += count_term(p->argument);
        for (const auto& r : p->referent) n += count_term(r);
    } else {
        const auto& r = std::get<RelationStatement>(c);
        n += count_term(r.subject);
        n += count_term(r.object);
    }
    return n;
}

std::size_t count_statements(const Statement& s) {
    if (auto c = as_condition(s)) return count_condition(*c);
    if (const auto* imp = std::get_if<ImplicationStatement>(&s.node)) {
        std::size_t n = 1;
        for (const auto& c : imp->antecedents) n += count_condition(c);
        for (const auto& c : imp->consequents) n += count_condition(c);
        return n;
    }
    return 1;  // analogy
}

std::string escape_literal(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string percent_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (unreserved(static_cast<char>(c))) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 0xF];
        }
    }
    return out;
}

std::vector<Triple> to_triples(const KnowledgeGraph& graph) {
    return Exporter().run(graph);
}

std::size_t expected_blank_nodes(const KnowledgeGraph& graph) {
    std::size_t n = 0;
    for (const auto& s : graph.statements()) n += count_statements(s);
    return n;
}

std::string to_turtle(const KnowledgeGraph& graph) {
    auto triples = to_triples(graph);

    // collection chains, keyed by list label
    std::map<std::string, std::pair<Node, std::string>> chains;  // first, rest
    for (const auto& t : triples) {
        if (t.subject.kind != Node::Kind::List) continue;
        auto& entry = chains[t.subject.value];
        if (t.predicate.value == "rdf:first") {
            entry.first = t.object;
        } else if (t.predicate.value == "rdf:rest") {
            entry.second = t.object.kind == Node::Kind::List ? t.object.value
                                                             : std::string();
        }
    }

    std::function<std::string(const Node&)> render = [&](const Node& n) {
        switch (n.kind) {
            case Node::Kind::Blank:
                return "_:" + n.value;
            case Node::Kind::List: {
                std::string out = "(";
                std::string label = n.value;
                while (!label.empty()) {
                    const auto& [first, rest] = chains.at(label);
                    out += ' ';
                    out += render(first);
                    label = rest;
                }
                out += " )";
                return out;
            }
            case Node::Kind::Vocab:
                return n.value;
            case Node::Kind::Resource:
                return "<" + n.value + ">";
            case Node::Kind::Literal:
                return "\"" + escape_literal(n.value) + "\"";
            case Node::Kind::NumberLit:
                return n.value;
        }
        return std::string();
    };

    std::string out;
    out += "@prefix pkn: <";
    out += kNamespace;
    out += "> .\n@prefix rdf: <";
    out += kRdfNamespace;
    out += "> .\n";
    bool any = false;
    for (const auto& t : triples) {
        if (t.subject.kind == Node::Kind::List) continue;  // inlined
        out += '\n';
        out += render(t.subject);
        out += ' ';
        out += t.predicate.value;
        out += ' ';
        out += render(t.object);
        out += " .";
        any = true;
    }
    if (any) out += '\n';
    return out;
}

}  // namespace rdf
}  // namespace pkn
