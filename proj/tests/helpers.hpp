#pragma once

// shared test helpers: parse-or-die wrappers and a small random graph
// generator used by the property-based suites

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pkn/graph.hpp"
#include "pkn/parser.hpp"
#include "pkn/serializer.hpp"

namespace pkn::testing {

inline Statement must_statement(const std::string& text) {
    auto r = parse_statement(text);
    if (const auto* e = std::get_if<ParseError>(&r)) {
        throw std::runtime_error("parse failed: " + text + " — " + e->message);
    }
    return std::get<Statement>(r);
}

inline Condition must_condition(const std::string& text) {
    auto r = parse_condition(text);
    if (const auto* e = std::get_if<ParseError>(&r)) {
        throw std::runtime_error("parse failed: " + text + " — " + e->message);
    }
    return std::get<Condition>(r);
}

inline Query must_query(const std::string& text) {
    auto r = parse_query(text);
    if (const auto* e = std::get_if<ParseError>(&r)) {
        throw std::runtime_error("parse failed: " + text + " — " + e->message);
    }
    return std::get<Query>(r);
}

inline KnowledgeGraph graph_from(const std::string& text) {
    auto parsed = parse_document(text);
    if (!parsed.errors.empty()) {
        throw std::runtime_error("corpus parse failed: " +
                                 parsed.errors.front().message);
    }
    std::vector<Statement> statements;
    for (auto& item : parsed.items) {
        if (auto* s = std::get_if<Statement>(&item)) statements.push_back(*s);
    }
    return KnowledgeGraph::from_statements(statements);
}

/// Random ground fact graphs over a small vocabulary. Deterministic per seed.
class RandomGraphGen {
public:
    explicit RandomGraphGen(unsigned seed) : rng_(seed) {}

    std::string name() {
        static const char* pool[] = {"ant", "bee", "cat", "dog", "elk",
                                     "fox", "gnu", "hen", "ibex", "jay"};
        return pool[pick(10)];
    }
    std::string descriptor() {
        static const char* pool[] = {"color", "size", "habitat", "diet"};
        return pool[pick(4)];
    }
    std::string relationship() {
        static const char* pool[] = {"kind-of", "similar-to", "part-of",
                                     "eats"};
        return pool[pick(4)];
    }
    std::string value() {
        static const char* pool[] = {"red", "green", "blue", "big", "small",
                                     "forest", "meadow", "seeds", "grass"};
        return pool[pick(9)];
    }

    Statement fact() {
        if (pick(2) == 0) {
            PropertyStatement p;
            p.descriptor = Name(descriptor());
            p.argument = Name(name());
            p.op = "includes";
            std::size_t n = 1 + pick(2);
            while (p.referent.size() < n) {
                Term t = Name(value());
                bool dup = false;
                for (const auto& r : p.referent) dup |= (r == t);
                if (!dup) p.referent.push_back(t);
            }
            return make_statement(p);
        }
        RelationStatement r;
        r.subject = Name(name());
        r.relationship = Name(relationship());
        r.object = Name(name());
        return make_statement(r);
    }

    KnowledgeGraph graph(std::size_t max_statements) {
        KnowledgeGraph g;
        std::size_t n = 1 + pick(max_statements);
        for (std::size_t i = 0; i < n; ++i) {
            g = g.with_statement(fact()).first;
        }
        return g;
    }

    std::size_t pick(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }
    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace pkn::testing
