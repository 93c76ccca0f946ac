#include "doctest.h"

#include <map>
#include <set>

#include "helpers.hpp"
#include "pkn/rdf.hpp"

using namespace pkn;
using pkn::testing::graph_from;

namespace {

std::size_t blank_subjects(const std::vector<rdf::Triple>& triples) {
    std::set<std::string> labels;
    for (const auto& t : triples) {
        if (t.subject.kind == rdf::Node::Kind::Blank) labels.insert(t.subject.value);
    }
    return labels.size();
}

/// Collection chains must be linear: every list node has exactly one
/// rdf:first and one rdf:rest, is referenced exactly once, and every chain
/// ends in rdf:nil.
void check_collections(const std::vector<rdf::Triple>& triples) {
    std::map<std::string, int> firsts, rests, referenced;
    for (const auto& t : triples) {
        if (t.subject.kind == rdf::Node::Kind::List) {
            if (t.predicate.value == "rdf:first") ++firsts[t.subject.value];
            if (t.predicate.value == "rdf:rest") ++rests[t.subject.value];
        }
        if (t.object.kind == rdf::Node::Kind::List) ++referenced[t.object.value];
    }
    for (const auto& [label, n] : firsts) {
        CHECK_MESSAGE(n == 1, "list ", label, " has ", n, " rdf:first");
        CHECK_MESSAGE(rests[label] == 1, "list ", label, " lacks rdf:rest");
        CHECK_MESSAGE(referenced[label] == 1, "list ", label, " referenced ",
                      referenced[label], " times");
    }
    CHECK(firsts.size() == rests.size());
    // chains terminate: follow every rest pointer
    std::map<std::string, std::string> next;
    for (const auto& t : triples) {
        if (t.subject.kind == rdf::Node::Kind::List &&
            t.predicate.value == "rdf:rest") {
            next[t.subject.value] =
                t.object.kind == rdf::Node::Kind::List ? t.object.value : "";
        }
    }
    for (const auto& entry : next) {
        std::string label = entry.first;
        std::set<std::string> seen;
        while (!label.empty()) {
            CHECK(seen.insert(label).second);  // no cycles
            label = next.at(label);
        }
    }
}

}  // namespace

TEST_CASE("a property statement reifies with its collection") {
    auto g = graph_from(
        "flowers of Netherlands includes daffodils, tulips (certainty high)\n");
    auto triples = rdf::to_triples(g);
    // type, descriptor, argument, operator, referent, certainty at the
    // statement node plus two first/rest pairs for the referent list
    CHECK(triples.size() == 10);
    CHECK(blank_subjects(triples) == 1);
    check_collections(triples);
    bool certainty_literal = false;
    for (const auto& t : triples) {
        if (t.predicate.value == "pkn:certainty") {
            certainty_literal = (t.object.kind == rdf::Node::Kind::Literal &&
                                 t.object.value == "high");
        }
    }
    CHECK(certainty_literal);
}

TEST_CASE("a single referent maps directly without a collection") {
    auto g = graph_from("weather of Paris includes rainy\n");
    auto triples = rdf::to_triples(g);
    CHECK(triples.size() == 5);
    for (const auto& t : triples) {
        CHECK(t.subject.kind != rdf::Node::Kind::List);
    }
}

TEST_CASE("prefixed names keep an encoded colon in their IRI") {
    auto g = graph_from("Paul close:friend-of John\n");
    auto turtle = rdf::to_turtle(g);
    CHECK(turtle.find("close%3Afriend-of") != std::string::npos);
    CHECK(turtle.find("close:friend-of") == std::string::npos);
}

TEST_CASE("percent encoding is conservative") {
    CHECK(rdf::percent_encode("close:friend-of") == "close%3Afriend-of");
    CHECK(rdf::percent_encode("age-at-death") == "age-at-death");
    CHECK(rdf::percent_encode("a b") == "a%20b");
}

TEST_CASE("nested sub-graph statements mint their own blank nodes") {
    auto g = graph_from("Mary believes {{John says {John loves Joan}} is-a lie}\n");
    auto triples = rdf::to_triples(g);
    CHECK(rdf::expected_blank_nodes(g) == 4);
    CHECK(blank_subjects(triples) == 4);
}

TEST_CASE("implications reify their conditions and variables") {
    auto g = graph_from(
        "weather of ?place includes rainy implies weather of ?place includes "
        "cloudy (strength high, inverse low)\n");
    auto triples = rdf::to_triples(g);
    CHECK(rdf::expected_blank_nodes(g) == 3);
    CHECK(blank_subjects(triples) == 3);
    check_collections(triples);
    int variable_types = 0;
    for (const auto& t : triples) {
        if (t.object.kind == rdf::Node::Kind::Vocab &&
            t.object.value == "pkn:Variable") {
            ++variable_types;
        }
    }
    CHECK(variable_types == 1);  // ?place typed once despite three uses
}

TEST_CASE("an empty graph exports only the prefix header") {
    auto turtle = rdf::to_turtle(KnowledgeGraph{});
    CHECK(turtle ==
          "@prefix pkn: <http://pkn.example.org/ns#> .\n"
          "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n");
}

TEST_CASE("blank node counts and collections hold on random graphs") {
    pkn::testing::RandomGraphGen gen(83);
    for (int round = 0; round < 100; ++round) {
        auto g = gen.graph(25);
        auto triples = rdf::to_triples(g);
        CHECK(rdf::expected_blank_nodes(g) == g.size());  // flat facts
        CHECK(blank_subjects(triples) == g.size());
        check_collections(triples);
    }
}

TEST_CASE("turtle output is byte-identical across runs") {
    pkn::testing::RandomGraphGen gen(89);
    for (int round = 0; round < 10; ++round) {
        auto g = gen.graph(25);
        CHECK(rdf::to_turtle(g) == rdf::to_turtle(g));
    }
    auto g = graph_from(
        "flowers of Netherlands includes daffodils, tulips (certainty high)\n"
        "Paul close:friend-of John\n");
    CHECK(rdf::to_turtle(g) == rdf::to_turtle(g));
}

TEST_CASE("turtle renders collections inline") {
    auto g = graph_from(
        "flowers of Netherlands includes daffodils, tulips\n");
    auto turtle = rdf::to_turtle(g);
    CHECK(turtle.find("pkn:referent ( <http://pkn.example.org/ns#daffodils> "
                      "<http://pkn.example.org/ns#tulips> )") !=
          std::string::npos);
    CHECK(turtle.find("rdf:first") == std::string::npos);  // chains inlined
}
