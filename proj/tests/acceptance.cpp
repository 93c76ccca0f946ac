// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria that involve the command-line tool execute the
// real binary (path injected at build time).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "reasoner_oracle.hpp"
#include "pkn/argumentation.hpp"
#include "pkn/fuzzy.hpp"
#include "pkn/parser.hpp"
#include "pkn/query.hpp"
#include "pkn/rdf.hpp"
#include "pkn/serializer.hpp"

using namespace pkn;
using pkn::testing::graph_from;
using pkn::testing::must_condition;
using pkn::testing::must_query;
using pkn::testing::RandomGraphGen;

namespace {

int failures = 0;
std::vector<std::string> details;

void note(const std::string& message) { details.push_back(message); }

void report(int number, const std::string& title, bool ok) {
    std::printf("%s: criterion %d — %s\n", ok ? "PASS" : "FAIL", number,
                title.c_str());
    if (!ok) {
        ++failures;
        for (const auto& d : details) std::printf("      %s\n", d.c_str());
    }
    details.clear();
}

std::string data_path(const std::string& name) {
    return std::string(PKN_TEST_DATA_DIR) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the CLI binary through the shell, capturing stdout.
RunResult run_cli(const std::string& args) {
    std::string command = std::string(PKN_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        r.output.append(buffer, n);
    }
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- criterion 1: corpus fidelity ------------------------------------------

bool corpus_fidelity() {
    auto start = std::chrono::steady_clock::now();
    auto text = read_file(data_path("examples.pkn"));
    auto parsed = parse_document(text);
    bool ok = parsed.errors.empty() && parsed.items.size() == 14;
    if (!ok) {
        note("expected 14 clean items, got " + std::to_string(parsed.items.size()) +
             " items, " + std::to_string(parsed.errors.size()) + " errors");
    }
    for (const auto& item : parsed.items) {
        if (const auto* s = std::get_if<Statement>(&item)) {
            auto again = parse_statement(serialize(*s));
            if (!std::holds_alternative<Statement>(again) ||
                !(std::get<Statement>(again) == *s)) {
                note("round-trip failed: " + serialize(*s));
                ok = false;
            }
        } else {
            const auto& q = std::get<Query>(item);
            auto again = parse_query(serialize(q));
            if (!std::holds_alternative<Query>(again) ||
                !(std::get<Query>(again) == q)) {
                note("query round-trip failed: " + serialize(q));
                ok = false;
            }
        }
    }
    auto check = run_cli("check " + data_path("examples.pkn"));
    if (check.exit_code != 0 || check.output != "14 statements, 0 errors\n") {
        note("cmd_check said: " + check.output);
        ok = false;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed > std::chrono::seconds(1)) {
        note("took longer than 1s");
        ok = false;
    }
    return ok;
}

// --- criterion 2: rainy/cloudy ---------------------------------------------

bool rainy_cloudy() {
    auto forward = run_cli("ask \"weather of Paris includes cloudy\" " +
                           data_path("rainy_forward.pkn"));
    auto backward = run_cli("ask \"weather of Paris includes rainy\" " +
                            data_path("rainy_backward.pkn"));
    bool ok = true;
    if (forward.exit_code != 0 || forward.output != "supported (high)\n") {
        note("forward ask: exit " + std::to_string(forward.exit_code) + ", " +
             forward.output);
        ok = false;
    }
    if (backward.exit_code != 0 || backward.output != "supported (low)\n") {
        note("backward ask: exit " + std::to_string(backward.exit_code) + ", " +
             backward.output);
        ok = false;
    }
    return ok;
}

// --- criterion 3: fuzzy suite ----------------------------------------------

bool fuzzy_suite() {
    bool ok = true;
    RandomGraphGen gen(101);
    for (int i = 0; i < 10000 && ok; ++i) {
        double a = gen.real(0, 1), b = gen.real(0, 1), c = gen.real(0, 1);
        auto close = [](double x, double y) { return std::abs(x - y) < 1e-12; };
        if (!close(fuzzy_and(a, a), a) || !close(fuzzy_or(a, a), a) ||
            !close(fuzzy_and(a, b), fuzzy_and(b, a)) ||
            !close(fuzzy_or(a, b), fuzzy_or(b, a)) ||
            !close(fuzzy_and(fuzzy_and(a, b), c), fuzzy_and(a, fuzzy_and(b, c))) ||
            !close(fuzzy_or(fuzzy_or(a, b), c), fuzzy_or(a, fuzzy_or(b, c))) ||
            !close(fuzzy_not(fuzzy_and(a, b)),
                   fuzzy_or(fuzzy_not(a), fuzzy_not(b))) ||
            !close(fuzzy_not(fuzzy_or(a, b)),
                   fuzzy_and(fuzzy_not(a), fuzzy_not(b)))) {
            note("connective law violated");
            ok = false;
        }
    }

    auto age = graph_from(
        "range of age is infant, child, adult for person\n"
        "age of infant is 0, 4 for person\n"
        "age of child is 5, 17 for person\n"
        "age of adult is 18, age-at-death for person\n");
    auto range = build_range(age, Name("age"), {Name("person")}, {});
    double previous = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        double v = 120.0 * i / 1000.0;
        auto mv = fuzzify(range, v);
        if (std::abs(mv.sum() - 1.0) >= 1e-9) {
            note("normalization violated at " + std::to_string(v));
            ok = false;
        }
        double back = defuzzify(range, mv);
        if (back < previous - 1e-9) {
            note("monotonicity violated at " + std::to_string(v));
            ok = false;
        }
        previous = back;
    }

    // boundary value splits exactly
    auto temperature = graph_from(
        "range of temperature is cold, warm, hot\n"
        "temperature of cold is 0, 13.5\n"
        "temperature of warm is 14.5, 24.5\n"
        "temperature of hot is 25.5, 60\n");
    auto trange = build_range(temperature, Name("temperature"), {}, {});
    auto mv = fuzzify(trange, 25.0);
    if (!(mv.memberships == std::vector<double>{0.0, 0.5, 0.5})) {
        note("boundary membership is not exactly (0, 0.5, 0.5)");
        ok = false;
    }
    return ok;
}

// --- criterion 4: quantifiers + query oracle --------------------------------

std::set<std::string> oracle_which(const KnowledgeGraph& g,
                                   const std::vector<Condition>& conditions,
                                   const std::string& head) {
    std::set<std::string> vocabulary;
    for (const auto& s : g.statements()) {
        auto c = as_condition(s);
        if (!c) continue;
        auto grab = [&](const Term& t) {
            if (const auto* n = std::get_if<Name>(&t)) vocabulary.insert(n->full());
        };
        if (const auto* p = std::get_if<PropertyStatement>(&*c)) {
            grab(p->argument);
            for (const auto& r : p->referent) grab(r);
        } else {
            const auto& r = std::get<RelationStatement>(*c);
            grab(r.subject);
            grab(r.object);
        }
    }
    std::set<std::string> out;
    for (const auto& candidate : vocabulary) {
        Binding b{{head, Term(Name(candidate))}};
        bool all = true;
        for (const auto& c : conditions) {
            auto grounded = substitute(c, b);
            bool hit = false;
            if (const auto* p = std::get_if<PropertyStatement>(&grounded)) {
                hit = !g.match_properties(*p).empty();
            } else {
                hit = !g.match_relations(std::get<RelationStatement>(grounded))
                           .empty();
            }
            if (!hit) {
                all = false;
                break;
            }
        }
        if (all) out.insert(candidate);
    }
    return out;
}

bool quantifier_reproduction() {
    bool ok = true;
    auto few = must_query(
        "few ?x where color of ?x includes yellow from ?x kind-of rose");
    auto sparse = graph_from(read_file(data_path("roses_few.pkn")));
    auto r1 = std::get<QuantifierResult>(run_query(sparse, few, {}));
    if (!r1.holds || r1.where_count != 2 || r1.from_count != 10) {
        note("few on 2/10 should hold");
        ok = false;
    }
    auto dense = graph_from(read_file(data_path("roses_many.pkn")));
    auto r2 = std::get<QuantifierResult>(run_query(dense, few, {}));
    if (r2.holds || std::abs(r2.ratio - 0.5) > 1e-12) {
        note("few on 5/10 should fail at ratio 0.5");
        ok = false;
    }

    RandomGraphGen gen(103);
    int checked = 0;
    while (checked < 100) {
        auto g = gen.graph(50);
        if (g.size() == 0) continue;
        std::vector<Condition> conditions;
        std::size_t n = 1 + gen.pick(3);
        for (std::size_t i = 0; i < n; ++i) {
            auto c = *as_condition(g.statement(gen.pick(g.size())));
            if (auto* p = std::get_if<PropertyStatement>(&c)) {
                p->argument = Variable("x");
            } else {
                std::get<RelationStatement>(c).subject = Variable("x");
            }
            conditions.push_back(std::move(c));
        }
        auto expected = oracle_which(g, conditions, "x");
        Query q;
        q.quantifier = Quantifier::Which;
        q.head = "x";
        q.where = conditions;
        auto which = std::get<std::vector<Term>>(run_query(g, q, {}));
        std::set<std::string> got;
        for (const auto& t : which) got.insert(serialize(t));
        q.quantifier = Quantifier::Count;
        auto count = std::get<std::size_t>(run_query(g, q, {}));
        if (got != expected || count != which.size() ||
            count != expected.size()) {
            note("query oracle mismatch on round " + std::to_string(checked));
            ok = false;
        }
        ++checked;
    }
    return ok;
}

// --- criterion 5: reasoner oracle ------------------------------------------

bool reasoner_oracle() {
    bool ok = true;
    RandomGraphGen gen(107);
    EngineConfig cfg;
    static const QualitativeValue kLevels[] = {
        QualitativeValue::Certain, QualitativeValue::High,
        QualitativeValue::Medium, QualitativeValue::Low};
    for (int round = 0; round < 50; ++round) {
        KnowledgeGraph g;
        std::size_t n = 1 + gen.pick(20);
        for (std::size_t i = 0; i < n; ++i) {
            Statement s = gen.fact();
            QualitativeValue level = kLevels[gen.pick(4)];
            if (level != QualitativeValue::Certain) {
                if (auto* p = std::get_if<PropertyStatement>(&s.node)) {
                    p->metadata.set("certainty", level);
                } else if (auto* r = std::get_if<RelationStatement>(&s.node)) {
                    r->metadata.set("certainty", level);
                }
            }
            g = g.with_statement(s).first;
        }
        int depth = 1 + static_cast<int>(gen.pick(3));
        ProofParams params = ProofParams::from_config(cfg);
        params.max_depth = depth;
        pkn::testing::ReasonerOracle oracle{g, cfg};

        std::set<std::string> names;
        for (const auto& s : g.statements()) {
            if (const auto* r = std::get_if<RelationStatement>(&s.node)) {
                if (const auto* x = std::get_if<Name>(&r->subject)) names.insert(x->full());
                if (const auto* x = std::get_if<Name>(&r->object)) names.insert(x->full());
            }
            if (const auto* p = std::get_if<PropertyStatement>(&s.node)) {
                if (const auto* x = std::get_if<Name>(&p->argument)) names.insert(x->full());
            }
        }
        for (const auto& s : g.statements()) {
            const auto* p = std::get_if<PropertyStatement>(&s.node);
            if (!p) continue;
            for (const auto& name : names) {
                PropertyStatement goal = *p;
                goal.argument = Name(name);
                goal.metadata = Metadata{};
                double expected = oracle.best(goal, depth);
                double got = -1.0;
                QualitativeValue got_level = QualitativeValue::None;
                for (const auto& arg : prove(g, goal, params, cfg)) {
                    if (arg.polarity == Polarity::For && arg.anchor > got) {
                        got = arg.anchor;
                        got_level = arg.certainty;
                    }
                }
                if (std::abs(std::max(expected, -1.0) - std::max(got, -1.0)) >=
                    1e-9) {
                    note("anchor mismatch for " + serialize(Condition(goal)));
                    ok = false;
                } else if (got >= 0 && got_level != quantize(expected)) {
                    note("level mismatch for " + serialize(Condition(goal)));
                    ok = false;
                }
            }
        }
    }
    return ok;
}

// --- criterion 6: analogy ---------------------------------------------------

bool analogy() {
    bool ok = true;
    auto g = graph_from(read_file(data_path("analogy.pkn")));
    auto result = complete_analogy(g, Name("dog"), Name("puppy"), Name("cat"), {});
    if (result.candidates.empty() ||
        !(result.candidates[0].d == Term(Name("kitten")))) {
        note("dog:puppy::cat:? did not rank kitten first");
        ok = false;
    }
    if (!verify_analogy(g, Name("leaf"), Name("tree"), Name("petal"),
                        Name("flower"), {})) {
        note("leaf:tree::petal:flower should verify with shared part-of");
        ok = false;
    }
    auto bare = graph_from(
        "leaf part-of tree\n"
        "petal grows-on flower\n");
    if (verify_analogy(bare, Name("leaf"), Name("tree"), Name("petal"),
                       Name("flower"), {})) {
        note("analogy without a shared relation should fail");
        ok = false;
    }
    return ok;
}

// --- criterion 7: counter-argument classification ---------------------------

bool attacks() {
    bool ok = true;
    EngineConfig cfg;
    auto params = ProofParams::from_config(cfg);

    // rebut: contradictory conclusions at the same level
    {
        auto g = graph_from(
            "penguin kind-of bird\n"
            "ability of bird includes flight\n"
            "ability of penguin excludes flight\n");
        auto verdict =
            judge(g, must_condition("ability of penguin includes flight"),
                  params, cfg);
        bool rebut = verdict.attacks.size() == 2;
        for (const auto& e : verdict.attacks) rebut &= (e.kind == AttackKind::Rebut);
        if (!rebut) {
            note("expected two rebut edges in the flight case");
            ok = false;
        }
    }
    // undermine: the attacker contradicts a leaf fact, not the conclusion
    {
        auto g = graph_from(
            "penguin kind-of bird\n"
            "ability of bird includes flight\n"
            "ability of bird excludes flight (certainty medium)\n");
        auto pro = prove(g, must_condition("ability of penguin includes flight"),
                         params, cfg);
        auto con = prove(g, must_condition("ability of bird excludes flight"),
                         params, cfg);
        bool hit = false;
        if (!pro.empty() && !con.empty()) {
            Argument attacker = con.front();
            attacker.polarity = Polarity::Against;
            auto verdict =
                aggregate(must_condition("ability of penguin includes flight"),
                          {pro.front(), attacker}, g, cfg);
            hit = verdict.attacks.size() == 1 &&
                  verdict.attacks[0].kind == AttackKind::Undermine &&
                  verdict.attacks[0].attacker == 1;
        }
        if (!hit) {
            note("expected exactly one undermine edge");
            ok = false;
        }
    }
    // undercut: the attacker denies the licensing statement of a step
    {
        auto g = graph_from(
            "Belgium similar-to Netherlands for climate\n"
            "climate of Netherlands includes temperate\n"
            "{Belgium similar-to Netherlands for climate} is-a lie\n");
        auto pro = prove(g, must_condition("climate of Belgium includes temperate"),
                         params, cfg);
        auto con = prove(
            g,
            must_condition("{Belgium similar-to Netherlands for climate} is-a lie"),
            params, cfg);
        bool hit = false;
        if (!pro.empty() && !con.empty()) {
            Argument attacker = con.front();
            attacker.polarity = Polarity::Against;
            auto verdict =
                aggregate(must_condition("climate of Belgium includes temperate"),
                          {pro.front(), attacker}, g, cfg);
            hit = verdict.attacks.size() == 1 &&
                  verdict.attacks[0].kind == AttackKind::Undercut &&
                  verdict.attacks[0].attacker == 1;
        }
        if (!hit) {
            note("expected exactly one undercut edge");
            ok = false;
        }
    }
    // aggregation: high-for vs certain-against is opposed
    {
        auto g = graph_from(
            "weather of Paris includes cloudy (certainty high)\n"
            "weather of Paris excludes cloudy\n");
        auto verdict = judge(g, must_condition("weather of Paris includes cloudy"),
                             params, cfg);
        if (verdict.polarity != VerdictPolarity::Opposed) {
            note("high-for vs certain-against should be opposed");
            ok = false;
        }
    }
    return ok;
}

// --- criterion 8: RDF export -----------------------------------------------

bool rdf_export() {
    bool ok = true;
    RandomGraphGen gen(109);
    for (int round = 0; round < 100; ++round) {
        auto g = gen.graph(25);
        auto triples = rdf::to_triples(g);
        std::set<std::string> blanks;
        std::map<std::string, int> firsts, rests, referenced;
        for (const auto& t : triples) {
            if (t.subject.kind == rdf::Node::Kind::Blank) {
                blanks.insert(t.subject.value);
            }
            if (t.subject.kind == rdf::Node::Kind::List) {
                if (t.predicate.value == "rdf:first") ++firsts[t.subject.value];
                if (t.predicate.value == "rdf:rest") ++rests[t.subject.value];
            }
            if (t.object.kind == rdf::Node::Kind::List) {
                ++referenced[t.object.value];
            }
        }
        if (blanks.size() != g.size() ||
            rdf::expected_blank_nodes(g) != g.size()) {
            note("blank node count mismatch");
            ok = false;
        }
        for (const auto& [label, n] : firsts) {
            if (n != 1 || rests[label] != 1 || referenced[label] != 1) {
                note("malformed collection chain " + label);
                ok = false;
            }
        }
        if (firsts.size() != rests.size()) {
            note("dangling rdf:rest");
            ok = false;
        }
        if (rdf::to_turtle(g) != rdf::to_turtle(g)) {
            note("turtle not byte-identical");
            ok = false;
        }
    }
    return ok;
}

// --- criterion 9: REPL determinism -----------------------------------------

bool repl_determinism() {
    std::string command = "repl " + data_path("rainy_forward.pkn") + " < " +
                          data_path("repl_session.txt");
    auto golden = read_file(data_path("repl_golden.txt"));
    auto first = run_cli(command);
    auto second = run_cli(command);
    bool ok = true;
    if (first.exit_code != 0) {
        note("repl exit code " + std::to_string(first.exit_code));
        ok = false;
    }
    if (first.output != golden) {
        note("transcript differs from golden:\n" + first.output);
        ok = false;
    }
    if (first.output != second.output) {
        note("transcript not deterministic");
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "corpus fidelity (14 examples, round-trip, cmd_check < 1s)",
           corpus_fidelity());
    report(2, "rainy/cloudy asks: supported (high) / supported (low)",
           rainy_cloudy());
    report(3, "fuzzy suite: laws, normalization, monotone sweep, boundary",
           fuzzy_suite());
    report(4, "quantifiers: few 2/10 vs 5/10, count = |which| vs oracle",
           quantifier_reproduction());
    report(5, "reasoner matches forward-saturation oracle on random graphs",
           reasoner_oracle());
    report(6, "analogy: dog:puppy::cat:? -> kitten, leaf:tree::petal:flower",
           analogy());
    report(7, "counter-arguments: rebut / undermine / undercut, opposed verdict",
           attacks());
    report(8, "RDF export: blank node counts, collections, determinism",
           rdf_export());
    report(9, "REPL golden transcript, byte-identical", repl_determinism());
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
