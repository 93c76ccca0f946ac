#include "pkn/argumentation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pkn/serializer.hpp"

namespace pkn {

namespace {

void walk_steps(const InferenceStep& step,
                const std::function<void(const InferenceStep&)>& fn) {
    fn(step);
    for (const auto& p : step.premises) walk_steps(p, fn);
}

bool contradicts_leaf_fact(const Condition& conclusion, const InferenceStep& root,
                           const EngineConfig& config) {
    bool hit = false;
    walk_steps(root, [&](const InferenceStep& s) {
        if (s.kind == StepKind::Fact &&
            contradicts(conclusion, s.conclusion, config)) {
            hit = true;
        }
    });
    return hit;
}

bool contradicts_step_licence(const Condition& conclusion,
                              const InferenceStep& root,
                              const KnowledgeGraph& graph,
                              const EngineConfig& config) {
    bool hit = false;
    walk_steps(root, [&](const InferenceStep& s) {
        if (s.kind == StepKind::Fact || !s.used) return;
        auto licence = as_condition(graph.statement(*s.used));
        if (licence && contradicts(conclusion, *licence, config)) hit = true;
    });
    return hit;
}

}  // namespace

std::string_view to_string(AttackKind k) {
    switch (k) {
        case AttackKind::Undermine: return "undermine";
        case AttackKind::Undercut: return "undercut";
        case AttackKind::Rebut: return "rebut";
    }
    return "rebut";
}

std::string_view to_string(VerdictPolarity p) {
    switch (p) {
        case VerdictPolarity::Supported: return "supported";
        case VerdictPolarity::Opposed: return "opposed";
        case VerdictPolarity::Undecided: return "undecided";
    }
    return "undecided";
}

std::optional<AttackKind> classify_counter(const Argument& a, const Argument& b,
                                           const KnowledgeGraph& graph,
                                           const EngineConfig& config) {
    if (&a == &b) return std::nullopt;
    if (contradicts(a.root.conclusion, b.root.conclusion, config)) {
        return AttackKind::Rebut;
    }
    if (contradicts_leaf_fact(a.root.conclusion, b.root, config)) {
        return AttackKind::Undermine;
    }
    if (contradicts_step_licence(a.root.conclusion, b.root, graph, config)) {
        return AttackKind::Undercut;
    }
    return std::nullopt;
}

Verdict aggregate(const Condition& supposition, std::vector<Argument> arguments,
                  const KnowledgeGraph& graph, const EngineConfig& config) {
    Verdict v;
    v.supposition = supposition;
    v.arguments = std::move(arguments);
    const std::size_t n = v.arguments.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (auto kind = classify_counter(v.arguments[i], v.arguments[j],
                                             graph, config)) {
                v.attacks.push_back({i, j, *kind});
            }
        }
    }
    // attack discounting over original anchors
    std::vector<double> discounted(n);
    for (std::size_t i = 0; i < n; ++i) discounted[i] = v.arguments[i].anchor;
    for (const auto& edge : v.attacks) {
        double attacker = v.arguments[edge.attacker].anchor;
        double own = v.arguments[edge.target].anchor;
        if (attacker > own) {
            discounted[edge.target] =
                std::min(discounted[edge.target], std::min(own, 1.0 - attacker));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (v.arguments[i].polarity == Polarity::For) {
            v.support_anchor = std::max(v.support_anchor, discounted[i]);
        } else {
            v.oppose_anchor = std::max(v.oppose_anchor, discounted[i]);
        }
    }
    double net = std::abs(v.support_anchor - v.oppose_anchor);
    v.net_certainty = quantize(net);
    if (net < config.undecided_band) {
        v.polarity = VerdictPolarity::Undecided;
    } else if (v.support_anchor > v.oppose_anchor) {
        v.polarity = VerdictPolarity::Supported;
    } else {
        v.polarity = VerdictPolarity::Opposed;
    }
    return v;
}

Verdict judge(const KnowledgeGraph& graph, const Condition& supposition,
              const ProofParams& params, const EngineConfig& config) {
    return aggregate(supposition, prove(graph, supposition, params, config),
                     graph, config);
}

namespace {

void render_step(std::string& out, const InferenceStep& step,
                 const KnowledgeGraph& graph, int indent) {
    out.append(indent, ' ');
    out += serialize(step.conclusion);
    out += " (";
    out += to_string(step.kind);
    out += ", ";
    out += to_string(step.certainty);
    out += ')';
    if (step.kind == StepKind::Fact && step.used) {
        out += " [";
        out += serialize(graph.statement(*step.used));
        out += ']';
    }
    out += '\n';
    if (step.kind != StepKind::Fact && step.used) {
        out.append(indent + 2, ' ');
        out += "via: ";
        out += serialize(graph.statement(*step.used));
        out += '\n';
    }
    for (const auto& p : step.premises) {
        render_step(out, p, graph, indent + 2);
    }
}

}  // namespace

std::string explain(const Verdict& verdict, const KnowledgeGraph& graph) {
    std::string out;
    out += to_string(verdict.polarity);
    out += " (";
    out += to_string(verdict.net_certainty);
    out += ")\n";
    bool has_for = false;
    bool has_against = false;
    for (const auto& a : verdict.arguments) {
        (a.polarity == Polarity::For ? has_for : has_against) = true;
    }
    if (has_for && has_against) {
        out += "FOR:\n";
        for (const auto& a : verdict.arguments) {
            if (a.polarity == Polarity::For) render_step(out, a.root, graph, 2);
        }
        out += "AGAINST:\n";
        for (const auto& a : verdict.arguments) {
            if (a.polarity == Polarity::Against)
                render_step(out, a.root, graph, 2);
        }
    } else {
        for (const auto& a : verdict.arguments) {
            render_step(out, a.root, graph, 0);
        }
    }
    return out;
}

}  // namespace pkn
