#include "pkn/reasoner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pkn/errors.hpp"
#include "pkn/serializer.hpp"

namespace pkn {

namespace {

double meta_anchor(const Metadata& m, std::string_view key, double fallback) {
    if (auto v = m.get(key)) return anchor(*v);
    return fallback;
}

double statement_certainty(const Statement& s) {
    const Metadata* m = nullptr;
    if (const auto* p = std::get_if<PropertyStatement>(&s.node)) m = &p->metadata;
    else if (const auto* r = std::get_if<RelationStatement>(&s.node)) m = &r->metadata;
    else if (const auto* i = std::get_if<ImplicationStatement>(&s.node)) m = &i->metadata;
    if (!m) return 1.0;
    return meta_anchor(*m, "certainty", 1.0);
}

/// The concept an inheritance/similarity step rewrites: property argument or
/// relation subject.
const Term* focus_term(const Condition& c) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) return &p->argument;
    return &std::get<RelationStatement>(c).subject;
}

Condition with_focus(const Condition& c, const Term& t) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        PropertyStatement out = *p;
        out.argument = t;
        return out;
    }
    RelationStatement out = std::get<RelationStatement>(c);
    out.subject = t;
    return out;
}

const Name* predicate_name(const Condition& c) {
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        return std::get_if<Name>(&p->descriptor);
    }
    return std::get_if<Name>(&std::get<RelationStatement>(c).relationship);
}

bool functional_descriptor(const EngineConfig& cfg, const Condition& c) {
    const auto* p = std::get_if<PropertyStatement>(&c);
    if (!p) return false;
    const auto* n = std::get_if<Name>(&p->descriptor);
    if (!n) return false;
    return std::find(cfg.functional_descriptors.begin(),
                     cfg.functional_descriptors.end(),
                     n->full()) != cfg.functional_descriptors.end();
}

bool referents_intersect(const std::vector<Term>& a, const std::vector<Term>& b) {
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (x == y) return true;
        }
    }
    return false;
}

/// `{S} is-a lie` counts as denial of S.
bool is_lie_denial(const Condition& denial, const Condition& denied) {
    const auto* r = std::get_if<RelationStatement>(&denial);
    if (!r) return false;
    const auto* rel = std::get_if<Name>(&r->relationship);
    if (!rel || rel->full() != "is-a") return false;
    const auto* obj = std::get_if<Name>(&r->object);
    if (!obj || obj->full() != "lie") return false;
    const auto* sg = std::get_if<SubGraph>(&r->subject);
    if (!sg) return false;
    for (const auto& s : sg->statements) {
        if (auto c = as_condition(s); c && *c == denied) return true;
    }
    return false;
}

const double kEps = 1e-12;

class Prover {
public:
    Prover(const KnowledgeGraph& g, const ProofParams& params,
           const EngineConfig& cfg)
        : g_(g), params_(params), cfg_(cfg) {}

    std::vector<InferenceStep> prove_goal(const Condition& goal, int depth,
                                          bool& clean) {
        if (depth <= 0) return {};
        if (!is_ground(goal)) return prove_enumerated(goal, depth, clean);
        std::string key = serialize(goal);
        if (std::find(path_.begin(), path_.end(), key) != path_.end()) {
            clean = false;
            return {};
        }
        std::string memo_key = key + '@' + std::to_string(depth);
        if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

        path_.push_back(key);
        bool subtree_clean = true;
        std::vector<InferenceStep> steps = fact_steps(goal);
        if (depth >= 2) {
            implication_steps(goal, depth, steps, subtree_clean);
            if (params_.enable_specialization) {
                inheritance_steps(goal, depth, steps, subtree_clean, true);
            }
            if (params_.enable_generalization) {
                inheritance_steps(goal, depth, steps, subtree_clean, false);
            }
            if (params_.enable_similarity) {
                similarity_steps(goal, depth, steps, subtree_clean);
            }
        }
        path_.pop_back();
        if (subtree_clean) {
            memo_.emplace(std::move(memo_key), steps);
        } else {
            clean = false;
        }
        return steps;
    }

private:
    std::vector<KnowledgeGraph::Match> match_condition(const Condition& c) {
        try {
            if (const auto* p = std::get_if<PropertyStatement>(&c)) {
                return g_.match_properties(*p);
            }
            return g_.match_relations(std::get<RelationStatement>(c));
        } catch (const UnindexablePattern&) {
            return {};
        }
    }

    std::vector<InferenceStep> prove_enumerated(const Condition& goal, int depth,
                                                bool& clean) {
        std::vector<InferenceStep> out;
        std::set<std::string> seen;
        int budget = params_.candidate_cap;
        for (const auto& m : match_condition(goal)) {
            if (budget-- <= 0) break;
            Condition instance = substitute(goal, m.binding);
            if (!is_ground(instance)) continue;
            if (!seen.insert(serialize(instance)).second) continue;
            auto steps = prove_goal(instance, depth, clean);
            out.insert(out.end(), steps.begin(), steps.end());
        }
        return out;
    }

    std::vector<InferenceStep> fact_steps(const Condition& goal) {
        std::vector<InferenceStep> out;
        for (const auto& m : match_condition(goal)) {
            InferenceStep step;
            step.kind = StepKind::Fact;
            step.used = m.id;
            step.weight = statement_certainty(g_.statement(m.id));
            step.conclusion = goal;
            step.anchor = step.weight;
            step.certainty = quantize(step.anchor);
            if (step.anchor + kEps >= params_.min_certainty) {
                out.push_back(std::move(step));
            }
        }
        return out;
    }

    /// Proves every subgoal (best proof each) and appends one step when all
    /// succeed above the cutoff.
    void try_rule(StepKind kind, std::optional<StatementId> used, double weight,
                  const Condition& goal, const std::vector<Condition>& subgoals,
                  int depth, std::vector<InferenceStep>& out, bool& clean) {
        if (weight + kEps < params_.min_certainty) return;
        InferenceStep step;
        step.kind = kind;
        step.used = used;
        step.weight = weight;
        step.conclusion = goal;
        double a = weight;
        for (const auto& sub : subgoals) {
            auto proofs = prove_goal(sub, depth - 1, clean);
            if (proofs.empty()) return;
            const InferenceStep* best = &proofs.front();
            for (const auto& p : proofs) {
                if (p.anchor > best->anchor + kEps) best = &p;
            }
            a = std::min(a, best->anchor);
            step.premises.push_back(*best);
        }
        if (a + kEps < params_.min_certainty) return;
        step.anchor = a;
        step.certainty = quantize(a);
        out.push_back(std::move(step));
    }

    void implication_steps(const Condition& goal, int depth,
                           std::vector<InferenceStep>& out, bool& clean) {
        if (!params_.enable_implication) return;
        for (StatementId id : g_.implications()) {
            const auto& imp = std::get<ImplicationStatement>(g_.statement(id).node);
            double cert = statement_certainty(g_.statement(id));
            double forward_w =
                std::min(meta_anchor(imp.metadata, "strength", cfg_.weight_strength),
                         cert);
            double backward_w =
                std::min(meta_anchor(imp.metadata, "inverse", cfg_.weight_inverse),
                         cert);
            for (const auto& cons : imp.consequents) {
                Binding b;
                if (!unify_condition(cons, goal, b)) continue;
                std::vector<Condition> subgoals;
                for (const auto& ante : imp.antecedents) {
                    subgoals.push_back(substitute(ante, b));
                }
                try_rule(StepKind::ImplicationForward, id, forward_w, goal,
                         subgoals, depth, out, clean);
            }
            for (const auto& ante : imp.antecedents) {
                Binding b;
                if (!unify_condition(ante, goal, b)) continue;
                for (const auto& v : imp.free_consequent_variables()) {
                    if (!b.count(v)) b.emplace(v, skolem());
                }
                std::vector<Condition> subgoals;
                for (const auto& cons : imp.consequents) {
                    subgoals.push_back(substitute(cons, b));
                }
                try_rule(StepKind::ImplicationBackward, id, backward_w, goal,
                         subgoals, depth, out, clean);
            }
        }
    }

    /// specialization (up = true): evidence on an ancestor carries down to
    /// the sub-class; generalization walks the other way.
    void inheritance_steps(const Condition& goal, int depth,
                           std::vector<InferenceStep>& out, bool& clean,
                           bool up) {
        const Term* focus = focus_term(goal);
        if (!is_name(*focus)) return;
        auto relatives =
            up ? g_.kind_of_ancestors(*focus) : g_.kind_of_descendants(*focus);
        for (const auto& other : relatives) {
            double weight =
                up ? cfg_.weight_specialization : cfg_.weight_generalization;
            std::optional<StatementId> used;
            // metadata lives on the direct kind-of statement of the sub-class
            RelationStatement pattern;
            pattern.subject = up ? *focus : other;
            pattern.relationship = Name("kind-of");
            pattern.object = up ? other : *focus;
            auto direct = g_.match_relations(pattern);
            if (!direct.empty()) {
                StatementId id = direct.front().id;
                used = id;
                const auto& meta =
                    std::get<RelationStatement>(g_.statement(id).node).metadata;
                if (up) {
                    weight = meta_anchor(meta, "typicality",
                                         cfg_.weight_specialization);
                } else {
                    weight = meta_anchor(
                        meta, "dominance",
                        meta_anchor(meta, "multiplicity",
                                    cfg_.weight_generalization));
                }
                weight = std::min(weight, statement_certainty(g_.statement(id)));
            }
            try_rule(up ? StepKind::Specialization : StepKind::Generalization,
                     used, weight, goal, {with_focus(goal, other)}, depth, out,
                     clean);
        }
    }

    void similarity_steps(const Condition& goal, int depth,
                          std::vector<InferenceStep>& out, bool& clean) {
        const Term* focus = focus_term(goal);
        if (!is_name(*focus)) return;
        const Name* pred = predicate_name(goal);
        for (bool forward : {true, false}) {
            RelationStatement pattern;
            pattern.relationship = Name("similar-to");
            if (forward) {
                pattern.subject = *focus;
                pattern.object = Variable("other");
            } else {
                pattern.subject = Variable("other");
                pattern.object = *focus;
            }
            for (const auto& m : g_.match_relations(pattern)) {
                const auto& stmt =
                    std::get<RelationStatement>(g_.statement(m.id).node);
                // scope gate: the statement's scope must cover the
                // supposition's descriptor / relationship
                if (!stmt.scope.empty()) {
                    if (!pred) continue;
                    if (std::find(stmt.scope.begin(), stmt.scope.end(),
                                  Term(*pred)) == stmt.scope.end()) {
                        continue;
                    }
                }
                Term other = m.binding.at("other");
                if (other == *focus) continue;
                double weight =
                    std::min(meta_anchor(stmt.metadata, "similarity",
                                         cfg_.weight_similarity),
                             statement_certainty(g_.statement(m.id)));
                try_rule(StepKind::Similarity, m.id, weight, goal,
                         {with_focus(goal, other)}, depth, out, clean);
            }
        }
    }

    Term skolem() { return Name("_sk_" + std::to_string(skolem_counter_++)); }

    const KnowledgeGraph& g_;
    const ProofParams& params_;
    const EngineConfig& cfg_;
    std::map<std::string, std::vector<InferenceStep>> memo_;
    std::vector<std::string> path_;
    int skolem_counter_ = 0;
};

}  // namespace

std::string_view to_string(StepKind k) {
    switch (k) {
        case StepKind::Fact: return "fact";
        case StepKind::Specialization: return "specialization";
        case StepKind::Generalization: return "generalization";
        case StepKind::Similarity: return "similarity";
        case StepKind::ImplicationForward: return "implication-forward";
        case StepKind::ImplicationBackward: return "implication-backward";
        case StepKind::Analogy: return "analogy";
    }
    return "fact";
}

bool contradicts(const Condition& a, const Condition& b,
                 const EngineConfig& config) {
    const auto* pa = std::get_if<PropertyStatement>(&a);
    const auto* pb = std::get_if<PropertyStatement>(&b);
    if (pa && pb && pa->descriptor == pb->descriptor &&
        pa->argument == pb->argument) {
        bool inc_exc = (pa->op == "includes" && pb->op == "excludes") ||
                       (pa->op == "excludes" && pb->op == "includes");
        if (inc_exc && referents_intersect(pa->referent, pb->referent)) {
            return true;
        }
        if (pa->op == "is" && pb->op == "is" && functional_descriptor(config, a) &&
            pa->referent != pb->referent) {
            return true;
        }
    }
    return is_lie_denial(a, b) || is_lie_denial(b, a);
}

std::vector<Condition> contradictions_of(const KnowledgeGraph& graph,
                                         const Condition& c,
                                         const EngineConfig& config) {
    std::vector<Condition> out;
    if (const auto* p = std::get_if<PropertyStatement>(&c)) {
        if (p->op == "includes" || p->op == "excludes") {
            PropertyStatement flipped = *p;
            flipped.op = p->op == "includes" ? "excludes" : "includes";
            flipped.metadata = Metadata{};
            out.push_back(std::move(flipped));
        }
        if (p->op == "is" && functional_descriptor(config, c)) {
            PropertyStatement pattern;
            pattern.descriptor = p->descriptor;
            pattern.argument = p->argument;
            pattern.op = "is";
            pattern.referent.push_back(Variable("alt"));
            for (const auto& m : graph.match_properties(pattern)) {
                const auto* stored =
                    std::get_if<PropertyStatement>(&graph.statement(m.id).node);
                if (!stored || stored->referent == p->referent) continue;
                PropertyStatement alt = *p;
                alt.referent = stored->referent;
                alt.metadata = Metadata{};
                out.push_back(std::move(alt));
            }
        }
    }
    // denial via a `{S} is-a lie` statement
    RelationStatement lie;
    lie.subject = SubGraph({to_statement(c)});
    lie.relationship = Name("is-a");
    lie.object = Name("lie");
    out.push_back(std::move(lie));
    return out;
}

std::vector<Argument> prove(const KnowledgeGraph& graph,
                            const Condition& supposition,
                            const ProofParams& params,
                            const EngineConfig& config) {
    Prover prover(graph, params, config);
    std::vector<Argument> out;
    bool clean = true;
    for (auto& step : prover.prove_goal(supposition, params.max_depth, clean)) {
        Argument arg;
        arg.polarity = Polarity::For;
        arg.anchor = step.anchor;
        arg.certainty = step.certainty;
        arg.root = std::move(step);
        out.push_back(std::move(arg));
    }
    if (is_ground(supposition)) {
        for (const auto& contra : contradictions_of(graph, supposition, config)) {
            for (auto& step :
                 prover.prove_goal(contra, params.max_depth, clean)) {
                Argument arg;
                arg.polarity = Polarity::Against;
                arg.anchor = step.anchor;
                arg.certainty = step.certainty;
                arg.root = std::move(step);
                out.push_back(std::move(arg));
            }
        }
    }
    return out;
}

AnalogyResult complete_analogy(const KnowledgeGraph& graph, const Term& a,
                               const Term& b, const Term& c,
                               const EngineConfig& config) {
    struct Link {
        std::string relation_key;
        bool forward;
        double certainty;
    };
    std::vector<Link> links;
    for (StatementId id = 0; id < graph.size(); ++id) {
        const auto* r = std::get_if<RelationStatement>(&graph.statement(id).node);
        if (!r) continue;
        double cert = statement_certainty(graph.statement(id));
        if (r->subject == a && r->object == b) {
            links.push_back({serialize(r->relationship), true, cert});
        }
        if (r->subject == b && r->object == a) {
            links.push_back({serialize(r->relationship), false, cert});
        }
    }
    AnalogyResult result;
    if (links.empty()) {
        result.diagnostic = "no shared relation: nothing links " + serialize(a) +
                            " and " + serialize(b);
        return result;
    }
    struct Accum {
        Term d;
        std::set<std::string> relations;
        double min_certainty = 1.0;
    };
    std::map<std::string, Accum> by_d;
    for (const auto& link : links) {
        for (StatementId id = 0; id < graph.size(); ++id) {
            const auto* r =
                std::get_if<RelationStatement>(&graph.statement(id).node);
            if (!r || serialize(r->relationship) != link.relation_key) continue;
            const Term* d = nullptr;
            if (link.forward && r->subject == c) d = &r->object;
            if (!link.forward && r->object == c) d = &r->subject;
            if (!d) continue;
            double cert = std::min(link.certainty,
                                   statement_certainty(graph.statement(id)));
            auto [it, fresh] = by_d.try_emplace(serialize(*d), Accum{*d, {}, 1.0});
            it->second.relations.insert(link.relation_key);
            it->second.min_certainty = std::min(it->second.min_certainty, cert);
        }
    }
    for (const auto& [key, acc] : by_d) {
        AnalogyCandidate cand;
        cand.d = acc.d;
        cand.support = acc.relations.size();
        cand.anchor = std::min(config.weight_analogy, acc.min_certainty);
        cand.certainty = quantize(cand.anchor);
        result.candidates.push_back(std::move(cand));
    }
    std::sort(result.candidates.begin(), result.candidates.end(),
              [](const AnalogyCandidate& x, const AnalogyCandidate& y) {
                  if (x.support != y.support) return x.support > y.support;
                  if (x.anchor != y.anchor) return x.anchor > y.anchor;
                  return serialize(x.d) < serialize(y.d);
              });
    return result;
}

bool verify_analogy(const KnowledgeGraph& graph, const Term& a, const Term& b,
                    const Term& c, const Term& d, const EngineConfig& config) {
    auto result = complete_analogy(graph, a, b, c, config);
    for (const auto& cand : result.candidates) {
        if (cand.d == d) return true;
    }
    return false;
}

}  // namespace pkn
