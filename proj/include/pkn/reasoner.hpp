#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pkn/config.hpp"
#include "pkn/graph.hpp"

namespace pkn {

enum class StepKind {
    Fact,
    Specialization,
    Generalization,
    Similarity,
    ImplicationForward,
    ImplicationBackward,
    Analogy,
};

std::string_view to_string(StepKind k);

/// One node of an argument tree. The certainty anchor obeys the
/// weakest-link rule: min over the step weight, the governing statement's
/// certainty, and all premise anchors.
struct InferenceStep {
    StepKind kind = StepKind::Fact;
    std::vector<InferenceStep> premises;
    std::optional<StatementId> used;
    double weight = 1.0;
    Condition conclusion;
    double anchor = 1.0;
    QualitativeValue certainty = QualitativeValue::Certain;
};

enum class Polarity { For, Against };

struct Argument {
    InferenceStep root;
    Polarity polarity = Polarity::For;
    double anchor = 1.0;
    QualitativeValue certainty = QualitativeValue::Certain;
};

struct ProofParams {
    int max_depth = 6;             // max argument tree height, >= 1
    double min_certainty = 0.1;    // anchor cutoff
    bool enable_specialization = true;
    bool enable_generalization = true;
    bool enable_similarity = true;
    bool enable_implication = true;
    int candidate_cap = 1000;      // binding enumeration bound

    static ProofParams from_config(const EngineConfig& c) {
        ProofParams p;
        p.max_depth = c.max_depth;
        p.min_certainty = c.min_certainty;
        p.candidate_cap = c.candidate_cap;
        return p;
    }
};

/// Backward search for arguments concluding the supposition (polarity for)
/// or a contradiction of it (polarity against). No proof yields an empty
/// list. Pure over the snapshot; safe to call concurrently.
std::vector<Argument> prove(const KnowledgeGraph& graph,
                            const Condition& supposition,
                            const ProofParams& params,
                            const EngineConfig& config);

/// Contradiction predicate used by the reasoner and by counter-argument
/// classification: includes vs excludes on the same descriptor/argument with
/// overlapping referents, conflicting `is` referents on a functional
/// descriptor, and `{S} is-a lie` as a denial of S.
bool contradicts(const Condition& a, const Condition& b,
                 const EngineConfig& config);

/// Candidate conditions whose proof would count against `c`.
std::vector<Condition> contradictions_of(const KnowledgeGraph& graph,
                                         const Condition& c,
                                         const EngineConfig& config);

struct AnalogyCandidate {
    Term d;
    std::size_t support = 0;  // distinct relationships linking both pairs
    double anchor = 0.0;
    QualitativeValue certainty = QualitativeValue::None;
};

struct AnalogyResult {
    std::vector<AnalogyCandidate> candidates;
    std::string diagnostic;  // set when a and b share no relation
};

/// Completion a:b::c:? — every relationship R with a-R->b asserted (either
/// direction) contributes the d's with c-R->d in the same direction. Ranked
/// by distinct supporting relationships, then by certainty.
AnalogyResult complete_analogy(const KnowledgeGraph& graph, const Term& a,
                               const Term& b, const Term& c,
                               const EngineConfig& config);

/// Ground check a:b::c:d — true iff some relationship links both pairs in
/// the same direction.
bool verify_analogy(const KnowledgeGraph& graph, const Term& a, const Term& b,
                    const Term& c, const Term& d, const EngineConfig& config);

}  // namespace pkn
