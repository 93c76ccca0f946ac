#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pkn/reasoner.hpp"

namespace pkn {

enum class AttackKind { Undermine, Undercut, Rebut };

std::string_view to_string(AttackKind k);

/// Indices refer to the argument list handed to aggregate.
struct AttackEdge {
    std::size_t attacker = 0;
    std::size_t target = 0;
    AttackKind kind = AttackKind::Rebut;
};

enum class VerdictPolarity { Supported, Opposed, Undecided };

std::string_view to_string(VerdictPolarity p);

struct Verdict {
    Condition supposition;
    VerdictPolarity polarity = VerdictPolarity::Undecided;
    QualitativeValue net_certainty = QualitativeValue::None;
    double support_anchor = 0.0;
    double oppose_anchor = 0.0;
    std::vector<Argument> arguments;
    std::vector<AttackEdge> attacks;
};

/// Rebut: the conclusions contradict each other. Undermine: a's conclusion
/// contradicts a leaf fact of b. Undercut: a's conclusion contradicts the
/// statement licensing a defeasible (non-fact) step of b. Checked in that
/// order; none otherwise.
std::optional<AttackKind> classify_counter(const Argument& a, const Argument& b,
                                           const KnowledgeGraph& graph,
                                           const EngineConfig& config);

/// Net verdict: support/oppose anchors are the maxima over arguments of each
/// polarity after attack discounting (an argument attacked by a strictly
/// stronger one drops to min(own, 1 - attacker anchor)). Undecided when the
/// anchors differ by less than the undecided band.
Verdict aggregate(const Condition& supposition, std::vector<Argument> arguments,
                  const KnowledgeGraph& graph, const EngineConfig& config);

/// prove + aggregate.
Verdict judge(const KnowledgeGraph& graph, const Condition& supposition,
              const ProofParams& params, const EngineConfig& config);

/// Deterministic indented explanation tree (format documented in
/// docs/explanation_format.md).
std::string explain(const Verdict& verdict, const KnowledgeGraph& graph);

}  // namespace pkn
