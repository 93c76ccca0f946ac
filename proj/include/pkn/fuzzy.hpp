#pragma once

#include <optional>
#include <vector>

#include "pkn/config.hpp"
#include "pkn/graph.hpp"

namespace pkn {

/// An ordered partition of a numeric quantity into named terms, built from
/// `range of Q is t1, ..., tn for S` plus per-term bounds `Q of ti is lo, hi`.
struct ScalarRange {
    struct TermDef {
        Name name;
        double lower = 0.0;
        double upper = 0.0;                 // resolved (symbolic -> ceiling)
        std::optional<Name> symbolic_upper;
    };

    Name quantity;
    std::vector<Term> scope;
    std::vector<TermDef> terms;
    double crossfade_fraction = 0.1;

    double floor() const { return terms.front().lower; }
    double ceiling() const { return terms.back().upper; }
    /// Internal boundary between term i and i+1: midpoint of the gap.
    double boundary(std::size_t i) const;
    /// Crossfade half-width at internal boundary i.
    double half_width(std::size_t i) const;
    double midpoint(std::size_t i) const;
    std::optional<std::size_t> term_index(const Name& name) const;
};

/// Fuzzy memberships of a value across a range's terms, in term order.
struct MembershipVector {
    std::vector<double> memberships;

    double sum() const;
    bool operator==(const MembershipVector&) const = default;
};

/// Throws MissingTermBounds / NonContiguousRange. A range statement must
/// exist for (quantity, scope); pass an empty scope to match any.
ScalarRange build_range(const KnowledgeGraph& graph, const Name& quantity,
                        const std::vector<Term>& scope,
                        const EngineConfig& config);

/// First range over `quantity` whose term list contains `base_term`.
std::optional<ScalarRange> find_range_for_term(const KnowledgeGraph& graph,
                                               const Name& quantity,
                                               const Name& base_term,
                                               const EngineConfig& config);

/// Linear crossfade around each internal boundary; exactly 1.0 on a single
/// term outside the windows. Throws OutOfRange.
MembershipVector fuzzify(const ScalarRange& range, double value);

/// Term-midpoint centroid. Throws DegenerateVector on an all-zero input.
double defuzzify(const ScalarRange& range, const MembershipVector& mv);

inline double fuzzy_and(double a, double b) { return a < b ? a : b; }
inline double fuzzy_or(double a, double b) { return a > b ? a : b; }
inline double fuzzy_not(double a) { return 1.0 - a; }

/// Default modifier semantics on a plain membership: very squares, other
/// modifiers pass through. Modifiers compose left-to-right.
double apply_modifiers_to_membership(const std::vector<std::string>& modifiers,
                                     double membership);

/// Membership of `value` in the (possibly modified) term. A graph-supplied
/// definition such as `age of very:old greater-than 75 for person` overrides
/// the default semantics. `term.prefixes` carries the modifier chain.
/// Throws UnknownTerm when the base term is not part of the range.
double modified_membership(const KnowledgeGraph& graph, const ScalarRange& range,
                           const Name& term, double value);

struct QuantifierVerdict {
    bool holds = false;
    double ratio = 0.0;
};

/// few <=> 0 < ratio <= few_threshold; many <=> ratio >= many_threshold;
/// most <=> ratio >= most_threshold. Throws EmptyReferenceClass.
QuantifierVerdict quantifier_holds(Quantifier kind, std::size_t where_count,
                                   std::size_t from_count,
                                   const EngineConfig& config);

}  // namespace pkn
