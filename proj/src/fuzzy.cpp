#include "pkn/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "pkn/errors.hpp"
#include "pkn/serializer.hpp"

namespace pkn {

namespace {

constexpr double kEps = 1e-9;

/// Stored scope is acceptable when the wanted scope is empty or every wanted
/// name appears in it.
bool scope_ok(const std::vector<Term>& wanted, const std::vector<Term>& stored) {
    for (const auto& w : wanted) {
        if (std::find(stored.begin(), stored.end(), w) == stored.end())
            return false;
    }
    return true;
}

const PropertyStatement* as_property(const Statement& s) {
    return std::get_if<PropertyStatement>(&s.node);
}

}  // namespace

double ScalarRange::boundary(std::size_t i) const {
    return (terms[i].upper + terms[i + 1].lower) / 2.0;
}

double ScalarRange::half_width(std::size_t i) const {
    double wa = terms[i].upper - terms[i].lower;
    double wb = terms[i + 1].upper - terms[i + 1].lower;
    return crossfade_fraction * std::min(wa, wb);
}

double ScalarRange::midpoint(std::size_t i) const {
    return (terms[i].lower + terms[i].upper) / 2.0;
}

std::optional<std::size_t> ScalarRange::term_index(const Name& name) const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].name == name) return i;
    }
    return std::nullopt;
}

double MembershipVector::sum() const {
    double s = 0.0;
    for (double m : memberships) s += m;
    return s;
}

ScalarRange build_range(const KnowledgeGraph& graph, const Name& quantity,
                        const std::vector<Term>& scope,
                        const EngineConfig& config) {
    // locate the `range of Q is ...` statement
    const PropertyStatement* range_stmt = nullptr;
    for (StatementId id : graph.properties_by_descriptor("range")) {
        const auto* p = as_property(graph.statement(id));
        if (!p || p->op != "is") continue;
        if (!(p->argument == Term(quantity))) continue;
        if (!scope_ok(scope, p->scope)) continue;
        range_stmt = p;
        break;
    }
    if (!range_stmt) {
        throw MissingTermBounds("no range statement for " + quantity.full());
    }

    ScalarRange range;
    range.quantity = quantity;
    range.scope = range_stmt->scope;
    range.crossfade_fraction = config.crossfade_fraction;

    auto bounds_for = [&](const Name& term) -> ScalarRange::TermDef {
        for (StatementId id : graph.properties_by_descriptor(quantity.full())) {
            const auto* p = as_property(graph.statement(id));
            if (!p || p->op != "is") continue;
            if (!(p->argument == Term(term))) continue;
            if (!scope_ok(range.scope, p->scope) && !scope_ok(p->scope, range.scope))
                continue;
            if (p->referent.size() != 2) continue;
            const auto* lo = std::get_if<Number>(&p->referent[0]);
            if (!lo) continue;
            ScalarRange::TermDef def;
            def.name = term;
            def.lower = lo->value;
            if (const auto* hi = std::get_if<Number>(&p->referent[1])) {
                def.upper = hi->value;
            } else if (const auto* sym = std::get_if<Name>(&p->referent[1])) {
                def.symbolic_upper = *sym;
                def.upper = config.ceiling;
            } else {
                continue;
            }
            return def;
        }
        throw MissingTermBounds("no bounds for term " + term.full() + " of " +
                                quantity.full());
    };

    for (const auto& ref : range_stmt->referent) {
        const auto* n = std::get_if<Name>(&ref);
        if (!n) {
            throw MissingTermBounds("range term is not a name: " + serialize(ref));
        }
        range.terms.push_back(bounds_for(*n));
    }

    for (std::size_t i = 0; i < range.terms.size(); ++i) {
        const auto& t = range.terms[i];
        if (t.lower > t.upper + kEps) {
            throw NonContiguousRange("term " + t.name.full() +
                                     " has lower > upper");
        }
        if (i + 1 < range.terms.size()) {
            double gap = range.terms[i + 1].lower - t.upper;
            if (gap < -kEps || gap > 1.0 + kEps) {
                throw NonContiguousRange(
                    "terms " + t.name.full() + " and " +
                    range.terms[i + 1].name.full() + " are not contiguous (gap " +
                    format_number(gap) + ")");
            }
        }
    }

    // per-range crossfade override: `crossfade of Q is f [for S]`
    for (StatementId id : graph.properties_by_descriptor("crossfade")) {
        const auto* p = as_property(graph.statement(id));
        if (!p || p->op != "is" || p->referent.size() != 1) continue;
        if (!(p->argument == Term(quantity))) continue;
        if (!scope_ok(range.scope, p->scope) && !scope_ok(p->scope, range.scope))
            continue;
        if (const auto* f = std::get_if<Number>(&p->referent[0])) {
            range.crossfade_fraction = f->value;
        }
    }
    return range;
}

std::optional<ScalarRange> find_range_for_term(const KnowledgeGraph& graph,
                                               const Name& quantity,
                                               const Name& base_term,
                                               const EngineConfig& config) {
    for (StatementId id : graph.properties_by_descriptor("range")) {
        const auto* p = as_property(graph.statement(id));
        if (!p || p->op != "is") continue;
        if (!(p->argument == Term(quantity))) continue;
        bool has_term = false;
        for (const auto& r : p->referent) {
            if (r == Term(base_term)) {
                has_term = true;
                break;
            }
        }
        if (!has_term) continue;
        return build_range(graph, quantity, p->scope, config);
    }
    return std::nullopt;
}

MembershipVector fuzzify(const ScalarRange& range, double value) {
    const std::size_t n = range.terms.size();
    if (value < range.floor() - kEps || value > range.ceiling() + kEps) {
        throw OutOfRange("value " + format_number(value) + " outside [" +
                         format_number(range.floor()) + ", " +
                         format_number(range.ceiling()) + "]");
    }
    MembershipVector mv;
    mv.memberships.assign(n, 0.0);
    if (n == 1) {
        mv.memberships[0] = 1.0;
        return mv;
    }
    std::size_t k = 0;
    while (k < n - 1 && value > range.boundary(k)) ++k;
    if (k < n - 1) {
        double b = range.boundary(k);
        double w = range.half_width(k);
        if (w > 0 && value >= b - w && value <= b + w) {
            double up = (value - (b - w)) / (2.0 * w);
            mv.memberships[k + 1] = up;
            mv.memberships[k] = 1.0 - up;
            return mv;
        }
    }
    if (k > 0) {
        double b = range.boundary(k - 1);
        double w = range.half_width(k - 1);
        if (w > 0 && value >= b - w && value <= b + w) {
            double up = (value - (b - w)) / (2.0 * w);
            mv.memberships[k] = up;
            mv.memberships[k - 1] = 1.0 - up;
            return mv;
        }
    }
    mv.memberships[k] = 1.0;
    return mv;
}

double defuzzify(const ScalarRange& range, const MembershipVector& mv) {
    double total = mv.sum();
    if (total <= 0.0) {
        throw DegenerateVector("all-zero membership vector");
    }
    double out = 0.0;
    for (std::size_t i = 0; i < mv.memberships.size(); ++i) {
        out += (mv.memberships[i] / total) * range.midpoint(i);
    }
    return out;
}

double apply_modifiers_to_membership(const std::vector<std::string>& modifiers,
                                     double membership) {
    double m = membership;
    for (const auto& mod : modifiers) {
        if (mod == "very") m = m * m;
        // other modifiers keep the membership unless the graph defines them
    }
    return m;
}

double modified_membership(const KnowledgeGraph& graph, const ScalarRange& range,
                           const Name& term, double value) {
    // explicit graph definition overrides the default semantics
    for (const char* op : {"greater-than", "less-than"}) {
        PropertyStatement pattern;
        pattern.descriptor = range.quantity;
        pattern.argument = term;
        pattern.op = op;
        pattern.referent.push_back(Variable("t"));
        pattern.scope = range.scope;
        for (const auto& m : graph.match_properties(pattern)) {
            const auto* threshold = std::get_if<Number>(&m.binding.at("t"));
            if (!threshold) continue;
            if (pattern.op == "greater-than") {
                return value > threshold->value ? 1.0 : 0.0;
            }
            return value < threshold->value ? 1.0 : 0.0;
        }
    }
    Name base(term.base);
    auto idx = range.term_index(base);
    if (!idx) {
        throw UnknownTerm("term " + base.full() + " is not part of the " +
                          range.quantity.full() + " range");
    }
    MembershipVector mv = fuzzify(range, value);
    return apply_modifiers_to_membership(term.prefixes, mv.memberships[*idx]);
}

QuantifierVerdict quantifier_holds(Quantifier kind, std::size_t where_count,
                                   std::size_t from_count,
                                   const EngineConfig& config) {
    if (from_count == 0) {
        throw EmptyReferenceClass("quantifier over an empty reference class");
    }
    QuantifierVerdict v;
    v.ratio = static_cast<double>(where_count) / static_cast<double>(from_count);
    switch (kind) {
        case Quantifier::Few:
            v.holds = where_count > 0 && v.ratio <= config.few_threshold + kEps;
            break;
        case Quantifier::Many:
            v.holds = v.ratio >= config.many_threshold - kEps;
            break;
        case Quantifier::Most:
            v.holds = v.ratio >= config.most_threshold - kEps;
            break;
        default:
            throw PknError("quantifier_holds requires few/many/most");
    }
    return v;
}

}  // namespace pkn
