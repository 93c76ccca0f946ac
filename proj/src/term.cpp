#include "pkn/term.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pkn/statement.hpp"

namespace pkn {

namespace {

constexpr std::array<double, 7> kAnchors = {0.0, 0.1, 0.2, 0.5, 0.8, 0.9, 1.0};

constexpr std::array<std::string_view, 7> kLabels = {
    "none", "very-low", "low", "medium", "high", "very-high", "certain"};

}  // namespace

double anchor(QualitativeValue v) { return kAnchors[static_cast<size_t>(v)]; }

QualitativeValue quantize(double x) {
    size_t best = 0;
    double best_dist = std::abs(x - kAnchors[0]);
    for (size_t i = 1; i < kAnchors.size(); ++i) {
        double d = std::abs(x - kAnchors[i]);
        // ties resolve downward: strict improvement required to move up
        if (d < best_dist - 1e-12) {
            best = i;
            best_dist = d;
        }
    }
    return static_cast<QualitativeValue>(best);
}

std::string_view to_string(QualitativeValue v) {
    return kLabels[static_cast<size_t>(v)];
}

std::optional<QualitativeValue> qualitative_from_string(std::string_view s) {
    for (size_t i = 0; i < kLabels.size(); ++i) {
        if (kLabels[i] == s) return static_cast<QualitativeValue>(i);
    }
    return std::nullopt;
}

std::string Name::full() const {
    std::string out;
    for (const auto& p : prefixes) {
        out += p;
        out += ':';
    }
    out += base;
    return out;
}

SubGraph::SubGraph() = default;
SubGraph::SubGraph(std::vector<Statement> s) : statements(std::move(s)) {}
SubGraph::SubGraph(const SubGraph&) = default;
SubGraph::SubGraph(SubGraph&&) noexcept = default;
SubGraph& SubGraph::operator=(const SubGraph&) = default;
SubGraph& SubGraph::operator=(SubGraph&&) noexcept = default;
SubGraph::~SubGraph() = default;

bool SubGraph::operator==(const SubGraph& other) const {
    return statements == other.statements;
}

bool is_ground(const Term& t) {
    if (is_variable(t)) return false;
    if (const auto* sg = std::get_if<SubGraph>(&t)) {
        std::set<std::string> vars;
        for (const auto& st : sg->statements) {
            if (const auto* p = std::get_if<PropertyStatement>(&st.node)) {
                collect_variables(Condition{*p}, vars);
            } else if (const auto* r = std::get_if<RelationStatement>(&st.node)) {
                collect_variables(Condition{*r}, vars);
            } else if (const auto* i = std::get_if<ImplicationStatement>(&st.node)) {
                // implication-local variables do not make the term non-ground
                (void)i;
            } else if (const auto* a = std::get_if<AnalogyStatement>(&st.node)) {
                collect_variables(a->a, vars);
                collect_variables(a->b, vars);
                collect_variables(a->c, vars);
                collect_variables(a->d, vars);
            }
        }
        return vars.empty();
    }
    return true;
}

bool Metadata::set(std::string name, QualitativeValue value) {
    for (const auto& [n, v] : entries_) {
        if (n == name) return false;
    }
    entries_.emplace_back(std::move(name), value);
    return true;
}

std::optional<QualitativeValue> Metadata::get(std::string_view name) const {
    for (const auto& [n, v] : entries_) {
        if (n == name) return v;
    }
    return std::nullopt;
}

bool Metadata::operator==(const Metadata& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto sorted = [](std::vector<Entry> e) {
        std::sort(e.begin(), e.end());
        return e;
    };
    return sorted(entries_) == sorted(other.entries_);
}

}  // namespace pkn
