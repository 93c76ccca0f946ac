#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pkn {

struct Statement;

/// Seven-level qualitative scale used by all statement metadata.
enum class QualitativeValue {
    None,
    VeryLow,
    Low,
    Medium,
    High,
    VeryHigh,
    Certain,
};

/// Numeric anchor of a qualitative level (none=0.0 ... certain=1.0).
/// Anchors are reasoner-internal; the model stores symbols.
double anchor(QualitativeValue v);

/// Nearest qualitative level for a numeric anchor; ties resolve downward.
QualitativeValue quantize(double x);

std::string_view to_string(QualitativeValue v);
std::optional<QualitativeValue> qualitative_from_string(std::string_view s);

/// A named concept with an optional chain of modifier prefixes,
/// e.g. close:friend-of has prefixes {close} and base friend-of.
struct Name {
    std::vector<std::string> prefixes;
    std::string base;

    Name() = default;
    explicit Name(std::string b) : base(std::move(b)) {}
    Name(std::vector<std::string> p, std::string b)
        : prefixes(std::move(p)), base(std::move(b)) {}

    /// Full dotted form, prefixes joined with ':'.
    std::string full() const;

    bool operator==(const Name&) const = default;
};

struct Number {
    double value = 0.0;

    Number() = default;
    explicit Number(double v) : value(v) {}

    bool operator==(const Number&) const = default;
};

/// Query/implication variable. The "?" marker is syntax only and is not
/// stored; an empty name is the anonymous variable (analogy position d).
struct Variable {
    std::string name;

    Variable() = default;
    explicit Variable(std::string n) : name(std::move(n)) {}

    bool anonymous() const { return name.empty(); }

    bool operator==(const Variable&) const = default;
};

/// Embedded sub-graph term: statements about statements.
struct SubGraph {
    std::vector<Statement> statements;

    SubGraph();
    explicit SubGraph(std::vector<Statement> s);
    SubGraph(const SubGraph&);
    SubGraph(SubGraph&&) noexcept;
    SubGraph& operator=(const SubGraph&);
    SubGraph& operator=(SubGraph&&) noexcept;
    ~SubGraph();

    bool operator==(const SubGraph& other) const;
};

/// The universal node/value type.
using Term = std::variant<Name, Number, Variable, SubGraph>;

inline bool is_name(const Term& t) { return std::holds_alternative<Name>(t); }
inline bool is_number(const Term& t) { return std::holds_alternative<Number>(t); }
inline bool is_variable(const Term& t) { return std::holds_alternative<Variable>(t); }
inline bool is_subgraph(const Term& t) { return std::holds_alternative<SubGraph>(t); }

/// True when the term contains no variable anywhere (sub-graphs included).
bool is_ground(const Term& t);

/// Statement metadata: parameter name -> qualitative level.
/// Insertion order is preserved for serialization; equality ignores order.
class Metadata {
public:
    using Entry = std::pair<std::string, QualitativeValue>;

    Metadata() = default;

    /// Returns false when the parameter is already present (at most one
    /// value per parameter name).
    bool set(std::string name, QualitativeValue value);

    std::optional<QualitativeValue> get(std::string_view name) const;

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    bool operator==(const Metadata& other) const;

private:
    std::vector<Entry> entries_;
};

}  // namespace pkn
