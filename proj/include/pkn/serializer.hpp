#pragma once

#include <string>

#include "pkn/statement.hpp"

namespace pkn {

/// Canonical PKN text. Round-trip law: parse(serialize(x)) == x.
std::string serialize(const Term& t);
std::string serialize(const Condition& c);
std::string serialize(const Statement& s);
std::string serialize(const Query& q);

/// Numbers render in shortest round-trip form (integers without a point).
std::string format_number(double v);

/// Structural identity key: serialization with metadata sorted by parameter
/// name, so statements differing only in metadata order collide.
std::string canonical_key(const Statement& s);

}  // namespace pkn
