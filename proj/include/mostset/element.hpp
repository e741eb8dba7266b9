#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <variant>

namespace mostset {

/// Element of a set in a collection: an integer or a symbol/string.
/// Variant order (integers before strings) gives the deterministic sort
/// used everywhere sets are emitted.
using Element = std::variant<std::int64_t, std::string>;

using ElementSet = std::set<Element>;

inline std::string element_to_string(const Element& e) {
    if (std::holds_alternative<std::int64_t>(e))
        return std::to_string(std::get<std::int64_t>(e));
    return std::get<std::string>(e);
}

inline std::ostream& operator<<(std::ostream& os, const Element& e) {
    return os << element_to_string(e);
}

}  // namespace mostset
