#include "mostset/collections.hpp"

#include <map>

#include "mostset/errors.hpp"

namespace mostset {

ElementSet most_intersect_finite(const FiniteCollection& collection) {
    if (collection.members.empty())
        throw EmptyCollection("most-intersection of an empty collection is undefined");
    std::map<Element, std::size_t> counts;
    for (const ElementSet& member : collection.members)
        for (const Element& e : member) ++counts[e];
    ElementSet result;
    const std::size_t total = collection.members.size();
    for (const auto& [element, count] : counts)
        if (2 * count > total) result.insert(element);
    return result;
}

ElementSet most_intersect_pair(const ElementSet& a, const ElementSet& b) {
    return most_intersect_finite(FiniteCollection{{a, b}});
}

ElementSet intersect_all(const FiniteCollection& collection) {
    if (collection.members.empty())
        throw EmptyCollection("intersection of an empty collection is undefined");
    ElementSet result = collection.members.front();
    for (std::size_t i = 1; i < collection.members.size() && !result.empty(); ++i) {
        ElementSet next;
        for (const Element& e : result)
            if (collection.members[i].contains(e)) next.insert(e);
        result = std::move(next);
    }
    return result;
}

}  // namespace mostset
