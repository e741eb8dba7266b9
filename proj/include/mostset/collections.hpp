#pragma once

#include <vector>

#include "mostset/element.hpp"

namespace mostset {

/// An ordered list of finite sets. Duplicates are permitted and count
/// toward the majority: the list is a multiset, matching the sequence
/// view of indexed families.
struct FiniteCollection {
    std::vector<ElementSet> members;
};

/// Elements contained in strictly more than half of the collection's sets.
/// Ties at exactly half are excluded. Throws EmptyCollection when the
/// collection has no members.
ElementSet most_intersect_finite(const FiniteCollection& collection);

/// Most-intersection of two sets; with two sets "more than half" means
/// both, so this coincides with the standard intersection.
ElementSet most_intersect_pair(const ElementSet& a, const ElementSet& b);

/// Plain intersection of every set in the collection (the classical
/// operator the majority variant is compared against).
ElementSet intersect_all(const FiniteCollection& collection);

}  // namespace mostset
