#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mostset {

/// Desk-scale distinguishability evidence for a language given as a
/// membership predicate.
///
/// Prefixes u, v are distinguished by a suffix s when exactly one of us,
/// vs belongs to the language. Over a fixed suffix list this induces an
/// equivalence on the prefixes (equal acceptance rows); the number of
/// classes lower-bounds the state count of any DFA recognizing the
/// language, so a class count exceeding every candidate state budget is
/// evidence of non-regularity.
struct NerodeEvidence {
    std::vector<std::string> prefixes;
    std::vector<std::string> suffixes;
    /// witness[i][j]: index of a suffix distinguishing prefixes i and j,
    /// when one exists in the list.
    std::vector<std::vector<std::optional<std::size_t>>> witness;
    /// Number of acceptance-row classes among the prefixes.
    std::size_t distinguishable_count = 0;

    bool distinguished(std::size_t i, std::size_t j) const {
        return witness[i][j].has_value();
    }
};

NerodeEvidence nerode_evidence(const std::function<bool(const std::string&)>& member,
                               std::vector<std::string> prefixes,
                               std::vector<std::string> suffixes);

}  // namespace mostset
