#include "mostset/nerode.hpp"

#include <set>

namespace mostset {

NerodeEvidence nerode_evidence(const std::function<bool(const std::string&)>& member,
                               std::vector<std::string> prefixes,
                               std::vector<std::string> suffixes) {
    NerodeEvidence ev;
    ev.prefixes = std::move(prefixes);
    ev.suffixes = std::move(suffixes);
    const std::size_t np = ev.prefixes.size();
    const std::size_t ns = ev.suffixes.size();

    // Acceptance row of every prefix over the suffix list.
    std::vector<std::vector<bool>> rows(np, std::vector<bool>(ns));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < ns; ++j)
            rows[i][j] = member(ev.prefixes[i] + ev.suffixes[j]);

    ev.witness.assign(np, std::vector<std::optional<std::size_t>>(np));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j)
            for (std::size_t s = 0; s < ns; ++s)
                if (rows[i][s] != rows[j][s]) {
                    ev.witness[i][j] = s;
                    ev.witness[j][i] = s;
                    break;
                }

    std::set<std::vector<bool>> distinct(rows.begin(), rows.end());
    ev.distinguishable_count = distinct.size();
    return ev;
}

}  // namespace mostset
