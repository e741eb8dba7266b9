#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mostset/regex.hpp"

namespace mostset {

/// Deterministic finite automaton with a total transition function.
///
/// States are dense indices; the alphabet is a sorted list of single-byte
/// symbols. Constructed automata (from regexes, products, string sets)
/// are always minimized and BFS-renumbered from the start state, so the
/// minimal automaton of a language is a canonical value and operator==
/// decides equality of canonical forms.
class Dfa {
public:
    /// transitions[q][k] is the target of state q on alphabet[k].
    Dfa(std::vector<char> alphabet, std::vector<std::vector<std::size_t>> transitions,
        std::size_t start, std::vector<bool> accepting);

    std::size_t state_count() const { return transitions_.size(); }
    const std::vector<char>& alphabet() const { return alphabet_; }
    std::size_t start() const { return start_; }
    bool accepting(std::size_t state) const { return accepting_[state]; }
    const std::vector<bool>& accepting_mask() const { return accepting_; }

    std::size_t step_index(std::size_t state, std::size_t symbol_index) const {
        return transitions_[state][symbol_index];
    }
    /// Throws AlphabetMismatch when the symbol is not in the alphabet.
    std::size_t step(std::size_t state, char symbol) const;

    /// Runs the automaton; the empty string is accepted iff the start
    /// state accepts.
    bool accepts(std::string_view word) const;

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    std::vector<char> alphabet_;
    std::vector<std::vector<std::size_t>> transitions_;
    std::size_t start_;
    std::vector<bool> accepting_;
};

/// State cap for product/subset constructions: MOSTSET_MAX_STATES when
/// set, otherwise one million.
std::size_t product_state_limit();

/// Restricts to the states reachable from the start and renumbers them in
/// BFS order (symbols in alphabet order). The canonical presentation of
/// the automaton's transition structure.
Dfa canonical_form(const Dfa& dfa);

/// The unique minimal complete DFA of the language, BFS-renumbered.
Dfa minimize(const Dfa& dfa);

/// Acceptance rule of a product automaton, applied to the tuple of
/// component acceptance flags.
using AcceptancePredicate = std::function<bool(const std::vector<bool>&)>;

/// Reachable tuple product of the components, not minimized. All parts
/// must share one alphabet. Throws StateLimitExceeded past max_states.
Dfa raw_product(std::span<const Dfa> parts, const AcceptancePredicate& accept,
                std::size_t max_states = product_state_limit());

/// Strings accepted by every component; minimized.
Dfa intersection_language(std::span<const Dfa> parts,
                          std::size_t max_states = product_state_limit());

/// Strings accepted by strictly more than half of the components (the
/// density language of a finite collection); minimized. Ties lose.
Dfa majority_product(std::span<const Dfa> parts,
                     std::size_t max_states = product_state_limit());

/// Whether the automaton accepts no string at all.
bool is_empty_language(const Dfa& dfa);

/// Language equality via emptiness of the symmetric-difference product;
/// independent of minimization.
bool equivalent(const Dfa& a, const Dfa& b);

/// Compiles a regex to the minimal DFA over the given alphabet
/// (Thompson construction, subset construction, minimization).
Dfa regex_to_dfa(const Regex& regex, std::vector<char> alphabet);

/// Minimal DFA of a finite language given by an explicit word list.
Dfa dfa_from_strings(const std::vector<std::string>& words, std::vector<char> alphabet);

}  // namespace mostset
