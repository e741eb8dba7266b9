#include "mostset/dfa.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "mostset/errors.hpp"

namespace mostset {

Dfa::Dfa(std::vector<char> alphabet, std::vector<std::vector<std::size_t>> transitions,
         std::size_t start, std::vector<bool> accepting)
    : alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)),
      start_(start),
      accepting_(std::move(accepting)) {
    if (alphabet_.empty()) throw InputError("dfa: alphabet must be non-empty");
    if (!std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
        std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end())
        throw InputError("dfa: alphabet must be sorted and duplicate-free");
    const std::size_t n = transitions_.size();
    if (n == 0) throw InputError("dfa: at least one state required");
    if (start_ >= n) throw InputError("dfa: start state out of range");
    if (accepting_.size() != n) throw InputError("dfa: accepting mask size mismatch");
    for (const auto& row : transitions_) {
        if (row.size() != alphabet_.size())
            throw InputError("dfa: transition function must be total");
        for (std::size_t target : row)
            if (target >= n) throw InputError("dfa: transition target out of range");
    }
}

std::size_t Dfa::step(std::size_t state, char symbol) const {
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), symbol);
    if (it == alphabet_.end() || *it != symbol)
        throw AlphabetMismatch("symbol '" + std::string(1, symbol) +
                               "' not in the automaton's alphabet");
    return transitions_[state][static_cast<std::size_t>(it - alphabet_.begin())];
}

bool Dfa::accepts(std::string_view word) const {
    std::size_t q = start_;
    for (char c : word) q = step(q, c);
    return accepting_[q];
}

std::size_t product_state_limit() {
    if (const char* env = std::getenv("MOSTSET_MAX_STATES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

Dfa canonical_form(const Dfa& dfa) {
    const std::size_t m = dfa.alphabet().size();
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order;  // BFS discovery order
    std::vector<std::size_t> rename(dfa.state_count(), kUnseen);
    std::queue<std::size_t> queue;
    rename[dfa.start()] = 0;
    order.push_back(dfa.start());
    queue.push(dfa.start());
    while (!queue.empty()) {
        std::size_t q = queue.front();
        queue.pop();
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t t = dfa.step_index(q, k);
            if (rename[t] == kUnseen) {
                rename[t] = order.size();
                order.push_back(t);
                queue.push(t);
            }
        }
    }
    std::vector<std::vector<std::size_t>> transitions(order.size(),
                                                      std::vector<std::size_t>(m));
    std::vector<bool> accepting(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t k = 0; k < m; ++k)
            transitions[i][k] = rename[dfa.step_index(order[i], k)];
        accepting[i] = dfa.accepting(order[i]);
    }
    return Dfa(dfa.alphabet(), std::move(transitions), 0, std::move(accepting));
}

Dfa minimize(const Dfa& dfa) {
    const Dfa t = canonical_form(dfa);  // drops unreachable states
    const std::size_t n = t.state_count();
    const std::size_t m = t.alphabet().size();

    // Inverse transition lists per symbol.
    std::vector<std::vector<std::vector<std::size_t>>> inverse(
        m, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < m; ++k) inverse[k][t.step_index(q, k)].push_back(q);

    // Hopcroft partition refinement, seeded with accepting / rejecting.
    std::vector<std::size_t> block_of(n);
    std::vector<std::vector<std::size_t>> blocks;
    {
        std::vector<std::size_t> acc, rej;
        for (std::size_t q = 0; q < n; ++q) (t.accepting(q) ? acc : rej).push_back(q);
        for (auto* group : {&acc, &rej}) {
            if (group->empty()) continue;
            for (std::size_t q : *group) block_of[q] = blocks.size();
            blocks.push_back(std::move(*group));
        }
    }
    std::deque<std::pair<std::size_t, std::size_t>> work;  // (block, symbol)
    std::set<std::pair<std::size_t, std::size_t>> in_work;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t k = 0; k < m; ++k) {
            work.emplace_back(b, k);
            in_work.emplace(b, k);
        }
    while (!work.empty()) {
        auto [splitter, symbol] = work.front();
        work.pop_front();
        in_work.erase({splitter, symbol});
        // Predecessors of the splitter block over the symbol; each state
        // has one edge per symbol, so no duplicates arise.
        std::map<std::size_t, std::vector<std::size_t>> hits;  // block -> marked states
        for (std::size_t q : blocks[splitter])
            for (std::size_t p : inverse[symbol][q]) hits[block_of[p]].push_back(p);
        for (auto& [y, marked] : hits) {
            if (marked.size() == blocks[y].size()) continue;
            const std::size_t z = blocks.size();
            std::set<std::size_t> moved(marked.begin(), marked.end());
            std::vector<std::size_t> keep;
            for (std::size_t q : blocks[y])
                if (!moved.contains(q)) keep.push_back(q);
            blocks[y] = std::move(keep);
            for (std::size_t q : marked) block_of[q] = z;
            blocks.push_back(std::move(marked));
            for (std::size_t k = 0; k < m; ++k) {
                if (in_work.contains({y, k})) {
                    work.emplace_back(z, k);
                    in_work.emplace(z, k);
                } else {
                    std::size_t smaller = blocks[y].size() < blocks[z].size() ? y : z;
                    work.emplace_back(smaller, k);
                    in_work.emplace(smaller, k);
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> transitions(blocks.size(),
                                                      std::vector<std::size_t>(m));
    std::vector<bool> accepting(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t representative = blocks[b].front();
        for (std::size_t k = 0; k < m; ++k)
            transitions[b][k] = block_of[t.step_index(representative, k)];
        accepting[b] = t.accepting(representative);
    }
    return canonical_form(
        Dfa(t.alphabet(), std::move(transitions), block_of[t.start()], std::move(accepting)));
}

Dfa raw_product(std::span<const Dfa> parts, const AcceptancePredicate& accept,
                std::size_t max_states) {
    if (parts.empty())
        throw EmptyCollection("product of an empty automaton collection is undefined");
    const std::vector<char>& alphabet = parts.front().alphabet();
    for (const Dfa& part : parts)
        if (part.alphabet() != alphabet)
            throw AlphabetMismatch("product requires all automata to share one alphabet");
    const std::size_t m = alphabet.size();

    std::map<std::vector<std::size_t>, std::size_t> index_of;
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<std::vector<std::size_t>> transitions;
    std::vector<bool> accepting;
    auto intern = [&](std::vector<std::size_t> tuple) {
        auto [it, fresh] = index_of.try_emplace(std::move(tuple), tuples.size());
        if (fresh) {
            if (tuples.size() >= max_states)
                throw StateLimitExceeded("product exceeds the state cap of " +
                                         std::to_string(max_states));
            tuples.push_back(it->first);
            transitions.emplace_back(m);
            std::vector<bool> flags(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i)
                flags[i] = parts[i].accepting(it->first[i]);
            accepting.push_back(accept(flags));
        }
        return it->second;
    };

    std::vector<std::size_t> start_tuple;
    for (const Dfa& part : parts) start_tuple.push_back(part.start());
    intern(std::move(start_tuple));
    for (std::size_t q = 0; q < tuples.size(); ++q) {
        const std::vector<std::size_t> tuple = tuples[q];  // copy: tuples grows
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<std::size_t> next(tuple.size());
            for (std::size_t i = 0; i < tuple.size(); ++i)
                next[i] = parts[i].step_index(tuple[i], k);
            transitions[q][k] = intern(std::move(next));
        }
    }
    return Dfa(alphabet, std::move(transitions), 0, std::move(accepting));
}

Dfa intersection_language(std::span<const Dfa> parts, std::size_t max_states) {
    return minimize(raw_product(
        parts,
        [](const std::vector<bool>& flags) {
            return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
        },
        max_states));
}

Dfa majority_product(std::span<const Dfa> parts, std::size_t max_states) {
    return minimize(raw_product(
        parts,
        [](const std::vector<bool>& flags) {
            std::size_t count = static_cast<std::size_t>(
                std::count(flags.begin(), flags.end(), true));
            return 2 * count > flags.size();
        },
        max_states));
}

bool is_empty_language(const Dfa& dfa) {
    const Dfa reachable = canonical_form(dfa);
    const auto& mask = reachable.accepting_mask();
    return std::none_of(mask.begin(), mask.end(), [](bool b) { return b; });
}

bool equivalent(const Dfa& a, const Dfa& b) {
    const Dfa parts[] = {a, b};
    Dfa diff = raw_product(parts, [](const std::vector<bool>& flags) {
        return flags[0] != flags[1];
    });
    return is_empty_language(diff);
}

namespace {

// Thompson construction: one start, one accept, epsilon edges allowed.
struct Nfa {
    struct State {
        std::vector<std::pair<std::size_t, std::size_t>> edges;  // (symbol index, target)
        std::vector<std::size_t> epsilon;
    };
    std::vector<State> states;
    std::size_t start = 0;
    std::size_t accept = 0;

    std::size_t fresh() {
        states.emplace_back();
        return states.size() - 1;
    }
};

struct Fragment {
    std::size_t start;
    std::size_t accept;
};

Fragment build_fragment(Nfa& nfa, const Regex& r,
                        const std::vector<char>& alphabet) {
    switch (r.kind()) {
        case Regex::Kind::EmptySet: {
            Fragment f{nfa.fresh(), nfa.fresh()};
            return f;  // no path from start to accept
        }
        case Regex::Kind::Epsilon: {
            Fragment f{nfa.fresh(), nfa.fresh()};
            nfa.states[f.start].epsilon.push_back(f.accept);
            return f;
        }
        case Regex::Kind::Symbol: {
            auto it = std::lower_bound(alphabet.begin(), alphabet.end(), r.symbol_value());
            if (it == alphabet.end() || *it != r.symbol_value())
                throw AlphabetMismatch("regex symbol '" +
                                       std::string(1, r.symbol_value()) +
                                       "' not in the alphabet");
            Fragment f{nfa.fresh(), nfa.fresh()};
            nfa.states[f.start].edges.emplace_back(
                static_cast<std::size_t>(it - alphabet.begin()), f.accept);
            return f;
        }
        case Regex::Kind::Concat: {
            Fragment a = build_fragment(nfa, r.left(), alphabet);
            Fragment b = build_fragment(nfa, r.right(), alphabet);
            nfa.states[a.accept].epsilon.push_back(b.start);
            return Fragment{a.start, b.accept};
        }
        case Regex::Kind::Union: {
            Fragment a = build_fragment(nfa, r.left(), alphabet);
            Fragment b = build_fragment(nfa, r.right(), alphabet);
            Fragment f{nfa.fresh(), nfa.fresh()};
            nfa.states[f.start].epsilon.push_back(a.start);
            nfa.states[f.start].epsilon.push_back(b.start);
            nfa.states[a.accept].epsilon.push_back(f.accept);
            nfa.states[b.accept].epsilon.push_back(f.accept);
            return f;
        }
        case Regex::Kind::Star: {
            Fragment a = build_fragment(nfa, r.left(), alphabet);
            Fragment f{nfa.fresh(), nfa.fresh()};
            nfa.states[f.start].epsilon.push_back(a.start);
            nfa.states[f.start].epsilon.push_back(f.accept);
            nfa.states[a.accept].epsilon.push_back(a.start);
            nfa.states[a.accept].epsilon.push_back(f.accept);
            return f;
        }
    }
    throw Error("regex: unknown node kind");
}

std::set<std::size_t> epsilon_closure(const Nfa& nfa, std::set<std::size_t> states) {
    std::vector<std::size_t> stack(states.begin(), states.end());
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        for (std::size_t t : nfa.states[q].epsilon)
            if (states.insert(t).second) stack.push_back(t);
    }
    return states;
}

}  // namespace

Dfa regex_to_dfa(const Regex& regex, std::vector<char> alphabet) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (alphabet.empty()) throw InputError("regex_to_dfa: alphabet must be non-empty");

    Nfa nfa;
    Fragment root = build_fragment(nfa, regex, alphabet);
    nfa.start = root.start;
    nfa.accept = root.accept;

    // Subset construction; the empty subset is the dead state, keeping the
    // transition function total.
    const std::size_t cap = product_state_limit();
    std::map<std::set<std::size_t>, std::size_t> index_of;
    std::vector<std::set<std::size_t>> subsets;
    std::vector<std::vector<std::size_t>> transitions;
    std::vector<bool> accepting;
    auto intern = [&](std::set<std::size_t> subset) {
        auto [it, fresh] = index_of.try_emplace(std::move(subset), subsets.size());
        if (fresh) {
            if (subsets.size() >= cap)
                throw StateLimitExceeded("subset construction exceeds the state cap");
            subsets.push_back(it->first);
            transitions.emplace_back(alphabet.size());
            accepting.push_back(it->first.contains(nfa.accept));
        }
        return it->second;
    };
    intern(epsilon_closure(nfa, {nfa.start}));
    for (std::size_t q = 0; q < subsets.size(); ++q) {
        const std::set<std::size_t> subset = subsets[q];
        for (std::size_t k = 0; k < alphabet.size(); ++k) {
            std::set<std::size_t> next;
            for (std::size_t s : subset)
                for (auto [sym, target] : nfa.states[s].edges)
                    if (sym == k) next.insert(target);
            transitions[q][k] = intern(epsilon_closure(nfa, std::move(next)));
        }
    }
    return minimize(Dfa(std::move(alphabet), std::move(transitions), 0, std::move(accepting)));
}

Dfa dfa_from_strings(const std::vector<std::string>& words, std::vector<char> alphabet) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (alphabet.empty()) throw InputError("dfa_from_strings: alphabet must be non-empty");
    const std::size_t m = alphabet.size();
    auto symbol_index = [&](char c) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), c);
        if (it == alphabet.end() || *it != c)
            throw AlphabetMismatch("word symbol '" + std::string(1, c) +
                                   "' not in the alphabet");
        return static_cast<std::size_t>(it - alphabet.begin());
    };

    // Trie with state 1 as the dead sink; missing edges fall into it.
    constexpr std::size_t kRoot = 0, kDead = 1;
    std::vector<std::vector<std::size_t>> transitions{
        std::vector<std::size_t>(m, kDead), std::vector<std::size_t>(m, kDead)};
    std::vector<bool> accepting{false, false};
    for (const std::string& word : words) {
        std::size_t q = kRoot;
        for (char c : word) {
            std::size_t k = symbol_index(c);
            if (transitions[q][k] == kDead) {
                transitions[q][k] = transitions.size();
                transitions.push_back(std::vector<std::size_t>(m, kDead));
                accepting.push_back(false);
            }
            q = transitions[q][k];
        }
        accepting[q] = true;
    }
    return minimize(Dfa(std::move(alphabet), std::move(transitions), kRoot,
                        std::move(accepting)));
}

}  // namespace mostset
