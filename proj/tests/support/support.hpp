// Shared test utilities: deterministic generators and the independent
// brute-force oracles that expected values are checked against. Nothing
// here calls back into the code path under test.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "mostset/dfa.hpp"
#include "mostset/eventually_periodic_set.hpp"
#include "mostset/regex.hpp"

namespace mostset::test {

// -- eventually periodic sets ----------------------------------------------

inline EventuallyPeriodicSet random_eps(std::mt19937_64& rng,
                                        std::uint64_t max_threshold = 16,
                                        std::uint64_t max_period = 24) {
    std::uniform_int_distribution<std::uint64_t> threshold_dist(0, max_threshold);
    std::uniform_int_distribution<std::uint64_t> period_dist(1, max_period);
    std::bernoulli_distribution bit(0.5);
    const std::uint64_t threshold = threshold_dist(rng);
    const std::uint64_t period = period_dist(rng);
    std::vector<bool> prefix(threshold);
    for (std::uint64_t i = 0; i < threshold; ++i) prefix[i] = bit(rng);
    std::vector<std::uint64_t> residues;
    for (std::uint64_t r = 0; r < period; ++r)
        if (bit(rng)) residues.push_back(r);
    return EventuallyPeriodicSet::from_parts(std::move(prefix), period, residues);
}

// Exact member count of {1..n} by direct enumeration.
inline std::uint64_t brute_count(const std::function<bool(std::uint64_t)>& member,
                                 std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i <= n; ++i)
        if (member(i)) ++count;
    return count;
}

// Membership in the union of blocks [4^k, 2*4^k): the partial densities
// oscillate forever between roughly 1/3 and 2/3, so no density exists.
inline bool oscillating_blocks(std::uint64_t n) {
    if (n == 0) return false;
    std::uint64_t low = 1;
    while (low * 4 <= n) low *= 4;
    return n < 2 * low;
}

inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    return primes;
}

// -- strings and automata ----------------------------------------------------

// All strings of length <= max_len in length-lexicographic order.
inline std::vector<std::string> all_strings(const std::vector<char>& alphabet,
                                            std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (char c : alphabet) out.push_back(out[i] + c);
        level_begin = level_end;
    }
    return out;
}

// Direct regex matcher working on its own copy of the syntax tree, with
// memoization over (node, substring) so nested stars stay tractable.
class RegexOracle {
public:
    explicit RegexOracle(const Regex& r) { root_ = import(r); }

    bool matches(const std::string& w) {
        word_ = w;
        memo_.clear();
        return eval(root_, 0, w.size());
    }

private:
    struct Node {
        Regex::Kind kind;
        char symbol = '\0';
        int left = -1;
        int right = -1;
    };

    int import(const Regex& r) {
        Node node;
        node.kind = r.kind();
        switch (r.kind()) {
            case Regex::Kind::Symbol: node.symbol = r.symbol_value(); break;
            case Regex::Kind::Concat:
            case Regex::Kind::Union:
                node.left = import(r.left());
                node.right = import(r.right());
                break;
            case Regex::Kind::Star: node.left = import(r.left()); break;
            default: break;
        }
        nodes_.push_back(node);
        return static_cast<int>(nodes_.size()) - 1;
    }

    bool eval(int id, std::size_t begin, std::size_t end) {
        auto key = std::tuple{id, begin, end};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Node& node = nodes_[static_cast<std::size_t>(id)];
        bool result = false;
        switch (node.kind) {
            case Regex::Kind::EmptySet: result = false; break;
            case Regex::Kind::Epsilon: result = begin == end; break;
            case Regex::Kind::Symbol:
                result = end == begin + 1 && word_[begin] == node.symbol;
                break;
            case Regex::Kind::Union:
                result = eval(node.left, begin, end) || eval(node.right, begin, end);
                break;
            case Regex::Kind::Concat:
                for (std::size_t cut = begin; cut <= end && !result; ++cut)
                    result = eval(node.left, begin, cut) && eval(node.right, cut, end);
                break;
            case Regex::Kind::Star:
                if (begin == end) {
                    result = true;
                } else {
                    for (std::size_t cut = begin + 1; cut <= end && !result; ++cut)
                        result = eval(node.left, begin, cut) && eval(id, cut, end);
                }
                break;
        }
        memo_.emplace(key, result);
        return result;
    }

    std::vector<Node> nodes_;
    int root_ = -1;
    std::string word_;
    std::map<std::tuple<int, std::size_t, std::size_t>, bool> memo_;
};

inline Regex random_regex(std::mt19937_64& rng, const std::vector<char>& alphabet,
                          int depth = 5) {
    std::uniform_int_distribution<int> kind_dist(0, depth <= 0 ? 2 : 5);
    std::uniform_int_distribution<std::size_t> sym_dist(0, alphabet.size() - 1);
    switch (kind_dist(rng)) {
        case 0: return Regex::empty_set();
        case 1: return Regex::epsilon();
        case 2: return Regex::symbol(alphabet[sym_dist(rng)]);
        case 3:
            return Regex::concat(random_regex(rng, alphabet, depth - 1),
                                 random_regex(rng, alphabet, depth - 1));
        case 4:
            return Regex::alternation(random_regex(rng, alphabet, depth - 1),
                                      random_regex(rng, alphabet, depth - 1));
        default: return Regex::star(random_regex(rng, alphabet, depth - 1));
    }
}

inline Dfa random_dfa(std::mt19937_64& rng, const std::vector<char>& alphabet,
                      std::size_t max_states = 6) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_states);
    const std::size_t n = size_dist(rng);
    std::uniform_int_distribution<std::size_t> state_dist(0, n - 1);
    std::bernoulli_distribution accept_dist(0.4);
    std::vector<std::vector<std::size_t>> transitions(
        n, std::vector<std::size_t>(alphabet.size()));
    std::vector<bool> accepting(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t k = 0; k < alphabet.size(); ++k)
            transitions[q][k] = state_dist(rng);
        accepting[q] = accept_dist(rng);
    }
    return Dfa(alphabet, std::move(transitions), state_dist(rng), std::move(accepting));
}

// All-pairs distinguishability plus reachability: the classic check that a
// complete DFA is the minimal one. Independent of the Hopcroft path.
inline bool is_minimal_dfa(const Dfa& d) {
    const std::size_t n = d.state_count();
    const std::size_t m = d.alphabet().size();
    std::vector<bool> reachable(n, false);
    std::vector<std::size_t> stack{d.start()};
    reachable[d.start()] = true;
    while (!stack.empty()) {
        std::size_t q = stack.back();
        stack.pop_back();
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t t = d.step_index(q, k);
            if (!reachable[t]) {
                reachable[t] = true;
                stack.push_back(t);
            }
        }
    }
    for (std::size_t q = 0; q < n; ++q)
        if (!reachable[q]) return false;
    // Table-filling: mark pairs distinguished by acceptance, then propagate.
    std::vector<std::vector<bool>> distinct(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (d.accepting(a) != d.accepting(b)) distinct[a][b] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) {
                if (distinct[a][b]) continue;
                for (std::size_t k = 0; k < m; ++k)
                    if (distinct[d.step_index(a, k)][d.step_index(b, k)]) {
                        distinct[a][b] = distinct[b][a] = true;
                        changed = true;
                        break;
                    }
            }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!distinct[a][b]) return false;
    return true;
}

}  // namespace mostset::test
