#include "mostset/indexed_family.hpp"

#include <algorithm>

#include "mostset/errors.hpp"

namespace mostset {

namespace {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (composite[n]) continue;
        primes.push_back(n);
        for (std::uint64_t m = n * n; m <= limit; m += n) composite[m] = true;
    }
    return primes;
}

std::vector<Element> sorted_unique(std::vector<Element> universe) {
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    return universe;
}

std::vector<Element> collect_universe(const std::vector<ElementSet>& sets) {
    std::vector<Element> universe;
    for (const ElementSet& s : sets) universe.insert(universe.end(), s.begin(), s.end());
    return sorted_unique(std::move(universe));
}

}  // namespace

IndexedFamily::IndexedFamily(std::string kind, std::vector<Element> universe,
                             MembershipFn membership, CertificateFn certificate)
    : kind_(std::move(kind)),
      universe_(sorted_unique(std::move(universe))),
      membership_(std::move(membership)),
      certificate_(std::move(certificate)) {}

IndexedFamily IndexedFamily::prime_prefix(std::uint64_t limit) {
    auto primes = sieve_primes(limit);
    // 1-based rank of each prime; w lies in A_i iff w is the rank-th prime
    // and i >= rank.
    std::map<std::int64_t, std::uint64_t> rank;
    for (std::size_t i = 0; i < primes.size(); ++i)
        rank[static_cast<std::int64_t>(primes[i])] = i + 1;
    std::vector<Element> universe;
    for (std::uint64_t n = 1; n <= limit; ++n)
        universe.emplace_back(static_cast<std::int64_t>(n));
    auto membership = [rank](const Element& w, std::uint64_t i) {
        if (!std::holds_alternative<std::int64_t>(w)) return false;
        auto it = rank.find(std::get<std::int64_t>(w));
        return it != rank.end() && it->second <= i;
    };
    auto certificate = [rank](const Element& w) -> std::optional<EventuallyPeriodicSet> {
        if (!std::holds_alternative<std::int64_t>(w))
            return EventuallyPeriodicSet::empty_set();
        auto it = rank.find(std::get<std::int64_t>(w));
        if (it == rank.end()) return EventuallyPeriodicSet::empty_set();
        return EventuallyPeriodicSet::from_bound(it->second);
    };
    return IndexedFamily("prime_prefix", std::move(universe), membership, certificate);
}

IndexedFamily IndexedFamily::constant(ElementSet base) {
    std::vector<Element> universe(base.begin(), base.end());
    auto membership = [base](const Element& w, std::uint64_t) { return base.contains(w); };
    auto certificate = [base](const Element& w) -> std::optional<EventuallyPeriodicSet> {
        return base.contains(w) ? EventuallyPeriodicSet::naturals()
                                : EventuallyPeriodicSet::empty_set();
    };
    return IndexedFamily("constant", std::move(universe), membership, certificate);
}

IndexedFamily IndexedFamily::cumulative(ElementSet initial,
                                        std::vector<ElementSet> additions) {
    // join[w] = least i with w in A_i; sets only grow, so the index set of
    // every element is cofinite from its join point (or empty).
    std::map<Element, std::uint64_t> join;
    for (const Element& e : initial) join.emplace(e, 0);
    for (std::size_t n = 0; n < additions.size(); ++n)
        for (const Element& e : additions[n]) join.emplace(e, n + 1);
    std::vector<Element> universe;
    for (const auto& [e, _] : join) universe.push_back(e);
    auto membership = [join](const Element& w, std::uint64_t i) {
        auto it = join.find(w);
        return it != join.end() && it->second <= i;
    };
    auto certificate = [join](const Element& w) -> std::optional<EventuallyPeriodicSet> {
        auto it = join.find(w);
        if (it == join.end()) return EventuallyPeriodicSet::empty_set();
        return EventuallyPeriodicSet::from_bound(it->second);
    };
    return IndexedFamily("cumulative", std::move(universe), membership, certificate);
}

IndexedFamily IndexedFamily::periodic_table(
    std::map<Element, EventuallyPeriodicSet> table) {
    std::vector<Element> universe;
    for (const auto& [e, _] : table) universe.push_back(e);
    auto membership = [table](const Element& w, std::uint64_t i) {
        auto it = table.find(w);
        return it != table.end() && it->second.contains(i);
    };
    auto certificate = [table](const Element& w) -> std::optional<EventuallyPeriodicSet> {
        auto it = table.find(w);
        if (it == table.end()) return EventuallyPeriodicSet::empty_set();
        return it->second;
    };
    return IndexedFamily("periodic_table", std::move(universe), membership, certificate);
}

IndexedFamily IndexedFamily::pairwise_disjoint(std::vector<ElementSet> sets) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (const Element& e : sets[i])
                if (sets[j].contains(e))
                    throw InputError("pairwise_disjoint family: sets " + std::to_string(i) +
                                     " and " + std::to_string(j) + " share element " +
                                     element_to_string(e));
    IndexedFamily fam = table(std::move(sets));
    return IndexedFamily("pairwise_disjoint", fam.candidate_universe(),
                         [fam](const Element& w, std::uint64_t i) { return fam.membership(w, i); },
                         [fam](const Element& w) { return fam.certificate(w); });
}

IndexedFamily IndexedFamily::table(std::vector<ElementSet> sets) {
    std::vector<Element> universe = collect_universe(sets);
    auto membership = [sets](const Element& w, std::uint64_t i) {
        return i < sets.size() && sets[i].contains(w);
    };
    auto certificate = [sets](const Element& w) -> std::optional<EventuallyPeriodicSet> {
        std::vector<std::uint64_t> indices;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (sets[i].contains(w)) indices.push_back(i);
        return EventuallyPeriodicSet::finite_set(indices);
    };
    return IndexedFamily("table", std::move(universe), membership, certificate);
}

std::vector<int> acceptance_prefix(const IndexedFamily& family, const Element& w,
                                   std::uint64_t n) {
    if (n == 0) throw Error("acceptance prefix: length must be >= 1");
    std::vector<int> bits(n);
    for (std::uint64_t i = 0; i < n; ++i) bits[i] = family.membership(w, i) ? 1 : 0;
    return bits;
}

SetInterpretation set_interpretation(const IndexedFamily& family, const Element& w) {
    SetInterpretation interp;
    interp.exact = family.certificate(w);
    interp.oracle = [family, w](std::uint64_t i) { return family.membership(w, i); };
    return interp;
}

ElementSet most_intersect_indexed(const IndexedFamily& family) {
    const EventuallyPeriodicSet nat = EventuallyPeriodicSet::naturals();
    ElementSet result;
    for (const Element& w : family.candidate_universe()) {
        auto cert = family.certificate(w);
        if (!cert)
            throw CertificateRequired("no density certificate for element " +
                                      element_to_string(w));
        // Clause one: the acceptance sequence never becomes all-zero, i.e.
        // the index set is infinite. Clause two: Most over the naturals.
        if (cert->is_infinite() && most(nat, *cert)) result.insert(w);
    }
    return result;
}

std::vector<EstimatedMember> most_intersect_estimated(const IndexedFamily& family,
                                                      std::uint64_t n,
                                                      Rational tolerance) {
    const Rational half{1, 2};
    std::vector<EstimatedMember> result;
    for (const Element& w : family.candidate_universe()) {
        DensityEstimate est = prefix_density(
            [&](std::uint64_t i) { return family.membership(w, i); }, n, tolerance);
        if (est.converged && est.partial_value() > half)
            result.push_back({w, est});
    }
    return result;
}

IndexedFamily union_map(const IndexedFamily& family, const ElementSet& base) {
    std::vector<Element> universe = family.candidate_universe();
    universe.insert(universe.end(), base.begin(), base.end());
    auto membership = [family, base](const Element& w, std::uint64_t i) {
        return base.contains(w) || family.membership(w, i);
    };
    auto certificate = [family, base](const Element& w) -> std::optional<EventuallyPeriodicSet> {
        if (base.contains(w)) return EventuallyPeriodicSet::naturals();
        return family.certificate(w);
    };
    return IndexedFamily("union_map(" + family.kind() + ")", std::move(universe),
                         membership, certificate);
}

}  // namespace mostset
