#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mostset/element.hpp"
#include "mostset/estimator.hpp"
#include "mostset/eventually_periodic_set.hpp"

namespace mostset {

/// A countable collection {A_i} of sets, i ranging over the naturals.
///
/// The family is accessed through two views:
///   * membership(w, i) — whether w lies in A_i; always available.
///   * certificate(w)   — the index set {i : w in A_i} as an exact
///     eventually-periodic set, when the family can produce one. Exact
///     most-intersection needs certificates; estimation works without.
///
/// The candidate universe is the enumerable pool of elements that can
/// possibly belong to any A_i; most-intersection quantifies over it.
class IndexedFamily {
public:
    using MembershipFn = std::function<bool(const Element&, std::uint64_t)>;
    using CertificateFn = std::function<std::optional<EventuallyPeriodicSet>(const Element&)>;

    IndexedFamily(std::string kind, std::vector<Element> universe,
                  MembershipFn membership, CertificateFn certificate);

    // Built-in kinds.

    /// A_i = the first i primes; candidates are 1..limit.
    static IndexedFamily prime_prefix(std::uint64_t limit);
    /// A_i = base for every i.
    static IndexedFamily constant(ElementSet base);
    /// A_0 = initial, A_{n+1} = A_n union additions[n]; sets grow and never
    /// shrink, so each element's index set is empty or cofinite.
    static IndexedFamily cumulative(ElementSet initial,
                                    std::vector<ElementSet> additions);
    /// Certificates listed explicitly per element; membership(w,i) is read
    /// off the certificate.
    static IndexedFamily periodic_table(std::map<Element, EventuallyPeriodicSet> table);
    /// Finite list of pairwise-disjoint sets, extended with empty sets.
    /// Throws InputError when two listed sets intersect.
    static IndexedFamily pairwise_disjoint(std::vector<ElementSet> sets);
    /// User-defined finite table A_0..A_{k-1}, empty beyond.
    static IndexedFamily table(std::vector<ElementSet> sets);

    const std::string& kind() const { return kind_; }
    const std::vector<Element>& candidate_universe() const { return universe_; }
    bool membership(const Element& w, std::uint64_t index) const {
        return membership_(w, index);
    }
    std::optional<EventuallyPeriodicSet> certificate(const Element& w) const {
        return certificate_(w);
    }

private:
    std::string kind_;
    std::vector<Element> universe_;  // sorted, unique
    MembershipFn membership_;
    CertificateFn certificate_;
};

/// First n bits of the characteristic acceptance sequence of w:
/// bit i is 1 iff w lies in A_i.
std::vector<int> acceptance_prefix(const IndexedFamily& family, const Element& w,
                                   std::uint64_t n);

/// The set interpretation S of the acceptance sequence of w:
/// i in S iff w in A_i. Exact when the family certifies w, otherwise an
/// oracle over indices.
struct SetInterpretation {
    std::optional<EventuallyPeriodicSet> exact;
    MembershipOracle oracle;

    bool is_exact() const { return exact.has_value(); }
};

SetInterpretation set_interpretation(const IndexedFamily& family, const Element& w);

/// Exact most-intersection over the candidate universe: elements whose
/// index set is infinite and holds Most over the naturals. Both clauses
/// are checked, although the density condition already forces an infinite
/// index set in exact mode. Throws CertificateRequired when a candidate
/// has no certificate.
ElementSet most_intersect_indexed(const IndexedFamily& family);

/// Estimated most-intersection; usable without certificates and
/// explicitly non-exact. An element is included when the partial density
/// of its first n acceptance bits strictly exceeds one half and the
/// estimate converged; the estimate rides along for inspection.
struct EstimatedMember {
    Element element;
    DensityEstimate estimate;
};

std::vector<EstimatedMember> most_intersect_estimated(
    const IndexedFamily& family, std::uint64_t n,
    Rational tolerance = kDefaultTolerance);

/// The family with every A_i replaced by base ∪ A_i. Elements of base get
/// the full index set as their certificate; the candidate universe gains
/// the elements of base.
IndexedFamily union_map(const IndexedFamily& family, const ElementSet& base);

}  // namespace mostset
