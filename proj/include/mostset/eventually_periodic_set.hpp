#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "mostset/rational.hpp"

namespace mostset {

/// Exact representation of a subset of the naturals with a finite
/// exceptional prefix and a periodic tail.
///
/// A value consists of an explicit bit prefix covering indices
/// 0..threshold-1 and, for n >= threshold, the rule `n in S iff
/// (n mod period) in residues`. Every instance is kept in canonical form:
///   * the period is minimal (no proper divisor of it describes the same
///     tail), and
///   * the threshold is minimal (no trailing prefix bit agrees with the
///     periodic rule at its index).
/// Canonical values denote equal subsets of the naturals exactly when they
/// compare equal field by field, so operator== decides set equality.
///
/// The class is closed under union, intersection, complement and
/// difference, and its natural density is the exact rational
/// |residues| / period.
class EventuallyPeriodicSet {
public:
    /// The empty set.
    EventuallyPeriodicSet() : prefix_{}, period_(1), tail_(1, false) {}

    /// Canonicalizes an arbitrary raw description. The threshold is the
    /// prefix length. Throws InvalidSpec if period is zero or a residue
    /// falls outside [0,period).
    static EventuallyPeriodicSet from_parts(std::vector<bool> prefix_bits,
                                            std::uint64_t period,
                                            const std::vector<std::uint64_t>& residues);

    static EventuallyPeriodicSet empty_set() { return {}; }
    static EventuallyPeriodicSet naturals();
    /// All multiples of k (residue class 0 mod k). Density 1/k.
    static EventuallyPeriodicSet multiples_of(std::uint64_t k);
    /// {n : n mod period == residue}
    static EventuallyPeriodicSet residue_class(std::uint64_t residue, std::uint64_t period);
    /// A finite set given by an explicit element list.
    static EventuallyPeriodicSet finite_set(const std::vector<std::uint64_t>& elements);
    /// The cofinite set {n : n >= bound}.
    static EventuallyPeriodicSet from_bound(std::uint64_t bound);

    bool contains(std::uint64_t n) const {
        if (n < prefix_.size()) return prefix_[n];
        return tail_[n % period_];
    }

    /// Finite iff the periodic tail is empty.
    bool is_finite() const { return residue_count() == 0; }
    bool is_infinite() const { return !is_finite(); }
    bool is_empty() const;

    std::uint64_t threshold() const { return prefix_.size(); }
    const std::vector<bool>& prefix_bits() const { return prefix_; }
    std::uint64_t period() const { return period_; }
    /// Sorted residues of the periodic tail.
    std::vector<std::uint64_t> residues() const;
    std::size_t residue_count() const;

    /// Exact natural density, |residues| / period.
    Density density() const;

    friend bool operator==(const EventuallyPeriodicSet& a,
                           const EventuallyPeriodicSet& b) {
        return a.period_ == b.period_ && a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
    }
    friend bool operator!=(const EventuallyPeriodicSet& a,
                           const EventuallyPeriodicSet& b) {
        return !(a == b);
    }

    /// Human-readable form, e.g. "{prefix=101, n>=3: n mod 2 in {0}}".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const EventuallyPeriodicSet& s) {
        return os << s.to_string();
    }

    friend EventuallyPeriodicSet set_union(const EventuallyPeriodicSet&,
                                           const EventuallyPeriodicSet&);
    friend EventuallyPeriodicSet set_intersection(const EventuallyPeriodicSet&,
                                                  const EventuallyPeriodicSet&);
    friend EventuallyPeriodicSet set_difference(const EventuallyPeriodicSet&,
                                                const EventuallyPeriodicSet&);
    friend EventuallyPeriodicSet symmetric_difference(const EventuallyPeriodicSet&,
                                                      const EventuallyPeriodicSet&);
    friend EventuallyPeriodicSet complement(const EventuallyPeriodicSet&);

private:
    template <typename Op>
    static EventuallyPeriodicSet combine(const EventuallyPeriodicSet& a,
                                         const EventuallyPeriodicSet& b, Op op);
    void canonicalize();

    std::vector<bool> prefix_;  // membership of 0..threshold-1
    std::uint64_t period_;      // >= 1
    std::vector<bool> tail_;    // residue mask of length period_
};

/// True iff the symmetric difference of the two sets is finite.
bool asymptotic(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);

/// Most(U, A): more than half of U lies in A, i.e. the density of A
/// intersected with U strictly exceeds the density of U minus A.
/// Throws UniverseNotInfinite when the universe is finite.
bool most(const EventuallyPeriodicSet& universe, const EventuallyPeriodicSet& subset);

/// MostSim: the two sets get the same Most verdict over the naturals.
bool most_sim(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b);

}  // namespace mostset
