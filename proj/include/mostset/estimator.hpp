#pragma once

#include <cstdint>
#include <functional>

#include "mostset/rational.hpp"

namespace mostset {

/// Membership oracle over the naturals.
using MembershipOracle = std::function<bool(std::uint64_t)>;

/// Partial-density estimate for a set known only through a membership
/// oracle. `member_count / sample_bound` is the exact partial quotient at
/// the requested bound; convergence is judged over doubling checkpoints
/// N, 2N, 4N, 8N: the estimate converged iff the maximum pairwise
/// difference of the four partial quotients stays within the tolerance.
/// A converged=false result means no truth value should be derived from
/// the estimate; the limit may not exist at all.
struct DensityEstimate {
    std::uint64_t member_count = 0;  // members seen up to sample_bound
    std::uint64_t sample_bound = 0;  // the requested N
    bool converged = false;
    Rational oscillation;            // max |d_i - d_j| over the checkpoint window

    /// Exact partial quotient, reduced.
    Rational partial_value() const {
        return Rational(static_cast<std::int64_t>(member_count),
                        static_cast<std::int64_t>(sample_bound));
    }
};

inline const Rational kDefaultTolerance{1, 1000};

/// Counts members of {1..N} (the partial quotient of the natural-density
/// limit) and runs the doubling-window convergence check up to 8N.
DensityEstimate partial_density(const MembershipOracle& member, std::uint64_t n,
                                Rational tolerance = kDefaultTolerance);

/// Same policy over the index window {0..N-1}; used for acceptance
/// sequences, whose indices start at 0.
DensityEstimate prefix_density(const MembershipOracle& bit, std::uint64_t n,
                               Rational tolerance = kDefaultTolerance);

}  // namespace mostset
