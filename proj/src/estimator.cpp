#include "mostset/estimator.hpp"

#include <array>

#include "mostset/errors.hpp"

namespace mostset {

namespace {

DensityEstimate estimate_window(const MembershipOracle& member, std::uint64_t n,
                                std::uint64_t first, Rational tolerance) {
    if (n == 0) throw Error("density estimate: sample bound must be >= 1");
    // One pass over [first, first + 8N), recording counts at N, 2N, 4N, 8N.
    std::array<std::uint64_t, 4> bounds{n, 2 * n, 4 * n, 8 * n};
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t count = 0;
    std::size_t checkpoint = 0;
    for (std::uint64_t seen = 0; seen < bounds.back(); ++seen) {
        if (member(first + seen)) ++count;
        if (seen + 1 == bounds[checkpoint]) counts[checkpoint++] = count;
    }
    std::array<Rational, 4> quotients;
    for (std::size_t i = 0; i < 4; ++i)
        quotients[i] = Rational(static_cast<std::int64_t>(counts[i]),
                                static_cast<std::int64_t>(bounds[i]));
    Rational oscillation{0};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            Rational diff = (quotients[i] - quotients[j]).abs();
            if (diff > oscillation) oscillation = diff;
        }
    DensityEstimate est;
    est.member_count = counts[0];
    est.sample_bound = n;
    est.oscillation = oscillation;
    est.converged = oscillation <= tolerance;
    return est;
}

}  // namespace

DensityEstimate partial_density(const MembershipOracle& member, std::uint64_t n,
                                Rational tolerance) {
    return estimate_window(member, n, 1, tolerance);
}

DensityEstimate prefix_density(const MembershipOracle& bit, std::uint64_t n,
                               Rational tolerance) {
    return estimate_window(bit, n, 0, tolerance);
}

}  // namespace mostset
