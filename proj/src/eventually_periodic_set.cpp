#include "mostset/eventually_periodic_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mostset/errors.hpp"

namespace mostset {

namespace {

// Combined periods are bounded to keep Boolean ops on adversarial inputs
// from allocating huge residue masks.
constexpr std::uint64_t kMaxPeriod = 1u << 22;

}  // namespace

EventuallyPeriodicSet EventuallyPeriodicSet::from_parts(
    std::vector<bool> prefix_bits, std::uint64_t period,
    const std::vector<std::uint64_t>& residues) {
    if (period == 0) throw InvalidSpec("eventually periodic set: period must be >= 1");
    if (period > kMaxPeriod) throw InvalidSpec("eventually periodic set: period too large");
    EventuallyPeriodicSet s;
    s.prefix_ = std::move(prefix_bits);
    s.period_ = period;
    s.tail_.assign(period, false);
    for (std::uint64_t r : residues) {
        if (r >= period)
            throw InvalidSpec("eventually periodic set: residue " + std::to_string(r) +
                              " outside [0," + std::to_string(period) + ")");
        s.tail_[r] = true;
    }
    s.canonicalize();
    return s;
}

EventuallyPeriodicSet EventuallyPeriodicSet::naturals() {
    EventuallyPeriodicSet s;
    s.tail_[0] = true;
    return s;
}

EventuallyPeriodicSet EventuallyPeriodicSet::multiples_of(std::uint64_t k) {
    return residue_class(0, k);
}

EventuallyPeriodicSet EventuallyPeriodicSet::residue_class(std::uint64_t residue,
                                                           std::uint64_t period) {
    return from_parts({}, period, {residue});
}

EventuallyPeriodicSet EventuallyPeriodicSet::finite_set(
    const std::vector<std::uint64_t>& elements) {
    if (elements.empty()) return {};
    std::uint64_t top = *std::max_element(elements.begin(), elements.end());
    std::vector<bool> prefix(top + 1, false);
    for (std::uint64_t e : elements) prefix[e] = true;
    return from_parts(std::move(prefix), 1, {});
}

EventuallyPeriodicSet EventuallyPeriodicSet::from_bound(std::uint64_t bound) {
    return from_parts(std::vector<bool>(bound, false), 1, {0});
}

bool EventuallyPeriodicSet::is_empty() const {
    if (residue_count() != 0) return false;
    return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; });
}

std::vector<std::uint64_t> EventuallyPeriodicSet::residues() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < period_; ++r)
        if (tail_[r]) out.push_back(r);
    return out;
}

std::size_t EventuallyPeriodicSet::residue_count() const {
    return static_cast<std::size_t>(std::count(tail_.begin(), tail_.end(), true));
}

Density EventuallyPeriodicSet::density() const {
    return Rational(static_cast<std::int64_t>(residue_count()),
                    static_cast<std::int64_t>(period_));
}

std::string EventuallyPeriodicSet::to_string() const {
    std::ostringstream os;
    os << "{prefix=";
    if (prefix_.empty())
        os << "-";
    else
        for (bool b : prefix_) os << (b ? '1' : '0');
    os << ", n>=" << prefix_.size() << ": n mod " << period_ << " in {";
    bool first = true;
    for (std::uint64_t r = 0; r < period_; ++r) {
        if (!tail_[r]) continue;
        if (!first) os << ",";
        os << r;
        first = false;
    }
    os << "}}";
    return os.str();
}

void EventuallyPeriodicSet::canonicalize() {
    // Minimal period: the least divisor of period_ that reproduces the tail.
    for (std::uint64_t d = 1; d < period_; ++d) {
        if (period_ % d != 0) continue;
        bool ok = true;
        for (std::uint64_t r = 0; r < period_ && ok; ++r)
            if (tail_[r] != tail_[r % d]) ok = false;
        if (ok) {
            tail_.resize(d);
            period_ = d;
            break;
        }
    }
    // Minimal threshold: absorb prefix bits that already follow the tail rule.
    while (!prefix_.empty() &&
           prefix_.back() == tail_[(prefix_.size() - 1) % period_])
        prefix_.pop_back();
}

template <typename Op>
EventuallyPeriodicSet EventuallyPeriodicSet::combine(const EventuallyPeriodicSet& a,
                                                     const EventuallyPeriodicSet& b,
                                                     Op op) {
    std::uint64_t lcm = std::lcm(a.period_, b.period_);
    if (lcm > kMaxPeriod)
        throw Error("eventually periodic set: combined period too large");
    EventuallyPeriodicSet out;
    std::uint64_t threshold = std::max(a.prefix_.size(), b.prefix_.size());
    out.prefix_.resize(threshold);
    for (std::uint64_t n = 0; n < threshold; ++n)
        out.prefix_[n] = op(a.contains(n), b.contains(n));
    out.period_ = lcm;
    out.tail_.assign(lcm, false);
    for (std::uint64_t r = 0; r < lcm; ++r)
        out.tail_[r] = op(a.tail_[r % a.period_], b.tail_[r % b.period_]);
    out.canonicalize();
    return out;
}

EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& a,
                                const EventuallyPeriodicSet& b) {
    return EventuallyPeriodicSet::combine(a, b, [](bool x, bool y) { return x || y; });
}

EventuallyPeriodicSet set_intersection(const EventuallyPeriodicSet& a,
                                       const EventuallyPeriodicSet& b) {
    return EventuallyPeriodicSet::combine(a, b, [](bool x, bool y) { return x && y; });
}

EventuallyPeriodicSet set_difference(const EventuallyPeriodicSet& a,
                                     const EventuallyPeriodicSet& b) {
    return EventuallyPeriodicSet::combine(a, b, [](bool x, bool y) { return x && !y; });
}

EventuallyPeriodicSet symmetric_difference(const EventuallyPeriodicSet& a,
                                           const EventuallyPeriodicSet& b) {
    return EventuallyPeriodicSet::combine(a, b, [](bool x, bool y) { return x != y; });
}

EventuallyPeriodicSet complement(const EventuallyPeriodicSet& a) {
    EventuallyPeriodicSet out = a;
    out.prefix_.flip();
    out.tail_.flip();
    out.canonicalize();
    return out;
}

bool asymptotic(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
    return symmetric_difference(a, b).is_finite();
}

bool most(const EventuallyPeriodicSet& universe, const EventuallyPeriodicSet& subset) {
    if (universe.is_finite())
        throw UniverseNotInfinite("Most requires a countably infinite universe");
    Density in = set_intersection(subset, universe).density();
    Density out = set_difference(universe, subset).density();
    return in > out;  // ties are false: "more than half" is strict
}

bool most_sim(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
    const EventuallyPeriodicSet nat = EventuallyPeriodicSet::naturals();
    return most(nat, a) == most(nat, b);
}

}  // namespace mostset
