#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "mostset/eventually_periodic_set.hpp"
#include "mostset/rational.hpp"

namespace mostset {

/// A countably infinite indexed collection of languages {L_i} with
/// per-string density certificates: certificate(w) is the index set
/// {i : w in L_i} as an exact eventually-periodic set.
///
/// Finite collections of automata get an exact regular construction
/// (majority_product); infinite collections are only tractable through
/// certificates, so membership in the density language is decided
/// string by string.
class LanguageFamily {
public:
    using MembershipFn = std::function<bool(const std::string&, std::uint64_t)>;
    using CertificateFn = std::function<std::optional<EventuallyPeriodicSet>(const std::string&)>;

    LanguageFamily(std::string kind, MembershipFn membership, CertificateFn certificate)
        : kind_(std::move(kind)),
          membership_(std::move(membership)),
          certificate_(std::move(certificate)) {}

    /// The growing family L_0 = {01}, L_{n+1} = L_n ∪ {0^{n+1}1^{n+1}}.
    /// Every diagonal word 0^k1^k joins at index k-1 and stays, so its
    /// index set is cofinite; all other words lie in no language. The
    /// density language is {0^k1^k : k >= 1}, which no DFA recognizes.
    static LanguageFamily cumulative_0n1n();

    const std::string& kind() const { return kind_; }
    bool membership(const std::string& word, std::uint64_t index) const {
        return membership_(word, index);
    }
    std::optional<EventuallyPeriodicSet> certificate(const std::string& word) const {
        return certificate_(word);
    }

private:
    std::string kind_;
    MembershipFn membership_;
    CertificateFn certificate_;
};

struct DensityLanguageMembership {
    bool member = false;
    Density certificate_density;  // density of the word's index set
};

/// Whether the word belongs to the family's density language: Most over
/// the naturals of the word's certificate. Throws CertificateRequired
/// when the family cannot certify the word.
DensityLanguageMembership density_language_membership(const LanguageFamily& family,
                                                      const std::string& word);

/// The k with word == 0^k 1^k (k >= 1), if any.
std::optional<std::uint64_t> diagonal_exponent(const std::string& word);

}  // namespace mostset
