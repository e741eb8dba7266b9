#include "mostset/language_family.hpp"

#include "mostset/errors.hpp"

namespace mostset {

std::optional<std::uint64_t> diagonal_exponent(const std::string& word) {
    if (word.empty() || word.size() % 2 != 0) return std::nullopt;
    const std::uint64_t k = word.size() / 2;
    for (std::uint64_t i = 0; i < k; ++i)
        if (word[i] != '0') return std::nullopt;
    for (std::uint64_t i = k; i < word.size(); ++i)
        if (word[i] != '1') return std::nullopt;
    return k;
}

LanguageFamily LanguageFamily::cumulative_0n1n() {
    auto membership = [](const std::string& word, std::uint64_t index) {
        auto k = diagonal_exponent(word);
        return k.has_value() && *k <= index + 1;  // L_i = {0^k1^k : 1 <= k <= i+1}
    };
    auto certificate = [](const std::string& word) -> std::optional<EventuallyPeriodicSet> {
        auto k = diagonal_exponent(word);
        if (!k) return EventuallyPeriodicSet::empty_set();
        return EventuallyPeriodicSet::from_bound(*k - 1);
    };
    return LanguageFamily("cumulative_0n1n", membership, certificate);
}

DensityLanguageMembership density_language_membership(const LanguageFamily& family,
                                                      const std::string& word) {
    auto cert = family.certificate(word);
    if (!cert)
        throw CertificateRequired("no density certificate for word \"" + word + "\"");
    DensityLanguageMembership result;
    result.certificate_density = cert->density();
    result.member = cert->is_infinite() && most(EventuallyPeriodicSet::naturals(), *cert);
    return result;
}

}  // namespace mostset
