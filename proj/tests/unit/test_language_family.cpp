#include <doctest.h>

#include <random>

#include "mostset/errors.hpp"
#include "mostset/language_family.hpp"
#include "mostset/nerode.hpp"
#include "support/support.hpp"

using namespace mostset;

namespace {

std::string diagonal(std::uint64_t k) {
    return std::string(k, '0') + std::string(k, '1');
}

bool in_density_language(const LanguageFamily& fam, const std::string& w) {
    return density_language_membership(fam, w).member;
}

}  // namespace

TEST_CASE("diagonal words are recognized structurally") {
    CHECK(diagonal_exponent("01") == 1);
    CHECK(diagonal_exponent("0011") == 2);
    CHECK_FALSE(diagonal_exponent("").has_value());
    CHECK_FALSE(diagonal_exponent("011").has_value());
    CHECK_FALSE(diagonal_exponent("0110").has_value());
    CHECK_FALSE(diagonal_exponent("10").has_value());
}

TEST_CASE("the growing family contains the diagonals it has reached") {
    LanguageFamily fam = LanguageFamily::cumulative_0n1n();
    // L_0 = {01}
    CHECK(fam.membership("01", 0));
    CHECK_FALSE(fam.membership("0011", 0));
    // L_2 = {01, 0011, 000111}
    CHECK(fam.membership("000111", 2));
    CHECK_FALSE(fam.membership("00001111", 2));
    CHECK_FALSE(fam.membership("010", 5));
}

TEST_CASE("density-language membership of the growing family") {
    LanguageFamily fam = LanguageFamily::cumulative_0n1n();
    auto r01 = density_language_membership(fam, "01");
    CHECK(r01.member);
    CHECK(r01.certificate_density == Rational(1));
    auto r0011 = density_language_membership(fam, "0011");
    CHECK(r0011.member);
    CHECK(r0011.certificate_density == Rational(1));
    auto r010 = density_language_membership(fam, "010");
    CHECK_FALSE(r010.member);
    CHECK(r010.certificate_density == Rational(0));
}

TEST_CASE("certificates match direct membership on sampled indices") {
    LanguageFamily fam = LanguageFamily::cumulative_0n1n();
    for (const std::string& w : {std::string("01"), diagonal(3), diagonal(7),
                                 std::string("0101"), std::string("111")}) {
        auto cert = fam.certificate(w);
        REQUIRE(cert.has_value());
        for (std::uint64_t i = 0; i < 32; ++i) CHECK(cert->contains(i) == fam.membership(w, i));
    }
}

TEST_CASE("density language equals the diagonal set at desk scale") {
    LanguageFamily fam = LanguageFamily::cumulative_0n1n();
    const std::vector<char> alphabet{'0', '1'};
    // exhaustive over short strings
    for (const std::string& w : test::all_strings(alphabet, 12))
        CHECK(in_density_language(fam, w) == diagonal_exponent(w).has_value());
    // the 0^i 1^j boundary grid up to length 40
    for (std::uint64_t i = 0; i <= 20; ++i)
        for (std::uint64_t j = 0; j <= 20; ++j) {
            std::string w = std::string(i, '0') + std::string(j, '1');
            CHECK(in_density_language(fam, w) == (i == j && i >= 1));
        }
    // single-character corruptions of diagonals are never members
    for (std::uint64_t k = 1; k <= 20; ++k) {
        std::string w = diagonal(k);
        for (std::size_t at = 0; at < w.size(); ++at) {
            std::string corrupted = w;
            corrupted[at] = corrupted[at] == '0' ? '1' : '0';
            CHECK_FALSE(in_density_language(fam, corrupted));
        }
    }
    // seeded random strings of lengths 13..40
    std::mt19937_64 rng(1009);
    std::uniform_int_distribution<std::size_t> len_dist(13, 40);
    std::bernoulli_distribution bit(0.5);
    for (int i = 0; i < 500; ++i) {
        std::string w;
        std::size_t len = len_dist(rng);
        for (std::size_t j = 0; j < len; ++j) w += bit(rng) ? '1' : '0';
        CHECK(in_density_language(fam, w) == diagonal_exponent(w).has_value());
    }
}

TEST_CASE("nerode evidence separates twenty zero-prefixes of the density language") {
    LanguageFamily fam = LanguageFamily::cumulative_0n1n();
    std::vector<std::string> prefixes, suffixes;
    for (std::uint64_t i = 1; i <= 20; ++i) {
        prefixes.push_back(std::string(i, '0'));
        suffixes.push_back(std::string(i, '1'));
    }
    NerodeEvidence ev = nerode_evidence(
        [&](const std::string& w) { return in_density_language(fam, w); },
        prefixes, suffixes);
    CHECK(ev.distinguishable_count == 20);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = i + 1; j < 20; ++j) {
            REQUIRE(ev.distinguished(i, j));
            // the witness suffix really separates the two prefixes
            std::size_t s = *ev.witness[i][j];
            CHECK(in_density_language(fam, ev.prefixes[i] + ev.suffixes[s]) !=
                  in_density_language(fam, ev.prefixes[j] + ev.suffixes[s]));
        }
}

TEST_CASE("nerode evidence collapses indistinguishable prefixes") {
    std::vector<std::string> prefixes{"", "0", "00", "000"};
    std::vector<std::string> suffixes{"", "0", "00"};
    auto all_zeros = [](const std::string& w) {
        return w.find('1') == std::string::npos;
    };
    NerodeEvidence ev = nerode_evidence(all_zeros, prefixes, suffixes);
    CHECK(ev.distinguishable_count == 1);
    NerodeEvidence empty_ev = nerode_evidence(
        [](const std::string&) { return false; }, prefixes, suffixes);
    CHECK(empty_ev.distinguishable_count == 1);
    CHECK_FALSE(empty_ev.distinguished(0, 1));
}
