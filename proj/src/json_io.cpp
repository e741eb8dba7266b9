#include "mostset/json_io.hpp"

#include <algorithm>
#include <map>

#include "mostset/errors.hpp"

namespace mostset::io {

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t as_uint(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw InputError(std::string(what) + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

std::vector<char> alphabet_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw InputError("\"alphabet\" must be a non-empty array of single-character strings");
    std::vector<char> alphabet;
    for (const auto& sym : j) {
        if (!sym.is_string() || sym.get<std::string>().size() != 1)
            throw InputError("alphabet symbols must be single-character strings");
        alphabet.push_back(sym.get<std::string>()[0]);
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    return alphabet;
}

ElementSet element_set_from_json(const json& j) {
    if (!j.is_array()) throw InputError("a set must be a JSON array");
    ElementSet s;
    for (const auto& e : j) s.insert(element_from_json(e));
    return s;
}

std::vector<ElementSet> element_sets_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
    std::vector<ElementSet> sets;
    for (const auto& e : j) sets.push_back(element_set_from_json(e));
    return sets;
}

}  // namespace

EventuallyPeriodicSet eps_from_json(const json& j) {
    if (!j.is_object()) throw InputError("eventually periodic set must be a JSON object");
    const json& prefix = require(j, "prefix");
    const json& residues = require(j, "residues");
    if (!prefix.is_array() || !residues.is_array())
        throw InputError("\"prefix\" and \"residues\" must be arrays");
    std::vector<bool> bits;
    for (const auto& b : prefix) {
        std::uint64_t v = as_uint(b, "prefix bit");
        if (v > 1) throw InputError("prefix bits must be 0 or 1");
        bits.push_back(v == 1);
    }
    if (auto it = j.find("threshold"); it != j.end())
        if (as_uint(*it, "threshold") != bits.size())
            throw InputError("\"threshold\" must equal the prefix length");
    std::uint64_t period = as_uint(require(j, "period"), "period");
    std::vector<std::uint64_t> rs;
    for (const auto& r : residues) rs.push_back(as_uint(r, "residue"));
    return EventuallyPeriodicSet::from_parts(std::move(bits), period, rs);
}

ordered_json eps_to_json(const EventuallyPeriodicSet& s) {
    ordered_json j;
    j["threshold"] = s.threshold();
    ordered_json prefix = ordered_json::array();
    for (bool b : s.prefix_bits()) prefix.push_back(b ? 1 : 0);
    j["prefix"] = std::move(prefix);
    j["period"] = s.period();
    j["residues"] = s.residues();
    return j;
}

ordered_json density_to_json(const Rational& r) {
    ordered_json j;
    j["num"] = r.num();
    j["den"] = r.den();
    return j;
}

Rational rational_from_string(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)),
                        std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw InputError("expected a rational like \"1/1000\", got \"" + text + "\"");
    }
}

Element element_from_json(const json& j) {
    if (j.is_string()) return Element{j.get<std::string>()};
    if (j.is_number_integer() || j.is_number_unsigned())
        return Element{j.get<std::int64_t>()};
    throw InputError("set elements must be integers or strings");
}

ordered_json element_to_json(const Element& e) {
    if (std::holds_alternative<std::int64_t>(e))
        return ordered_json(std::get<std::int64_t>(e));
    return ordered_json(std::get<std::string>(e));
}

FiniteCollection collection_from_json(const json& j) {
    if (!j.is_object()) throw InputError("collection must be a JSON object");
    return FiniteCollection{element_sets_from_json(require(j, "sets"), "\"sets\"")};
}

IndexedFamily family_from_json(const json& j) {
    if (!j.is_object()) throw InputError("family must be a JSON object");
    const std::string kind = require(j, "kind").get<std::string>();
    const json params = j.value("params", json::object());

    auto build = [&]() -> IndexedFamily {
        if (kind == "prime_prefix")
            return IndexedFamily::prime_prefix(as_uint(require(params, "limit"), "limit"));
        if (kind == "constant")
            return IndexedFamily::constant(element_set_from_json(require(params, "set")));
        if (kind == "cumulative")
            return IndexedFamily::cumulative(
                element_set_from_json(require(params, "initial")),
                element_sets_from_json(require(params, "additions"), "\"additions\""));
        if (kind == "periodic_table") {
            const json& certs = require(params, "certificates");
            if (!certs.is_object())
                throw InputError("\"certificates\" must map elements to set descriptions");
            std::map<Element, EventuallyPeriodicSet> table;
            for (const auto& [key, value] : certs.items()) {
                // Keys that read as integers denote integer elements.
                Element e = Element{key};
                try {
                    std::size_t used = 0;
                    std::int64_t n = std::stoll(key, &used);
                    if (used == key.size()) e = Element{n};
                } catch (const std::logic_error&) {
                }
                table.emplace(std::move(e), eps_from_json(value));
            }
            return IndexedFamily::periodic_table(std::move(table));
        }
        if (kind == "pairwise_disjoint")
            return IndexedFamily::pairwise_disjoint(
                element_sets_from_json(require(params, "sets"), "\"sets\""));
        if (kind == "table")
            return IndexedFamily::table(
                element_sets_from_json(require(params, "sets"), "\"sets\""));
        throw InputError("unknown family kind \"" + kind + "\"");
    };

    IndexedFamily family = build();
    if (auto it = j.find("universe"); it != j.end()) {
        std::vector<Element> universe = family.candidate_universe();
        for (const auto& e : *it) universe.push_back(element_from_json(e));
        return IndexedFamily(family.kind(), std::move(universe),
                             [family](const Element& w, std::uint64_t i) {
                                 return family.membership(w, i);
                             },
                             [family](const Element& w) { return family.certificate(w); });
    }
    return family;
}

LanguageFamily language_family_from_json(const json& j) {
    if (!j.is_object()) throw InputError("language family must be a JSON object");
    const std::string kind = require(j, "kind").get<std::string>();
    if (kind == "cumulative_0n1n") return LanguageFamily::cumulative_0n1n();
    throw InputError("unknown language family kind \"" + kind + "\"");
}

Dfa dfa_from_json(const json& j) {
    if (!j.is_object()) throw InputError("dfa must be a JSON object");
    std::vector<char> alphabet = alphabet_from_json(require(j, "alphabet"));
    if (j.contains("regex")) {
        Regex r = parse_regex(j["regex"].get<std::string>(), alphabet);
        return regex_to_dfa(r, std::move(alphabet));
    }

    const json& states = require(j, "states");
    if (!states.is_array() || states.empty())
        throw InputError("\"states\" must be a non-empty array");
    std::map<std::string, std::size_t> index_of;
    for (const auto& s : states) {
        if (!s.is_string()) throw InputError("state names must be strings");
        if (!index_of.emplace(s.get<std::string>(), index_of.size()).second)
            throw InputError("duplicate state name \"" + s.get<std::string>() + "\"");
    }
    auto state_index = [&](const std::string& name) {
        auto it = index_of.find(name);
        if (it == index_of.end())
            throw InputError("unknown state \"" + name + "\"");
        return it->second;
    };

    const std::size_t n = index_of.size();
    std::vector<std::vector<std::size_t>> transitions(
        n, std::vector<std::size_t>(alphabet.size(), n));  // n marks "missing"
    const json& delta = require(j, "delta");
    if (!delta.is_object()) throw InputError("\"delta\" must be an object");
    for (const auto& [key, value] : delta.items()) {
        std::size_t comma = key.rfind(',');
        if (comma == std::string::npos || comma + 2 != key.size())
            throw InputError("delta key \"" + key + "\" must look like \"state,symbol\"");
        const std::string state_name = key.substr(0, comma);
        const char symbol = key[comma + 1];
        auto pos = std::lower_bound(alphabet.begin(), alphabet.end(), symbol);
        if (pos == alphabet.end() || *pos != symbol)
            throw InputError("delta symbol '" + std::string(1, symbol) +
                             "' not in the alphabet");
        transitions[state_index(state_name)]
                   [static_cast<std::size_t>(pos - alphabet.begin())] =
            state_index(value.get<std::string>());
    }
    for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < alphabet.size(); ++k)
            if (transitions[q][k] == n)
                throw InputError("delta is not total: no transition for \"" +
                                 states[q].get<std::string>() + "," +
                                 std::string(1, alphabet[k]) + "\"");

    std::vector<bool> accepting(n, false);
    for (const auto& name : require(j, "accept"))
        accepting[state_index(name.get<std::string>())] = true;
    std::size_t start = state_index(require(j, "start").get<std::string>());
    return Dfa(std::move(alphabet), std::move(transitions), start, std::move(accepting));
}

ordered_json dfa_to_json(const Dfa& dfa) {
    const Dfa canon = canonical_form(dfa);
    auto name = [](std::size_t q) { return "q" + std::to_string(q); };
    ordered_json j;
    ordered_json states = ordered_json::array();
    for (std::size_t q = 0; q < canon.state_count(); ++q) states.push_back(name(q));
    j["states"] = std::move(states);
    ordered_json alphabet = ordered_json::array();
    for (char c : canon.alphabet()) alphabet.push_back(std::string(1, c));
    j["alphabet"] = std::move(alphabet);
    ordered_json delta = ordered_json::object();
    for (std::size_t q = 0; q < canon.state_count(); ++q)
        for (std::size_t k = 0; k < canon.alphabet().size(); ++k)
            delta[name(q) + "," + std::string(1, canon.alphabet()[k])] =
                name(canon.step_index(q, k));
    j["delta"] = std::move(delta);
    j["start"] = name(canon.start());
    ordered_json accept = ordered_json::array();
    for (std::size_t q = 0; q < canon.state_count(); ++q)
        if (canon.accepting(q)) accept.push_back(name(q));
    j["accept"] = std::move(accept);
    return j;
}

Hypergraph hypergraph_from_json(const json& j) {
    if (!j.is_object()) throw InputError("hypergraph must be a JSON object");
    std::vector<std::string> vertices;
    if (auto it = j.find("vertices"); it != j.end())
        for (const auto& v : *it) vertices.push_back(v.get<std::string>());
    std::vector<std::set<std::string>> edges;
    for (const auto& edge : require(j, "edges")) {
        std::set<std::string> e;
        for (const auto& v : edge) e.insert(v.get<std::string>());
        edges.push_back(std::move(e));
    }
    return make_hypergraph(std::move(vertices), std::move(edges));
}

ordered_json estimate_to_json(const DensityEstimate& est) {
    ordered_json j;
    j["count"] = est.member_count;
    j["sample_bound"] = est.sample_bound;
    j["converged"] = est.converged;
    j["oscillation"] = density_to_json(est.oscillation);
    return j;
}

}  // namespace mostset::io
