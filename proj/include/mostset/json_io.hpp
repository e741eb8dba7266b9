#pragma once

#include <json.hpp>

#include "mostset/collections.hpp"
#include "mostset/dfa.hpp"
#include "mostset/estimator.hpp"
#include "mostset/eventually_periodic_set.hpp"
#include "mostset/hypergraph.hpp"
#include "mostset/indexed_family.hpp"
#include "mostset/language_family.hpp"
#include "mostset/rational.hpp"

namespace mostset::io {

// Emission uses ordered_json so field order (and therefore output bytes)
// is fixed by construction order, not by key sorting.
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// {"threshold": n, "prefix": [bits], "period": p, "residues": [ints]}
EventuallyPeriodicSet eps_from_json(const json& j);
ordered_json eps_to_json(const EventuallyPeriodicSet& s);

/// {"num": p, "den": q}
ordered_json density_to_json(const Rational& r);
Rational rational_from_string(const std::string& text);  // "p/q" or "p"

Element element_from_json(const json& j);
ordered_json element_to_json(const Element& e);

/// {"sets": [[...], ...]}
FiniteCollection collection_from_json(const json& j);

/// {"kind": "...", "params": {...}, "universe": [...]}
/// Kinds: prime_prefix {limit}, constant {set}, cumulative {initial,
/// additions}, periodic_table {certificates}, pairwise_disjoint {sets},
/// table {sets}. A "universe" array extends the candidate universe.
IndexedFamily family_from_json(const json& j);

/// {"kind": "cumulative_0n1n"}
LanguageFamily language_family_from_json(const json& j);

/// {"states": [...], "alphabet": [...], "delta": {"state,symbol": state},
///  "start": s, "accept": [...]}
/// or {"regex": "...", "alphabet": [...]} compiled to the minimal DFA.
Dfa dfa_from_json(const json& j);
/// Emits the canonical presentation: states BFS-renamed q0, q1, ... from
/// the start, unreachable states dropped.
ordered_json dfa_to_json(const Dfa& dfa);

/// {"vertices": [...], "edges": [[...], ...]}; "vertices" may be omitted.
Hypergraph hypergraph_from_json(const json& j);

ordered_json estimate_to_json(const DensityEstimate& est);

}  // namespace mostset::io
