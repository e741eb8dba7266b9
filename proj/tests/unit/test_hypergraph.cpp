#include <doctest.h>

#include <random>

#include "mostset/errors.hpp"
#include "mostset/hypergraph.hpp"
#include "support/support.hpp"

using namespace mostset;
using EPS = EventuallyPeriodicSet;

namespace {

// The six-vertex example used throughout: five edges, v3 and v4 in three.
Hypergraph example_graph() {
    return make_hypergraph({"v1", "v2", "v3", "v4", "v5", "v6"},
                           {{"v1", "v4"},
                            {"v4", "v5"},
                            {"v1", "v2", "v3"},
                            {"v2", "v3", "v6"},
                            {"v3", "v4", "v6"}});
}

std::set<std::string> brute_majority(const Hypergraph& h) {
    std::set<std::string> result;
    for (const std::string& v : h.vertices) {
        std::size_t count = 0;
        for (const auto& e : h.edges)
            if (e.contains(v)) ++count;
        if (2 * count > h.edges.size()) result.insert(v);
    }
    return result;
}

}  // namespace

TEST_CASE("order and size") {
    Hypergraph h = example_graph();
    CHECK(order(h) == 6);
    CHECK(size(h) == 5);
    Hypergraph single = make_hypergraph({"v"}, {{"v"}});
    CHECK(order(single) == 1);
    CHECK(size(single) == 1);
    Hypergraph triangle = make_hypergraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(order(triangle) == 3);
    CHECK(size(triangle) == 3);
}

TEST_CASE("average state of the example graph") {
    Hypergraph h = example_graph();
    std::set<std::string> state = average_state(h);
    CHECK(state == std::set<std::string>{"v3", "v4"});
    CHECK_FALSE(is_balanced(h));
    // the average state is a new hyperedge, not one of the originals
    for (const auto& e : h.edges) CHECK(e != state);
}

TEST_CASE("average state counts edge multiplicity") {
    Hypergraph h = make_hypergraph({}, {{"a"}, {"a"}, {"b"}});
    CHECK(average_state(h) == std::set<std::string>{"a"});
}

TEST_CASE("vertices in exactly half of the edges are excluded") {
    Hypergraph h = make_hypergraph({}, {{"a"}, {"a"}, {"b"}, {"b"}});
    CHECK(average_state(h).empty());
    CHECK(is_balanced(h));
}

TEST_CASE("balancedness") {
    Hypergraph disjoint = make_hypergraph({}, {{"a"}, {"b"}, {"c"}});
    CHECK(is_balanced(disjoint));
    Hypergraph singleton = make_hypergraph({}, {{"a"}});
    CHECK_FALSE(is_balanced(singleton));
    CHECK(average_state(singleton) == std::set<std::string>{"a"});
}

TEST_CASE("ingest validation") {
    CHECK_THROWS_AS(make_hypergraph({"a"}, {}), InvalidHypergraph);
    CHECK_THROWS_AS(make_hypergraph({"a"}, {{}}), InvalidHypergraph);
    CHECK_THROWS_AS(make_hypergraph({"a"}, {{"b"}}), InvalidHypergraph);
    CHECK_THROWS_AS(make_hypergraph({"a", "a"}, {{"a"}}), InvalidHypergraph);
}

TEST_CASE("average state equals the brute-force majority on random graphs") {
    std::mt19937_64 rng(123123);
    std::uniform_int_distribution<std::size_t> order_dist(1, 12);
    std::uniform_int_distribution<std::size_t> size_dist(1, 15);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = order_dist(rng);
        std::vector<std::string> vertices;
        for (std::size_t i = 0; i < n; ++i) vertices.push_back("u" + std::to_string(i));
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        std::vector<std::set<std::string>> edges;
        const std::size_t m = size_dist(rng);
        for (std::size_t j = 0; j < m; ++j) {
            std::set<std::string> e;
            std::uniform_int_distribution<std::size_t> esize(1, n);
            std::size_t want = esize(rng);
            while (e.size() < want) e.insert(vertices[pick(rng)]);
            edges.push_back(std::move(e));
        }
        Hypergraph h = make_hypergraph(vertices, edges);
        std::set<std::string> state = average_state(h);
        CHECK(state == brute_majority(h));
        // every vertex common to all edges is in the average state
        for (const std::string& v : h.vertices) {
            bool in_all = true;
            for (const auto& e : h.edges)
                if (!e.contains(v)) in_all = false;
            if (in_all) CHECK(state.contains(v));
        }
        // odd duplication of the edge list preserves the average state
        Hypergraph tripled = h;
        for (int k = 0; k < 2; ++k)
            tripled.edges.insert(tripled.edges.end(), h.edges.begin(), h.edges.end());
        CHECK(average_state(tripled) == state);
    }
}

TEST_CASE("text format parses the example graph") {
    const char* text =
        "# six vertices, five evolution stages\n"
        "vertex v1 v2 v3 v4 v5 v6\n"
        "edge { v1 v4 }\n"
        "edge { v4 v5 }\n"
        "edge { v1 v2 v3 }\n"
        "edge { v2 v3 v6 }\n"
        "edge { v3 v4 v6 }\n";
    Hypergraph h = parse_hypergraph_text(text);
    CHECK(order(h) == 6);
    CHECK(size(h) == 5);
    CHECK(average_state(h) == std::set<std::string>{"v3", "v4"});
    CHECK_THROWS_AS(parse_hypergraph_text("edge { a"), InputError);
    CHECK_THROWS_AS(parse_hypergraph_text("link { a }"), InputError);
}

TEST_CASE("infinite hypergraph: density of the edge-index set decides membership") {
    std::map<Element, EPS> table;
    table.emplace(Element{std::string("even")}, EPS::multiples_of(2));
    table.emplace(Element{std::string("cofinite")}, complement(EPS::finite_set({0, 3})));
    table.emplace(Element{std::string("two_thirds")},
                  complement(EPS::multiples_of(3)));
    InfiniteHypergraph h{IndexedFamily::periodic_table(std::move(table))};
    auto state = average_state_infinite(h, {"even", "cofinite", "two_thirds"});
    REQUIRE(state.size() == 2);
    CHECK(state[0].vertex == "cofinite");
    CHECK(state[0].density == Rational(1));
    CHECK(state[1].vertex == "two_thirds");
    CHECK(state[1].density == Rational(2, 3));
}

TEST_CASE("infinite hypergraph: certificates are required") {
    InfiniteHypergraph h{IndexedFamily("oracle", {Element{std::string("v")}},
                                       [](const Element&, std::uint64_t) { return true; },
                                       [](const Element&) { return std::nullopt; })};
    CHECK_THROWS_AS(average_state_infinite(h, {"v"}), CertificateRequired);
}

TEST_CASE("infinite hypergraph: exact and estimated modes agree away from one half") {
    std::mt19937_64 rng(3141);
    for (int trial = 0; trial < 20; ++trial) {
        std::map<Element, EPS> table;
        for (int v = 0; v < 6; ++v)
            table.emplace(Element{std::string("w") + std::to_string(v)},
                          test::random_eps(rng));
        InfiniteHypergraph h{IndexedFamily::periodic_table(table)};
        std::vector<std::string> candidates;
        for (const auto& [e, _] : table) candidates.push_back(std::get<std::string>(e));
        auto exact = average_state_infinite(h, candidates);
        std::set<std::string> exact_set;
        for (const auto& vd : exact) exact_set.insert(vd.vertex);
        auto estimated = most_intersect_estimated(h.edge_family, 10'000, Rational(1, 100));
        std::set<std::string> estimated_set;
        for (const auto& m : estimated)
            estimated_set.insert(std::get<std::string>(m.element));
        for (const auto& [e, cert] : table) {
            if (cert.density() == Rational(1, 2)) continue;
            const std::string& name = std::get<std::string>(e);
            CHECK(exact_set.contains(name) == estimated_set.contains(name));
        }
    }
}
