#include <doctest.h>

#include "mostset/errors.hpp"
#include "mostset/json_io.hpp"

using namespace mostset;
namespace io = mostset::io;
using io::json;

TEST_CASE("eventually periodic sets round-trip through JSON") {
    json j = json::parse(R"({"threshold":2,"prefix":[1,0],"period":3,"residues":[0,2]})");
    EventuallyPeriodicSet s = io::eps_from_json(j);
    json back = json::parse(io::eps_to_json(s).dump());
    CHECK(io::eps_from_json(back) == s);
    // canonical emission: threshold always equals the prefix length
    CHECK(back["threshold"].get<std::size_t>() == back["prefix"].size());
}

TEST_CASE("eps JSON validation") {
    CHECK_THROWS_AS(io::eps_from_json(json::parse(R"({"prefix":[],"period":0,"residues":[]})")),
                    InvalidSpec);
    CHECK_THROWS_AS(io::eps_from_json(json::parse(R"({"prefix":[],"residues":[]})")),
                    InputError);
    CHECK_THROWS_AS(
        io::eps_from_json(json::parse(R"({"threshold":3,"prefix":[1],"period":2,"residues":[]})")),
        InputError);
    CHECK_THROWS_AS(
        io::eps_from_json(json::parse(R"({"prefix":[2],"period":2,"residues":[]})")),
        InputError);
}

TEST_CASE("density serialization") {
    CHECK(io::density_to_json(Rational(2, 3)).dump() == R"({"num":2,"den":3})");
    CHECK(io::rational_from_string("1/1000") == Rational(1, 1000));
    CHECK(io::rational_from_string("3") == Rational(3));
    CHECK_THROWS_AS(io::rational_from_string("x/y"), InputError);
}

TEST_CASE("elements parse as integers or strings") {
    CHECK(io::element_from_json(json(5)) == Element{std::int64_t{5}});
    CHECK(io::element_from_json(json("abc")) == Element{std::string("abc")});
    CHECK_THROWS_AS(io::element_from_json(json(1.5)), InputError);
}

TEST_CASE("collections parse from the sets field") {
    FiniteCollection c = io::collection_from_json(
        json::parse(R"({"sets":[[1,2,3],[2,3,5],[4,3]]})"));
    REQUIRE(c.members.size() == 3);
    CHECK(most_intersect_finite(c) ==
          ElementSet{Element{std::int64_t{2}}, Element{std::int64_t{3}}});
}

TEST_CASE("family kinds parse and evaluate") {
    IndexedFamily primes = io::family_from_json(
        json::parse(R"({"kind":"prime_prefix","params":{"limit":10}})"));
    CHECK(most_intersect_indexed(primes) ==
          ElementSet{Element{std::int64_t{2}}, Element{std::int64_t{3}},
                     Element{std::int64_t{5}}, Element{std::int64_t{7}}});

    IndexedFamily table = io::family_from_json(json::parse(
        R"({"kind":"periodic_table","params":{"certificates":{
             "7":{"prefix":[],"period":2,"residues":[0]},
             "w":{"prefix":[],"period":1,"residues":[0]}}}})"));
    CHECK(table.certificate(Element{std::int64_t{7}})->density() == Rational(1, 2));
    CHECK(table.certificate(Element{std::string("w")})->density() == Rational(1));

    IndexedFamily cumulative = io::family_from_json(json::parse(
        R"({"kind":"cumulative","params":{"initial":[1],"additions":[[2],[3]]},
            "universe":[1,2,3,9]})"));
    ElementSet mi = most_intersect_indexed(cumulative);
    CHECK(mi == ElementSet{Element{std::int64_t{1}}, Element{std::int64_t{2}},
                           Element{std::int64_t{3}}});
    // the declared universe extends the candidates; 9 has an empty certificate
    CHECK(cumulative.certificate(Element{std::int64_t{9}})->is_empty());

    CHECK_THROWS_AS(io::family_from_json(json::parse(R"({"kind":"nope"})")), InputError);
}

TEST_CASE("language family parses the built-in kind only") {
    LanguageFamily fam = io::language_family_from_json(
        json::parse(R"({"kind":"cumulative_0n1n"})"));
    CHECK(density_language_membership(fam, "01").member);
    CHECK_THROWS_AS(io::language_family_from_json(json::parse(R"({"kind":"other"})")),
                    InputError);
}

TEST_CASE("DFA documents parse, validate, and emit canonically") {
    json j = json::parse(R"({
        "states": ["s", "t"],
        "alphabet": ["0", "1"],
        "delta": {"s,0": "s", "s,1": "t", "t,0": "t", "t,1": "t"},
        "start": "s",
        "accept": ["t"]
    })");
    Dfa d = io::dfa_from_json(j);
    CHECK_FALSE(d.accepts("00"));
    CHECK(d.accepts("001"));

    json missing = j;
    missing["delta"].erase("t,1");
    CHECK_THROWS_AS(io::dfa_from_json(missing), InputError);
    json dup = j;
    dup["states"] = {"s", "s"};
    CHECK_THROWS_AS(io::dfa_from_json(dup), InputError);

    // regex documents compile to equivalent automata
    Dfa r = io::dfa_from_json(json::parse(R"({"regex":"0*1(0+1)*","alphabet":["0","1"]})"));
    CHECK(equivalent(r, minimize(d)));

    // both presentations of the language emit identical canonical bytes
    CHECK(io::dfa_to_json(minimize(d)).dump() == io::dfa_to_json(r).dump());
    std::string dumped = io::dfa_to_json(r).dump();
    CHECK(io::dfa_to_json(io::dfa_from_json(json::parse(dumped))).dump() == dumped);
}

TEST_CASE("hypergraphs parse with and without a vertex list") {
    Hypergraph h = io::hypergraph_from_json(json::parse(
        R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})"));
    CHECK(order(h) == 3);
    Hypergraph inferred = io::hypergraph_from_json(json::parse(
        R"({"edges":[["a","b"],["b","c"]]})"));
    CHECK(order(inferred) == 3);
    CHECK_THROWS_AS(
        io::hypergraph_from_json(json::parse(R"({"vertices":["a"],"edges":[["z"]]})")),
        InvalidHypergraph);
}
