#include "catch_amalgamated.hpp"

#include "autstruct/error.hh"
#include "autstruct/gadgets.hh"
#include "support/oracles.hh"

using namespace autstruct;

TEST_CASE("gadget names round-trip") {
    for (Gadget g : all_gadgets()) {
        CHECK(gadget_from_name(gadget_name(g)) == g);
        CHECK(build_gadget(g).name() == gadget_name(g));
    }
    CHECK_FALSE(gadget_from_name("nope"));
}

TEST_CASE("adding machine shape") {
    auto t = build_gadget(Gadget::AddingMachine);
    CHECK(t.num_states() == 2);
    CHECK(check_properties(t).complete);
    CHECK(check_properties(t).is_g_automaton);
}

TEST_CASE("D acts on aa") {
    auto d = build_gadget(Gadget::DualAdding);
    CHECK(d.num_states() == 2);
    CHECK(d.alphabet().tokens() == std::vector<std::string>{"a", "b"});
    auto r = act_word(d, zeros(d, 1), d.alphabet().parse_word("a a"));
    REQUIRE(std::holds_alternative<Defined>(r));
    CHECK(d.alphabet().format(std::get<Defined>(r).output) == "b a");
}

TEST_CASE("partial free-semigroup automaton drops one transition") {
    auto t = build_gadget(Gadget::FreeSemigroupPartial);
    StateId b = t.state_at("b");
    std::size_t out = 0;
    for (LetterId a = 0; a < t.alphabet().size(); ++a) {
        out += t.edge(b, a).defined() ? 1 : 0;
    }
    CHECK(out == 1);
    CHECK(t.alphabet().token(t.edge(b, t.alphabet().at("b")).letter) == "b");
    CHECK(t.num_transitions() == build_gadget(Gadget::FreeSemigroup).num_transitions() - 1);
}

TEST_CASE("separation witnesses have length 2^(n-1)") {
    auto d = build_gadget(Gadget::DualAdding);
    auto s1 = separation_witness(1);
    CHECK(s1.length == 1);
    CHECK(d.alphabet().format(s1.witness) == "a");
    auto s2 = separation_witness(2);
    CHECK(s2.length == 2);
    CHECK(d.alphabet().format(s2.witness) == "a a");
    CHECK(separation_witness(5).length == 16);

    CHECK(separation_witness_dprime(1).length == 1);
    CHECK(separation_witness_dprime(2).length == 2);
    CHECK(separation_witness_dprime(6).length == 32);
}

TEST_CASE("separation witnesses are the first differing words") {
    auto d = build_gadget(Gadget::DualAdding);
    for (unsigned n = 1; n <= 4; ++n) {
        auto instance = make_instance(d, zeros(d, n), zeros(d, n - 1));
        auto brute = oracle::brute_force_witness(instance, std::size_t{1} << (n - 1));
        REQUIRE(brute);
        CHECK(*brute == separation_witness(n).witness);
    }
}

TEST_CASE("separation arguments are checked") {
    CHECK_THROWS_AS(separation_witness(0), Error);
    CHECK_THROWS_AS(separation_witness(64), Error);
    try {
        separation_witness(12, 10);
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConfigBudgetExceeded);
    }
}
