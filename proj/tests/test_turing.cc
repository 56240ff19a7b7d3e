#include "catch_amalgamated.hpp"

#include "autstruct/error.hh"
#include "autstruct/turing.hh"
#include "support/machines.hh"

using namespace autstruct;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Parse;
}

// one rule: (z0, a) -> (b, z1, R)
TuringMachineSpec one_rule() {
    return {"one-rule", {"a", "b", "_"}, "_", {"z0", "z1"}, "z0", {}, {{"z0", "a", "b", Move::Right, "z1"}}};
}

} // namespace

TEST_CASE("delta symbols: tape symbols, then symbol-state pairs") {
    TuringMachine tm(one_rule());
    CHECK(tm.delta_size() == 9);
    CHECK(tm.delta_token(0) == "a");
    CHECK(tm.delta_token(2) == "_");
    DeltaId h = tm.head(0, 1);
    CHECK(tm.delta_token(h) == "a@z1");
    CHECK(tm.is_head(h));
    CHECK(tm.symbol_of(h) == 0);
    CHECK(tm.state_of(h) == 1);
    CHECK_FALSE(tm.is_head(tm.plain(2)));
    CHECK(reduction_alphabet(tm).tokens() ==
          std::vector<std::string>{"a", "b", "_", "a@z0", "a@z1", "b@z0", "b@z1", "_@z0", "_@z1", "0", "1", "#", "$"});
}

TEST_CASE("window rule for a right move") {
    TuringMachine tm(one_rule());
    TauTable tau(tm);
    const DeltaId head = tm.head(0, 0);
    for (std::uint32_t y = 0; y < 3; ++y) {
        for (std::uint32_t z = 0; z < 3; ++z) {
            CHECK(tau(head, tm.plain(y), tm.plain(z)) == tm.head(y, 1));
            CHECK(tau(tm.plain(z), head, tm.plain(y)) == tm.plain(1));
        }
    }
    // no head nearby: unchanged
    CHECK(tau(0, 1, 2) == DeltaId{1});
    // two heads: undefined
    CHECK_FALSE(tau(head, head, 0));
    CHECK_FALSE(tau(head, 0, tm.head(1, 1)));
    // missing rules stay put
    CHECK(tau(0, tm.head(1, 0), 0) == tm.head(1, 0));
}

TEST_CASE("window rule for left and stay moves") {
    TuringMachineSpec spec{"moves",
                           {"a", "_"},
                           "_",
                           {"s", "t"},
                           "s",
                           {"t"},
                           {{"s", "a", "_", Move::Left, "t"}, {"s", "_", "a", Move::Stay, "t"}}};
    TuringMachine tm(spec);
    TauTable tau(tm);
    const DeltaId a = tm.plain(0);
    const DeltaId blank = tm.plain(1);
    CHECK(tau(a, a, tm.head(0, 0)) == tm.head(0, 1));
    CHECK(tau(a, tm.head(0, 0), a) == blank);
    CHECK(tau(a, tm.head(1, 0), a) == tm.head(0, 1));
    // a right neighbour that moves right does not affect us
    CHECK(tau(a, a, tm.head(1, 0)) == a);
}

TEST_CASE("machine validation") {
    auto spec = one_rule();
    spec.rules.push_back({"z0", "a", "a", Move::Stay, "z0"});
    CHECK(kind_of([&] { TuringMachine tm(spec); }) == ErrorKind::MalformedMachine);
    spec = one_rule();
    spec.tape.push_back("0");
    CHECK(kind_of([&] { TuringMachine tm(spec); }) == ErrorKind::MalformedMachine);
    spec = one_rule();
    spec.blank = "x";
    CHECK(kind_of([&] { TuringMachine tm(spec); }) == ErrorKind::MalformedMachine);
    spec = one_rule();
    spec.states.push_back("z0");
    CHECK(kind_of([&] { TuringMachine tm(spec); }) == ErrorKind::MalformedMachine);
    spec = one_rule();
    spec.rules[0].next = "nowhere";
    CHECK(kind_of([&] { TuringMachine tm(spec); }) == ErrorKind::MalformedMachine);
}

TEST_CASE("digit blocks are ceil(log2(p + 1)) long") {
    CHECK(digit_block_length(1) == 1);
    CHECK(digit_block_length(2) == 2);
    CHECK(digit_block_length(3) == 2);
    CHECK(digit_block_length(4) == 3);
    CHECK(digit_block_length(7) == 3);
    CHECK(digit_block_length(8) == 4);
}

TEST_CASE("parameters are checked") {
    TuringMachine tm(one_rule());
    CHECK(kind_of([&] { check_params(tm, {0, {}, false}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { check_params(tm, {1, {"a", "b"}, false}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { check_params(tm, {3, {"_"}, false}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { check_params(tm, {3, {"c"}, false}); }) == ErrorKind::InvalidArgument);
    check_params(tm, {2, {"a", "b"}, false});
}

TEST_CASE("initial configuration") {
    TuringMachine tm(one_rule());
    auto c0 = initial_configuration(tm, {4, {"b", "a"}, false});
    CHECK(c0 == Configuration{tm.head(1, 0), tm.plain(0), tm.plain(2), tm.plain(2)});
    auto empty = initial_configuration(tm, {2, {}, false});
    CHECK(empty == Configuration{tm.head(2, 0), tm.plain(2)});
}

TEST_CASE("simulation") {
    SECTION("immediate accept") {
        TuringMachine tm(machines::immediate_accept());
        auto sim = simulate_tm(tm, {2, {"a"}, false}, 3);
        CHECK(sim.accepts_within == 1u);
        CHECK(sim.trace.size() == 4);
    }
    SECTION("parity") {
        TuringMachine tm(machines::parity());
        CHECK(simulate_tm(tm, {3, {"a", "a"}, false}, 5).accepts_within == 3u);
        CHECK_FALSE(simulate_tm(tm, {3, {"a"}, false}, 5).accepts_within);
    }
    SECTION("space and left edge") {
        TuringMachine tm(machines::find_b());
        CHECK(kind_of([&] { simulate_tm(tm, {2, {"a", "a"}, false}, 5); }) == ErrorKind::SpaceBoundViolated);
        TuringMachine left(machines::left_mover());
        CHECK(kind_of([&] { simulate_tm(left, {2, {"a"}, false}, 5); }) == ErrorKind::LeftEdgeViolated);
    }
    SECTION("trace agrees with the window rule") {
        for (const auto& spec : machines::reduction_suite()) {
            TuringMachine tm(spec);
            TauTable tau(tm);
            for (const auto& input : machines::inputs_up_to(spec, 3)) {
                TmReductionParams params{4, input, false};
                Simulation sim;
                try {
                    sim = simulate_tm(tm, params, 4);
                } catch (const Error&) {
                    continue;
                }
                const DeltaId blank = tm.plain(tm.blank());
                for (std::size_t t = 1; t < sim.trace.size(); ++t) {
                    const auto& before = sim.trace[t - 1];
                    for (std::size_t i = 0; i < before.size(); ++i) {
                        DeltaId left = i == 0 ? blank : before[i - 1];
                        DeltaId right = i + 1 == before.size() ? blank : before[i + 1];
                        CHECK(tau(left, before[i], right) == sim.trace[t][i]);
                    }
                }
            }
        }
    }
}

TEST_CASE("encoding of computations") {
    TuringMachine tm(machines::immediate_accept());
    TmReductionParams params{2, {"a"}, false};
    auto word = encode_computation(tm, params, 1);
    // p (1 + k) + k + 3 with k = 2
    CHECK(word.size() == 11);
    CHECK(reduction_alphabet(tm).format(word) == "a@f 0 0 _ 0 0 $ 0 0 $ 0");
    auto two = encode_computation(tm, params, 2);
    CHECK(reduction_alphabet(tm).format(two) == "a@f 0 0 _ 0 0 # a@f 0 0 _ 0 0 $ 0 0 $ 0");
}
