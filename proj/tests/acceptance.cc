// acceptance -- runs every acceptance criterion and prints one PASS/FAIL line each

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "autstruct/dfa_reductions.hh"
#include "autstruct/error.hh"
#include "autstruct/gadgets.hh"
#include "autstruct/text_format.hh"
#include "autstruct/tm_reduction.hh"
#include "autstruct/word_problem.hh"
#include "support/generators.hh"
#include "support/machines.hh"
#include "support/oracles.hh"

using namespace autstruct;

namespace {

using Clock = std::chrono::steady_clock;

// time limits, in seconds
constexpr double kAddingLimit = 1e-3;
constexpr double kSeparationLimit = 60;
constexpr double kDfaLimit = 300;
constexpr double kTmLimit = 600;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::ostringstream failures;
    int failure_count = 0;

    void fail(const std::string& what) {
        pass = false;
        if (failure_count++ < 5) {
            failures << "\n    " << what;
        }
    }
    void expect(bool condition, const std::string& what) {
        if (!condition) {
            fail(what);
        }
    }
};

// every automaton built along the way, for the round-trip criterion
std::vector<MealyAutomaton> g_seen;

void keep(const MealyAutomaton& automaton) { g_seen.push_back(automaton); }

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<Word> defined_output(const MealyAutomaton& t, const StateSequence& seq, const Word& word) {
    auto r = act_word(t, seq, word);
    if (const auto* d = std::get_if<Defined>(&r)) {
        return d->output;
    }
    return std::nullopt;
}

void adding_machine(Outcome& o) {
    auto t = build_gadget(Gadget::AddingMachine);
    keep(t);
    const auto& sigma = t.alphabet();
    StateSequence plus1{{t.state_at("+1"), false}};
    auto a = sigma.parse_word("0 1 0");
    auto b = sigma.parse_word("1 1 0");
    auto start = Clock::now();
    auto first = defined_output(t, plus1, a);
    auto second = defined_output(t, plus1, b);
    double elapsed = seconds_since(start);
    o.expect(first && sigma.format(*first) == "1 1 0", "+1 on 010");
    o.expect(second && sigma.format(*second) == "0 0 1", "+1 on 110");
    o.expect(elapsed < kAddingLimit, "too slow");
    o.detail = "010->" + (first ? sigma.format(*first) : "undefined") + ", 110->" +
               (second ? sigma.format(*second) : "undefined") + ", " + std::to_string(elapsed * 1e6) + " us";
}

// every word shorter than the claimed witness gives equal values
bool agree_below(const WordProblemInstance& instance, std::size_t length) {
    for (std::size_t len = 0; len < length; ++len) {
        bool differs = !oracle::for_each_word(instance.automaton.alphabet(), len, [&](const Word& w) {
            return oracle::value(instance.automaton, instance.lhs, w) ==
                   oracle::value(instance.automaton, instance.rhs, w);
        });
        if (differs) {
            return false;
        }
    }
    return true;
}

void separation(Outcome& o) {
    auto start = Clock::now();
    auto d = build_gadget(Gadget::DualAdding);
    auto dp = build_gadget(Gadget::DualAddingPrime);
    keep(d);
    keep(dp);
    for (unsigned n = 1; n <= 16; ++n) {
        const std::uint64_t expected = std::uint64_t{1} << (n - 1);
        auto plain = separation_witness(n);
        auto primed = separation_witness_dprime(n);
        o.expect(plain.length == expected, "D n=" + std::to_string(n) + " length " + std::to_string(plain.length));
        o.expect(primed.length == expected,
                 "D' n=" + std::to_string(n) + " length " + std::to_string(primed.length));
        if (n > 5) {
            continue;
        }
        auto instance = make_instance(d, zeros(d, n), zeros(d, n - 1));
        auto primed_instance = make_instance(dp, zeros(dp, n - 1), {{dp.state_at("q"), false}});
        for (const auto* inst : {&instance, &primed_instance}) {
            if (expected > 1) {
                auto v = oracle_decide(*inst, expected - 1);
                o.expect(v.equal(), "oracle below the witness, n=" + std::to_string(n));
            }
            o.expect(agree_below(*inst, expected), "brute force below the witness, n=" + std::to_string(n));
            auto v = oracle_decide(*inst, expected);
            o.expect(!v.equal() && v.witness->size() == expected, "oracle at the witness, n=" + std::to_string(n));
        }
    }
    double elapsed = seconds_since(start);
    o.expect(elapsed < kSeparationLimit, "too slow");
    o.detail = "n=1..16, exhaustive for n<=5, " + std::to_string(elapsed) + " s";
}

void zero_completion(Outcome& o) {
    testgen::Rng rng(3);
    int not_equal = 0;
    for (int i = 0; i < 200; ++i) {
        auto t = testgen::random_mealy(rng, {3, 2, 0.6, 0.5});
        auto hat = complete_with_zero(t);
        keep(t);
        keep(hat);
        auto lhs = testgen::random_sequence(rng, t, 1, 3, false);
        auto rhs = testgen::random_sequence(rng, t, 1, 3, false);
        auto v = decide(make_instance(t, lhs, rhs));
        auto w = decide(make_instance(hat, translate_sequence(lhs, t, hat), translate_sequence(rhs, t, hat)));
        o.expect(v.kind == w.kind, "case " + std::to_string(i) + ": " + t.format_sequence(lhs) + " vs " +
                                       t.format_sequence(rhs));
        not_equal += v.equal() ? 0 : 1;
    }
    o.detail = "200 cases, " + std::to_string(not_equal) + " not equal";
}

void decider_vs_oracle(Outcome& o) {
    testgen::Rng rng(4);
    int not_equal = 0;
    for (int i = 0; i < 200; ++i) {
        testgen::MealyShape shape{3, testgen::uniform(rng, 1, 2), 0.8, 0.5};
        auto instance = testgen::random_instance(rng, shape, 3, 1, 2);
        keep(instance.automaton);
        auto v = decide(instance);
        auto bound = config_bound(instance);
        auto w = oracle_decide(instance, bound.value);
        o.expect(v.kind == w.kind && v.witness == w.witness, "case " + std::to_string(i));
        not_equal += v.equal() ? 0 : 1;
    }
    o.detail = "200 cases, " + std::to_string(not_equal) + " not equal";
}

void dfa_intersection(Outcome& o) {
    testgen::Rng rng(5);
    auto start = Clock::now();
    int empty = 0;
    for (int i = 0; i < 100; ++i) {
        std::vector<Acceptor> dfas;
        const std::size_t r = testgen::uniform(rng, 1, 3);
        for (std::size_t k = 0; k < r; ++k) {
            dfas.push_back(testgen::random_dfa(rng, 4, "A" + std::to_string(k + 1)));
        }
        const bool is_empty = oracle::intersection_empty(dfas);
        empty += is_empty ? 1 : 0;
        DfaList list(dfas);
        for (bool group : {false, true}) {
            auto instance = reduce_dfa_intersection(list, group);
            keep(instance.automaton);
            auto v = decide(instance);
            o.expect(v.equal() == is_empty, "case " + std::to_string(i) + (group ? " group" : " inverse"));
            if (group) {
                o.expect(check_properties(instance.automaton).is_g_automaton, "case " + std::to_string(i) + " not G");
            }
        }
    }
    double elapsed = seconds_since(start);
    o.expect(elapsed < kDfaLimit, "too slow");
    o.detail = "100 lists, " + std::to_string(empty) + " empty, " + std::to_string(elapsed) + " s";
}

void dfa_emptiness(Outcome& o) {
    testgen::Rng rng(6);
    int empty = 0;
    for (int i = 0; i < 100; ++i) {
        auto dfa = testgen::random_dfa(rng, 5);
        const bool is_empty = !oracle::language_nonempty(dfa);
        empty += is_empty ? 1 : 0;
        auto instance = reduce_dfa_emptiness(dfa);
        keep(instance.automaton);
        o.expect(decide(instance).equal() == is_empty, "case " + std::to_string(i));
    }
    o.detail = "100 DFAs, " + std::to_string(empty) + " empty";
}

bool differs_only_in_last(const PartialValue& lhs, const PartialValue& rhs, std::size_t length) {
    if (!lhs || !rhs || lhs->size() != length || rhs->size() != length || length == 0) {
        return false;
    }
    return std::equal(lhs->begin(), lhs->end() - 1, rhs->begin()) && lhs->back() != rhs->back();
}

void tm_accepting_runs(Outcome& o, int& checked) {
    for (const auto& spec : machines::reduction_suite()) {
        TuringMachine tm(spec);
        for (bool group : {false, true}) {
            auto full = build_tm_automaton(tm, {1, {}, group});
            if (group) {
                o.expect(check_properties(full).is_g_automaton, spec.name + " group variant not G");
            }
            keep(full);
            for (const auto& input : machines::inputs_up_to(spec, 3)) {
                for (std::uint64_t p = std::max<std::size_t>(1, input.size()); p <= 5; ++p) {
                    TmReductionParams params{p, input, group};
                    Simulation run;
                    try {
                        run = simulate_tm(tm, params, 12);
                    } catch (const Error&) {
                        // the run leaves the space bound or the left edge
                        continue;
                    }
                    if (!run.accepts_within) {
                        continue;
                    }
                    auto instance = tm_instance(full, tm, params);
                    auto word = encode_computation(tm, params, *run.accepts_within);
                    auto lhs = partial_value(instance.automaton, instance.lhs, word);
                    auto rhs = partial_value(instance.automaton, instance.rhs, word);
                    std::string where = spec.name + (group ? " group" : "") + " |w|=" +
                                        std::to_string(input.size()) + " p=" + std::to_string(p);
                    o.expect(differs_only_in_last(lhs, rhs, word.size()), where + ": values");
                    if (group) {
                        o.expect(instance.constraints.front().accepts(word), where + ": not in C(w)");
                    }
                    ++checked;
                }
            }
        }
    }
}

void tm_rejecting_runs(Outcome& o, long& words) {
    const std::uint64_t p = 3;
    for (const auto& spec : {machines::write_accept(), machines::bouncer()}) {
        TuringMachine tm(spec);
        const std::size_t delta = tm.delta_size();
        for (bool group : {false, true}) {
            auto full = build_tm_automaton(tm, {p, {}, group});
            for (const auto& input : machines::inputs_up_to(spec, 3)) {
                TmReductionParams params{p, input, group};
                if (simulate_tm(tm, params, 2).accepts_within) {
                    continue;
                }
                auto instance = tm_instance(full, tm, params);
                for (std::size_t steps = 1; steps <= 2; ++steps) {
                    const std::size_t cells = p * steps;
                    std::size_t total = 1;
                    for (std::size_t i = 0; i < cells; ++i) {
                        total *= delta;
                    }
                    for (std::size_t code = 0; code < total; ++code) {
                        std::vector<Configuration> configurations(steps, Configuration(p));
                        std::size_t c = code;
                        for (auto& configuration : configurations) {
                            for (auto& cell : configuration) {
                                cell = static_cast<DeltaId>(c % delta);
                                c /= delta;
                            }
                        }
                        auto word = encode_configurations(tm, params, configurations);
                        o.expect(partial_value(instance.automaton, instance.lhs, word) ==
                                     partial_value(instance.automaton, instance.rhs, word),
                                 spec.name + (group ? " group" : "") + ": " +
                                     instance.automaton.alphabet().format(word));
                        ++words;
                    }
                }
            }
        }
    }
}

void tm_check_overflow(Outcome& o) {
    TuringMachine tm(machines::write_accept());
    auto t = build_tm_automaton(tm, {3, {}, false}, {true});
    const auto& sigma = t.alphabet();
    const auto check = t.state_at("check");
    auto word = sigma.parse_word("a 0 1 a 1 0");
    auto once = act_word(t, {{check, false}}, word);
    auto twice = act_word(t, {{check, false}, {check, false}}, word);
    o.expect(std::holds_alternative<Defined>(once), "one mark undefined");
    o.expect(std::holds_alternative<UndefinedAt>(twice), "two marks defined");
}

void tm_reduction(Outcome& o) {
    auto start = Clock::now();
    int accepting = 0;
    long words = 0;
    tm_accepting_runs(o, accepting);
    tm_rejecting_runs(o, words);
    tm_check_overflow(o);
    double elapsed = seconds_since(start);
    o.expect(elapsed < kTmLimit, "too slow");
    o.detail = std::to_string(accepting) + " accepting runs, " + std::to_string(words) + " configuration words, " +
               std::to_string(elapsed) + " s";
}

void structural(Outcome& o) {
    testgen::Rng rng(8);
    int samples = 0;
    for (int i = 0; i < 300; ++i) {
        auto t = testgen::random_mealy(rng, {3, testgen::uniform(rng, 1, 3), 0.8, 0.6});
        keep(t);
        auto seq = testgen::random_sequence(rng, t, 0, 3);
        auto u = testgen::random_word(rng, t.alphabet(), 0, 5);
        auto v = testgen::random_word(rng, t.alphabet(), 0, 5);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        auto whole = act_word(t, seq, uv);
        if (const auto* d = std::get_if<Defined>(&whole)) {
            o.expect(d->output.size() == uv.size(), "length preservation");
            auto first = act_word(t, seq, u);
            const auto& left = std::get<Defined>(first);
            auto second = act_word(t, left.cross, v);
            const auto& right = std::get<Defined>(second);
            Word joined = left.output;
            joined.insert(joined.end(), right.output.begin(), right.output.end());
            o.expect(joined == d->output, "prefix compatibility");
        }
        if (t.inverse_deterministic()) {
            auto inv = invert(t);
            o.expect(invert(inv) == t, "invert involution on " + std::to_string(i));
            for (StateId q = 0; q < t.num_states(); ++q) {
                auto image = defined_output(t, {{q, false}}, u);
                if (image) {
                    auto back = defined_output(t, {{q, true}}, *image);
                    o.expect(back && *back == u, "inverse identity");
                }
            }
        }
        o.expect(isomorphic(dual(dual(t)), t), "dual involution on " + std::to_string(i));
        ++samples;
    }

    auto free = build_gadget(Gadget::FreeSemigroup);
    keep(free);
    for (int i = 0; i < 1000; ++i) {
        auto seq = testgen::random_sequence(rng, free, 0, 6, false);
        auto u = testgen::random_word(rng, free.alphabet(), 0, 8);
        Word concatenation;
        for (const auto& item : seq) {
            concatenation.push_back(free.alphabet().at(free.state_name(item.base)));
        }
        concatenation.insert(concatenation.end(), u.begin(), u.end());
        concatenation.resize(u.size());
        o.expect(defined_output(free, seq, u) == concatenation,
                 "free-semigroup law: " + free.format_sequence(seq) + " on " + free.alphabet().format(u));
    }

    auto fig1 = build_gadget(Gadget::Bireversible);
    keep(fig1);
    auto flags = check_properties(fig1);
    o.expect(flags.bireversible && !flags.inverse_deterministic, "bireversible gadget flags");

    int implications = 0;
    for (const auto& t : g_seen) {
        auto r = check_properties(t);
        if (r.complete && r.inverse_deterministic) {
            o.expect(r.inverse_complete, t.name() + ": complete and inverse-deterministic, not inverse-complete");
            ++implications;
        }
    }
    o.detail = std::to_string(samples) + " random automata, 1000 free-semigroup pairs, " +
               std::to_string(implications) + " implication checks";
}

void round_trip(Outcome& o) {
    for (std::size_t i = 0; i < g_seen.size(); ++i) {
        const auto& t = g_seen[i];
        auto doc = parse_document(serialize(t));
        o.expect(doc.automata.size() == 1 && doc.automata.front() == t, "automaton " + std::to_string(i) + " " + t.name());
    }
    o.detail = std::to_string(g_seen.size()) + " automata";
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"adding machine exactness", adding_machine},
        {"exponential separation", separation},
        {"zero-completion faithfulness", zero_completion},
        {"decider/oracle equivalence", decider_vs_oracle},
        {"dfa intersection reduction", dfa_intersection},
        {"dfa emptiness reduction", dfa_emptiness},
        {"tm reduction at desk scale", tm_reduction},
        {"structural invariants", structural},
        {"serialization round-trip", round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].name << " (" << o.detail
                  << ")" << o.failures.str() << std::endl;
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
