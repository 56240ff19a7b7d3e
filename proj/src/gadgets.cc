// gadgets.cc -- small example automata and the exponential-separation family

#include "autstruct/gadgets.hh"

#include <stdexcept>
#include <string>

#include "autstruct/error.hh"
#include "autstruct/word_problem.hh"

namespace autstruct {

namespace {

MealyAutomaton adding_machine() {
    MealyBuilder b("adding", Alphabet({"0", "1"}));
    b.add_state("+1");
    b.add_state("+0");
    b.add_transition("+1", "1", "0", "+1");
    b.add_transition("+1", "0", "1", "+0");
    b.add_transition("+0", "0", "0", "+0");
    b.add_transition("+0", "1", "1", "+0");
    return std::move(b).build();
}

MealyAutomaton free_semigroup(bool partial) {
    MealyBuilder b(partial ? "free-partial" : "free", Alphabet({"a", "b"}));
    b.add_state("a");
    b.add_state("b");
    b.add_transition("a", "a", "a", "a");
    b.add_transition("a", "b", "a", "b");
    b.add_transition("b", "b", "b", "b");
    if (!partial) {
        b.add_transition("b", "a", "b", "a");
    }
    return std::move(b).build();
}

MealyAutomaton bireversible_example() {
    MealyBuilder b("bireversible", Alphabet({"a", "b", "c"}));
    b.add_state("r");
    b.add_state("s");
    b.add_state("t");
    b.add_transition("r", "a", "b", "s");
    b.add_transition("r", "c", "b", "t");
    return std::move(b).build();
}

MealyAutomaton dual_adding(bool prime) {
    MealyBuilder b(prime ? "dual-adding-prime" : "dual-adding", Alphabet({"a", "b"}));
    b.add_state("0");
    b.add_state("1");
    b.add_transition("0", "a", "b", "1");
    b.add_transition("0", "b", "b", "0");
    b.add_transition("1", "a", "a", "0");
    b.add_transition("1", "b", "b", "1");
    if (prime) {
        b.add_state("q");
        b.add_transition("q", "a", "b", "q");
        b.add_transition("q", "b", "b", "q");
    }
    return std::move(b).build();
}

const std::vector<std::pair<Gadget, std::string_view>>& gadget_names() {
    static const std::vector<std::pair<Gadget, std::string_view>> names = {
        {Gadget::AddingMachine, "adding"},
        {Gadget::FreeSemigroup, "free"},
        {Gadget::FreeSemigroupPartial, "free-partial"},
        {Gadget::Bireversible, "bireversible"},
        {Gadget::DualAdding, "dual-adding"},
        {Gadget::DualAddingPrime, "dual-adding-prime"},
    };
    return names;
}

Separation shortest_difference(const MealyAutomaton& automaton, StateSequence lhs, StateSequence rhs,
                               unsigned n, std::optional<std::uint64_t> max_configs) {
    auto instance = make_instance(automaton, std::move(lhs), std::move(rhs));
    auto verdict = decide(instance, {max_configs});
    const std::uint64_t expected = std::uint64_t{1} << (n - 1);
    if (verdict.equal() || verdict.witness->size() != expected) {
        throw std::logic_error("separation length for n = " + std::to_string(n) + " is not " +
                               std::to_string(expected));
    }
    return {verdict.witness->size(), std::move(*verdict.witness)};
}

void require_positive(unsigned n) {
    if (n == 0 || n > 63) {
        throw Error(ErrorKind::InvalidArgument, "separation needs 1 <= n <= 63");
    }
}

} // namespace

MealyAutomaton build_gadget(Gadget gadget) {
    switch (gadget) {
        case Gadget::AddingMachine: return adding_machine();
        case Gadget::FreeSemigroup: return free_semigroup(false);
        case Gadget::FreeSemigroupPartial: return free_semigroup(true);
        case Gadget::Bireversible: return bireversible_example();
        case Gadget::DualAdding: return dual_adding(false);
        case Gadget::DualAddingPrime: return dual_adding(true);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown gadget");
}

std::optional<Gadget> gadget_from_name(std::string_view name) {
    for (const auto& [gadget, gadget_name] : gadget_names()) {
        if (gadget_name == name) {
            return gadget;
        }
    }
    return std::nullopt;
}

std::string_view gadget_name(Gadget gadget) {
    for (const auto& [candidate, name] : gadget_names()) {
        if (candidate == gadget) {
            return name;
        }
    }
    return "?";
}

const std::vector<Gadget>& all_gadgets() {
    static const std::vector<Gadget> gadgets = [] {
        std::vector<Gadget> result;
        for (const auto& entry : gadget_names()) {
            result.push_back(entry.first);
        }
        return result;
    }();
    return gadgets;
}

StateSequence zeros(const MealyAutomaton& automaton, unsigned count) {
    return StateSequence(count, SignedState{automaton.state_at("0"), false});
}

Separation separation_witness(unsigned n, std::optional<std::uint64_t> max_configs) {
    require_positive(n);
    auto d = build_gadget(Gadget::DualAdding);
    return shortest_difference(d, zeros(d, n), zeros(d, n - 1), n, max_configs);
}

Separation separation_witness_dprime(unsigned n, std::optional<std::uint64_t> max_configs) {
    require_positive(n);
    auto d = build_gadget(Gadget::DualAddingPrime);
    StateSequence q{{d.state_at("q"), false}};
    return shortest_difference(d, zeros(d, n - 1), q, n, max_configs);
}

} // namespace autstruct
