// gadgets.hh -- small example automata and the exponential-separation family

#ifndef AUTSTRUCT_GADGETS_HH
#define AUTSTRUCT_GADGETS_HH

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "autstruct/mealy.hh"

namespace autstruct {

enum class Gadget {
    AddingMachine,       ///< +1, +0 over {0,1}; the binary odometer
    FreeSemigroup,       ///< a, b over {a,b}; generates the free semigroup
    FreeSemigroupPartial, ///< same without b -a/b-> a
    Bireversible,        ///< r -a/b-> s, r -c/b-> t: bireversible, not inverse-deterministic
    DualAdding,          ///< D: 0 -a/b-> 1, 1 -a/a-> 0, b/b loops
    DualAddingPrime,     ///< D plus q with a/b, b/b loops
};

MealyAutomaton build_gadget(Gadget gadget);

/// Command-line names: adding, free, free-partial, bireversible, dual-adding, dual-adding-prime.
std::optional<Gadget> gadget_from_name(std::string_view name);
std::string_view gadget_name(Gadget gadget);
const std::vector<Gadget>& all_gadgets();

struct Separation {
    std::uint64_t length = 0;
    Word witness;
};

/// Shortest word telling 0^n from 0^(n-1) apart in D (2^(n-1) letters).
/// Throws ConfigBudgetExceeded when `max_configs` is exceeded.
Separation separation_witness(unsigned n, std::optional<std::uint64_t> max_configs = std::nullopt);

/// Same for 0^(n-1) against q in D'.
Separation separation_witness_dprime(unsigned n, std::optional<std::uint64_t> max_configs = std::nullopt);

/// [0]^count as a sequence over `automaton` (which must have a state "0").
StateSequence zeros(const MealyAutomaton& automaton, unsigned count);

} // namespace autstruct

#endif
