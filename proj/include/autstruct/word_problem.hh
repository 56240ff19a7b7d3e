// word_problem.hh -- deciding equality of two composed actions, optionally
// relative to rational constraints

#ifndef AUTSTRUCT_WORD_PROBLEM_HH
#define AUTSTRUCT_WORD_PROBLEM_HH

#include <cstdint>
#include <optional>
#include <vector>

#include "autstruct/acceptor.hh"
#include "autstruct/mealy.hh"

namespace autstruct {

struct WordProblemInstance {
    MealyAutomaton automaton;
    StateSequence lhs;
    StateSequence rhs;
    std::vector<Acceptor> constraints;
    /// Default cap on explored configurations, if the instance carries one.
    std::optional<std::uint64_t> budget;
};

/// Builds a well-formed instance: constraint acceptors are re-expressed over
/// the automaton's alphabet. Throws UnknownState, UnknownLetter or
/// NotInverseDeterministic.
WordProblemInstance make_instance(MealyAutomaton automaton, StateSequence lhs, StateSequence rhs,
                                  std::vector<Acceptor> constraints = {});

/// Throws if `instance` violates the invariants make_instance establishes.
void validate(const WordProblemInstance& instance);

/// A partial value: the output word, or nullopt where the action is undefined.
using PartialValue = std::optional<Word>;

PartialValue partial_value(const MealyAutomaton& automaton, const StateSequence& sequence, const Word& word);

enum class VerdictKind { Equal, NotEqual };

struct Verdict {
    VerdictKind kind = VerdictKind::Equal;
    std::optional<Word> witness;
    std::optional<PartialValue> lhs_value;
    std::optional<PartialValue> rhs_value;
    /// Equal only up to a length bound (oracle_decide ran out of max_len).
    bool bounded = false;
    /// Configurations (decide) or word classes (oracle_decide) examined.
    std::uint64_t explored = 0;

    bool equal() const noexcept { return kind == VerdictKind::Equal; }
};

struct DecideOptions {
    /// Overrides the instance budget when set.
    std::optional<std::uint64_t> max_configs;
};

/// Breadth-first reachability over product configurations. NotEqual verdicts
/// carry the shortest witness, ties broken by letter token order.
/// Throws ConfigBudgetExceeded.
Verdict decide(const WordProblemInstance& instance, const DecideOptions& options = {});

/// Checks every word of length at most `max_len` in length-lexicographic
/// order by direct evaluation. Words that agree on everything that matters
/// for their extensions are merged, which lets the enumeration stop early
/// once the set of classes at a length repeats; a verdict reached that way is
/// not bounded.
Verdict oracle_decide(const WordProblemInstance& instance, std::uint64_t max_len);

struct Count {
    std::uint64_t value = 0;
    bool saturated = false;

    bool operator==(const Count&) const = default;
};

/// (|Q|+1)^(n+m) * prod_k 2^|Z_k| * 2, saturating at 2^64-1.
Count config_bound(const WordProblemInstance& instance);

} // namespace autstruct

#endif
