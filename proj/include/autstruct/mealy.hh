// mealy.hh -- synchronous transducers, their action on words, and the standard
// constructions on them (inverse, dual, union, zero-adjunction completion).

#ifndef AUTSTRUCT_MEALY_HH
#define AUTSTRUCT_MEALY_HH

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "autstruct/alphabet.hh"

namespace autstruct {

/// A state of the automaton or of its inverse. Inverted states are virtual:
/// stepping them reads the transition table backwards.
struct SignedState {
    StateId base = 0;
    bool inverted = false;

    auto operator<=>(const SignedState&) const = default;
};

/// A composed action q1 q2 ... qn. The rightmost item acts first on each letter.
using StateSequence = std::vector<SignedState>;

struct Step {
    LetterId output;
    SignedState next;

    bool operator==(const Step&) const = default;
};

/// Deterministic synchronous transducer with coinciding input and output
/// alphabets. Immutable once built; see MealyBuilder.
class MealyAutomaton {
public:
    static constexpr LetterId kNoLetter = std::numeric_limits<LetterId>::max();

    struct Edge {
        LetterId letter = kNoLetter; ///< output (forward table) or input (inverse table)
        StateId target = 0;

        bool defined() const noexcept { return letter != kNoLetter; }
        bool operator==(const Edge&) const = default;
    };

    MealyAutomaton() = default;

    const std::string& name() const noexcept { return name_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    std::size_t num_states() const noexcept { return state_names_.size(); }
    std::size_t num_transitions() const noexcept { return num_transitions_; }
    const std::string& state_name(StateId state) const { return state_names_.at(state); }
    const std::vector<std::string>& state_names() const noexcept { return state_names_; }
    std::optional<StateId> find_state(std::string_view name) const;
    /// Throws UnknownState.
    StateId state_at(std::string_view name) const;

    const Edge& edge(StateId state, LetterId input) const {
        return table_[static_cast<std::size_t>(state) * alphabet_.size() + input];
    }
    /// Transition of the inverse automaton: which input produced `output` at `state`.
    /// Only meaningful when inverse_deterministic().
    const Edge& inverse_edge(StateId state, LetterId output) const {
        return inverse_table_[static_cast<std::size_t>(state) * alphabet_.size() + output];
    }
    bool inverse_deterministic() const noexcept { return inverse_deterministic_; }

    /// Resolves tokens to signed states; "~q" denotes the inverse of q unless a
    /// state is literally named "~q".
    StateSequence parse_sequence(std::span<const std::string> tokens) const;
    StateSequence parse_sequence(std::string_view text) const;
    std::vector<std::string> sequence_tokens(const StateSequence& sequence) const;
    std::string format_sequence(const StateSequence& sequence) const;

    bool operator==(const MealyAutomaton& other) const;

private:
    friend class MealyBuilder;

    std::string name_;
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<Edge> table_;
    std::vector<Edge> inverse_table_;
    bool inverse_deterministic_ = true;
    std::size_t num_transitions_ = 0;
};

class MealyBuilder {
public:
    explicit MealyBuilder(std::string name, Alphabet alphabet = {});

    LetterId add_letter(const std::string& token) { return alphabet_.insert(token); }
    /// Throws InvalidToken on duplicates.
    StateId add_state(const std::string& name);
    /// Returns the existing id or declares the state.
    StateId ensure_state(const std::string& name);
    std::optional<StateId> find_state(std::string_view name) const;

    /// Re-adding an identical transition is a no-op; a conflicting one throws
    /// NotDeterministic.
    void add_transition(StateId from, LetterId input, LetterId output, StateId to);
    /// All tokens must already be declared.
    void add_transition(std::string_view from, std::string_view input, std::string_view output,
                        std::string_view to);
    /// Identity transitions for every letter in `letters`.
    void add_identity(StateId from, std::span<const LetterId> letters, StateId to);

    bool has_transition(StateId from, LetterId input) const;
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return state_names_.size(); }

    MealyAutomaton build() &&;

private:
    std::string name_;
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::uint64_t, MealyAutomaton::Edge> edges_;
};

/// One step of a (possibly inverted) state. Absent when the transition does
/// not exist. Throws UnknownLetter/UnknownState on out-of-range ids and
/// NotInverseDeterministic when an inverted state is stepped on an automaton
/// whose inverse is not deterministic.
std::optional<Step> act_step(const MealyAutomaton& automaton, SignedState state, LetterId letter);

struct Defined {
    Word output;
    StateSequence cross; ///< the sequence after reading the whole input

    bool operator==(const Defined&) const = default;
};

struct UndefinedAt {
    std::size_t position; ///< 0-based index of the letter on which the action dies

    bool operator==(const UndefinedAt&) const = default;
};

using ActResult = std::variant<Defined, UndefinedAt>;

ActResult act_word(const MealyAutomaton& automaton, const StateSequence& sequence, const Word& word);

struct PropertyReport {
    bool deterministic = true;
    bool complete = false;
    bool inverse_deterministic = false;
    bool inverse_complete = false;
    bool reversible = false;
    bool bireversible = false;
    bool is_s_bar_automaton = false;
    bool is_g_automaton = false;

    bool operator==(const PropertyReport&) const = default;
};

PropertyReport check_properties(const MealyAutomaton& automaton);
std::string format_report(const PropertyReport& report);

/// Inverse automaton over states "~q" (a leading "~" is stripped instead, so
/// that invert is an involution on names). Throws NotInverseDeterministic.
MealyAutomaton invert(const MealyAutomaton& automaton);

/// Disjoint union. When the state sets intersect, every state is prefixed with
/// its automaton's name ("name.q"; "name_1." / "name_2." if the names agree too).
MealyAutomaton union_of(const MealyAutomaton& first, const MealyAutomaton& second);

/// States and letters swap roles: (q, a) -> (b, p) becomes (a, q) -> (p, b).
MealyAutomaton dual(const MealyAutomaton& automaton);

inline constexpr std::string_view kBottomLetter = "_bot";
inline constexpr std::string_view kZeroState = "_zero";

/// Completion by a fresh sink state and a fresh letter, such that the generated
/// semigroup is the original one with a zero adjoined. Original states keep
/// their names. Throws ReservedTokenCollision.
MealyAutomaton complete_with_zero(const MealyAutomaton& automaton);

/// Re-expresses a sequence over another automaton that shares state names.
StateSequence translate_sequence(const StateSequence& sequence, const MealyAutomaton& from,
                                 const MealyAutomaton& to);

MealyAutomaton rename_letters(const MealyAutomaton& automaton,
                              const std::map<std::string, std::string>& renaming);
MealyAutomaton with_name(const MealyAutomaton& automaton, std::string name);

/// Sub-automaton on the states reachable from `roots`, names preserved.
MealyAutomaton reachable_part(const MealyAutomaton& automaton, std::span<const StateId> roots);

/// Renaming-independent description: states numbered in BFS order starting at
/// the lexicographically smallest state (then the smallest unvisited one),
/// letters explored in token order.
struct CanonicalForm {
    std::vector<std::string> letters;
    std::vector<MealyAutomaton::Edge> table;

    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const MealyAutomaton& automaton);

/// Isomorphism up to state renaming (letters fixed).
bool isomorphic(const MealyAutomaton& first, const MealyAutomaton& second);

} // namespace autstruct

#endif
