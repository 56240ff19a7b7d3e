// acceptor.hh -- nondeterministic spelling acceptors (rational constraints, DFAs)

#ifndef AUTSTRUCT_ACCEPTOR_HH
#define AUTSTRUCT_ACCEPTOR_HH

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "autstruct/alphabet.hh"

namespace autstruct {

/// Set of acceptor states, one flag per state.
using StateSet = std::vector<bool>;

class Acceptor {
public:
    Acceptor() = default;

    const std::string& name() const noexcept { return name_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    std::size_t num_states() const noexcept { return state_names_.size(); }
    std::size_t num_transitions() const noexcept { return num_transitions_; }
    const std::string& state_name(StateId state) const { return state_names_.at(state); }
    const std::vector<std::string>& state_names() const noexcept { return state_names_; }
    std::optional<StateId> find_state(std::string_view name) const;
    StateId state_at(std::string_view name) const;

    const std::vector<StateId>& initial() const noexcept { return initial_; }
    bool is_final(StateId state) const { return final_.at(state); }
    std::vector<StateId> final_states() const;

    /// Successors sorted by id.
    const std::vector<StateId>& successors(StateId state, LetterId letter) const {
        return delta_[static_cast<std::size_t>(state) * alphabet_.size() + letter];
    }

    /// A single initial state and at most one successor per (state, letter).
    bool is_deterministic() const;
    /// At least one successor per (state, letter).
    bool is_complete() const;

    StateSet initial_set() const;
    StateSet step(const StateSet& current, LetterId letter) const;
    bool any_final(const StateSet& current) const;
    /// States reachable by reading `word`; the empty set when the run dies.
    StateSet run(const Word& word) const;
    bool accepts(const Word& word) const { return any_final(run(word)); }

    /// Same acceptor over a (super)alphabet; letters of `target` that are not
    /// ours get no transitions. Throws UnknownLetter if one of our letters is
    /// missing from `target`.
    Acceptor over_alphabet(const Alphabet& target) const;

    bool operator==(const Acceptor& other) const;

private:
    friend class AcceptorBuilder;

    std::string name_;
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<std::vector<StateId>> delta_;
    std::vector<StateId> initial_;
    std::vector<bool> final_;
    std::size_t num_transitions_ = 0;
};

class AcceptorBuilder {
public:
    explicit AcceptorBuilder(std::string name, Alphabet alphabet = {});

    LetterId add_letter(const std::string& token) { return alphabet_.insert(token); }
    StateId add_state(const std::string& name);
    StateId ensure_state(const std::string& name);
    std::optional<StateId> find_state(std::string_view name) const;
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return state_names_.size(); }

    void add_transition(StateId from, LetterId letter, StateId to);
    void add_transition(std::string_view from, std::string_view letter, std::string_view to);
    void set_initial(StateId state);
    void set_final(StateId state);

    /// Throws InvalidArgument when no initial state was declared.
    Acceptor build() &&;

private:
    std::string name_;
    Alphabet alphabet_;
    std::vector<std::string> state_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::vector<std::tuple<StateId, LetterId, StateId>> transitions_;
    std::vector<bool> initial_;
    std::vector<bool> final_;
};

} // namespace autstruct

#endif
