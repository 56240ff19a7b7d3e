// acceptor.cc -- nondeterministic spelling acceptors

#include "autstruct/acceptor.hh"

#include <algorithm>
#include <tuple>

#include "autstruct/error.hh"

namespace autstruct {

std::optional<StateId> Acceptor::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

StateId Acceptor::state_at(std::string_view name) const {
    if (auto id = find_state(name)) {
        return *id;
    }
    throw Error(ErrorKind::UnknownState,
                "unknown state '" + std::string(name) + "' in acceptor '" + name_ + "'");
}

std::vector<StateId> Acceptor::final_states() const {
    std::vector<StateId> result;
    for (StateId q = 0; q < num_states(); ++q) {
        if (final_[q]) {
            result.push_back(q);
        }
    }
    return result;
}

bool Acceptor::is_deterministic() const {
    if (initial_.size() != 1) {
        return false;
    }
    return std::all_of(delta_.begin(), delta_.end(), [](const auto& targets) { return targets.size() <= 1; });
}

bool Acceptor::is_complete() const {
    return std::none_of(delta_.begin(), delta_.end(), [](const auto& targets) { return targets.empty(); });
}

StateSet Acceptor::initial_set() const {
    StateSet set(num_states(), false);
    for (StateId q : initial_) {
        set[q] = true;
    }
    return set;
}

StateSet Acceptor::step(const StateSet& current, LetterId letter) const {
    if (letter >= alphabet_.size()) {
        throw Error(ErrorKind::UnknownLetter, "letter id out of range for acceptor '" + name_ + "'");
    }
    StateSet next(num_states(), false);
    for (StateId q = 0; q < num_states(); ++q) {
        if (current[q]) {
            for (StateId p : successors(q, letter)) {
                next[p] = true;
            }
        }
    }
    return next;
}

bool Acceptor::any_final(const StateSet& current) const {
    for (StateId q = 0; q < num_states(); ++q) {
        if (current[q] && final_[q]) {
            return true;
        }
    }
    return false;
}

StateSet Acceptor::run(const Word& word) const {
    StateSet current = initial_set();
    for (LetterId letter : word) {
        current = step(current, letter);
    }
    return current;
}

Acceptor Acceptor::over_alphabet(const Alphabet& target) const {
    if (target == alphabet_) {
        return *this;
    }
    AcceptorBuilder builder(name_, target);
    for (const auto& state : state_names_) {
        builder.add_state(state);
    }
    std::vector<LetterId> letters;
    for (const auto& token : alphabet_.tokens()) {
        letters.push_back(target.at(token));
    }
    for (StateId q = 0; q < num_states(); ++q) {
        for (LetterId a = 0; a < alphabet_.size(); ++a) {
            for (StateId p : successors(q, a)) {
                builder.add_transition(q, letters[a], p);
            }
        }
        if (final_[q]) {
            builder.set_final(q);
        }
    }
    for (StateId q : initial_) {
        builder.set_initial(q);
    }
    return std::move(builder).build();
}

bool Acceptor::operator==(const Acceptor& other) const {
    return name_ == other.name_ && alphabet_ == other.alphabet_ && state_names_ == other.state_names_ &&
           delta_ == other.delta_ && initial_ == other.initial_ && final_ == other.final_;
}

AcceptorBuilder::AcceptorBuilder(std::string name, Alphabet alphabet)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {
    if (!is_valid_token(name_)) {
        throw Error(ErrorKind::InvalidToken, "invalid acceptor name '" + name_ + "'");
    }
}

StateId AcceptorBuilder::add_state(const std::string& name) {
    if (!is_valid_token(name)) {
        throw Error(ErrorKind::InvalidToken, "invalid state name '" + name + "'");
    }
    if (state_index_.contains(name)) {
        throw Error(ErrorKind::InvalidToken, "duplicate state '" + name + "'");
    }
    auto id = static_cast<StateId>(state_names_.size());
    state_index_.emplace(name, id);
    state_names_.push_back(name);
    initial_.push_back(false);
    final_.push_back(false);
    return id;
}

StateId AcceptorBuilder::ensure_state(const std::string& name) {
    if (auto id = find_state(name)) {
        return *id;
    }
    return add_state(name);
}

std::optional<StateId> AcceptorBuilder::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void AcceptorBuilder::add_transition(StateId from, LetterId letter, StateId to) {
    if (from >= state_names_.size() || to >= state_names_.size()) {
        throw Error(ErrorKind::UnknownState, "transition refers to an undeclared state");
    }
    if (letter >= alphabet_.size()) {
        throw Error(ErrorKind::UnknownLetter, "transition refers to an undeclared letter");
    }
    transitions_.emplace_back(from, letter, to);
}

void AcceptorBuilder::add_transition(std::string_view from, std::string_view letter, std::string_view to) {
    auto lookup = [this](std::string_view state) {
        if (auto id = find_state(state)) {
            return *id;
        }
        throw Error(ErrorKind::UnknownState, "undeclared state '" + std::string(state) + "'");
    };
    add_transition(lookup(from), alphabet_.at(letter), lookup(to));
}

void AcceptorBuilder::set_initial(StateId state) {
    initial_.at(state) = true;
}

void AcceptorBuilder::set_final(StateId state) {
    final_.at(state) = true;
}

Acceptor AcceptorBuilder::build() && {
    Acceptor result;
    result.name_ = std::move(name_);
    result.alphabet_ = std::move(alphabet_);
    result.state_names_ = std::move(state_names_);
    result.state_index_ = std::move(state_index_);
    result.final_ = std::move(final_);
    for (StateId q = 0; q < initial_.size(); ++q) {
        if (initial_[q]) {
            result.initial_.push_back(q);
        }
    }
    if (result.initial_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "acceptor '" + result.name_ + "' has no initial state");
    }
    const std::size_t width = result.alphabet_.size();
    result.delta_.assign(result.state_names_.size() * width, {});
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    for (const auto& [from, letter, to] : transitions_) {
        result.delta_[from * width + letter].push_back(to);
    }
    result.num_transitions_ = transitions_.size();
    return result;
}

} // namespace autstruct
