// mealy.cc -- synchronous transducers and the constructions on them

#include "autstruct/mealy.hh"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "autstruct/error.hh"

namespace autstruct {

namespace {

std::uint64_t edge_key(StateId state, LetterId letter) {
    return (static_cast<std::uint64_t>(state) << 32) | letter;
}

void require_state(const MealyAutomaton& automaton, StateId state) {
    if (state >= automaton.num_states()) {
        throw Error(ErrorKind::UnknownState, "state id " + std::to_string(state) + " out of range");
    }
}

void require_letter(const MealyAutomaton& automaton, LetterId letter) {
    if (letter >= automaton.alphabet().size()) {
        throw Error(ErrorKind::UnknownLetter, "letter id " + std::to_string(letter) + " out of range");
    }
}

} // namespace

// MealyAutomaton

std::optional<StateId> MealyAutomaton::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

StateId MealyAutomaton::state_at(std::string_view name) const {
    if (auto id = find_state(name)) {
        return *id;
    }
    throw Error(ErrorKind::UnknownState,
                "unknown state '" + std::string(name) + "' in automaton '" + name_ + "'");
}

StateSequence MealyAutomaton::parse_sequence(std::span<const std::string> tokens) const {
    StateSequence sequence;
    sequence.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (auto id = find_state(token)) {
            sequence.push_back({*id, false});
        } else if (token.size() > 1 && token.front() == '~') {
            sequence.push_back({state_at(std::string_view(token).substr(1)), true});
        } else {
            state_at(token); // throws
        }
    }
    return sequence;
}

StateSequence MealyAutomaton::parse_sequence(std::string_view text) const {
    auto tokens = split_tokens(text);
    return parse_sequence(tokens);
}

std::vector<std::string> MealyAutomaton::sequence_tokens(const StateSequence& sequence) const {
    std::vector<std::string> tokens;
    tokens.reserve(sequence.size());
    for (const auto& item : sequence) {
        tokens.push_back((item.inverted ? "~" : "") + state_name(item.base));
    }
    return tokens;
}

std::string MealyAutomaton::format_sequence(const StateSequence& sequence) const {
    auto tokens = sequence_tokens(sequence);
    return join_tokens(tokens);
}

bool MealyAutomaton::operator==(const MealyAutomaton& other) const {
    return name_ == other.name_ && alphabet_ == other.alphabet_ &&
           state_names_ == other.state_names_ && table_ == other.table_;
}

// MealyBuilder

MealyBuilder::MealyBuilder(std::string name, Alphabet alphabet)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {
    if (!is_valid_token(name_)) {
        throw Error(ErrorKind::InvalidToken, "invalid automaton name '" + name_ + "'");
    }
}

StateId MealyBuilder::add_state(const std::string& name) {
    if (!is_valid_token(name)) {
        throw Error(ErrorKind::InvalidToken, "invalid state name '" + name + "'");
    }
    if (state_index_.contains(name)) {
        throw Error(ErrorKind::InvalidToken, "duplicate state '" + name + "'");
    }
    auto id = static_cast<StateId>(state_names_.size());
    state_index_.emplace(name, id);
    state_names_.push_back(name);
    return id;
}

StateId MealyBuilder::ensure_state(const std::string& name) {
    if (auto id = find_state(name)) {
        return *id;
    }
    return add_state(name);
}

std::optional<StateId> MealyBuilder::find_state(std::string_view name) const {
    auto it = state_index_.find(std::string(name));
    if (it == state_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void MealyBuilder::add_transition(StateId from, LetterId input, LetterId output, StateId to) {
    if (from >= state_names_.size() || to >= state_names_.size()) {
        throw Error(ErrorKind::UnknownState, "transition refers to an undeclared state");
    }
    if (input >= alphabet_.size() || output >= alphabet_.size()) {
        throw Error(ErrorKind::UnknownLetter, "transition refers to an undeclared letter");
    }
    MealyAutomaton::Edge edge{output, to};
    auto [it, inserted] = edges_.emplace(edge_key(from, input), edge);
    if (!inserted && it->second != edge) {
        throw Error(ErrorKind::NotDeterministic,
                    "two transitions from '" + state_names_[from] + "' on input '" +
                        alphabet_.token(input) + "' in automaton '" + name_ + "'");
    }
}

void MealyBuilder::add_transition(std::string_view from, std::string_view input,
                                  std::string_view output, std::string_view to) {
    auto lookup = [this](std::string_view state) {
        if (auto id = find_state(state)) {
            return *id;
        }
        throw Error(ErrorKind::UnknownState, "undeclared state '" + std::string(state) + "'");
    };
    add_transition(lookup(from), alphabet_.at(input), alphabet_.at(output), lookup(to));
}

void MealyBuilder::add_identity(StateId from, std::span<const LetterId> letters, StateId to) {
    for (LetterId letter : letters) {
        add_transition(from, letter, letter, to);
    }
}

bool MealyBuilder::has_transition(StateId from, LetterId input) const {
    return edges_.contains(edge_key(from, input));
}

MealyAutomaton MealyBuilder::build() && {
    MealyAutomaton result;
    result.name_ = std::move(name_);
    result.alphabet_ = std::move(alphabet_);
    result.state_names_ = std::move(state_names_);
    result.state_index_ = std::move(state_index_);

    const std::size_t width = result.alphabet_.size();
    const std::size_t cells = result.state_names_.size() * width;
    result.table_.assign(cells, {});
    result.inverse_table_.assign(cells, {});
    result.num_transitions_ = edges_.size();
    for (const auto& [key, edge] : edges_) {
        auto from = static_cast<StateId>(key >> 32);
        auto input = static_cast<LetterId>(key & 0xffffffffu);
        result.table_[from * width + input] = edge;
        auto& back = result.inverse_table_[from * width + edge.letter];
        if (back.defined()) {
            result.inverse_deterministic_ = false;
        }
        back = {input, edge.target};
    }
    if (!result.inverse_deterministic_) {
        result.inverse_table_.clear();
    }
    return result;
}

// Actions

std::optional<Step> act_step(const MealyAutomaton& automaton, SignedState state, LetterId letter) {
    require_state(automaton, state.base);
    require_letter(automaton, letter);
    if (!state.inverted) {
        const auto& edge = automaton.edge(state.base, letter);
        if (!edge.defined()) {
            return std::nullopt;
        }
        return Step{edge.letter, {edge.target, false}};
    }
    if (!automaton.inverse_deterministic()) {
        throw Error(ErrorKind::NotInverseDeterministic,
                    "inverted state in automaton '" + automaton.name() + "'");
    }
    const auto& edge = automaton.inverse_edge(state.base, letter);
    if (!edge.defined()) {
        return std::nullopt;
    }
    return Step{edge.letter, {edge.target, true}};
}

ActResult act_word(const MealyAutomaton& automaton, const StateSequence& sequence, const Word& word) {
    StateSequence cross = sequence;
    Word output;
    output.reserve(word.size());
    for (std::size_t position = 0; position < word.size(); ++position) {
        LetterId letter = word[position];
        require_letter(automaton, letter);
        for (std::size_t j = cross.size(); j-- > 0;) {
            auto step = act_step(automaton, cross[j], letter);
            if (!step) {
                return UndefinedAt{position};
            }
            cross[j] = step->next;
            letter = step->output;
        }
        output.push_back(letter);
    }
    return Defined{std::move(output), std::move(cross)};
}

// Properties

PropertyReport check_properties(const MealyAutomaton& automaton) {
    const std::size_t width = automaton.alphabet().size();
    const std::size_t states = automaton.num_states();

    PropertyReport report;
    report.deterministic = true; // a table keyed on (state, input)
    report.complete = true;
    report.inverse_deterministic = automaton.inverse_deterministic();
    report.inverse_complete = true;
    report.reversible = true;
    bool output_reversible = true;

    constexpr std::int64_t kNobody = -1;
    std::vector<std::int64_t> input_source(states * width, kNobody);
    std::vector<std::int64_t> output_source(states * width, kNobody);

    for (StateId q = 0; q < states; ++q) {
        std::vector<bool> produced(width, false);
        for (LetterId a = 0; a < width; ++a) {
            const auto& edge = automaton.edge(q, a);
            if (!edge.defined()) {
                report.complete = false;
                continue;
            }
            produced[edge.letter] = true;
            auto& by_input = input_source[edge.target * width + a];
            if (by_input != kNobody && by_input != q) {
                report.reversible = false;
            }
            by_input = q;
            auto& by_output = output_source[edge.target * width + edge.letter];
            if (by_output != kNobody && by_output != q) {
                output_reversible = false;
            }
            by_output = q;
        }
        if (std::find(produced.begin(), produced.end(), false) != produced.end()) {
            report.inverse_complete = false;
        }
    }
    report.bireversible = report.reversible && output_reversible;
    report.is_s_bar_automaton = report.deterministic && report.inverse_deterministic;
    report.is_g_automaton = report.is_s_bar_automaton && report.complete;
    return report;
}

std::string format_report(const PropertyReport& report) {
    auto flag = [](bool value) { return value ? "true" : "false"; };
    std::string out;
    out += "deterministic=" + std::string(flag(report.deterministic));
    out += " complete=" + std::string(flag(report.complete));
    out += " inverse-deterministic=" + std::string(flag(report.inverse_deterministic));
    out += " inverse-complete=" + std::string(flag(report.inverse_complete));
    out += " reversible=" + std::string(flag(report.reversible));
    out += " bireversible=" + std::string(flag(report.bireversible));
    out += " s-bar-automaton=" + std::string(flag(report.is_s_bar_automaton));
    out += " g-automaton=" + std::string(flag(report.is_g_automaton));
    return out;
}

// Constructions

MealyAutomaton invert(const MealyAutomaton& automaton) {
    if (!automaton.inverse_deterministic()) {
        throw Error(ErrorKind::NotInverseDeterministic,
                    "automaton '" + automaton.name() + "' has no deterministic inverse");
    }
    auto inverse_name = [](const std::string& name) {
        return name.size() > 1 && name.front() == '~' ? name.substr(1) : "~" + name;
    };
    MealyBuilder builder(inverse_name(automaton.name()), automaton.alphabet());
    for (const auto& state : automaton.state_names()) {
        builder.add_state(inverse_name(state));
    }
    const auto width = automaton.alphabet().size();
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        for (LetterId a = 0; a < width; ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                builder.add_transition(q, edge.letter, a, edge.target);
            }
        }
    }
    return std::move(builder).build();
}

MealyAutomaton union_of(const MealyAutomaton& first, const MealyAutomaton& second) {
    bool collide = std::any_of(first.state_names().begin(), first.state_names().end(),
                               [&](const std::string& s) { return second.find_state(s).has_value(); });
    std::string prefix_first;
    std::string prefix_second;
    if (collide) {
        if (first.name() == second.name()) {
            prefix_first = first.name() + "_1.";
            prefix_second = second.name() + "_2.";
        } else {
            prefix_first = first.name() + ".";
            prefix_second = second.name() + ".";
        }
    }

    MealyBuilder builder(first.name() + "+" + second.name(), first.alphabet());
    auto append = [&builder](const MealyAutomaton& part, const std::string& prefix) {
        std::vector<LetterId> letters;
        for (const auto& token : part.alphabet().tokens()) {
            letters.push_back(builder.add_letter(token));
        }
        std::vector<StateId> states;
        for (const auto& name : part.state_names()) {
            states.push_back(builder.add_state(prefix + name));
        }
        for (StateId q = 0; q < part.num_states(); ++q) {
            for (LetterId a = 0; a < part.alphabet().size(); ++a) {
                const auto& edge = part.edge(q, a);
                if (edge.defined()) {
                    builder.add_transition(states[q], letters[a], letters[edge.letter], states[edge.target]);
                }
            }
        }
    };
    append(first, prefix_first);
    append(second, prefix_second);
    return std::move(builder).build();
}

MealyAutomaton dual(const MealyAutomaton& automaton) {
    Alphabet letters(automaton.state_names());
    MealyBuilder builder("dual." + automaton.name(), letters);
    for (const auto& token : automaton.alphabet().tokens()) {
        builder.add_state(token);
    }
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        for (LetterId a = 0; a < automaton.alphabet().size(); ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                // (q, a) -> (b, p) becomes (a, q) -> (p, b)
                builder.add_transition(a, q, edge.target, edge.letter);
            }
        }
    }
    return std::move(builder).build();
}

MealyAutomaton complete_with_zero(const MealyAutomaton& automaton) {
    if (automaton.alphabet().contains(kBottomLetter)) {
        throw Error(ErrorKind::ReservedTokenCollision, "letter '_bot' already in use");
    }
    if (automaton.find_state(kZeroState)) {
        throw Error(ErrorKind::ReservedTokenCollision, "state '_zero' already in use");
    }
    MealyBuilder builder(automaton.name() + ".zero", automaton.alphabet());
    const LetterId bottom = builder.add_letter(std::string(kBottomLetter));
    for (const auto& name : automaton.state_names()) {
        builder.add_state(name);
    }
    const StateId zero = builder.add_state(std::string(kZeroState));
    const auto width = automaton.alphabet().size();
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        for (LetterId a = 0; a < width; ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                builder.add_transition(q, a, edge.letter, edge.target);
            } else {
                builder.add_transition(q, a, bottom, zero);
            }
        }
        builder.add_transition(q, bottom, bottom, zero);
    }
    for (LetterId a = 0; a <= width; ++a) {
        builder.add_transition(zero, a, bottom, zero);
    }
    return std::move(builder).build();
}

StateSequence translate_sequence(const StateSequence& sequence, const MealyAutomaton& from,
                                 const MealyAutomaton& to) {
    StateSequence result;
    result.reserve(sequence.size());
    for (const auto& item : sequence) {
        result.push_back({to.state_at(from.state_name(item.base)), item.inverted});
    }
    return result;
}

MealyAutomaton rename_letters(const MealyAutomaton& automaton,
                              const std::map<std::string, std::string>& renaming) {
    std::vector<std::string> tokens;
    for (const auto& token : automaton.alphabet().tokens()) {
        auto it = renaming.find(token);
        tokens.push_back(it == renaming.end() ? token : it->second);
    }
    MealyBuilder builder(automaton.name(), Alphabet(tokens));
    for (const auto& name : automaton.state_names()) {
        builder.add_state(name);
    }
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        for (LetterId a = 0; a < automaton.alphabet().size(); ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                builder.add_transition(q, a, edge.letter, edge.target);
            }
        }
    }
    return std::move(builder).build();
}

MealyAutomaton with_name(const MealyAutomaton& automaton, std::string name) {
    MealyBuilder builder(std::move(name), automaton.alphabet());
    for (const auto& state : automaton.state_names()) {
        builder.add_state(state);
    }
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        for (LetterId a = 0; a < automaton.alphabet().size(); ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                builder.add_transition(q, a, edge.letter, edge.target);
            }
        }
    }
    return std::move(builder).build();
}

MealyAutomaton reachable_part(const MealyAutomaton& automaton, std::span<const StateId> roots) {
    std::vector<bool> seen(automaton.num_states(), false);
    std::deque<StateId> queue;
    for (StateId root : roots) {
        require_state(automaton, root);
        if (!seen[root]) {
            seen[root] = true;
            queue.push_back(root);
        }
    }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (LetterId a = 0; a < automaton.alphabet().size(); ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined() && !seen[edge.target]) {
                seen[edge.target] = true;
                queue.push_back(edge.target);
            }
        }
    }
    MealyBuilder builder(automaton.name(), automaton.alphabet());
    std::vector<StateId> renumber(automaton.num_states(), 0);
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        if (seen[q]) {
            renumber[q] = builder.add_state(automaton.state_name(q));
        }
    }
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        if (!seen[q]) {
            continue;
        }
        for (LetterId a = 0; a < automaton.alphabet().size(); ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                builder.add_transition(renumber[q], a, edge.letter, renumber[edge.target]);
            }
        }
    }
    return std::move(builder).build();
}

// Canonical forms and isomorphism

CanonicalForm canonical_form(const MealyAutomaton& automaton) {
    const auto& lex = automaton.alphabet().lex_order();
    const std::size_t width = lex.size();
    std::vector<std::size_t> lex_rank(width);
    for (std::size_t i = 0; i < width; ++i) {
        lex_rank[lex[i]] = i;
    }

    std::vector<StateId> by_name(automaton.num_states());
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        by_name[q] = q;
    }
    std::sort(by_name.begin(), by_name.end(), [&](StateId a, StateId b) {
        return automaton.state_name(a) < automaton.state_name(b);
    });

    constexpr StateId kUnnumbered = std::numeric_limits<StateId>::max();
    std::vector<StateId> number(automaton.num_states(), kUnnumbered);
    std::vector<StateId> order;
    for (StateId start : by_name) {
        if (number[start] != kUnnumbered) {
            continue;
        }
        std::deque<StateId> queue{start};
        number[start] = static_cast<StateId>(order.size());
        order.push_back(start);
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (LetterId a : lex) {
                const auto& edge = automaton.edge(q, a);
                if (edge.defined() && number[edge.target] == kUnnumbered) {
                    number[edge.target] = static_cast<StateId>(order.size());
                    order.push_back(edge.target);
                    queue.push_back(edge.target);
                }
            }
        }
    }

    CanonicalForm form;
    for (LetterId a : lex) {
        form.letters.push_back(automaton.alphabet().token(a));
    }
    form.table.reserve(order.size() * width);
    for (StateId q : order) {
        for (LetterId a : lex) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                form.table.push_back({static_cast<LetterId>(lex_rank[edge.letter]), number[edge.target]});
            } else {
                form.table.push_back({});
            }
        }
    }
    return form;
}

bool isomorphic(const MealyAutomaton& first, const MealyAutomaton& second) {
    if (first.num_states() != second.num_states() ||
        first.num_transitions() != second.num_transitions() ||
        first.alphabet().size() != second.alphabet().size()) {
        return false;
    }
    const std::size_t width = first.alphabet().size();
    std::vector<LetterId> letter_map(width);
    for (LetterId a = 0; a < width; ++a) {
        auto other = second.alphabet().find(first.alphabet().token(a));
        if (!other) {
            return false;
        }
        letter_map[a] = *other;
    }

    constexpr StateId kFree = std::numeric_limits<StateId>::max();
    const std::size_t n = first.num_states();
    std::vector<StateId> forward(n, kFree);
    std::vector<StateId> backward(n, kFree);

    // Extends the partial bijection with x -> y and everything it forces.
    // Returns the pairs added so the caller can undo them.
    auto extend = [&](StateId x, StateId y, std::vector<StateId>& added) {
        std::deque<std::pair<StateId, StateId>> queue{{x, y}};
        forward[x] = y;
        backward[y] = x;
        added.push_back(x);
        while (!queue.empty()) {
            auto [p, q] = queue.front();
            queue.pop_front();
            for (LetterId a = 0; a < width; ++a) {
                const auto& e1 = first.edge(p, a);
                const auto& e2 = second.edge(q, letter_map[a]);
                if (e1.defined() != e2.defined()) {
                    return false;
                }
                if (!e1.defined()) {
                    continue;
                }
                if (letter_map[e1.letter] != e2.letter) {
                    return false;
                }
                if (forward[e1.target] == kFree && backward[e2.target] == kFree) {
                    forward[e1.target] = e2.target;
                    backward[e2.target] = e1.target;
                    added.push_back(e1.target);
                    queue.push_back({e1.target, e2.target});
                } else if (forward[e1.target] != e2.target) {
                    return false;
                }
            }
        }
        return true;
    };

    std::function<bool()> search = [&]() -> bool {
        StateId x = 0;
        while (x < n && forward[x] != kFree) {
            ++x;
        }
        if (x == n) {
            return true;
        }
        for (StateId y = 0; y < n; ++y) {
            if (backward[y] != kFree) {
                continue;
            }
            std::vector<StateId> added;
            if (extend(x, y, added) && search()) {
                return true;
            }
            for (StateId p : added) {
                backward[forward[p]] = kFree;
                forward[p] = kFree;
            }
        }
        return false;
    };
    return search();
}

} // namespace autstruct
