// word_problem.cc -- product-configuration reachability and the enumeration oracle

#include "autstruct/word_problem.hh"

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <unordered_set>

#include "autstruct/error.hh"

namespace autstruct {

namespace {

void check_sequence(const MealyAutomaton& automaton, const StateSequence& sequence) {
    for (const auto& item : sequence) {
        if (item.base >= automaton.num_states()) {
            throw Error(ErrorKind::UnknownState, "sequence refers to an undeclared state");
        }
        if (item.inverted && !automaton.inverse_deterministic()) {
            throw Error(ErrorKind::NotInverseDeterministic,
                        "inverted state '~" + automaton.state_name(item.base) + "' but automaton '" +
                            automaton.name() + "' is not inverse-deterministic");
        }
    }
}

// Layout of one configuration in the arena:
//   [flags] [lhs codes] [rhs codes] [acceptor bit words ...]
constexpr std::uint32_t kLhsAlive = 1;
constexpr std::uint32_t kRhsAlive = 2;
constexpr std::uint32_t kDiverged = 4;

std::uint32_t encode(SignedState s) { return s.base * 2 + (s.inverted ? 1 : 0); }

class Arena {
public:
    explicit Arena(std::size_t stride) : stride_(stride), index_(16, Hash{this}, Eq{this}) {}

    std::size_t stride() const { return stride_; }
    std::size_t size() const { return data_.size() / stride_; }
    std::span<const std::uint32_t> at(std::size_t i) const { return {data_.data() + i * stride_, stride_}; }

    /// Scratch slot at the end of the arena, to be filled and then committed.
    std::span<std::uint32_t> scratch() {
        data_.resize((size() + 1) * stride_);
        return {data_.data() + (size() - 1) * stride_, stride_};
    }
    void discard() { data_.resize((size() - 1) * stride_); }
    /// Keeps the scratch slot if it is new; returns false (and drops it) otherwise.
    bool commit() {
        auto slot = static_cast<std::uint32_t>(size() - 1);
        if (index_.insert(slot).second) {
            return true;
        }
        data_.resize(slot * stride_);
        return false;
    }

private:
    struct Hash {
        const Arena* arena;
        std::size_t operator()(std::uint32_t i) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::uint32_t word : arena->at(i)) {
                h = (h ^ word) * 1099511628211ull;
            }
            return static_cast<std::size_t>(h ^ (h >> 29));
        }
    };
    struct Eq {
        const Arena* arena;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            auto x = arena->at(a);
            auto y = arena->at(b);
            return std::equal(x.begin(), x.end(), y.begin());
        }
    };

    std::size_t stride_;
    std::vector<std::uint32_t> data_;
    std::unordered_set<std::uint32_t, Hash, Eq> index_;
};

// Steps every item of a side, rightmost first; returns the output letter or
// nullopt when the side dies.
std::optional<LetterId> step_side(const MealyAutomaton& automaton, std::span<const std::uint32_t> from,
                                  std::span<std::uint32_t> to, LetterId letter) {
    for (std::size_t j = from.size(); j-- > 0;) {
        StateId base = from[j] / 2;
        const auto& edge = (from[j] & 1) ? automaton.inverse_edge(base, letter) : automaton.edge(base, letter);
        if (!edge.defined()) {
            return std::nullopt;
        }
        to[j] = edge.target * 2 + (from[j] & 1);
        letter = edge.letter;
    }
    return letter;
}

} // namespace

WordProblemInstance make_instance(MealyAutomaton automaton, StateSequence lhs, StateSequence rhs,
                                  std::vector<Acceptor> constraints) {
    WordProblemInstance instance;
    for (auto& constraint : constraints) {
        instance.constraints.push_back(constraint.over_alphabet(automaton.alphabet()));
    }
    instance.automaton = std::move(automaton);
    instance.lhs = std::move(lhs);
    instance.rhs = std::move(rhs);
    validate(instance);
    return instance;
}

void validate(const WordProblemInstance& instance) {
    check_sequence(instance.automaton, instance.lhs);
    check_sequence(instance.automaton, instance.rhs);
    for (const auto& constraint : instance.constraints) {
        if (!(constraint.alphabet() == instance.automaton.alphabet())) {
            throw Error(ErrorKind::UnknownLetter, "constraint '" + constraint.name() +
                                                      "' is not over the alphabet of automaton '" +
                                                      instance.automaton.name() + "'");
        }
    }
}

PartialValue partial_value(const MealyAutomaton& automaton, const StateSequence& sequence, const Word& word) {
    auto result = act_word(automaton, sequence, word);
    if (auto* defined = std::get_if<Defined>(&result)) {
        return std::move(defined->output);
    }
    return std::nullopt;
}

namespace {

Verdict not_equal(const WordProblemInstance& instance, Word witness, std::uint64_t explored) {
    Verdict verdict;
    verdict.kind = VerdictKind::NotEqual;
    verdict.lhs_value = partial_value(instance.automaton, instance.lhs, witness);
    verdict.rhs_value = partial_value(instance.automaton, instance.rhs, witness);
    verdict.witness = std::move(witness);
    verdict.explored = explored;
    return verdict;
}

} // namespace

Verdict decide(const WordProblemInstance& instance, const DecideOptions& options) {
    validate(instance);
    const auto& automaton = instance.automaton;
    const std::size_t n = instance.lhs.size();
    const std::size_t m = instance.rhs.size();
    const auto& letters = automaton.alphabet().lex_order();

    std::vector<std::size_t> set_offset;
    std::size_t stride = 1 + n + m;
    for (const auto& constraint : instance.constraints) {
        set_offset.push_back(stride);
        stride += (constraint.num_states() + 31) / 32;
    }
    auto has = [](std::span<const std::uint32_t> config, std::size_t offset, StateId q) {
        return (config[offset + q / 32] >> (q % 32)) & 1u;
    };

    const std::optional<std::uint64_t> budget = options.max_configs ? options.max_configs : instance.budget;

    Arena arena(stride);
    std::vector<std::uint32_t> parent;
    std::vector<LetterId> via;

    {
        auto slot = arena.scratch();
        std::fill(slot.begin(), slot.end(), 0);
        slot[0] = kLhsAlive | kRhsAlive;
        for (std::size_t j = 0; j < n; ++j) {
            slot[1 + j] = encode(instance.lhs[j]);
        }
        for (std::size_t j = 0; j < m; ++j) {
            slot[1 + n + j] = encode(instance.rhs[j]);
        }
        for (std::size_t k = 0; k < instance.constraints.size(); ++k) {
            for (StateId q : instance.constraints[k].initial()) {
                slot[set_offset[k] + q / 32] |= 1u << (q % 32);
            }
        }
        arena.commit();
        parent.push_back(0);
        via.push_back(0);
    }

    auto path_to = [&](std::size_t index) {
        Word word;
        while (index != 0) {
            word.push_back(via[index]);
            index = parent[index];
        }
        std::reverse(word.begin(), word.end());
        return word;
    };

    for (std::size_t current = 0; current < arena.size(); ++current) {
        for (LetterId letter : letters) {
            auto next = arena.scratch();
            auto config = arena.at(current); // after scratch(): the arena may have moved
            std::fill(next.begin(), next.end(), 0);

            std::uint32_t flags = config[0];
            std::optional<LetterId> out_lhs;
            std::optional<LetterId> out_rhs;
            if (flags & kLhsAlive) {
                out_lhs = step_side(automaton, config.subspan(1, n), next.subspan(1, n), letter);
            }
            if (flags & kRhsAlive) {
                out_rhs = step_side(automaton, config.subspan(1 + n, m), next.subspan(1 + n, m), letter);
            }
            std::uint32_t next_flags = 0;
            if (out_lhs) {
                next_flags |= kLhsAlive;
            } else {
                std::fill_n(next.begin() + 1, n, 0);
            }
            if (out_rhs) {
                next_flags |= kRhsAlive;
            } else {
                std::fill_n(next.begin() + 1 + n, m, 0);
            }
            if (out_lhs && out_rhs && ((flags & kDiverged) || *out_lhs != *out_rhs)) {
                next_flags |= kDiverged;
            }
            next[0] = next_flags;

            bool both_dead = !out_lhs && !out_rhs;
            bool accepted = true;
            bool dead_set = false;
            for (std::size_t k = 0; k < instance.constraints.size() && !both_dead; ++k) {
                const auto& acceptor = instance.constraints[k];
                bool any = false;
                bool any_final = false;
                for (StateId q = 0; q < acceptor.num_states(); ++q) {
                    if (!has(config, set_offset[k], q)) {
                        continue;
                    }
                    for (StateId p : acceptor.successors(q, letter)) {
                        next[set_offset[k] + p / 32] |= 1u << (p % 32);
                        any = true;
                        any_final = any_final || acceptor.is_final(p);
                    }
                }
                dead_set = dead_set || !any;
                accepted = accepted && any_final;
            }
            if (both_dead || dead_set) {
                arena.discard();
                continue;
            }

            bool one_alive = static_cast<bool>(out_lhs) != static_cast<bool>(out_rhs);
            if (accepted && ((next_flags & kDiverged) || one_alive)) {
                Word witness = path_to(current);
                witness.push_back(letter);
                arena.discard();
                return not_equal(instance, std::move(witness), arena.size());
            }
            if (arena.commit()) {
                parent.push_back(static_cast<std::uint32_t>(current));
                via.push_back(letter);
                if (budget && arena.size() > *budget) {
                    throw Error(ErrorKind::ConfigBudgetExceeded,
                                "more than " + std::to_string(*budget) + " configurations explored");
                }
            }
        }
    }

    Verdict verdict;
    verdict.explored = arena.size();
    return verdict;
}

namespace {

// Everything about a word that matters for its extensions: whether each side
// is defined (and its cross sequence), whether the outputs already differ,
// and the acceptor state sets.
using WordClass = std::vector<std::uint32_t>;

struct Evaluation {
    WordClass key;
    bool prune = false;
    bool witness = false;
};

Evaluation evaluate(const WordProblemInstance& instance, const Word& word) {
    Evaluation result;
    auto lhs = act_word(instance.automaton, instance.lhs, word);
    auto rhs = act_word(instance.automaton, instance.rhs, word);
    const auto* lhs_defined = std::get_if<Defined>(&lhs);
    const auto* rhs_defined = std::get_if<Defined>(&rhs);

    bool accepted = true;
    std::vector<StateSet> runs;
    for (const auto& constraint : instance.constraints) {
        runs.push_back(constraint.run(word));
        accepted = accepted && constraint.any_final(runs.back());
        if (std::find(runs.back().begin(), runs.back().end(), true) == runs.back().end()) {
            result.prune = true;
        }
    }
    if (!lhs_defined && !rhs_defined) {
        result.prune = true;
    }
    if (result.prune) {
        return result;
    }

    bool differ = lhs_defined && rhs_defined && lhs_defined->output != rhs_defined->output;
    result.witness = accepted && (differ || !lhs_defined || !rhs_defined);

    auto& key = result.key;
    key.push_back((lhs_defined ? 1u : 0u) | (rhs_defined ? 2u : 0u) | (differ ? 4u : 0u));
    for (const auto* side : {lhs_defined, rhs_defined}) {
        if (side) {
            for (const auto& item : side->cross) {
                key.push_back(encode(item));
            }
        }
    }
    for (const auto& run : runs) {
        for (bool member : run) {
            key.push_back(member ? 1u : 0u);
        }
    }
    return result;
}

} // namespace

Verdict oracle_decide(const WordProblemInstance& instance, std::uint64_t max_len) {
    validate(instance);
    const auto& letters = instance.automaton.alphabet().lex_order();
    std::uint64_t explored = 1;

    // Level 0 holds the empty word alone; its two values coincide.
    std::vector<Word> level{Word{}};
    std::vector<std::set<WordClass>> history{{evaluate(instance, Word{}).key}};

    for (std::uint64_t length = 1; length <= max_len; ++length) {
        std::vector<Word> next_level;
        std::set<WordClass> classes;
        for (const auto& prefix : level) {
            for (LetterId letter : letters) {
                Word word = prefix;
                word.push_back(letter);
                ++explored;
                auto evaluation = evaluate(instance, word);
                if (evaluation.prune) {
                    continue;
                }
                if (evaluation.witness) {
                    return not_equal(instance, std::move(word), explored);
                }
                // Words are generated in lexicographic order, so the first
                // member of each class is its smallest.
                if (classes.insert(std::move(evaluation.key)).second) {
                    next_level.push_back(std::move(word));
                }
            }
        }
        if (classes.empty() || std::find(history.begin(), history.end(), classes) != history.end()) {
            Verdict verdict;
            verdict.explored = explored;
            return verdict;
        }
        history.push_back(std::move(classes));
        level = std::move(next_level);
    }

    Verdict verdict;
    verdict.bounded = true;
    verdict.explored = explored;
    return verdict;
}

namespace {

Count saturating_mul(Count a, std::uint64_t b) {
    if (a.saturated) {
        return a;
    }
    std::uint64_t product = 0;
    if (__builtin_mul_overflow(a.value, b, &product)) {
        return {std::numeric_limits<std::uint64_t>::max(), true};
    }
    return {product, false};
}

} // namespace

Count config_bound(const WordProblemInstance& instance) {
    Count bound{2, false};
    const std::uint64_t base = instance.automaton.num_states() + 1;
    for (std::size_t i = 0; i < instance.lhs.size() + instance.rhs.size(); ++i) {
        bound = saturating_mul(bound, base);
    }
    for (const auto& constraint : instance.constraints) {
        for (std::size_t i = 0; i < constraint.num_states(); ++i) {
            bound = saturating_mul(bound, 2);
        }
    }
    return bound;
}

} // namespace autstruct
