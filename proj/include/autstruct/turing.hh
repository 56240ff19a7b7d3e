// turing.hh -- one-tape machines, the local window map, direct simulation and
// the digit-block encoding of computations

#ifndef AUTSTRUCT_TURING_HH
#define AUTSTRUCT_TURING_HH

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "autstruct/alphabet.hh"

namespace autstruct {

enum class Move { Left, Stay, Right };

std::optional<Move> parse_move(std::string_view token);
char move_char(Move move);

/// Machine description as written in files. Tape symbols and states are
/// restricted to [A-Za-z0-9_+.'-] and must not be "0" or "1", so that the
/// reduction alphabet (which adds 0, 1, #, $ and "sym@state" head symbols)
/// stays unambiguous.
struct TuringMachineSpec {
    struct Rule {
        std::string state;
        std::string read;
        std::string write;
        Move move = Move::Stay;
        std::string next;

        bool operator==(const Rule&) const = default;
    };

    std::string name;
    std::vector<std::string> tape;
    std::string blank;
    std::vector<std::string> states;
    std::string initial;
    std::vector<std::string> finals;
    std::vector<Rule> rules;

    bool operator==(const TuringMachineSpec&) const = default;
};

/// Symbols of Delta: tape symbols first, then (symbol, state) head symbols.
using DeltaId = std::uint32_t;
/// A configuration is a row of p_val Delta symbols.
using Configuration = std::vector<DeltaId>;

/// Validated machine with dense ids. Missing rules are stay-put self-loops,
/// so the machine never halts. Throws MalformedMachine.
class TuringMachine {
public:
    struct Action {
        std::uint32_t write;
        std::uint32_t next;
        Move move;
    };

    explicit TuringMachine(const TuringMachineSpec& spec);

    const TuringMachineSpec& spec() const noexcept { return spec_; }
    std::size_t num_symbols() const noexcept { return spec_.tape.size(); }
    std::size_t num_states() const noexcept { return spec_.states.size(); }
    std::uint32_t blank() const noexcept { return blank_; }
    std::uint32_t initial() const noexcept { return initial_; }
    bool is_final(std::uint32_t state) const { return final_.at(state); }
    std::optional<std::uint32_t> find_symbol(std::string_view token) const;
    const Action& action(std::uint32_t state, std::uint32_t symbol) const {
        return actions_[state * num_symbols() + symbol];
    }

    std::size_t delta_size() const noexcept { return num_symbols() * (1 + num_states()); }
    DeltaId plain(std::uint32_t symbol) const noexcept { return symbol; }
    DeltaId head(std::uint32_t symbol, std::uint32_t state) const noexcept {
        return static_cast<DeltaId>(num_symbols() + symbol * num_states() + state);
    }
    bool is_head(DeltaId id) const noexcept { return id >= num_symbols(); }
    std::uint32_t symbol_of(DeltaId id) const noexcept {
        return is_head(id) ? static_cast<std::uint32_t>((id - num_symbols()) / num_states()) : id;
    }
    std::uint32_t state_of(DeltaId id) const noexcept {
        return static_cast<std::uint32_t>((id - num_symbols()) % num_states());
    }
    /// "a" for tape symbols, "a@s" for head symbols.
    std::string delta_token(DeltaId id) const;
    bool is_final_symbol(DeltaId id) const { return is_head(id) && is_final(state_of(id)); }

private:
    TuringMachineSpec spec_;
    std::uint32_t blank_ = 0;
    std::uint32_t initial_ = 0;
    std::vector<bool> final_;
    std::vector<Action> actions_;
};

struct TmReductionParams {
    std::uint64_t p_val = 1;
    std::vector<std::string> input; ///< tape symbols other than the blank
    bool group_variant = false;
};

/// Length of every digit block: ceil(log2(p_val + 1)).
unsigned digit_block_length(std::uint64_t p_val);

/// Throws InvalidArgument when p_val is 0 or smaller than the input, or when
/// the input uses the blank or unknown symbols.
void check_params(const TuringMachine& tm, const TmReductionParams& params);

/// The local rule: what a cell holds one step later, given itself and its
/// two neighbours. Undefined on windows with two or more heads.
class TauTable {
public:
    explicit TauTable(const TuringMachine& tm);

    std::optional<DeltaId> operator()(DeltaId left, DeltaId middle, DeltaId right) const;
    std::size_t delta_size() const noexcept { return size_; }

private:
    static constexpr DeltaId kUndefined = ~DeltaId{0};
    std::size_t size_;
    std::vector<DeltaId> table_;
};

TauTable derive_tau(const TuringMachine& tm);

/// (a0, z0) a1 ... a(n-1) blank ... blank, p_val cells.
Configuration initial_configuration(const TuringMachine& tm, const TmReductionParams& params);

struct Simulation {
    /// First step t >= 1 whose configuration holds a final-state head.
    std::optional<std::uint64_t> accepts_within;
    /// trace[t] is the configuration after t steps; trace[0] is the initial one.
    std::vector<Configuration> trace;
};

/// Direct step-by-step simulation. Throws SpaceBoundViolated when the head
/// leaves the p_val cells to the right and LeftEdgeViolated to the left.
Simulation simulate_tm(const TuringMachine& tm, const TmReductionParams& params, std::uint64_t max_steps);

/// Delta tokens, then 0, 1, #, $.
Alphabet reduction_alphabet(const TuringMachine& tm);

/// c1' # c2' # ... # cT' $ 0^k $ 0, where c' follows every symbol of c by 0^k.
Word encode_computation(const TuringMachine& tm, const TmReductionParams& params, std::uint64_t steps);

/// Same shape for arbitrary configurations (not necessarily a computation).
Word encode_configurations(const TuringMachine& tm, const TmReductionParams& params,
                           const std::vector<Configuration>& configurations);

} // namespace autstruct

#endif
