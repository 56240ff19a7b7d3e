// turing.cc -- one-tape machines, the local window map and direct simulation

#include "autstruct/turing.hh"

#include <algorithm>
#include <cctype>
#include <set>

#include "autstruct/error.hh"

namespace autstruct {

namespace {

bool is_machine_token(std::string_view token) {
    if (token.empty() || token == "0" || token == "1") {
        return false;
    }
    return std::all_of(token.begin(), token.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '.' ||
               c == '\'' || c == '-';
    });
}

std::uint32_t index_in(const std::vector<std::string>& tokens, std::string_view token, std::string_view what) {
    auto it = std::find(tokens.begin(), tokens.end(), token);
    if (it == tokens.end()) {
        throw Error(ErrorKind::MalformedMachine, "undeclared " + std::string(what) + " '" + std::string(token) + "'");
    }
    return static_cast<std::uint32_t>(it - tokens.begin());
}

void check_tokens(const std::vector<std::string>& tokens, std::string_view what) {
    std::set<std::string> seen;
    for (const auto& token : tokens) {
        if (!is_machine_token(token)) {
            throw Error(ErrorKind::MalformedMachine, "invalid " + std::string(what) + " '" + token + "'");
        }
        if (!seen.insert(token).second) {
            throw Error(ErrorKind::MalformedMachine, "duplicate " + std::string(what) + " '" + token + "'");
        }
    }
}

} // namespace

std::optional<Move> parse_move(std::string_view token) {
    if (token == "L") {
        return Move::Left;
    }
    if (token == "N") {
        return Move::Stay;
    }
    if (token == "R") {
        return Move::Right;
    }
    return std::nullopt;
}

char move_char(Move move) {
    switch (move) {
        case Move::Left: return 'L';
        case Move::Stay: return 'N';
        case Move::Right: return 'R';
    }
    return '?';
}

TuringMachine::TuringMachine(const TuringMachineSpec& spec) : spec_(spec) {
    if (spec_.tape.empty() || spec_.states.empty()) {
        throw Error(ErrorKind::MalformedMachine, "machine '" + spec_.name + "' needs tape symbols and states");
    }
    check_tokens(spec_.tape, "tape symbol");
    check_tokens(spec_.states, "state");
    blank_ = index_in(spec_.tape, spec_.blank, "blank");
    initial_ = index_in(spec_.states, spec_.initial, "state");
    final_.assign(num_states(), false);
    for (const auto& state : spec_.finals) {
        final_[index_in(spec_.states, state, "state")] = true;
    }

    actions_.resize(num_states() * num_symbols());
    std::vector<bool> given(actions_.size(), false);
    for (std::uint32_t s = 0; s < num_states(); ++s) {
        for (std::uint32_t g = 0; g < num_symbols(); ++g) {
            actions_[s * num_symbols() + g] = {g, s, Move::Stay};
        }
    }
    for (const auto& rule : spec_.rules) {
        std::uint32_t s = index_in(spec_.states, rule.state, "state");
        std::uint32_t g = index_in(spec_.tape, rule.read, "tape symbol");
        std::size_t slot = s * num_symbols() + g;
        if (given[slot]) {
            throw Error(ErrorKind::MalformedMachine,
                        "two rules for (" + rule.state + ", " + rule.read + ") in machine '" + spec_.name + "'");
        }
        given[slot] = true;
        actions_[slot] = {index_in(spec_.tape, rule.write, "tape symbol"), index_in(spec_.states, rule.next, "state"),
                          rule.move};
    }
}

std::optional<std::uint32_t> TuringMachine::find_symbol(std::string_view token) const {
    auto it = std::find(spec_.tape.begin(), spec_.tape.end(), token);
    if (it == spec_.tape.end()) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - spec_.tape.begin());
}

std::string TuringMachine::delta_token(DeltaId id) const {
    if (!is_head(id)) {
        return spec_.tape.at(id);
    }
    return spec_.tape.at(symbol_of(id)) + "@" + spec_.states.at(state_of(id));
}

unsigned digit_block_length(std::uint64_t p_val) {
    unsigned k = 0;
    while (k < 64 && (std::uint64_t{1} << k) < p_val + 1) {
        ++k;
    }
    return k;
}

void check_params(const TuringMachine& tm, const TmReductionParams& params) {
    if (params.p_val == 0) {
        throw Error(ErrorKind::InvalidArgument, "space bound must be positive");
    }
    if (params.input.size() > params.p_val) {
        throw Error(ErrorKind::InvalidArgument, "input longer than the space bound");
    }
    for (const auto& token : params.input) {
        auto symbol = tm.find_symbol(token);
        if (!symbol) {
            throw Error(ErrorKind::InvalidArgument, "input symbol '" + token + "' is not a tape symbol");
        }
        if (*symbol == tm.blank()) {
            throw Error(ErrorKind::InvalidArgument, "input must not contain the blank");
        }
    }
}

TauTable::TauTable(const TuringMachine& tm) : size_(tm.delta_size()), table_(size_ * size_ * size_, kUndefined) {
    for (DeltaId x = 0; x < size_; ++x) {
        for (DeltaId y = 0; y < size_; ++y) {
            for (DeltaId z = 0; z < size_; ++z) {
                int heads = int(tm.is_head(x)) + int(tm.is_head(y)) + int(tm.is_head(z));
                if (heads >= 2) {
                    continue;
                }
                DeltaId result = y;
                if (tm.is_head(y)) {
                    const auto& act = tm.action(tm.state_of(y), tm.symbol_of(y));
                    result = act.move == Move::Stay ? tm.head(act.write, act.next) : tm.plain(act.write);
                } else if (tm.is_head(x)) {
                    const auto& act = tm.action(tm.state_of(x), tm.symbol_of(x));
                    if (act.move == Move::Right) {
                        result = tm.head(y, act.next);
                    }
                } else if (tm.is_head(z)) {
                    const auto& act = tm.action(tm.state_of(z), tm.symbol_of(z));
                    if (act.move == Move::Left) {
                        result = tm.head(y, act.next);
                    }
                }
                table_[(x * size_ + y) * size_ + z] = result;
            }
        }
    }
}

std::optional<DeltaId> TauTable::operator()(DeltaId left, DeltaId middle, DeltaId right) const {
    DeltaId result = table_.at((left * size_ + middle) * size_ + right);
    if (result == kUndefined) {
        return std::nullopt;
    }
    return result;
}

TauTable derive_tau(const TuringMachine& tm) { return TauTable(tm); }

Configuration initial_configuration(const TuringMachine& tm, const TmReductionParams& params) {
    check_params(tm, params);
    Configuration config(params.p_val, tm.plain(tm.blank()));
    for (std::size_t i = 0; i < params.input.size(); ++i) {
        config[i] = tm.plain(*tm.find_symbol(params.input[i]));
    }
    config[0] = tm.head(tm.symbol_of(config[0]), tm.initial());
    return config;
}

Simulation simulate_tm(const TuringMachine& tm, const TmReductionParams& params, std::uint64_t max_steps) {
    Simulation result;
    Configuration config = initial_configuration(tm, params);
    std::size_t position = 0;
    result.trace.push_back(config);
    for (std::uint64_t t = 1; t <= max_steps; ++t) {
        DeltaId cell = config[position];
        const auto& act = tm.action(tm.state_of(cell), tm.symbol_of(cell));
        config[position] = tm.plain(act.write);
        if (act.move == Move::Left) {
            if (position == 0) {
                throw Error(ErrorKind::LeftEdgeViolated, "head moves left of cell 0 at step " + std::to_string(t));
            }
            --position;
        } else if (act.move == Move::Right) {
            if (position + 1 == config.size()) {
                throw Error(ErrorKind::SpaceBoundViolated,
                            "head leaves the " + std::to_string(config.size()) + " cells at step " + std::to_string(t));
            }
            ++position;
        }
        config[position] = tm.head(tm.symbol_of(config[position]), act.next);
        result.trace.push_back(config);
        if (!result.accepts_within && tm.is_final(act.next)) {
            result.accepts_within = t;
        }
    }
    return result;
}

Alphabet reduction_alphabet(const TuringMachine& tm) {
    std::vector<std::string> tokens;
    for (DeltaId id = 0; id < tm.delta_size(); ++id) {
        tokens.push_back(tm.delta_token(id));
    }
    for (const char* extra : {"0", "1", "#", "$"}) {
        tokens.emplace_back(extra);
    }
    return Alphabet(std::move(tokens));
}

Word encode_configurations(const TuringMachine& tm, const TmReductionParams& params,
                           const std::vector<Configuration>& configurations) {
    const Alphabet sigma = reduction_alphabet(tm);
    const LetterId zero = sigma.at("0");
    const LetterId hash = sigma.at("#");
    const LetterId dollar = sigma.at("$");
    const unsigned k = digit_block_length(params.p_val);
    Word word;
    for (std::size_t t = 0; t < configurations.size(); ++t) {
        if (t > 0) {
            word.push_back(hash);
        }
        for (DeltaId cell : configurations[t]) {
            word.push_back(cell); // Delta ids coincide with their letter ids
            word.insert(word.end(), k, zero);
        }
    }
    word.push_back(dollar);
    word.insert(word.end(), k, zero);
    word.push_back(dollar);
    word.push_back(zero);
    return word;
}

Word encode_computation(const TuringMachine& tm, const TmReductionParams& params, std::uint64_t steps) {
    auto simulation = simulate_tm(tm, params, steps);
    std::vector<Configuration> configurations(simulation.trace.begin() + 1, simulation.trace.end());
    return encode_configurations(tm, params, configurations);
}

} // namespace autstruct
