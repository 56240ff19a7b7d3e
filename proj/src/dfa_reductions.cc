// dfa_reductions.cc -- DFA intersection emptiness and DFA emptiness as word problems

#include "autstruct/dfa_reductions.hh"

#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "autstruct/error.hh"

namespace autstruct {

namespace {

struct Letters {
    LetterId zero;
    LetterId one;
    LetterId hash;
};

std::string at(const std::string& prefix, std::size_t i) { return prefix + ":" + std::to_string(i); }

// The last three states of every row: r -#-> r+1 -1/x-> r+2. `flip` selects
// whether the trailing 1 becomes 0. With `complete`, the dashed transitions
// close the row into a permutation at every state.
void add_row_tail(MealyBuilder& b, const Letters& l, const std::array<std::string, 3>& names, bool flip,
                  bool complete) {
    StateId last = b.ensure_state(names[0]);
    StateId hash_seen = b.ensure_state(names[1]);
    StateId done = b.ensure_state(names[2]);
    b.add_transition(last, l.hash, l.hash, hash_seen);
    b.add_transition(hash_seen, l.one, flip ? l.zero : l.one, done);
    if (complete) {
        b.add_transition(last, l.zero, l.zero, hash_seen);
        b.add_transition(last, l.one, l.one, hash_seen);
        b.add_transition(hash_seen, l.zero, flip ? l.one : l.zero, done);
        b.add_transition(hash_seen, l.hash, l.hash, done);
        for (LetterId a : {l.zero, l.one, l.hash}) {
            b.add_transition(done, a, a, done);
        }
    }
}

// T_k' (flip = true) or T_k'' (flip = false): r letters with the k-th one
// required to be 1, then #1.
void add_check_path(MealyBuilder& b, const Letters& l, const std::string& prefix, std::size_t k, std::size_t r,
                    bool flip, bool complete) {
    for (std::size_t i = 0; i < r; ++i) {
        StateId from = b.ensure_state(at(prefix, i));
        StateId to = b.ensure_state(at(prefix, i + 1));
        if (i + 1 == k) {
            b.add_transition(from, l.one, flip ? l.zero : l.one, to);
            if (complete) {
                b.add_transition(from, l.zero, flip ? l.one : l.zero, to);
            }
        } else {
            b.add_transition(from, l.zero, l.zero, to);
            b.add_transition(from, l.one, l.one, to);
        }
        if (complete) {
            b.add_transition(from, l.hash, l.hash, to);
        }
    }
    add_row_tail(b, l, {at(prefix, r), at(prefix, r + 1), at(prefix, r + 2)}, false, complete);
}

// T': c checks the block for a 0 (switching the trailing 1 if it finds one),
// d always switches the trailing 1.
void add_check_and_disable(MealyBuilder& b, const Letters& l, std::size_t r, bool complete) {
    StateId c = b.add_state("c");
    StateId d = b.add_state("d");
    b.add_transition(c, l.zero, l.zero, c);
    b.add_transition(c, l.one, l.one, c);
    b.add_transition(c, l.hash, l.hash, b.ensure_state(at("c", 0)));
    b.add_transition(d, l.zero, l.zero, d);
    b.add_transition(d, l.one, l.one, d);
    b.add_transition(d, l.hash, l.hash, b.ensure_state(at("d", 0)));

    auto primed = [](std::size_t j) { return at("c", j) + "'"; };
    for (std::size_t i = 0; i < r; ++i) {
        // all 1s so far
        StateId p = b.ensure_state(at("c", i));
        b.add_transition(p, l.one, l.one, b.ensure_state(at("c", i + 1)));
        b.add_transition(p, l.zero, l.zero, b.ensure_state(primed(i + 1)));
        if (complete) {
            b.add_transition(p, l.hash, l.hash, b.ensure_state(at("c", i + 1)));
        }
        // a 0 was seen
        if (i >= 1) {
            StateId q = b.ensure_state(primed(i));
            StateId next = b.ensure_state(primed(i + 1));
            b.add_transition(q, l.zero, l.zero, next);
            b.add_transition(q, l.one, l.one, next);
            if (complete) {
                b.add_transition(q, l.hash, l.hash, next);
            }
        }
        StateId s = b.ensure_state(at("d", i));
        StateId next = b.ensure_state(at("d", i + 1));
        b.add_transition(s, l.zero, l.zero, next);
        b.add_transition(s, l.one, l.one, next);
        if (complete) {
            b.add_transition(s, l.hash, l.hash, next);
        }
    }
    add_row_tail(b, l, {at("c", r), at("c", r + 1), at("c", r + 2)}, false, complete);
    add_row_tail(b, l, {primed(r), primed(r + 1), primed(r + 2)}, true, complete);
    add_row_tail(b, l, {at("d", r), at("d", r + 1), at("d", r + 2)}, true, complete);
}

std::string dfa_prefix(std::size_t k) { return "A" + std::to_string(k); }

} // namespace

void require_binary_dfa(const Acceptor& dfa) {
    const auto& alphabet = dfa.alphabet();
    if (alphabet.size() != 2 || !alphabet.contains("0") || !alphabet.contains("1")) {
        throw Error(ErrorKind::MalformedDfa, "acceptor '" + dfa.name() + "' is not over {0,1}");
    }
    if (!dfa.is_deterministic() || !dfa.is_complete()) {
        throw Error(ErrorKind::MalformedDfa, "acceptor '" + dfa.name() + "' is not complete and deterministic");
    }
}

DfaList::DfaList(std::vector<Acceptor> dfas) : dfas_(std::move(dfas)) {
    if (dfas_.empty()) {
        throw Error(ErrorKind::MalformedDfa, "empty DFA list");
    }
    for (const auto& dfa : dfas_) {
        require_binary_dfa(dfa);
    }
}

std::size_t DfaList::max_states() const {
    std::size_t result = 0;
    for (const auto& dfa : dfas_) {
        result = std::max(result, dfa.num_states());
    }
    return result;
}

Acceptor hash_block_constraint(std::size_t r) {
    AcceptorBuilder b("hash-block", Alphabet({"0", "1", "#"}));
    StateId word = b.add_state("w");
    b.set_initial(word);
    b.add_transition(word, b.alphabet().at("0"), word);
    b.add_transition(word, b.alphabet().at("1"), word);
    StateId previous = b.add_state("b0");
    b.add_transition(word, b.alphabet().at("#"), previous);
    for (std::size_t i = 1; i <= r; ++i) {
        StateId next = b.add_state("b" + std::to_string(i));
        b.add_transition(previous, b.alphabet().at("1"), next);
        previous = next;
    }
    StateId hash = b.add_state("h");
    StateId end = b.add_state("f");
    b.add_transition(previous, b.alphabet().at("#"), hash);
    b.add_transition(hash, b.alphabet().at("1"), end);
    b.set_final(end);
    return std::move(b).build();
}

WordProblemInstance reduce_dfa_intersection(const DfaList& dfas, bool group_variant) {
    const std::size_t r = dfas.size();
    MealyBuilder b(group_variant ? "dfa-intersection-group" : "dfa-intersection", Alphabet({"0", "1", "#"}));
    const Letters l{b.alphabet().at("0"), b.alphabet().at("1"), b.alphabet().at("#")};

    add_check_and_disable(b, l, r, group_variant);

    std::vector<StateId> initial;
    for (std::size_t k = 1; k <= r; ++k) {
        const auto& dfa = dfas.dfas()[k - 1];
        const std::string prefix = dfa_prefix(k);
        const std::string switching = prefix + "'";
        const std::string checking = prefix + "''";
        add_check_path(b, l, switching, k, r, true, group_variant);
        add_check_path(b, l, checking, k, r, false, group_variant);

        std::vector<StateId> ids;
        for (const auto& name : dfa.state_names()) {
            ids.push_back(b.add_state(prefix + ":" + name));
        }
        for (StateId z = 0; z < dfa.num_states(); ++z) {
            for (const auto& token : {"0", "1"}) {
                LetterId a = b.alphabet().at(token);
                StateId next = dfa.successors(z, dfa.alphabet().at(token)).front();
                b.add_transition(ids[z], a, a, ids[next]);
            }
            const std::string& target = dfa.is_final(z) ? checking : switching;
            b.add_transition(ids[z], l.hash, l.hash, b.ensure_state(at(target, 0)));
        }
        initial.push_back(ids[dfa.initial().front()]);
    }

    auto automaton = std::move(b).build();
    if (group_variant && !check_properties(automaton).is_g_automaton) {
        throw Error(ErrorKind::NotGAutomaton, "completed intersection automaton is not a G-automaton");
    }

    StateSequence lhs{{automaton.state_at("c"), false}};
    StateSequence rhs{{automaton.state_at("d"), false}};
    for (std::size_t k = r; k >= 1; --k) {
        lhs.push_back({initial[k - 1], false});
        rhs.push_back({initial[k - 1], false});
    }
    std::vector<Acceptor> constraints;
    if (group_variant) {
        constraints.push_back(hash_block_constraint(r));
    }
    return make_instance(std::move(automaton), std::move(lhs), std::move(rhs), std::move(constraints));
}

WordProblemInstance reduce_dfa_emptiness(const Acceptor& dfa) {
    require_binary_dfa(dfa);
    MealyBuilder b("dfa-empty", Alphabet({"0", "1"}));
    const LetterId zero = b.alphabet().at("0");
    const LetterId one = b.alphabet().at("1");
    for (const auto& name : dfa.state_names()) {
        b.add_state(name);
    }
    for (StateId z = 0; z < dfa.num_states(); ++z) {
        bool swap = dfa.is_final(z);
        b.add_transition(z, zero, swap ? one : zero, dfa.successors(z, dfa.alphabet().at("0")).front());
        b.add_transition(z, one, swap ? zero : one, dfa.successors(z, dfa.alphabet().at("1")).front());
    }
    auto automaton = std::move(b).build();
    StateSequence lhs{{dfa.initial().front(), false}};
    return make_instance(std::move(automaton), std::move(lhs), {});
}

bool dfa_intersection_empty(const DfaList& dfas) {
    const auto& list = dfas.dfas();
    using Tuple = std::vector<StateId>;
    Tuple start;
    for (const auto& dfa : list) {
        start.push_back(dfa.initial().front());
    }
    std::set<Tuple> seen{start};
    std::deque<Tuple> queue{start};
    while (!queue.empty()) {
        Tuple current = queue.front();
        queue.pop_front();
        bool all_final = true;
        for (std::size_t k = 0; k < list.size(); ++k) {
            all_final = all_final && list[k].is_final(current[k]);
        }
        if (all_final) {
            return false;
        }
        for (const auto& token : {"0", "1"}) {
            Tuple next(list.size());
            for (std::size_t k = 0; k < list.size(); ++k) {
                next[k] = list[k].successors(current[k], list[k].alphabet().at(token)).front();
            }
            if (seen.insert(next).second) {
                queue.push_back(next);
            }
        }
    }
    return true;
}

} // namespace autstruct
