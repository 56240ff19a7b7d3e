// tm_reduction.cc -- space-bounded acceptance as a word problem over
// configuration sequences

#include "autstruct/tm_reduction.hh"

#include <deque>
#include <set>
#include <tuple>

#include "autstruct/error.hh"

namespace autstruct {

namespace {

struct Sigma {
    std::size_t delta = 0;
    LetterId zero = 0;
    LetterId one = 0;
    LetterId hash = 0;
    LetterId dollar = 0;
    std::vector<LetterId> deltas;
    std::vector<LetterId> deltas_and_digits;
};

Sigma letters_of(const TuringMachine& tm) {
    Sigma s;
    s.delta = tm.delta_size();
    s.zero = static_cast<LetterId>(s.delta);
    s.one = s.zero + 1;
    s.hash = s.zero + 2;
    s.dollar = s.zero + 3;
    for (LetterId a = 0; a < s.delta; ++a) {
        s.deltas.push_back(a);
    }
    s.deltas_and_digits = s.deltas;
    s.deltas_and_digits.push_back(s.zero);
    s.deltas_and_digits.push_back(s.one);
    return s;
}

// Checker states. Lower-row entries range over Delta plus "nothing read yet".
enum class Tag { NoOne, SeenOne, Skip };

struct CheckerKey {
    Tag tag;
    DeltaId x, y, z;
    DeltaId l1, l0;

    auto operator<=>(const CheckerKey&) const = default;
};

class CheckerEmitter {
public:
    CheckerEmitter(MealyBuilder& builder, const TuringMachine& tm, const Sigma& sigma, bool group)
        : b_(builder), tm_(tm), sigma_(sigma), tau_(tm), group_(group), none_(static_cast<DeltaId>(sigma.delta)) {}

    DeltaId none() const { return none_; }

    std::string name(const CheckerKey& key) const {
        auto low = [this](DeltaId id) { return id == none_ ? std::string("^") : tm_.delta_token(id); };
        std::string upper = tm_.delta_token(key.x) + "," + tm_.delta_token(key.y) + "," + tm_.delta_token(key.z);
        switch (key.tag) {
            case Tag::NoOne: return "chk0[" + upper + "|" + low(key.l1) + "," + low(key.l0) + "]";
            case Tag::SeenOne: return "chk1[" + upper + "|" + low(key.l1) + "," + low(key.l0) + "]";
            case Tag::Skip: return "skip[" + upper + "]";
        }
        return "";
    }

    /// Declares the state and queues it for emission if it is new.
    StateId want(const CheckerKey& key) {
        auto [it, inserted] = ids_.try_emplace(key, 0);
        if (inserted) {
            it->second = b_.add_state(name(key));
            queue_.push_back(key);
        }
        return it->second;
    }

    void run() {
        while (!queue_.empty()) {
            CheckerKey key = queue_.front();
            queue_.pop_front();
            emit(key);
        }
    }

private:
    StateId tail(int i) {
        static const char* names[] = {"d1", "d2", "d3"};
        StateId d1 = b_.ensure_state(names[0]);
        StateId d2 = b_.ensure_state(names[1]);
        StateId d3 = b_.ensure_state(names[2]);
        if (!tail_done_) {
            tail_done_ = true;
            b_.add_transition(d1, sigma_.zero, sigma_.zero, d1);
            b_.add_transition(d1, sigma_.one, sigma_.one, d1);
            b_.add_transition(d1, sigma_.dollar, sigma_.dollar, d2);
            b_.add_transition(d2, sigma_.zero, sigma_.zero, d3);
            b_.add_transition(d2, sigma_.one, sigma_.one, d3);
        }
        return i == 1 ? d1 : i == 2 ? d2 : d3;
    }

    void emit(const CheckerKey& key) {
        const StateId self = ids_.at(key);
        const DeltaId blank = tm_.plain(tm_.blank());
        switch (key.tag) {
            case Tag::NoOne: {
                b_.add_transition(self, sigma_.zero, sigma_.zero, self);
                b_.add_transition(self, sigma_.one, sigma_.one, want({Tag::SeenOne, key.x, key.y, key.z, key.l1, key.l0}));
                auto next = key.l0 == none_ ? std::nullopt : tau_(key.x, key.y, key.z);
                if (next && *next == key.l0) {
                    // position checked; remember the window for the next time step
                    DeltaId left = key.l1 == none_ ? blank : key.l1;
                    for (LetterId g : sigma_.deltas) {
                        b_.add_transition(self, g, g, want({Tag::Skip, left, key.l0, g, none_, none_}));
                    }
                    b_.add_transition(self, sigma_.hash, sigma_.hash,
                                      want({Tag::SeenOne, left, key.l0, blank, none_, none_}));
                    b_.add_transition(self, sigma_.dollar, sigma_.dollar, tail(1));
                } else if (group_) {
                    // invalid transition: count it in the block after the first $
                    StateId f = b_.ensure_state("f");
                    for (LetterId g : sigma_.deltas) {
                        b_.add_transition(self, g, g, f);
                    }
                    b_.add_transition(self, sigma_.hash, sigma_.hash, f);
                    b_.add_transition(self, sigma_.dollar, sigma_.dollar, b_.ensure_state("f.1"));
                }
                break;
            }
            case Tag::SeenOne: {
                b_.add_transition(self, sigma_.zero, sigma_.zero, self);
                b_.add_transition(self, sigma_.one, sigma_.one, self);
                for (LetterId g : sigma_.deltas) {
                    b_.add_transition(self, g, g, want({Tag::NoOne, key.x, key.y, key.z, key.l0, g}));
                }
                break;
            }
            case Tag::Skip: {
                b_.add_identity(self, sigma_.deltas_and_digits, self);
                b_.add_transition(self, sigma_.hash, sigma_.hash,
                                  want({Tag::SeenOne, key.x, key.y, key.z, none_, none_}));
                b_.add_transition(self, sigma_.dollar, sigma_.dollar, tail(1));
                break;
            }
        }
    }

    MealyBuilder& b_;
    const TuringMachine& tm_;
    const Sigma& sigma_;
    TauTable tau_;
    bool group_;
    DeltaId none_;
    std::map<CheckerKey, StateId> ids_;
    std::deque<CheckerKey> queue_;
    bool tail_done_ = false;
};

void add_check_marking(MealyBuilder& b, const Sigma& s) {
    StateId cm = b.add_state("check");
    StateId c1 = b.add_state("check.1");
    StateId c2 = b.add_state("check.2");
    StateId c3 = b.add_state("check.3");
    StateId c4 = b.add_state("check.4");
    StateId skip = b.add_state("check.skip");
    StateId end = b.add_state("check.end");
    b.add_identity(cm, s.deltas, c1);
    b.add_transition(c1, s.zero, s.one, c2);
    b.add_transition(c1, s.one, s.zero, c4);
    // no 1 in the original block so far
    b.add_transition(c2, s.zero, s.zero, c2);
    b.add_transition(c2, s.one, s.one, c3);
    b.add_identity(c2, s.deltas, skip);
    b.add_transition(c2, s.dollar, s.dollar, end);
    b.add_transition(c2, s.hash, s.hash, cm);
    // the block had a 1: go on with the next symbol
    b.add_transition(c3, s.zero, s.zero, c3);
    b.add_transition(c3, s.one, s.one, c3);
    b.add_identity(c3, s.deltas, c1);
    // carry
    b.add_transition(c4, s.one, s.zero, c4);
    b.add_transition(c4, s.zero, s.one, c3);
    b.add_identity(skip, s.deltas_and_digits, skip);
    b.add_transition(skip, s.hash, s.hash, cm);
    b.add_transition(skip, s.dollar, s.dollar, end);
    b.add_transition(end, s.zero, s.zero, end);
    b.add_transition(end, s.one, s.one, end);
    b.add_transition(end, s.dollar, s.dollar, end);
}

void add_shape_check(MealyBuilder& b, const Sigma& s) {
    StateId qc = b.add_state("qc");
    StateId q1 = b.add_state("qc.1");
    StateId q2 = b.add_state("qc.2");
    StateId q3 = b.add_state("qc.3");
    StateId q4 = b.add_state("qc.4");
    b.add_identity(qc, s.deltas, q1);
    b.add_identity(q1, s.deltas, q1);
    b.add_transition(q1, s.zero, s.zero, q1);
    b.add_transition(q1, s.hash, s.hash, qc);
    b.add_transition(q1, s.dollar, s.dollar, q2);
    b.add_transition(q2, s.zero, s.zero, q2);
    b.add_transition(q2, s.dollar, s.dollar, q3);
    b.add_transition(q3, s.zero, s.zero, q4);
}

void add_all_marked_check(MealyBuilder& b, const Sigma& s) {
    StateId ql = b.add_state("ql");
    StateId l1 = b.add_state("ql.1");
    StateId l2 = b.add_state("ql.2");
    StateId l3 = b.add_state("ql.3");
    StateId l4 = b.add_state("ql.4");
    StateId l5 = b.add_state("ql.5");
    b.add_identity(ql, s.deltas, l1);
    b.add_transition(l1, s.zero, s.zero, l1);
    b.add_transition(l1, s.one, s.one, l2);
    b.add_transition(l2, s.zero, s.zero, l2);
    b.add_transition(l2, s.one, s.one, l2);
    b.add_identity(l2, s.deltas, l1);
    b.add_transition(l2, s.hash, s.hash, ql);
    b.add_transition(l2, s.dollar, s.dollar, l3);
    b.add_transition(l3, s.zero, s.zero, l3);
    b.add_transition(l3, s.one, s.one, l3);
    b.add_transition(l3, s.dollar, s.dollar, l4);
    b.add_transition(l4, s.zero, s.zero, l5);
}

void add_final_finder(MealyBuilder& b, const TuringMachine& tm, const Sigma& s) {
    StateId e = b.add_state("e");
    std::vector<StateId> st;
    for (int i = 1; i <= 7; ++i) {
        st.push_back(b.add_state("e." + std::to_string(i)));
    }
    StateId fail = b.add_state("e.fail");
    auto at = [&st](int i) { return st[i - 1]; };

    std::vector<LetterId> finals;
    std::vector<LetterId> others;
    for (LetterId a = 0; a < s.delta; ++a) {
        (tm.is_final_symbol(a) ? finals : others).push_back(a);
    }
    for (LetterId a : {s.zero, s.one, s.hash}) {
        others.push_back(a);
    }
    std::vector<LetterId> all_but_dollar = others;
    all_but_dollar.insert(all_but_dollar.end(), finals.begin(), finals.end());

    // no final state (yet)
    b.add_identity(e, others, e);
    b.add_transition(e, s.dollar, s.dollar, at(1));
    b.add_identity(e, finals, at(4));
    b.add_transition(at(1), s.zero, s.zero, at(1));
    b.add_transition(at(1), s.dollar, s.dollar, at(2));
    b.add_transition(at(2), s.zero, s.zero, at(3));
    // final state found: toggle the trailing 0 if the counter block is all 0
    b.add_identity(at(4), all_but_dollar, at(4));
    b.add_transition(at(4), s.dollar, s.dollar, at(5));
    b.add_transition(at(5), s.zero, s.zero, at(5));
    b.add_transition(at(5), s.dollar, s.dollar, at(6));
    b.add_transition(at(5), s.one, s.one, fail);
    b.add_transition(at(6), s.zero, s.one, at(7));
    all_but_dollar.push_back(s.dollar);
    b.add_identity(fail, all_but_dollar, fail);
}

void add_failure_counter(MealyBuilder& b, const Sigma& s) {
    StateId f = b.ensure_state("f");
    StateId f1 = b.ensure_state("f.1");
    StateId f2 = b.ensure_state("f.2");
    StateId f3 = b.ensure_state("f.3");
    StateId f4 = b.ensure_state("f.4");
    b.add_identity(f, s.deltas_and_digits, f);
    b.add_transition(f, s.hash, s.hash, f);
    b.add_transition(f, s.dollar, s.dollar, f1);
    b.add_transition(f1, s.one, s.zero, f1);
    b.add_transition(f1, s.zero, s.one, f2);
    b.add_transition(f2, s.zero, s.zero, f2);
    b.add_transition(f2, s.one, s.one, f2);
    b.add_transition(f2, s.dollar, s.dollar, f3);
    b.add_transition(f3, s.zero, s.zero, f4);
}

// Every missing (state, input) goes to a fresh identity sink. The output is
// the input itself when that letter is still free at the state, otherwise the
// smallest free letter, so each state ends up permuting the alphabet.
MealyAutomaton complete_to_sink(const MealyAutomaton& automaton, const std::string& sink_name) {
    const auto& alphabet = automaton.alphabet();
    MealyBuilder b(automaton.name(), alphabet);
    for (const auto& name : automaton.state_names()) {
        b.add_state(name);
    }
    StateId sink = b.add_state(sink_name);
    for (LetterId a = 0; a < alphabet.size(); ++a) {
        b.add_transition(sink, a, a, sink);
    }
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        std::vector<bool> used(alphabet.size(), false);
        std::vector<LetterId> missing;
        for (LetterId a : alphabet.lex_order()) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                b.add_transition(q, a, edge.letter, edge.target);
                used[edge.letter] = true;
            } else {
                missing.push_back(a);
            }
        }
        std::vector<LetterId> rest;
        for (LetterId a : missing) {
            if (!used[a]) {
                used[a] = true;
                b.add_transition(q, a, a, sink);
            } else {
                rest.push_back(a);
            }
        }
        for (LetterId a : rest) {
            for (LetterId out : alphabet.lex_order()) {
                if (!used[out]) {
                    used[out] = true;
                    b.add_transition(q, a, out, sink);
                    break;
                }
            }
        }
    }
    return std::move(b).build();
}

std::vector<std::tuple<DeltaId, DeltaId, DeltaId>> initial_windows(const TuringMachine& tm,
                                                                 const TmReductionParams& params) {
    Configuration c0 = initial_configuration(tm, params);
    const DeltaId blank = tm.plain(tm.blank());
    std::vector<std::tuple<DeltaId, DeltaId, DeltaId>> windows;
    for (std::size_t i = 0; i < c0.size(); ++i) {
        DeltaId left = i == 0 ? blank : c0[i - 1];
        DeltaId right = i + 1 == c0.size() ? blank : c0[i + 1];
        windows.emplace_back(left, c0[i], right);
    }
    return windows;
}

} // namespace

std::string window_state(const TuringMachine& tm, DeltaId x, DeltaId y, DeltaId z) {
    return "chk1[" + tm.delta_token(x) + "," + tm.delta_token(y) + "," + tm.delta_token(z) + "|^,^]";
}

MealyAutomaton build_tm_automaton(const TuringMachine& tm, const TmReductionParams& params,
                                  const TmBuildOptions& options) {
    check_params(tm, params);
    const Sigma sigma = letters_of(tm);
    const bool group = params.group_variant;
    MealyBuilder b(group ? "tm-group" : "tm", reduction_alphabet(tm));

    add_check_marking(b, sigma);
    add_shape_check(b, sigma);
    add_all_marked_check(b, sigma);
    add_final_finder(b, tm, sigma);
    if (group) {
        add_failure_counter(b, sigma);
    }

    CheckerEmitter checker(b, tm, sigma, group);
    const auto none = checker.none();
    const auto d = static_cast<DeltaId>(sigma.delta);
    if (options.prune) {
        for (const auto& [x, y, z] : initial_windows(tm, params)) {
            checker.want({Tag::SeenOne, x, y, z, none, none});
        }
    } else {
        for (Tag tag : {Tag::NoOne, Tag::SeenOne}) {
            for (DeltaId x = 0; x < d; ++x) {
                for (DeltaId y = 0; y < d; ++y) {
                    for (DeltaId z = 0; z < d; ++z) {
                        for (DeltaId l1 = 0; l1 <= d; ++l1) {
                            for (DeltaId l0 = 0; l0 <= d; ++l0) {
                                checker.want({tag, x, y, z, l1, l0});
                            }
                        }
                    }
                }
            }
        }
        for (DeltaId x = 0; x < d; ++x) {
            for (DeltaId y = 0; y < d; ++y) {
                for (DeltaId z = 0; z < d; ++z) {
                    checker.want({Tag::Skip, x, y, z, none, none});
                }
            }
        }
        for (const char* tail : {"d1", "d2", "d3"}) {
            b.ensure_state(tail);
        }
    }
    checker.run();

    auto automaton = std::move(b).build();
    if (!group) {
        return automaton;
    }
    automaton = complete_to_sink(automaton, "sink");
    if (!check_properties(automaton).is_g_automaton) {
        throw Error(ErrorKind::NotGAutomaton, "completed machine automaton is not a G-automaton");
    }
    return automaton;
}

Acceptor configuration_constraint(const TuringMachine& tm, const TmReductionParams& params) {
    check_params(tm, params);
    const Sigma sigma = letters_of(tm);
    const unsigned k = digit_block_length(params.p_val);
    const std::uint64_t p = params.p_val;
    AcceptorBuilder b("configurations", reduction_alphabet(tm));
    auto cell = [](std::uint64_t j, unsigned digits) {
        return "s" + std::to_string(j) + "." + std::to_string(digits);
    };

    StateId start = b.add_state("start");
    b.set_initial(start);
    for (std::uint64_t j = 0; j < p; ++j) {
        for (unsigned digits = 0; digits <= k; ++digits) {
            b.add_state(cell(j, digits));
        }
    }
    std::vector<StateId> counter;
    for (unsigned digits = 0; digits <= k; ++digits) {
        counter.push_back(b.add_state("ctr" + std::to_string(digits)));
    }
    StateId tail = b.add_state("tail");
    StateId fin = b.add_state("fin");
    b.set_final(fin);

    auto id = [&b](const std::string& name) { return *b.find_state(name); };
    for (LetterId g : sigma.deltas) {
        b.add_transition(start, g, id(cell(0, 0)));
    }
    for (std::uint64_t j = 0; j < p; ++j) {
        for (unsigned digits = 0; digits < k; ++digits) {
            b.add_transition(id(cell(j, digits)), sigma.zero, id(cell(j, digits + 1)));
        }
        StateId full = id(cell(j, k));
        if (j + 1 < p) {
            for (LetterId g : sigma.deltas) {
                b.add_transition(full, g, id(cell(j + 1, 0)));
            }
        } else {
            b.add_transition(full, sigma.hash, start);
            b.add_transition(full, sigma.dollar, counter[0]);
        }
    }
    for (unsigned digits = 0; digits < k; ++digits) {
        b.add_transition(counter[digits], sigma.zero, counter[digits + 1]);
    }
    b.add_transition(counter[k], sigma.dollar, tail);
    b.add_transition(tail, sigma.zero, fin);
    return std::move(b).build();
}

WordProblemInstance reduce_tm(const TuringMachine& tm, const TmReductionParams& params,
                              const TmBuildOptions& options) {
    return tm_instance(build_tm_automaton(tm, params, options), tm, params);
}

WordProblemInstance tm_instance(MealyAutomaton automaton, const TuringMachine& tm, const TmReductionParams& params) {
    check_params(tm, params);
    auto item = [&automaton](const std::string& name) { return SignedState{automaton.state_at(name), false}; };

    StateSequence encoded;
    auto windows = initial_windows(tm, params);
    for (auto it = windows.rbegin(); it != windows.rend(); ++it) {
        const auto& [x, y, z] = *it;
        encoded.push_back(item("check"));
        encoded.push_back(item(window_state(tm, x, y, z)));
    }

    StateSequence lhs{item("e")};
    StateSequence rhs;
    std::vector<Acceptor> constraints;
    if (params.group_variant) {
        lhs.insert(lhs.end(), encoded.begin(), encoded.end());
        rhs = encoded;
        constraints.push_back(configuration_constraint(tm, params));
    } else {
        lhs.push_back(item("ql"));
        lhs.insert(lhs.end(), encoded.begin(), encoded.end());
        lhs.push_back(item("qc"));
        rhs.push_back(item("ql"));
        rhs.insert(rhs.end(), encoded.begin(), encoded.end());
        rhs.push_back(item("qc"));
    }
    return make_instance(std::move(automaton), std::move(lhs), std::move(rhs), std::move(constraints));
}

} // namespace autstruct
