// text_format.cc -- parsing and printing of the block file format

#include "autstruct/text_format.hh"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "autstruct/error.hh"

namespace autstruct {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (auto comment = line.find('%'); comment != std::string_view::npos) {
            line = line.substr(0, comment);
        }
        auto tokens = split_tokens(line);
        if (!tokens.empty()) {
            lines.push_back({number, std::move(tokens)});
        }
        pos = end + 1;
    }
    return lines;
}

struct PendingInstance {
    std::string where;
    std::string automaton;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::vector<std::string> constraints;
    std::optional<std::uint64_t> budget;
    bool has_lhs = false;
    bool has_rhs = false;
};

class Parser {
public:
    explicit Parser(Document& doc) : doc_(doc) {}

    void parse(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
        auto lines = split_lines(text);
        std::size_t i = 0;
        while (i < lines.size()) {
            const Line& line = lines[i];
            const std::string& keyword = line.tokens[0];
            source_ = source;
            if (keyword == "include") {
                expect_args(line, 1);
                include(base_dir / line.tokens[1], source, line.number);
                source_ = source;
                ++i;
            } else if (keyword == "mealy") {
                i = parse_mealy(lines, i);
            } else if (keyword == "acceptor") {
                i = parse_acceptor(lines, i);
            } else if (keyword == "tm") {
                i = parse_tm(lines, i);
            } else if (keyword == "instance") {
                i = parse_instance(lines, i);
            } else {
                fail(line, "unknown keyword '" + keyword + "'");
            }
        }
    }

    void resolve() {
        for (const auto& pending : pending_) {
            const MealyAutomaton* automaton = doc_.find_automaton(pending.automaton);
            if (automaton == nullptr) {
                throw Error(ErrorKind::Parse, pending.where + " unknown automaton '" + pending.automaton + "'");
            }
            std::vector<Acceptor> constraints;
            for (const auto& name : pending.constraints) {
                const Acceptor* acceptor = doc_.find_acceptor(name);
                if (acceptor == nullptr) {
                    throw Error(ErrorKind::Parse, pending.where + " unknown acceptor '" + name + "'");
                }
                constraints.push_back(*acceptor);
            }
            auto instance = make_instance(*automaton, automaton->parse_sequence(pending.lhs),
                                          automaton->parse_sequence(pending.rhs), std::move(constraints));
            instance.budget = pending.budget;
            doc_.instances.push_back(std::move(instance));
        }
        pending_.clear();
    }

private:
    [[noreturn]] void fail(const Line& line, const std::string& message) const {
        throw Error(ErrorKind::Parse, source_ + ":" + std::to_string(line.number) + ": " + message);
    }

    void expect_args(const Line& line, std::size_t count) const {
        if (line.tokens.size() != count + 1) {
            fail(line, "'" + line.tokens[0] + "' takes " + std::to_string(count) + " argument(s)");
        }
    }

    std::vector<std::string> rest(const Line& line) const {
        return {line.tokens.begin() + 1, line.tokens.end()};
    }

    void include(const std::filesystem::path& path, const std::string& source, std::size_t number) {
        std::error_code ec;
        auto canonical = std::filesystem::weakly_canonical(path, ec);
        if (ec) {
            canonical = path;
        }
        if (!active_.insert(canonical).second) {
            throw Error(ErrorKind::Parse, source + ":" + std::to_string(number) + ": include cycle through '" +
                                              path.string() + "'");
        }
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw Error(ErrorKind::Parse,
                        source + ":" + std::to_string(number) + ": cannot read '" + path.string() + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        parse(buffer.str(), path.string(), path.parent_path());
        active_.erase(canonical);
    }

    // Runs `body` over the lines of the block starting at `start` and returns
    // the index after its `end`.
    template <typename Body>
    std::size_t block(const std::vector<Line>& lines, std::size_t start, Body&& body) {
        for (std::size_t i = start + 1; i < lines.size(); ++i) {
            const Line& line = lines[i];
            if (line.tokens[0] == "end") {
                expect_args(line, 0);
                return i + 1;
            }
            body(line);
        }
        fail(lines[start], "'" + lines[start].tokens[0] + "' block without 'end'");
    }

    // Object-level errors (bad tokens, nondeterminism, ...) get the location prepended.
    template <typename Fn>
    void located(const Line& line, Fn&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Parse) {
                throw;
            }
            std::string message = e.what();
            message.erase(0, to_string(e.kind()).size() + 2);
            throw Error(e.kind(), source_ + ":" + std::to_string(line.number) + ": " + message);
        }
    }

    std::size_t parse_mealy(const std::vector<Line>& lines, std::size_t start) {
        const Line& head = lines[start];
        expect_args(head, 1);
        if (doc_.find_automaton(head.tokens[1]) != nullptr) {
            fail(head, "duplicate automaton '" + head.tokens[1] + "'");
        }
        std::optional<MealyBuilder> b;
        located(head, [&] { b.emplace(head.tokens[1]); });
        std::size_t next = block(lines, start, [&](const Line& line) {
            const std::string& key = line.tokens[0];
            located(line, [&] {
                if (key == "alphabet") {
                    for (const auto& token : rest(line)) {
                        b->add_letter(token);
                    }
                } else if (key == "states") {
                    for (const auto& token : rest(line)) {
                        b->add_state(token);
                    }
                } else if (key == "t") {
                    expect_args(line, 4);
                    b->add_transition(line.tokens[1], line.tokens[2], line.tokens[3], line.tokens[4]);
                } else {
                    fail(line, "unexpected '" + key + "' in mealy block");
                }
            });
        });
        located(head, [&] { doc_.automata.push_back(std::move(*b).build()); });
        return next;
    }

    std::size_t parse_acceptor(const std::vector<Line>& lines, std::size_t start) {
        const Line& head = lines[start];
        expect_args(head, 1);
        if (doc_.find_acceptor(head.tokens[1]) != nullptr) {
            fail(head, "duplicate acceptor '" + head.tokens[1] + "'");
        }
        AcceptorBuilder b(head.tokens[1]);
        auto state = [&](const Line& line, const std::string& token) {
            auto id = b.find_state(token);
            if (!id) {
                fail(line, "undeclared state '" + token + "'");
            }
            return *id;
        };
        std::size_t next = block(lines, start, [&](const Line& line) {
            const std::string& key = line.tokens[0];
            located(line, [&] {
                if (key == "alphabet") {
                    for (const auto& token : rest(line)) {
                        b.add_letter(token);
                    }
                } else if (key == "states") {
                    for (const auto& token : rest(line)) {
                        b.add_state(token);
                    }
                } else if (key == "initial") {
                    for (const auto& token : rest(line)) {
                        b.set_initial(state(line, token));
                    }
                } else if (key == "final") {
                    for (const auto& token : rest(line)) {
                        b.set_final(state(line, token));
                    }
                } else if (key == "t") {
                    expect_args(line, 3);
                    b.add_transition(line.tokens[1], line.tokens[2], line.tokens[3]);
                } else {
                    fail(line, "unexpected '" + key + "' in acceptor block");
                }
            });
        });
        located(head, [&] { doc_.acceptors.push_back(std::move(b).build()); });
        return next;
    }

    std::size_t parse_tm(const std::vector<Line>& lines, std::size_t start) {
        const Line& head = lines[start];
        expect_args(head, 1);
        if (doc_.find_machine(head.tokens[1]) != nullptr) {
            fail(head, "duplicate machine '" + head.tokens[1] + "'");
        }
        TuringMachineSpec spec;
        spec.name = head.tokens[1];
        std::size_t next = block(lines, start, [&](const Line& line) {
            const std::string& key = line.tokens[0];
            if (key == "tape") {
                auto tokens = rest(line);
                spec.tape.insert(spec.tape.end(), tokens.begin(), tokens.end());
            } else if (key == "blank") {
                expect_args(line, 1);
                spec.blank = line.tokens[1];
            } else if (key == "states") {
                auto tokens = rest(line);
                spec.states.insert(spec.states.end(), tokens.begin(), tokens.end());
            } else if (key == "initial") {
                expect_args(line, 1);
                spec.initial = line.tokens[1];
            } else if (key == "final") {
                auto tokens = rest(line);
                spec.finals.insert(spec.finals.end(), tokens.begin(), tokens.end());
            } else if (key == "rule") {
                expect_args(line, 5);
                auto move = parse_move(line.tokens[4]);
                if (!move) {
                    fail(line, "move must be L, N or R");
                }
                spec.rules.push_back({line.tokens[1], line.tokens[2], line.tokens[3], *move, line.tokens[5]});
            } else {
                fail(line, "unexpected '" + key + "' in tm block");
            }
        });
        located(head, [&] { TuringMachine check(spec); });
        doc_.machines.push_back(std::move(spec));
        return next;
    }

    std::size_t parse_instance(const std::vector<Line>& lines, std::size_t start) {
        const Line& head = lines[start];
        expect_args(head, 0);
        PendingInstance pending;
        pending.where = source_ + ":" + std::to_string(head.number) + ":";
        std::size_t next = block(lines, start, [&](const Line& line) {
            const std::string& key = line.tokens[0];
            if (key == "automaton") {
                expect_args(line, 1);
                pending.automaton = line.tokens[1];
            } else if (key == "lhs") {
                pending.lhs = rest(line);
                pending.has_lhs = true;
            } else if (key == "rhs") {
                pending.rhs = rest(line);
                pending.has_rhs = true;
            } else if (key == "constraint") {
                expect_args(line, 1);
                pending.constraints.push_back(line.tokens[1]);
            } else if (key == "budget") {
                expect_args(line, 1);
                const std::string& text = line.tokens[1];
                std::uint64_t value = 0;
                auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
                if (ec != std::errc() || ptr != text.data() + text.size()) {
                    fail(line, "budget must be a non-negative integer");
                }
                pending.budget = value;
            } else {
                fail(line, "unexpected '" + key + "' in instance block");
            }
        });
        if (pending.automaton.empty() || !pending.has_lhs || !pending.has_rhs) {
            fail(head, "instance needs 'automaton', 'lhs' and 'rhs'");
        }
        pending_.push_back(std::move(pending));
        return next;
    }

    Document& doc_;
    std::string source_;
    std::set<std::filesystem::path> active_;
    std::vector<PendingInstance> pending_;
};

std::string line_of(std::string_view keyword, const std::vector<std::string>& tokens) {
    std::string out(keyword);
    for (const auto& token : tokens) {
        out += ' ';
        out += token;
    }
    return out + "\n";
}

std::string instance_block(const WordProblemInstance& instance, const std::vector<std::string>& constraint_names) {
    const auto& automaton = instance.automaton;
    std::string out = "instance\n";
    out += "automaton " + automaton.name() + "\n";
    out += line_of("lhs", automaton.sequence_tokens(instance.lhs));
    out += line_of("rhs", automaton.sequence_tokens(instance.rhs));
    for (const auto& name : constraint_names) {
        out += "constraint " + name + "\n";
    }
    if (instance.budget) {
        out += "budget " + std::to_string(*instance.budget) + "\n";
    }
    return out + "end\n";
}

} // namespace

const MealyAutomaton* Document::find_automaton(std::string_view name) const {
    for (const auto& automaton : automata) {
        if (automaton.name() == name) {
            return &automaton;
        }
    }
    return nullptr;
}

const Acceptor* Document::find_acceptor(std::string_view name) const {
    for (const auto& acceptor : acceptors) {
        if (acceptor.name() == name) {
            return &acceptor;
        }
    }
    return nullptr;
}

const TuringMachineSpec* Document::find_machine(std::string_view name) const {
    for (const auto& machine : machines) {
        if (machine.name == name) {
            return &machine;
        }
    }
    return nullptr;
}

Document parse_document(std::string_view text, const std::string& source, const std::filesystem::path& base_dir) {
    Document doc;
    Parser parser(doc);
    parser.parse(text, source, base_dir);
    parser.resolve();
    return doc;
}

Document load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, "cannot read '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str(), path.string(), path.parent_path());
}

std::string serialize(const MealyAutomaton& automaton) {
    const auto& alphabet = automaton.alphabet();
    std::string out = "mealy " + automaton.name() + "\n";
    out += line_of("alphabet", alphabet.tokens());
    out += line_of("states", automaton.state_names());
    for (StateId q = 0; q < automaton.num_states(); ++q) {
        for (LetterId a = 0; a < alphabet.size(); ++a) {
            const auto& edge = automaton.edge(q, a);
            if (edge.defined()) {
                out += "t " + automaton.state_name(q) + " " + alphabet.token(a) + " " + alphabet.token(edge.letter) +
                       " " + automaton.state_name(edge.target) + "\n";
            }
        }
    }
    return out + "end\n";
}

std::string serialize(const Acceptor& acceptor) {
    const auto& alphabet = acceptor.alphabet();
    std::string out = "acceptor " + acceptor.name() + "\n";
    out += line_of("alphabet", alphabet.tokens());
    out += line_of("states", acceptor.state_names());
    std::vector<std::string> initial;
    for (StateId q : acceptor.initial()) {
        initial.push_back(acceptor.state_name(q));
    }
    out += line_of("initial", initial);
    std::vector<std::string> finals;
    for (StateId q : acceptor.final_states()) {
        finals.push_back(acceptor.state_name(q));
    }
    out += line_of("final", finals);
    for (StateId q = 0; q < acceptor.num_states(); ++q) {
        for (LetterId a = 0; a < alphabet.size(); ++a) {
            for (StateId to : acceptor.successors(q, a)) {
                out += "t " + acceptor.state_name(q) + " " + alphabet.token(a) + " " + acceptor.state_name(to) + "\n";
            }
        }
    }
    return out + "end\n";
}

std::string serialize(const TuringMachineSpec& machine) {
    std::string out = "tm " + machine.name + "\n";
    out += line_of("tape", machine.tape);
    out += "blank " + machine.blank + "\n";
    out += line_of("states", machine.states);
    out += "initial " + machine.initial + "\n";
    out += line_of("final", machine.finals);
    for (const auto& rule : machine.rules) {
        out += "rule " + rule.state + " " + rule.read + " " + rule.write + " " + move_char(rule.move) + " " +
               rule.next + "\n";
    }
    return out + "end\n";
}

std::string serialize(const WordProblemInstance& instance) {
    std::string out = serialize(instance.automaton);
    std::vector<std::string> names;
    std::set<std::string> used;
    for (const auto& constraint : instance.constraints) {
        std::string name = constraint.name();
        for (int suffix = 2; used.contains(name); ++suffix) {
            name = constraint.name() + "_" + std::to_string(suffix);
        }
        used.insert(name);
        names.push_back(name);
        if (name == constraint.name()) {
            out += serialize(constraint);
        } else {
            std::string block = serialize(constraint);
            block.replace(0, block.find('\n'), "acceptor " + name);
            out += block;
        }
    }
    return out + instance_block(instance, names);
}

std::string serialize(const Document& document) {
    std::string out;
    for (const auto& automaton : document.automata) {
        out += serialize(automaton);
    }
    for (const auto& acceptor : document.acceptors) {
        out += serialize(acceptor);
    }
    for (const auto& machine : document.machines) {
        out += serialize(machine);
    }
    for (const auto& instance : document.instances) {
        std::vector<std::string> names;
        for (const auto& constraint : instance.constraints) {
            names.push_back(constraint.name());
        }
        out += instance_block(instance, names);
    }
    return out;
}

bool same_instance(const WordProblemInstance& first, const WordProblemInstance& second) {
    return first.automaton == second.automaton && first.lhs == second.lhs && first.rhs == second.rhs &&
           first.constraints == second.constraints && first.budget == second.budget;
}

} // namespace autstruct
