// cli.cc -- subcommand dispatch over the library

#include "autstruct/cli.hh"

#include <algorithm>
#include <chrono>
#include <functional>

#include <CLI11.hpp>

#include "autstruct/dfa_reductions.hh"
#include "autstruct/error.hh"
#include "autstruct/gadgets.hh"
#include "autstruct/text_format.hh"
#include "autstruct/tm_reduction.hh"
#include "autstruct/turing.hh"
#include "autstruct/word_problem.hh"

namespace autstruct::cli {

namespace {

struct Options {
    bool porcelain = false;

    std::string file;
    std::vector<std::string> files;
    std::string automaton;
    std::string seq;
    std::string word;
    std::optional<std::uint64_t> max_configs;
    std::uint64_t max_len = 0;
    std::string gadget;
    std::optional<unsigned> n;
    bool group = false;
    bool prune = false;
    std::string machine;
    std::string input;
    std::uint64_t space = 0;
    std::uint64_t steps = 0;
    unsigned max_n = 0;
};

// "gadget:NAME" stands for a file holding just that built-in automaton.
Document load_input(const std::string& file) {
    constexpr std::string_view prefix = "gadget:";
    if (!file.starts_with(prefix)) {
        return load_document(file);
    }
    auto gadget = gadget_from_name(std::string_view(file).substr(prefix.size()));
    if (!gadget) {
        throw Error(ErrorKind::InvalidArgument, "unknown gadget in '" + file + "'");
    }
    Document doc;
    doc.automata.push_back(build_gadget(*gadget));
    return doc;
}

const MealyAutomaton& pick_automaton(const Document& doc, const std::string& name) {
    if (doc.automata.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no mealy block in the file");
    }
    if (name.empty()) {
        return doc.automata.front();
    }
    if (const auto* found = doc.find_automaton(name)) {
        return *found;
    }
    throw Error(ErrorKind::InvalidArgument, "no automaton named '" + name + "'");
}

TuringMachine pick_machine(const Document& doc, const std::string& name) {
    if (doc.machines.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no tm block in the file");
    }
    if (name.empty()) {
        return TuringMachine(doc.machines.front());
    }
    if (const auto* found = doc.find_machine(name)) {
        return TuringMachine(*found);
    }
    throw Error(ErrorKind::InvalidArgument, "no machine named '" + name + "'");
}

std::string value_text(const Alphabet& alphabet, const std::optional<PartialValue>& value) {
    if (!value || !*value) {
        return "undefined";
    }
    return (*value)->empty() ? "(empty)" : alphabet.format(**value);
}

int report(const Verdict& verdict, const WordProblemInstance& instance, const Options& opt, std::ostream& out) {
    const auto& alphabet = instance.automaton.alphabet();
    if (verdict.equal()) {
        if (opt.porcelain) {
            out << "EQUAL\n";
        } else if (verdict.bounded) {
            out << "EQUAL (up to the length bound)\n";
        } else {
            out << "EQUAL\n";
        }
        return kExitOk;
    }
    const Word& witness = *verdict.witness;
    if (opt.porcelain) {
        out << "NOT-EQUAL " << witness.size();
        for (const auto& token : alphabet.tokens_of(witness)) {
            out << ' ' << token;
        }
        out << '\n';
    } else {
        out << "NOT-EQUAL witness: " << alphabet.format(witness) << '\n';
        out << "  lhs: " << value_text(alphabet, verdict.lhs_value) << '\n';
        out << "  rhs: " << value_text(alphabet, verdict.rhs_value) << '\n';
    }
    return kExitNotEqual;
}

int cmd_check(const Options& opt, std::ostream& out) {
    Document doc = load_input(opt.file);
    if (doc.automata.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no mealy block in the file");
    }
    for (const auto& automaton : doc.automata) {
        if (!opt.automaton.empty() && automaton.name() != opt.automaton) {
            continue;
        }
        auto props = check_properties(automaton);
        if (opt.porcelain) {
            out << automaton.name() << ' ' << format_report(props) << '\n';
        } else {
            out << automaton.name() << ": " << automaton.num_states() << " states, " << automaton.num_transitions()
                << " transitions, " << automaton.alphabet().size() << " letters\n  " << format_report(props) << '\n';
        }
    }
    return kExitOk;
}

int cmd_act(const Options& opt, std::ostream& out) {
    Document doc = load_input(opt.file);
    const auto& automaton = pick_automaton(doc, opt.automaton);
    auto sequence = automaton.parse_sequence(opt.seq);
    auto word = automaton.alphabet().parse_word(opt.word);
    auto result = act_word(automaton, sequence, word);
    if (const auto* defined = std::get_if<Defined>(&result)) {
        out << automaton.alphabet().format(defined->output) << '\n';
    } else {
        out << "undefined at position " << std::get<UndefinedAt>(result).position << '\n';
    }
    return kExitOk;
}

template <typename Decider>
int decide_all(const Options& opt, std::ostream& out, Decider&& decider) {
    Document doc = load_document(opt.file);
    if (doc.instances.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no instance block in the file");
    }
    int status = kExitOk;
    for (const auto& instance : doc.instances) {
        if (report(decider(instance), instance, opt, out) == kExitNotEqual) {
            status = kExitNotEqual;
        }
    }
    return status;
}

int cmd_gadget(const Options& opt, std::ostream& out) {
    auto gadget = gadget_from_name(opt.gadget);
    if (!gadget) {
        throw Error(ErrorKind::InvalidArgument, "unknown gadget '" + opt.gadget + "'");
    }
    auto automaton = build_gadget(*gadget);
    if (!opt.n) {
        out << serialize(automaton);
        return kExitOk;
    }
    const unsigned n = *opt.n;
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "-n must be positive");
    }
    StateSequence lhs;
    StateSequence rhs;
    if (*gadget == Gadget::DualAdding) {
        lhs = zeros(automaton, n);
        rhs = zeros(automaton, n - 1);
    } else if (*gadget == Gadget::DualAddingPrime) {
        lhs = zeros(automaton, n - 1);
        rhs = {{automaton.state_at("q"), false}};
    } else {
        throw Error(ErrorKind::InvalidArgument, "-n only applies to dual-adding and dual-adding-prime");
    }
    out << serialize(make_instance(std::move(automaton), std::move(lhs), std::move(rhs)));
    return kExitOk;
}

std::vector<Acceptor> acceptors_of(const std::vector<std::string>& files) {
    std::vector<Acceptor> result;
    for (const auto& file : files) {
        Document doc = load_document(file);
        if (doc.acceptors.empty()) {
            throw Error(ErrorKind::InvalidArgument, "no acceptor block in '" + file + "'");
        }
        result.insert(result.end(), doc.acceptors.begin(), doc.acceptors.end());
    }
    return result;
}

TmReductionParams tm_params(const Options& opt) {
    TmReductionParams params;
    params.p_val = opt.space;
    params.input = split_tokens(opt.input);
    params.group_variant = opt.group;
    return params;
}

int cmd_reduce_tm(const Options& opt, std::ostream& out, std::ostream& err) {
    Document doc = load_document(opt.file);
    TuringMachine tm = pick_machine(doc, opt.machine);
    auto instance = reduce_tm(tm, tm_params(opt), TmBuildOptions{opt.prune});
    if (!opt.porcelain) {
        err << "reduced automaton: " << instance.automaton.num_states() << " states over "
            << instance.automaton.alphabet().size() << " letters\n";
    }
    out << serialize(instance);
    return kExitOk;
}

int cmd_encode_tm(const Options& opt, std::ostream& out, std::ostream& err) {
    Document doc = load_document(opt.file);
    TuringMachine tm = pick_machine(doc, opt.machine);
    auto params = tm_params(opt);
    auto simulation = simulate_tm(tm, params, opt.steps);
    out << reduction_alphabet(tm).format(encode_computation(tm, params, opt.steps)) << '\n';
    if (!opt.porcelain) {
        if (simulation.accepts_within) {
            err << "accepts at step " << *simulation.accepts_within << '\n';
        } else {
            err << "no final state within " << opt.steps << " steps\n";
        }
    }
    return kExitOk;
}

int cmd_bench_separation(const Options& opt, std::ostream& out) {
    using Clock = std::chrono::steady_clock;
    if (!opt.porcelain) {
        out << "n  witness  expected  d-prime  ms\n";
    }
    for (unsigned n = 1; n <= opt.max_n; ++n) {
        auto start = Clock::now();
        auto plain = separation_witness(n, opt.max_configs);
        auto primed = separation_witness_dprime(n, opt.max_configs);
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        out << n << ' ' << plain.length << ' ' << (std::uint64_t{1} << (n - 1)) << ' ' << primed.length << ' ' << ms
            << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    std::function<int()> action;

    CLI::App app{"Automaton semigroups: properties, actions, word problems and reductions", "autstruct"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--porcelain", opt.porcelain, "One stable machine-readable line per result");

    auto* check = app.add_subcommand("check", "Print the property report of every automaton in FILE");
    check->add_option("FILE", opt.file, "Automaton file, or gadget:NAME")->required();
    check->add_option("--automaton", opt.automaton, "Only this automaton");
    check->callback([&] { action = [&] { return cmd_check(opt, out); }; });

    auto* act = app.add_subcommand("act", "Apply a state sequence to a word");
    act->add_option("FILE", opt.file, "Automaton file, or gadget:NAME")->required();
    act->add_option("--seq", opt.seq, "State tokens, rightmost acts first; ~q is the inverse of q")->required();
    act->add_option("--word", opt.word, "Letter tokens")->required();
    act->add_option("--automaton", opt.automaton, "Automaton name (default: the first one)");
    act->callback([&] { action = [&] { return cmd_act(opt, out); }; });

    auto* decide_cmd = app.add_subcommand("decide", "Decide every instance in FILE");
    decide_cmd->add_option("FILE", opt.file)->required();
    decide_cmd->add_option("--max-configs", opt.max_configs, "Configuration budget");
    decide_cmd->callback([&] {
        action = [&] {
            return decide_all(opt, out, [&](const WordProblemInstance& instance) {
                return decide(instance, DecideOptions{opt.max_configs});
            });
        };
    });

    auto* oracle = app.add_subcommand("oracle", "Check every instance in FILE on all words up to a length");
    oracle->add_option("FILE", opt.file)->required();
    oracle->add_option("--max-len", opt.max_len, "Longest word length")->required();
    oracle->callback([&] {
        action = [&] {
            return decide_all(opt, out,
                              [&](const WordProblemInstance& instance) { return oracle_decide(instance, opt.max_len); });
        };
    });

    auto* gadget = app.add_subcommand("gadget", "Print a built-in automaton (or, with -n, a separation instance)");
    gadget->add_option("NAME", opt.gadget, "adding, free, free-partial, bireversible, dual-adding, dual-adding-prime")
        ->required();
    gadget->add_option("-n", opt.n, "Instance size for dual-adding and dual-adding-prime");
    gadget->callback([&] { action = [&] { return cmd_gadget(opt, out); }; });

    auto* reduce = app.add_subcommand("reduce", "Compile a decision problem into a word-problem instance");
    reduce->require_subcommand(1);
    auto* reduce_inter = reduce->add_subcommand("dfa-intersection", "Emptiness of the intersection of DFAs");
    reduce_inter->add_option("FILES", opt.files, "Files with acceptor blocks over {0,1}")->required();
    reduce_inter->add_flag("--group", opt.group, "G-automaton variant with a rational constraint");
    reduce_inter->callback([&] {
        action = [&] {
            out << serialize(reduce_dfa_intersection(DfaList(acceptors_of(opt.files)), opt.group));
            return kExitOk;
        };
    });
    auto* reduce_empty = reduce->add_subcommand("dfa-empty", "Emptiness of one DFA");
    reduce_empty->add_option("FILE", opt.file)->required();
    reduce_empty->callback([&] {
        action = [&] {
            out << serialize(reduce_dfa_emptiness(acceptors_of({opt.file}).front()));
            return kExitOk;
        };
    });
    auto* reduce_tm_cmd = reduce->add_subcommand("tm", "Space-bounded acceptance of a machine");
    reduce_tm_cmd->add_option("TMFILE", opt.file)->required();
    reduce_tm_cmd->add_option("--input", opt.input, "Input tape symbols")->required();
    reduce_tm_cmd->add_option("--space", opt.space, "Space bound (cells)")->required();
    reduce_tm_cmd->add_option("--machine", opt.machine, "Machine name (default: the first one)");
    reduce_tm_cmd->add_flag("--group", opt.group, "G-automaton variant with a rational constraint");
    reduce_tm_cmd->add_flag("--prune", opt.prune, "Only the checker states the input can reach");
    reduce_tm_cmd->callback([&] { action = [&] { return cmd_reduce_tm(opt, out, err); }; });

    auto* encode = app.add_subcommand("encode", "Encode a computation as a word over the reduction alphabet");
    encode->require_subcommand(1);
    auto* encode_tm = encode->add_subcommand("tm", "Configurations 1..T of a machine run");
    encode_tm->add_option("TMFILE", opt.file)->required();
    encode_tm->add_option("--input", opt.input, "Input tape symbols")->required();
    encode_tm->add_option("--space", opt.space, "Space bound (cells)")->required();
    encode_tm->add_option("--steps", opt.steps, "Number of steps T")->required();
    encode_tm->add_option("--machine", opt.machine, "Machine name (default: the first one)");
    encode_tm->callback([&] { action = [&] { return cmd_encode_tm(opt, out, err); }; });

    auto* bench = app.add_subcommand("bench", "Experiment drivers");
    bench->require_subcommand(1);
    auto* separation = bench->add_subcommand("separation", "Shortest separating words in D and D' for n = 1..N");
    separation->add_option("--max-n", opt.max_n, "Largest n")->required()->check(CLI::Range(1u, 63u));
    separation->add_option("--max-configs", opt.max_configs, "Configuration budget per call");
    separation->callback([&] { action = [&] { return cmd_bench_separation(opt, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::ConfigBudgetExceeded ? kExitBudget : kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

} // namespace autstruct::cli
