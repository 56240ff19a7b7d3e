// text_format.hh -- line-oriented files for automata, acceptors, machines and
// word-problem instances

#ifndef AUTSTRUCT_TEXT_FORMAT_HH
#define AUTSTRUCT_TEXT_FORMAT_HH

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "autstruct/acceptor.hh"
#include "autstruct/mealy.hh"
#include "autstruct/turing.hh"
#include "autstruct/word_problem.hh"

namespace autstruct {

/// Everything declared by a file and the files it includes, in order.
struct Document {
    std::vector<MealyAutomaton> automata;
    std::vector<Acceptor> acceptors;
    std::vector<TuringMachineSpec> machines;
    std::vector<WordProblemInstance> instances;

    const MealyAutomaton* find_automaton(std::string_view name) const;
    const Acceptor* find_acceptor(std::string_view name) const;
    const TuringMachineSpec* find_machine(std::string_view name) const;
};

/// Blocks:
///   mealy NAME / alphabet .. / states .. / t STATE IN OUT STATE / end
///   acceptor NAME / alphabet .. / states .. / initial .. / final .. / t STATE IN STATE / end
///   tm NAME / tape .. / blank B / states .. / initial S / final .. / rule S READ WRITE L|N|R S / end
///   instance / automaton NAME / lhs .. / rhs .. / constraint NAME / budget N / end
/// plus `include PATH` (relative to the including file). "%" starts a comment.
/// Throws Error(Parse) with "source:line:" in the message; errors raised while
/// building an object keep their own kind.
Document parse_document(std::string_view text, const std::string& source = "<input>",
                        const std::filesystem::path& base_dir = {});
Document load_document(const std::filesystem::path& path);

std::string serialize(const MealyAutomaton& automaton);
std::string serialize(const Acceptor& acceptor);
std::string serialize(const TuringMachineSpec& machine);
/// Self-contained: the automaton block, the constraint blocks, then the instance.
std::string serialize(const WordProblemInstance& instance);
/// Declarations, then instances that refer to them by name.
std::string serialize(const Document& document);

/// Field-wise equality (automaton, sequences, constraints, budget).
bool same_instance(const WordProblemInstance& first, const WordProblemInstance& second);

} // namespace autstruct

#endif
