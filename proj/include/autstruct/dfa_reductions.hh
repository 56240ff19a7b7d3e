// dfa_reductions.hh -- DFA intersection emptiness and DFA emptiness as word
// problems over {0,1,#} and {0,1}

#ifndef AUTSTRUCT_DFA_REDUCTIONS_HH
#define AUTSTRUCT_DFA_REDUCTIONS_HH

#include <vector>

#include "autstruct/acceptor.hh"
#include "autstruct/word_problem.hh"

namespace autstruct {

/// Complete deterministic acceptors over {0,1}.
class DfaList {
public:
    /// Throws MalformedDfa unless every acceptor is complete and deterministic
    /// over exactly {0,1}. The list must not be empty.
    explicit DfaList(std::vector<Acceptor> dfas);

    const std::vector<Acceptor>& dfas() const noexcept { return dfas_; }
    std::size_t size() const noexcept { return dfas_.size(); }
    std::size_t max_states() const;

private:
    std::vector<Acceptor> dfas_;
};

/// Throws MalformedDfa unless `dfa` is complete and deterministic over exactly {0,1}.
void require_binary_dfa(const Acceptor& dfa);

/// Equal iff the intersection of the languages is empty. With `group_variant`
/// the automaton is completed into a G-automaton and the instance carries the
/// constraint {0,1}* # 1^r # 1.
WordProblemInstance reduce_dfa_intersection(const DfaList& dfas, bool group_variant);

/// Equal iff L(dfa) is empty: identity at non-final states, 0 <-> 1 at final
/// ones, initial state against the empty sequence.
WordProblemInstance reduce_dfa_emptiness(const Acceptor& dfa);

/// Product reachability.
bool dfa_intersection_empty(const DfaList& dfas);

/// Acceptor for {0,1}* # 1^r # 1 over {0,1,#}.
Acceptor hash_block_constraint(std::size_t r);

} // namespace autstruct

#endif
