// tm_reduction.hh -- space-bounded acceptance of a fixed machine as a word
// problem over configuration sequences with digit blocks

#ifndef AUTSTRUCT_TM_REDUCTION_HH
#define AUTSTRUCT_TM_REDUCTION_HH

#include <string>

#include "autstruct/acceptor.hh"
#include "autstruct/mealy.hh"
#include "autstruct/turing.hh"
#include "autstruct/word_problem.hh"

namespace autstruct {

struct TmBuildOptions {
    /// Emit only the checker states reachable from the window states that the
    /// input's initial configuration uses. The result acts the same on every
    /// sequence built by reduce_tm.
    bool prune = false;
};

/// Parts of the automaton, by state name:
///   check, check.1 .. check.4, check.skip, check.end   digit-block increment
///   chk0[x,y,z|a,b], chk1[x,y,z|a,b], skip[x,y,z], d1, d2, d3
///                                                       window checker ("^" = nothing read yet)
///   qc, qc.1 .. qc.4                                    shape of the word
///   ql, ql.1 .. ql.5                                    every symbol check-marked
///   e, e.1 .. e.7, e.fail                               final state found
///   f, f.1 .. f.4, sink                                 group variant only
/// The group variant is completed into a G-automaton; throws NotGAutomaton if
/// that fails.
MealyAutomaton build_tm_automaton(const TuringMachine& tm, const TmReductionParams& params,
                                  const TmBuildOptions& options = {});

/// Name of the checker entry state for the window (x, y, z).
std::string window_state(const TuringMachine& tm, DeltaId x, DeltaId y, DeltaId z);

/// Inverse-semigroup variant: e ql Q qc against ql Q qc, where
/// Q = check q[p-2,p-1,p] ... check q[0,1,2] check q[-1,0,1] encodes the initial
/// configuration. Group variant: e Q against Q, constrained to C(w).
WordProblemInstance reduce_tm(const TuringMachine& tm, const TmReductionParams& params,
                              const TmBuildOptions& options = {});

/// Sequences (and, for the group variant, the constraint) for `params` over an
/// automaton already built for `tm` without pruning. The full automaton does
/// not depend on the input or the space bound, so it can be shared.
WordProblemInstance tm_instance(MealyAutomaton automaton, const TuringMachine& tm, const TmReductionParams& params);

/// ((Delta 0^k)^p #)* (Delta 0^k)^p $ 0^k $ 0 over the reduction alphabet.
Acceptor configuration_constraint(const TuringMachine& tm, const TmReductionParams& params);

} // namespace autstruct

#endif
