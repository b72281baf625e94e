#pragma once

#include <string>

#include "seqcat/alignment_functor.hpp"

// Small worked data sets shared by the CLI, the tests and the acceptance run.

namespace seqcat::demo {

// Anne, Bob, Craig, Doug.
NamedSequences four_individuals();
AlignmentSpec four_individual_spec();
// Pairwise global alignments on the 15 example objects at level [1111].
SeqAlignFunctor four_individual_functor(HubMode hubs = HubMode::lazy);
// Adds color 2, copies the length-8 Craig/Doug alignments onto (!8,[0022]) and
// links that copy to (!9,[0011]) through the hub (!9,[0001]).
RecolorPlan same_table_plan(const SeqAlignFunctor& f);

struct MechanismCase {
    SeqAlignFunctor functor;
    Segment tau;
    int index = 0;
};

// One length-8 object (2)(1)(1)(4) holding the length-8 alignments of
// `craig` against `other` (all co-optimal tracebacks); tau is (2)(1)(4).
MechanismCase duplication_case(const std::string& craig = "ACGGTCA", const std::string& other = "ACGGGTCA");
// Three length-11 objects over {0,1,2}^4 whose color-2 patches mark the
// inserted pairs around the block ACG / GCA.
MechanismCase inversion_case();

}  // namespace seqcat::demo
