#ifndef CLW_FIXTURES_HPP
#define CLW_FIXTURES_HPP

#include "clw/represent.hpp"

namespace clw::fixtures {

// The workbench's reference models. Each also ships as a JSON document
// under fixtures/; tests pin the two representations against each other.

/// Two agents over three states; joint outcomes at s0 are not determined
/// by the agents' individual outcome tables, and the grand coalition's
/// outcome {s1} does not contain the intersection {s1,s2} of its parts.
/// Witness that grand-coalition-first models need not be
/// single-coalition-first, and that the model is not clear.
GrandFirstActionModel m1();

/// Same carrier and single-agent outcome tables as m1 at s0, but the
/// grand-coalition outcomes at s0 are swapped; the pair witnesses that
/// coalition outcomes are not a function of member outcomes.
GrandFirstActionModel gam2();

/// Ship lock with a front and a back door; outcomes of joint actions are
/// the intersections of the members' outcomes. Clear, with loops.
GrandFirstActionModel lock();
SingleFirstActionModel lock_sam();

/// Two processes each owning one binary variable. Same intersection
/// structure as lock().
GrandFirstActionModel proc();
SingleFirstActionModel proc_sam();

/// Neighborhood counterexample: nei_a(s0) = {{s1,s2},{s2,s3}} is not a
/// partition of suc(s0), yet the derived nei_AG(s0) = {{s1},{s2},{s3}} is.
/// States s1..s3 are completed with empty successors and neighborhoods.
SingleFirstNeighborhoodModel n1();

/// One agent, one state, two actions with identical outcomes: every
/// derived outcome image is a general partition of suc, yet the model is
/// not clear.
GrandFirstActionModel u1();

/// The neighborhood model whose tables are exactly the actual effectivity
/// of m1; z-represents m1.
NeighborhoodModel nm1();

/// Single looped state with one block per agent: clear but not tree-like.
SingleFirstNeighborhoodModel loop_snm();

}  // namespace clw::fixtures

#endif
