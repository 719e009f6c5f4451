// Test-only oracles that recompute key quantities along independent routes:
//   - Hom dimensions between interval modules of a line quiver, via the rank
//     of the explicit intertwiner constraint system (no Euler form, no AR
//     recursion);
//   - absolute reflection length as graph distance in the Cayley graph of the
//     reflection generating set (no rank formula);
//   - noncrossing partition tuples by brute force over the full group;
//   - subset enumeration with no pruning at all.
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "smindy/collections.hpp"
#include "smindy/quiver.hpp"
#include "smindy/weyl.hpp"

namespace smindy::oracles {

// dim Hom(M, N) for interval modules of a quiver whose arrows all connect
// consecutive vertices (any orientation).  m and n must be 0/1 interval
// dimension vectors.  Builds the linear system "f is a homomorphism" with one
// scalar unknown per common support vertex and one equation per arrow, and
// returns #unknowns - rank.
Int interval_hom(const Quiver& q, const DimVector& m, const DimVector& n);

// Distance from the identity in the Cayley graph on all reflections,
// indexed by group element id.  Uses only the multiplication table.
std::vector<int> bfs_abs_lengths(const WeylGroup& W);

// All (w+1)-tuples with product c and BFS-lengths summing to l(c), by
// exhaustive search over the whole group.  Sorted.
std::vector<NCTuple> brute_force_nc(const WeylGroup& W, int w);

// Every size-k subset of the pool satisfying pred, with no pruning.  Sorted.
std::vector<Collection> subsets_satisfying(
    const std::vector<DerivedObject>& pool, std::size_t k,
    const std::function<bool(const Collection&)>& pred);

}  // namespace smindy::oracles
