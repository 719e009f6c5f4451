// Right-perpendicular categories of exceptional collections, wide-subcategory
// closures, and the reduction theorem relating simple-minded collections of
// the ambient quiver to those of the perpendicular quiver.
#pragma once

#include <vector>

#include "smindy/collections.hpp"
#include "smindy/hom_engine.hpp"
#include "smindy/quiver.hpp"
#include "smindy/report.hpp"

namespace smindy {

// Indecomposable modules N with hom(t, N) = ext(t, N) = 0 for every t in c
// (degrees are irrelevant: all shifts of N are tested at once).  Sorted.
std::vector<DimVector> perp_indecomposables(const HomEngine& engine, const Collection& c);

// The unique subset of `wide_indecs` of size k consisting of pairwise
// Hom-orthogonal modules whose Hom/Ext digraph is acyclic: the simple objects
// of the wide subcategory.  Throws InternalError unless exactly one exists.
std::vector<DimVector> exceptional_simples(const HomEngine& engine,
                                           const std::vector<DimVector>& wide_indecs, int k);

// Smallest wide subcategory containing the given modules, computed by a
// double perpendicular; returns its simples.
std::vector<DimVector> wide_simples(const HomEngine& engine,
                                    const std::vector<DimVector>& modules);

struct PerpCategory {
  std::vector<DimVector> indecomposables;  // as roots of the ambient quiver
  std::vector<DimVector> simples;          // exceptional simples, sorted
  Quiver quiver;                           // realized quiver of the perp, Dynkin
};

// Builds the perpendicular category of c and validates it: the realized
// quiver is Dynkin, its positive roots biject with the perp indecomposables
// via exact integral coordinates in the simples basis.
PerpCategory perp_category(const HomEngine& engine, const Collection& c);

// Reduction check: simple-minded collections of Q with objects in degrees
// 0..window containing `seed` correspond bijectively, by passing to the
// perpendicular coordinates, to simple-minded collections of the perp quiver
// in the same degree range.
VerificationReport verify_reduction(const HomEngine& engine, const Collection& seed,
                                    int window, const EnumOptions& opts = EnumOptions());

}  // namespace smindy
