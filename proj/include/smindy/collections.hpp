// Collections of indecomposable derived objects, the predicates for
// simple-minded collections and w-simple-minded systems, and exhaustive
// enumeration of both inside a fundamental domain.
#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "smindy/hom_engine.hpp"
#include "smindy/orbit_category.hpp"

namespace smindy {

// A finite set of indecomposable objects, kept sorted and duplicate-free.
struct Collection {
  std::vector<DerivedObject> objects;

  Collection() = default;
  explicit Collection(std::vector<DerivedObject> objs);
  static Collection of(std::initializer_list<DerivedObject> objs);

  std::size_t size() const { return objects.size(); }
  bool contains(const DerivedObject& x) const;

  auto operator<=>(const Collection&) const = default;
};

std::string format_collection(const Collection& c);  // "{(1,0)@0, (0,1)@1}"

struct EnumOptions {
  Int budget;       // cap on the estimated subset count
  int jobs = 1;     // worker threads for the top-level search split
  std::optional<std::uint64_t> seed;  // randomized cross-checks where supported

  EnumOptions();    // budget from SMINDY_BUDGET when set, else 100'000'000
};

// Infinite orthogonality: dim Hom(x, y) = delta_{x,y} and
// dim Hom(Sigma^k x, y) = 0 for every k >= 1 and all x, y in the collection.
bool is_inf_orthogonal(const HomEngine& engine, const Collection& c);

// Simple-minded collection: |c| = rank, infinitely orthogonal, and no
// indecomposable module lies in the total right perp of c.
bool is_smc(const HomEngine& engine, const Collection& c);

// Independent characterization used as a cross-check: |c| = rank, infinitely
// orthogonal, and the Hom-digraph (x -> y iff Hom(x, Sigma^i y) != 0 for some
// i) is acyclic.
bool is_smc_oracle(const HomEngine& engine, const Collection& c);

// Acyclicity of the Hom-digraph alone (any size); this is the
// "exceptionally orderable" test shared with the theta correspondence.
bool is_exceptionally_orderable(const HomEngine& engine, const Collection& c);

// w-simple-minded system in C_{-w}, via the w-Riedtmann characterization:
// Hom_C(Sigma^k x, y) = delta_{k,0} delta_{x,y} for 0 <= k <= w-1, and every
// indecomposable of C_{-w} receives a map from (and sends a map to) the
// suitably shifted collection.
bool is_sms(const OrbitCategory& cat, const Collection& c);

// All simple-minded collections whose objects lie in the fundamental domain.
std::vector<Collection> enumerate_smc_in_fd(const OrbitCategory& cat,
                                            const EnumOptions& opts = EnumOptions());

// All w-simple-minded systems of C_{-w} (objects drawn from the domain).
std::vector<Collection> enumerate_sms(const OrbitCategory& cat,
                                      const EnumOptions& opts = EnumOptions());

// All simple-minded collections drawn from an explicit candidate list and
// containing all of `required`.  Used by the perpendicular-reduction check.
std::vector<Collection> enumerate_smc_among(const HomEngine& engine,
                                            const std::vector<DerivedObject>& candidates,
                                            const Collection& required,
                                            const EnumOptions& opts = EnumOptions());

// All infinitely-orthogonal subsets (of any size) of the candidate list that
// satisfy `accept`.  Backs the independent target-side enumeration of the
// theta correspondence.
std::vector<Collection> enumerate_inf_orthogonal_subsets(
    const HomEngine& engine, const std::vector<DerivedObject>& candidates,
    const std::function<bool(const Collection&)>& accept,
    const EnumOptions& opts = EnumOptions());

}  // namespace smindy
