#include "smindy/orbit_category.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace smindy {

OrbitCategory::OrbitCategory(const HomEngine& engine, int w)
    : engine_(engine), w_(w) {
  if (w < 1) throw InvalidInput("orbit category requires w >= 1");
  if (engine.rank() == 0) throw InvalidInput("orbit category requires a nonempty quiver");

  // Explicit description of the fundamental domain: every indecomposable
  // module in degrees 0..w-1, and the non-injective ones in degree w.
  for (int a = 0; a < w; ++a)
    for (const DimVector& r : engine.roots()) domain_.push_back({r, a});
  for (const DimVector& r : engine.roots())
    if (!engine.is_injective(engine.root_index(r))) domain_.push_back({r, w});
  std::sort(domain_.begin(), domain_.end());

  // Cross-check against the definitional membership test on a window of
  // degrees straddling the domain.
  for (int a = -1; a <= w + 1; ++a) {
    for (const DimVector& r : engine.roots()) {
      DerivedObject x{r, a};
      bool explicit_in = std::binary_search(domain_.begin(), domain_.end(), x);
      if (explicit_in != in_domain_by_definition(x))
        throw InternalError("fundamental domain description disagrees with definition at " +
                            format_object(x));
    }
  }
}

bool OrbitCategory::in_domain(const DerivedObject& x) const {
  return std::binary_search(domain_.begin(), domain_.end(), x);
}

bool OrbitCategory::in_domain_by_definition(const DerivedObject& x) const {
  if (!engine_.is_root(x.root)) return false;
  // x lies in the domain iff x has degree >= 0 while F^{-1} x has degree <= -1.
  return x.degree >= 0 && engine_.f_power(x, w_, -1).degree <= -1;
}

std::pair<OrbitObject, int> OrbitCategory::canonicalize(const DerivedObject& x) const {
  if (!engine_.is_root(x.root))
    throw InvalidInput("not an indecomposable object: " + format_object(x));

  // F shifts degrees by at least w+1-ish steps, so scanning a modest range of
  // powers is enough; assert that exactly one power lands in the domain.
  int h = engine_.coxeter_number();
  int span = std::abs(x.degree) / w_ + 2 * h + 4;
  bool found = false;
  OrbitObject result;
  int found_k = 0;
  for (int k = -span; k <= span; ++k) {
    DerivedObject y = engine_.f_power(x, w_, k);
    if (in_domain(y)) {
      if (found)
        throw InternalError("two F-powers of " + format_object(x) +
                            " lie in the fundamental domain");
      found = true;
      result = OrbitObject{y, w_};
      found_k = k;
    }
  }
  if (!found)
    throw InternalError("no F-power of " + format_object(x) +
                        " lies in the fundamental domain");
  return {result, found_k};
}

Int OrbitCategory::dim_hom(const DerivedObject& x, const DerivedObject& y) const {
  if (!engine_.is_root(x.root) || !engine_.is_root(y.root))
    throw InvalidInput("orbit hom arguments must be indecomposable objects");

  // Hom_D(x, F^k y) vanishes once the degree of F^k y leaves the hereditary
  // window [x.degree, x.degree + 1]; each F step moves degrees monotonically,
  // so a symmetric window in k suffices.  The window is padded and the
  // extreme terms are asserted to vanish.
  int span = std::abs(y.degree - x.degree);
  int bound = (span + 2) / w_ + engine_.coxeter_number() + 2;

  Int total = 0;
  DerivedObject fwd = engine_.f_power(y, w_, -bound);
  for (int k = -bound; k <= bound; ++k) {
    Int d = engine_.dim_hom_derived(x, fwd);
    if ((k == -bound || k == bound) && d != 0)
      throw InternalError("orbit hom window too small for " + format_object(x) +
                          " -> " + format_object(y));
    total += d;
    if (k < bound) fwd = engine_.f_power(fwd, w_, 1);
  }
  return total;
}

Int OrbitCategory::dim_hom(const OrbitObject& x, const OrbitObject& y) const {
  if (x.w != w_ || y.w != w_)
    throw InvalidInput("orbit objects belong to a different orbit category");
  return dim_hom(x.rep, y.rep);
}

bool OrbitCategory::lemma_check(const DerivedObject& x, const DerivedObject& y, int i) const {
  if (i < 0 || i > w_) throw InvalidInput("lemma_check requires 0 <= i <= w");
  if (!in_domain(x) || !in_domain(y))
    throw InvalidInput("lemma_check arguments must lie in the fundamental domain");

  DerivedObject shifted_y{y.root, y.degree - i};
  Int lhs = dim_hom(x, shifted_y);
  Int rhs = engine_.dim_hom_derived(x, shifted_y) +
            engine_.dim_hom_derived(y, DerivedObject{x.root, x.degree + i - w_});
  return lhs == rhs;
}

}  // namespace smindy
