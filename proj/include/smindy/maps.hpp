// The three correspondences under test: pi (simple-minded collections in the
// fundamental domain to w-simple-minded systems), phi (positive noncrossing
// partitions to simple-minded collections), and theta (to exceptionally
// orderable w-sincere orthogonal collections).
#pragma once

#include <cstdint>
#include <optional>

#include "smindy/collections.hpp"
#include "smindy/orbit_category.hpp"
#include "smindy/report.hpp"
#include "smindy/weyl.hpp"

namespace smindy {

// pi is induced by the quotient functor D^b -> C_{-w}; on objects of the
// fundamental domain it keeps the representatives.  Validates membership.
Collection pi_map(const OrbitCategory& cat, const Collection& smc);

// theta keeps the objects in degrees 0..w-1.
Collection theta(const Collection& c, int w);

// Degrees within 0..w-1 and the union of the root supports covers Q_0.
bool is_w_sincere(const HomEngine& engine, const Collection& c, int w);

// phi sends (u_1, ..., u_{w+1}) to the union over i of the simples of the
// wide subcategory of u_i, placed in degree w+1-i.  A seed reshuffles the
// reflection order used for the T-reduced expressions; the result must not
// depend on it.
Collection phi(const HomEngine& engine, const WeylGroup& W, const NCTuple& t, int w,
               std::optional<std::uint64_t> seed = std::nullopt);

VerificationReport verify_theorem_a(const OrbitCategory& cat,
                                    const EnumOptions& opts = EnumOptions());
VerificationReport verify_theorem_b(const HomEngine& engine, const OrbitCategory& cat,
                                    const WeylGroup& W,
                                    const EnumOptions& opts = EnumOptions());
VerificationReport verify_theta(const OrbitCategory& cat,
                                const EnumOptions& opts = EnumOptions());

}  // namespace smindy
