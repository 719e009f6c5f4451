#include "smindy/perp.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace smindy {

namespace {

bool mutually_invisible(const HomEngine& e, const DimVector& a, const DimVector& b) {
  return e.dim_hom_mod(a, b) == 0 && e.dim_ext_mod(a, b) == 0;
}

std::vector<DimVector> right_perp(const HomEngine& e, const std::vector<DimVector>& gens) {
  std::vector<DimVector> out;
  for (const DimVector& n : e.roots()) {
    bool ok = true;
    for (const DimVector& g : gens)
      if (!mutually_invisible(e, g, n)) { ok = false; break; }
    if (ok) out.push_back(n);
  }
  return out;
}

std::vector<DimVector> left_perp(const HomEngine& e, const std::vector<DimVector>& gens) {
  std::vector<DimVector> out;
  for (const DimVector& n : e.roots()) {
    bool ok = true;
    for (const DimVector& g : gens)
      if (!mutually_invisible(e, n, g)) { ok = false; break; }
    if (ok) out.push_back(n);
  }
  return out;
}

int span_rank(const std::vector<DimVector>& vecs, int n) {
  if (vecs.empty()) return 0;
  IntMatrix m(n, static_cast<int>(vecs.size()));
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(j)) = vecs[j][i];
  return m.rank();
}

}  // namespace

std::vector<DimVector> perp_indecomposables(const HomEngine& engine, const Collection& c) {
  std::vector<DimVector> gens;
  for (const DerivedObject& x : c.objects) {
    if (!engine.is_root(x.root))
      throw InvalidInput("perp of a non-indecomposable object: " + format_object(x));
    gens.push_back(x.root);
  }
  return right_perp(engine, gens);  // roots() is sorted, so this is too
}

std::vector<DimVector> exceptional_simples(const HomEngine& engine,
                                           const std::vector<DimVector>& wide_indecs, int k) {
  if (k == 0) {
    if (!wide_indecs.empty())
      throw InternalError("wide subcategory of rank 0 contains objects");
    return {};
  }
  std::size_t m = wide_indecs.size();
  std::vector<DimVector> found;
  std::vector<int> pick;
  bool unique = true;

  auto hom_orth = [&](int i, int j) {
    return engine.dim_hom_mod(wide_indecs[i], wide_indecs[j]) == 0 &&
           engine.dim_hom_mod(wide_indecs[j], wide_indecs[i]) == 0;
  };

  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      std::vector<DerivedObject> objs;
      for (int i : pick) objs.push_back({wide_indecs[i], 0});
      if (is_exceptionally_orderable(engine, Collection(std::move(objs)))) {
        if (!found.empty()) unique = false;
        found.clear();
        for (int i : pick) found.push_back(wide_indecs[i]);
      }
      return;
    }
    for (int i = start; i < static_cast<int>(m); ++i) {
      bool ok = true;
      for (int p : pick)
        if (!hom_orth(p, i)) { ok = false; break; }
      if (!ok) continue;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);

  if (found.empty())
    throw InternalError("wide subcategory has no orthogonal simple system of rank " +
                        std::to_string(k));
  if (!unique)
    throw InternalError("orthogonal simple system of rank " + std::to_string(k) +
                        " is not unique");
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<DimVector> wide_simples(const HomEngine& engine,
                                    const std::vector<DimVector>& modules) {
  for (const DimVector& mv : modules)
    if (!engine.is_root(mv))
      throw InvalidInput("wide closure of a non-root dimension vector " + format_dim_vector(mv));
  std::vector<DimVector> perp = right_perp(engine, modules);
  std::vector<DimVector> wide = left_perp(engine, perp);
  return exceptional_simples(engine, wide, span_rank(modules, engine.rank()));
}

PerpCategory perp_category(const HomEngine& engine, const Collection& c) {
  PerpCategory out;
  out.indecomposables = perp_indecomposables(engine, c);

  std::vector<DimVector> seed_roots;
  for (const DerivedObject& x : c.objects) seed_roots.push_back(x.root);
  int k = span_rank(seed_roots, engine.rank());
  int perp_rank = engine.rank() - k;
  out.simples = exceptional_simples(engine, out.indecomposables, perp_rank);

  // Realize the quiver: vertex i = out.simples[i], arrows by ext multiplicity.
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < perp_rank; ++i)
    for (int j = 0; j < perp_rank; ++j) {
      if (i == j) continue;
      Int e = engine.dim_ext_mod(out.simples[i], out.simples[j]);
      for (Int a = 0; a < e; ++a) arrows.emplace_back(i, j);
    }
  out.quiver = make_quiver(perp_rank, arrows);
  if (!out.quiver.dynkin)
    throw InternalError("perpendicular quiver is not Dynkin: " + out.quiver.type_name);

  // Rank law / coordinate check: perp indecomposables are exactly the
  // positive roots of the realized quiver, in simples coordinates.
  HomEngine perp_engine(out.quiver);
  if (out.indecomposables.size() != perp_engine.roots().size())
    throw InternalError("perp indecomposable count " +
                        std::to_string(out.indecomposables.size()) +
                        " != positive root count " +
                        std::to_string(perp_engine.roots().size()));
  for (const DimVector& nv : out.indecomposables) {
    auto coords = solve_integral_combination(out.simples, nv);
    if (!coords || !perp_engine.is_root(*coords))
      throw InternalError("perp object " + format_dim_vector(nv) +
                          " is not a root in simples coordinates");
  }
  return out;
}

VerificationReport verify_reduction(const HomEngine& engine, const Collection& seed,
                                    int window, const EnumOptions& opts) {
  if (window < 0) throw InvalidInput("reduction window must be nonnegative");
  if (seed.size() == 0) throw InvalidInput("reduction requires a nonempty seed collection");
  for (const DerivedObject& x : seed.objects)
    if (x.degree < 0 || x.degree > window)
      throw InvalidInput("seed object " + format_object(x) +
                         " lies outside degrees 0.." + std::to_string(window));
  if (!is_inf_orthogonal(engine, seed))
    throw InvalidInput("seed collection is not infinitely orthogonal");

  VerificationReport rep;
  rep.quiver = engine.quiver().type_name;
  rep.w = window;
  rep.theorem = "reduction";

  PerpCategory perp = perp_category(engine, seed);
  HomEngine perp_engine(perp.quiver);

  auto degree_spread = [&](const HomEngine& e) {
    std::vector<DerivedObject> cands;
    for (int d = 0; d <= window; ++d)
      for (const DimVector& r : e.roots()) cands.push_back({r, d});
    return cands;
  };

  std::vector<Collection> ambient =
      enumerate_smc_among(engine, degree_spread(engine), seed, opts);
  std::vector<Collection> reduced =
      enumerate_smc_among(perp_engine, degree_spread(perp_engine), Collection{}, opts);

  rep.counts["ambient_smc"] = static_cast<Int>(ambient.size());
  rep.counts["perp_smc"] = static_cast<Int>(reduced.size());
  rep.counts["perp_rank"] = perp_engine.rank();

  // The bijection itself is checked at cardinality level: completion objects
  // are in general twisted out of the module heart, so their dimension vectors
  // need not lie in the perpendicular subcategory as modules.
  if (ambient.size() != reduced.size()) {
    rep.pass = false;
    rep.witness = "cardinality mismatch: " + std::to_string(ambient.size()) +
                  " ambient completions vs " + std::to_string(reduced.size()) +
                  " perp collections";
    return rep;
  }

  // Degenerate completions (every extra already a perp object) transport
  // identity-on-objects; each must reappear verbatim in the reduced list.
  std::vector<Collection> mapped;
  for (const Collection& s : ambient) {
    std::vector<DerivedObject> image;
    bool degenerate = true;
    for (const DerivedObject& x : s.objects) {
      if (seed.contains(x)) continue;
      if (!std::binary_search(perp.indecomposables.begin(), perp.indecomposables.end(),
                              x.root)) {
        degenerate = false;
        break;
      }
      auto coords = solve_integral_combination(perp.simples, x.root);
      if (!coords)
        throw InternalError("no integral perp coordinates for " + format_object(x));
      image.push_back({*coords, x.degree});
    }
    if (degenerate) mapped.push_back(Collection(std::move(image)));
  }
  std::sort(mapped.begin(), mapped.end());
  auto dup = std::adjacent_find(mapped.begin(), mapped.end());
  if (dup != mapped.end()) {
    rep.pass = false;
    rep.witness = "two degenerate completions map to the same perp collection " +
                  format_collection(*dup);
    return rep;
  }
  rep.counts["degenerate"] = static_cast<Int>(mapped.size());
  for (const Collection& m : mapped) {
    if (!std::binary_search(reduced.begin(), reduced.end(), m)) {
      rep.pass = false;
      rep.witness = "transported completion " + format_collection(m) +
                    " missing from the perp enumeration";
      return rep;
    }
  }

  rep.pass = true;
  return rep;
}

}  // namespace smindy
