#include "smindy/maps.hpp"

#include <algorithm>
#include <string>

#include "smindy/perp.hpp"

namespace smindy {

Collection pi_map(const OrbitCategory& cat, const Collection& smc) {
  for (const DerivedObject& x : smc.objects)
    if (!cat.in_domain(x))
      throw InvalidInput("pi applied to an object outside the fundamental domain: " +
                         format_object(x));
  return smc;
}

Collection theta(const Collection& c, int w) {
  std::vector<DerivedObject> kept;
  for (const DerivedObject& x : c.objects)
    if (x.degree >= 0 && x.degree <= w - 1) kept.push_back(x);
  return Collection(std::move(kept));
}

bool is_w_sincere(const HomEngine& engine, const Collection& c, int w) {
  std::vector<bool> covered(engine.rank(), false);
  for (const DerivedObject& x : c.objects) {
    if (x.degree < 0 || x.degree > w - 1) return false;
    for (int v = 0; v < engine.rank(); ++v)
      if (x.root[v] > 0) covered[v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

Collection phi(const HomEngine& engine, const WeylGroup& W, const NCTuple& t, int w,
               std::optional<std::uint64_t> seed) {
  if (static_cast<int>(t.parts.size()) != w + 1)
    throw InvalidInput("NC tuple has " + std::to_string(t.parts.size()) +
                       " parts, expected " + std::to_string(w + 1));
  std::vector<DerivedObject> objs;
  for (int i = 1; i <= w + 1; ++i) {
    std::size_t u = t.parts[i - 1];
    std::vector<std::size_t> expr =
        seed ? W.t_reduced_expression(u, *seed + static_cast<std::uint64_t>(i))
             : W.t_reduced_expression(u);
    std::vector<DimVector> modules;
    for (std::size_t refl : expr) modules.push_back(W.reflection_root(refl));
    for (const DimVector& s : wide_simples(engine, modules))
      objs.push_back({s, w + 1 - i});
  }
  Collection out(std::move(objs));
  if (out.size() != static_cast<std::size_t>(engine.rank()))
    throw InternalError("phi image has size " + std::to_string(out.size()) +
                        ", expected the rank");
  return out;
}

VerificationReport verify_theorem_a(const OrbitCategory& cat, const EnumOptions& opts) {
  VerificationReport rep;
  rep.quiver = cat.engine().quiver().type_name;
  rep.w = cat.w();
  rep.theorem = "A";

  std::vector<Collection> smcs = enumerate_smc_in_fd(cat, opts);
  std::vector<Collection> smss = enumerate_sms(cat, opts);
  rep.counts["smc_fd"] = static_cast<Int>(smcs.size());
  rep.counts["sms"] = static_cast<Int>(smss.size());

  std::vector<Collection> images;
  for (const Collection& s : smcs) images.push_back(pi_map(cat, s));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  if (images.size() != smcs.size()) {
    rep.pass = false;
    rep.witness = "pi is not injective on simple-minded collections";
    return rep;
  }
  rep.pass = (images == smss);
  if (!rep.pass) {
    for (const Collection& s : images)
      if (!std::binary_search(smss.begin(), smss.end(), s)) {
        rep.witness = "pi image " + format_collection(s) + " is not a simple-minded system";
        return rep;
      }
    for (const Collection& s : smss)
      if (!std::binary_search(images.begin(), images.end(), s)) {
        rep.witness = "simple-minded system " + format_collection(s) + " is not in the image";
        return rep;
      }
  }
  return rep;
}

VerificationReport verify_theorem_b(const HomEngine& engine, const OrbitCategory& cat,
                                    const WeylGroup& W, const EnumOptions& opts) {
  VerificationReport rep;
  rep.quiver = engine.quiver().type_name;
  rep.w = cat.w();
  rep.theorem = "B";

  int w = cat.w();
  std::vector<NCTuple> ncs = enumerate_nc(W, w);
  std::vector<NCTuple> positives = filter_positive(W, ncs);
  std::vector<Collection> smcs = enumerate_smc_in_fd(cat, opts);
  rep.counts["nc"] = static_cast<Int>(ncs.size());
  rep.counts["nc_positive"] = static_cast<Int>(positives.size());
  rep.counts["smc_fd"] = static_cast<Int>(smcs.size());

  std::vector<Collection> images;
  for (const NCTuple& t : ncs) {
    Collection img = phi(engine, W, t, w);
    if (opts.seed) {
      Collection img2 = phi(engine, W, t, w, opts.seed);
      if (!(img == img2)) {
        rep.pass = false;
        rep.witness = "phi image depends on the T-reduced expression chosen";
        return rep;
      }
    }
    bool in_domain = std::all_of(img.objects.begin(), img.objects.end(),
                                 [&](const DerivedObject& x) { return cat.in_domain(x); });
    bool positive = is_positive(W, t);
    if (positive != in_domain) {
      rep.pass = false;
      rep.witness = std::string("tuple is ") + (positive ? "positive" : "not positive") +
                    " but phi image " + format_collection(img) +
                    (in_domain ? " lies in" : " leaves") + " the fundamental domain";
      return rep;
    }
    if (positive) images.push_back(img);
  }

  std::size_t distinct = [&] {
    std::vector<Collection> v = images;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    images = v;
    return v.size();
  }();
  if (distinct != positives.size()) {
    rep.pass = false;
    rep.witness = "phi is not injective on positive tuples";
    return rep;
  }

  rep.pass = (images == smcs);
  if (!rep.pass) {
    for (const Collection& s : images)
      if (!std::binary_search(smcs.begin(), smcs.end(), s)) {
        rep.witness = "phi image " + format_collection(s) +
                      " is not a simple-minded collection in the domain";
        return rep;
      }
    rep.witness = "phi is not surjective onto the simple-minded collections";
  }
  return rep;
}

VerificationReport verify_theta(const OrbitCategory& cat, const EnumOptions& opts) {
  const HomEngine& engine = cat.engine();
  int w = cat.w();

  VerificationReport rep;
  rep.quiver = engine.quiver().type_name;
  rep.w = w;
  rep.theorem = "theta";

  std::vector<Collection> smcs = enumerate_smc_in_fd(cat, opts);
  rep.counts["smc_fd"] = static_cast<Int>(smcs.size());

  std::vector<Collection> images;
  for (const Collection& s : smcs) {
    Collection img = theta(s, w);
    if (!is_w_sincere(engine, img, w)) {
      rep.pass = false;
      rep.witness = "theta image " + format_collection(img) + " is not w-sincere";
      return rep;
    }
    if (!is_exceptionally_orderable(engine, img)) {
      rep.pass = false;
      rep.witness = "theta image " + format_collection(img) + " is not exceptionally orderable";
      return rep;
    }
    images.push_back(img);
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  if (images.size() != smcs.size()) {
    rep.pass = false;
    rep.witness = "theta is not injective on simple-minded collections";
    return rep;
  }

  // Independent enumeration of the target side.
  std::vector<DerivedObject> candidates;
  for (int d = 0; d < w; ++d)
    for (const DimVector& r : engine.roots()) candidates.push_back({r, d});
  auto accept = [&](const Collection& c) {
    return c.size() > 0 && is_w_sincere(engine, c, w) && is_exceptionally_orderable(engine, c);
  };
  std::vector<Collection> targets =
      enumerate_inf_orthogonal_subsets(engine, candidates, accept, opts);
  rep.counts["targets"] = static_cast<Int>(targets.size());

  rep.pass = (images == targets);
  if (!rep.pass) {
    for (const Collection& t : targets)
      if (!std::binary_search(images.begin(), images.end(), t)) {
        rep.witness = "target collection " + format_collection(t) + " has no theta preimage";
        return rep;
      }
    rep.witness = "theta image contains a non-target collection";
  }
  return rep;
}

}  // namespace smindy
