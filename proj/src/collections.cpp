#include "smindy/collections.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

namespace smindy {

Collection::Collection(std::vector<DerivedObject> objs) : objects(std::move(objs)) {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
}

Collection Collection::of(std::initializer_list<DerivedObject> objs) {
  return Collection(std::vector<DerivedObject>(objs));
}

bool Collection::contains(const DerivedObject& x) const {
  return std::binary_search(objects.begin(), objects.end(), x);
}

std::string format_collection(const Collection& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    if (i) s += ", ";
    s += format_object(c.objects[i]);
  }
  return s + "}";
}

EnumOptions::EnumOptions() : budget(100'000'000) {
  if (const char* env = std::getenv("SMINDY_BUDGET")) {
    char* endp = nullptr;
    long long v = std::strtoll(env, &endp, 10);
    if (endp && *endp == '\0' && v > 0) budget = v;
  }
}

namespace {

// dim Hom_D(Sigma^k x, y) summed over all k != 0 vanishes iff these do; the
// hereditary window leaves at most two shifts that can carry a Hom.
bool pair_inf_orthogonal(const HomEngine& e, const DerivedObject& x, const DerivedObject& y) {
  for (const auto* a : {&x, &y}) {
    const auto* b = (a == &x) ? &y : &x;
    if (e.dim_hom_derived(*a, *b) != 0) return false;  // k = 0, distinct objects
    for (int k : {b->degree - a->degree - 1, b->degree - a->degree})
      if (k >= 1 && e.dim_hom_derived({a->root, a->degree + k}, *b) != 0) return false;
  }
  return true;
}

// Hom-digraph edge x -> y: Hom_D(x, Sigma^i y) != 0 for some i.  Shifts make
// the test degree-independent: it reduces to hom or ext at the module level.
bool hom_edge(const HomEngine& e, const DerivedObject& x, const DerivedObject& y) {
  return e.dim_hom_mod(x.root, y.root) != 0 || e.dim_ext_mod(x.root, y.root) != 0;
}

bool digraph_acyclic(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) -> bool {
    state[v] = 1;
    for (int u : adj[v]) {
      if (state[u] == 1) return false;
      if (state[u] == 0 && !dfs(u)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

Int binomial_capped(std::size_t m, std::size_t r, Int cap) {
  if (r > m) return 0;
  Int acc = 1;
  for (std::size_t i = 0; i < r; ++i) {
    acc = acc * static_cast<Int>(m - i) / static_cast<Int>(i + 1);
    if (acc > cap) return cap + 1;
  }
  return acc;
}

// Generic clique search over a fixed compatibility relation: enumerate all
// ascending extensions of `fixed` to `target` elements, keep those passing
// `accept`.  The first free slot is striped across `jobs` workers.
std::vector<Collection> clique_search(const std::vector<DerivedObject>& candidates,
                                      const std::vector<char>& compat,  // m*m
                                      const std::vector<int>& fixed,
                                      std::size_t target,
                                      const std::function<bool(const Collection&)>& accept,
                                      const EnumOptions& opts,
                                      bool all_sizes = false) {
  std::size_t m = candidates.size();
  int jobs = std::max(1, opts.jobs);
  auto ok = [&](int i, int j) { return compat[std::size_t(i) * m + j] != 0; };

  if (!all_sizes && fixed.size() > target) return {};
  for (std::size_t a = 0; a < fixed.size(); ++a)
    for (std::size_t b = a + 1; b < fixed.size(); ++b)
      if (!ok(fixed[a], fixed[b])) return {};  // required set already conflicts

  Int estimate;
  if (all_sizes) {
    std::size_t free_count = m - fixed.size();
    estimate = free_count >= 62 ? opts.budget + 1 : (Int(1) << free_count);
  } else {
    estimate = binomial_capped(m - fixed.size(), target - fixed.size(), opts.budget);
  }
  if (estimate > opts.budget)
    throw BudgetExceeded("search space exceeds budget " + std::to_string(opts.budget) +
                         "; raise --budget or SMINDY_BUDGET");

  auto build = [&](const std::vector<int>& picked) {
    std::vector<DerivedObject> objs;
    for (int i : fixed) objs.push_back(candidates[i]);
    for (int i : picked) objs.push_back(candidates[i]);
    return Collection(std::move(objs));
  };

  auto worker = [&](int worker_id, std::vector<Collection>& out) {
    std::vector<int> picked;
    std::function<void(int)> extend = [&](int start) {
      if (all_sizes || fixed.size() + picked.size() == target) {
        Collection c = build(picked);
        if (accept(c)) out.push_back(c);
        if (!all_sizes) return;
      }
      if (fixed.size() + picked.size() >= (all_sizes ? m : target)) return;
      for (int i = start; i < static_cast<int>(m); ++i) {
        if (picked.empty() && i % jobs != worker_id) continue;
        bool good = true;
        for (int f : fixed)
          if (!ok(f, i)) { good = false; break; }
        for (int p : picked)
          if (good && !ok(p, i)) { good = false; break; }
        if (std::find(fixed.begin(), fixed.end(), i) != fixed.end()) good = false;
        if (!good) continue;
        picked.push_back(i);
        extend(i + 1);
        picked.pop_back();
      }
    };
    extend(0);
  };

  std::vector<Collection> results;
  if (jobs == 1) {
    worker(0, results);
  } else {
    std::vector<std::vector<Collection>> parts(jobs);
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back([&, t] { worker(t, parts[t]); });
    for (auto& th : threads) th.join();
    for (auto& p : parts)
      results.insert(results.end(), p.begin(), p.end());
  }
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

std::vector<char> smc_compat_matrix(const HomEngine& e,
                                    const std::vector<DerivedObject>& candidates) {
  std::size_t m = candidates.size();
  std::vector<char> compat(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      compat[i * m + j] = compat[j * m + i] =
          pair_inf_orthogonal(e, candidates[i], candidates[j]) ? 1 : 0;
  return compat;
}

}  // namespace

bool is_inf_orthogonal(const HomEngine& engine, const Collection& c) {
  for (const DerivedObject& x : c.objects) {
    if (!engine.is_root(x.root)) throw InvalidInput("not an indecomposable: " + format_object(x));
    if (engine.dim_hom_derived(x, x) != 1) return false;
  }
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    for (std::size_t j = i + 1; j < c.objects.size(); ++j)
      if (!pair_inf_orthogonal(engine, c.objects[i], c.objects[j])) return false;
  return true;
}

bool is_smc(const HomEngine& engine, const Collection& c) {
  if (c.size() != static_cast<std::size_t>(engine.rank())) return false;
  if (!is_inf_orthogonal(engine, c)) return false;
  // Generation: no indecomposable module may be right-perpendicular (in all
  // shifts, equivalently hom and ext both zero) to the whole collection.
  for (const DimVector& n : engine.roots()) {
    bool hit = false;
    for (const DerivedObject& s : c.objects)
      if (engine.dim_hom_mod(s.root, n) != 0 || engine.dim_ext_mod(s.root, n) != 0) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_exceptionally_orderable(const HomEngine& engine, const Collection& c) {
  std::size_t m = c.objects.size();
  std::vector<std::vector<int>> adj(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && hom_edge(engine, c.objects[i], c.objects[j]))
        adj[i].push_back(static_cast<int>(j));
  return digraph_acyclic(adj);
}

bool is_smc_oracle(const HomEngine& engine, const Collection& c) {
  if (c.size() != static_cast<std::size_t>(engine.rank())) return false;
  return is_inf_orthogonal(engine, c) && is_exceptionally_orderable(engine, c);
}

bool is_sms(const OrbitCategory& cat, const Collection& c) {
  int w = cat.w();
  const auto& objs = c.objects;
  for (const DerivedObject& x : objs)
    if (!cat.in_domain(x))
      throw InvalidInput("SMS candidate object outside fundamental domain: " + format_object(x));

  // (i) w-orthogonality.
  for (const DerivedObject& x : objs)
    for (const DerivedObject& y : objs)
      for (int k = 0; k < w; ++k) {
        Int expect = (k == 0 && x == y) ? 1 : 0;
        if (cat.dim_hom({x.root, x.degree + k}, y) != expect) return false;
      }

  // (ii) every indecomposable is reached from the shifted collection and
  // reaches it (w-Riedtmann, both sides).
  for (const DerivedObject& z : cat.domain()) {
    bool from = false, to = false;
    for (const DerivedObject& s : objs)
      for (int k = 0; k < w && !(from && to); ++k) {
        if (!from && cat.dim_hom({s.root, s.degree + k}, z) != 0) from = true;
        if (!to && cat.dim_hom({z.root, z.degree + k}, s) != 0) to = true;
      }
    if (!from || !to) return false;
  }
  return true;
}

std::vector<Collection> enumerate_smc_in_fd(const OrbitCategory& cat, const EnumOptions& opts) {
  const HomEngine& e = cat.engine();
  const auto& candidates = cat.domain();
  auto compat = smc_compat_matrix(e, candidates);
  auto accept = [&](const Collection& c) { return is_smc(e, c); };
  return clique_search(candidates, compat, {}, static_cast<std::size_t>(e.rank()), accept, opts);
}

std::vector<Collection> enumerate_sms(const OrbitCategory& cat, const EnumOptions& opts) {
  const auto& candidates = cat.domain();
  std::size_t m = candidates.size();
  int w = cat.w();

  // Orbit-Hom table: hom[k][i][j] = dim Hom_C(Sigma^k candidates[i], candidates[j]).
  std::vector<std::vector<Int>> hom(static_cast<std::size_t>(w), std::vector<Int>(m * m, 0));
  for (int k = 0; k < w; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        hom[k][i * m + j] =
            cat.dim_hom({candidates[i].root, candidates[i].degree + k}, candidates[j]);

  std::vector<char> compat(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      bool ok = true;
      for (int k = 0; k < w && ok; ++k)
        if (hom[k][i * m + j] != 0 || hom[k][j * m + i] != 0) ok = false;
      compat[i * m + j] = ok ? 1 : 0;
    }

  // Self-consistency of candidates: Sigma^k-endomorphisms must be delta_{k,0}.
  std::vector<char> usable(m, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (int k = 0; k < w; ++k)
      if (hom[k][i * m + i] != (k == 0 ? 1 : 0)) usable[i] = 0;

  auto index_of = [&](const DerivedObject& x) {
    auto it = std::lower_bound(candidates.begin(), candidates.end(), x);
    return static_cast<std::size_t>(it - candidates.begin());
  };

  auto accept = [&](const Collection& c) {
    for (const DerivedObject& x : c.objects)
      if (!usable[index_of(x)]) return false;
    // Riedtmann closure in both directions against the whole domain.
    for (std::size_t z = 0; z < m; ++z) {
      bool from = false, to = false;
      for (const DerivedObject& s : c.objects) {
        std::size_t i = index_of(s);
        for (int k = 0; k < w && !(from && to); ++k) {
          if (hom[k][i * m + z] != 0) from = true;
          if (hom[k][z * m + i] != 0) to = true;
        }
        if (from && to) break;
      }
      if (!from || !to) return false;
    }
    return true;
  };

  std::size_t target = static_cast<std::size_t>(cat.engine().rank());
  return clique_search(candidates, compat, {}, target, accept, opts);
}

std::vector<Collection> enumerate_smc_among(const HomEngine& engine,
                                            const std::vector<DerivedObject>& candidates,
                                            const Collection& required,
                                            const EnumOptions& opts) {
  std::vector<DerivedObject> cands = candidates;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::vector<int> fixed;
  for (const DerivedObject& r : required.objects) {
    auto it = std::lower_bound(cands.begin(), cands.end(), r);
    if (it == cands.end() || *it != r)
      throw InvalidInput("required object is not among the candidates: " + format_object(r));
    fixed.push_back(static_cast<int>(it - cands.begin()));
  }

  auto compat = smc_compat_matrix(engine, cands);
  auto accept = [&](const Collection& c) { return is_smc(engine, c); };
  return clique_search(cands, compat, fixed, static_cast<std::size_t>(engine.rank()), accept,
                       opts);
}

std::vector<Collection> enumerate_inf_orthogonal_subsets(
    const HomEngine& engine, const std::vector<DerivedObject>& candidates,
    const std::function<bool(const Collection&)>& accept, const EnumOptions& opts) {
  std::vector<DerivedObject> cands = candidates;
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  auto compat = smc_compat_matrix(engine, cands);
  return clique_search(cands, compat, {}, cands.size(), accept, opts, /*all_sizes=*/true);
}

}  // namespace smindy
