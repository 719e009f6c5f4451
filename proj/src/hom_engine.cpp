#include "smindy/hom_engine.hpp"

#include <algorithm>
#include <cctype>

namespace smindy {

std::string format_object(const DerivedObject& x) {
  return format_dim_vector(x.root) + "@" + std::to_string(x.degree);
}

DerivedObject parse_object(const std::string& text) {
  auto at = text.rfind('@');
  if (at == std::string::npos)
    throw ParseError("object literal needs the form \"(d1,...,dn)@deg\"", 0);
  DerivedObject x;
  x.root = parse_dim_vector(text.substr(0, at));
  std::string deg = text.substr(at + 1);
  std::size_t i = 0;
  while (i < deg.size() && std::isspace(static_cast<unsigned char>(deg[i]))) ++i;
  bool neg = false;
  if (i < deg.size() && (deg[i] == '-' || deg[i] == '+')) neg = deg[i++] == '-';
  if (i >= deg.size() || !std::isdigit(static_cast<unsigned char>(deg[i])))
    throw ParseError("bad degree in object literal", at + 1 + i);
  long v = 0;
  while (i < deg.size() && std::isdigit(static_cast<unsigned char>(deg[i])))
    v = v * 10 + (deg[i++] - '0');
  while (i < deg.size() && std::isspace(static_cast<unsigned char>(deg[i]))) ++i;
  if (i != deg.size()) throw ParseError("trailing characters after degree", at + 1 + i);
  x.degree = static_cast<int>(neg ? -v : v);
  return x;
}

namespace {

// paths[i][j] = number of directed paths i -> j (trivial path included).
std::vector<std::vector<Int>> path_counts(const Quiver& q) {
  std::vector<std::vector<Int>> p(q.n, std::vector<Int>(q.n, 0));
  std::vector<int> order = exceptional_vertex_order(q);
  // process targets in reverse topological order so successors are done first
  for (int idx = q.n - 1; idx >= 0; --idx) {
    int v = order[idx];
    p[v][v] = 1;
    for (auto& [s, t] : q.arrows)
      if (s == v)
        for (int j = 0; j < q.n; ++j) p[v][j] += p[t][j];
  }
  return p;
}

}  // namespace

HomEngine::HomEngine(Quiver q) : q_(std::move(q)) {
  if (!q_.dynkin)
    throw InvalidInput("hom engine requires a Dynkin quiver; got " + q_.type_name);
  const int n = q_.n;
  euler_ = euler_matrix(q_);
  sym_ = symmetric_form(q_);
  if (n == 0) {
    phi_ = IntMatrix(0, 0);
    phi_inv_ = IntMatrix(0, 0);
    return;
  }
  phi_ = coxeter_matrix(q_);
  phi_inv_ = phi_.inverse_unimodular();

  roots_ = positive_roots(q_);
  const int nr = static_cast<int>(roots_.size());
  for (int i = 0; i < nr; ++i) root_idx_.emplace(roots_[i], i);

  auto paths = path_counts(q_);
  proj_.assign(n, DimVector(n, 0));
  inj_.assign(n, DimVector(n, 0));
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < n; ++j) {
      proj_[v][j] = paths[v][j];
      inj_[v][j] = paths[j][v];
    }
  proj_vertex_.assign(nr, -1);
  inj_vertex_.assign(nr, -1);
  for (int v = 0; v < n; ++v) {
    proj_vertex_[root_index(proj_[v])] = v;
    inj_vertex_[root_index(inj_[v])] = v;
  }

  tau_idx_.assign(nr, -1);
  tau_inv_idx_.assign(nr, -1);
  for (int i = 0; i < nr; ++i) {
    if (proj_vertex_[i] < 0) tau_idx_[i] = root_index(phi_.apply(roots_[i]));
    if (inj_vertex_[i] < 0) tau_inv_idx_[i] = root_index(phi_inv_.apply(roots_[i]));
  }

  // Coxeter number = multiplicative order of Phi on the root lattice.
  {
    IntMatrix p = phi_;
    IntMatrix id = IntMatrix::identity(n);
    h_ = 1;
    while (!(p == id)) {
      p = p * phi_;
      ++h_;
      if (h_ > 1000) throw InternalError("Coxeter matrix has no small finite order");
    }
  }

  // Precompute the full module Hom table.  hom(m,n):
  //   m projective P_v      -> n[v]
  //   otherwise              -> <m,n> + hom(n, Phi m)         (AR duality)
  // Each entry depends on exactly one other entry, so the chains are walked
  // iteratively (no call-stack recursion) and memoised.
  const int depth_cap = 10 * n * h_;
  hom_.assign(std::size_t(nr) * nr, -1);
  auto cell = [&](int a, int b) -> Int& { return hom_[std::size_t(a) * nr + b]; };
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      if (cell(i, j) >= 0) continue;
      std::vector<std::pair<int, int>> chain;
      int a = i, b = j;
      Int base = -1;
      while (true) {
        if (cell(a, b) >= 0) {
          base = cell(a, b);
          break;
        }
        if (proj_vertex_[a] >= 0) {
          base = roots_[b][proj_vertex_[a]];
          cell(a, b) = base;
          break;
        }
        chain.emplace_back(a, b);
        if (static_cast<int>(chain.size()) > depth_cap)
          throw InternalError("hom recursion exceeded depth bound 10*n*h");
        int na = b, nb = tau_idx_[a];
        a = na;
        b = nb;
      }
      max_depth_ = std::max(max_depth_, static_cast<int>(chain.size()));
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        base += euler_form(roots_[it->first], roots_[it->second]);
        if (base < 0) throw InternalError("negative hom dimension computed");
        cell(it->first, it->second) = base;
      }
    }

  verify_exceptional_order(*this, exceptional_vertex_order(q_));
}

int HomEngine::root_index(const DimVector& d) const {
  auto it = root_idx_.find(d);
  if (it == root_idx_.end())
    throw InvalidInput(format_dim_vector(d) + " is not a positive root of " + q_.type_name);
  return it->second;
}

bool HomEngine::is_root(const DimVector& d) const {
  return root_idx_.count(d) != 0;
}

Int HomEngine::euler_form(const DimVector& d, const DimVector& e) const {
  return dot(d, euler_.apply(e));
}

Int HomEngine::dim_hom_mod(const DimVector& m, const DimVector& n) const {
  int a = root_index(m), b = root_index(n);
  return hom_[std::size_t(a) * roots_.size() + b];
}

Int HomEngine::dim_ext_mod(const DimVector& m, const DimVector& n) const {
  int a = root_index(m), b = root_index(n);
  if (proj_vertex_[a] >= 0) return 0;
  return hom_[std::size_t(b) * roots_.size() + tau_idx_[a]];
}

Int HomEngine::dim_hom_derived(const DerivedObject& x, const DerivedObject& y) const {
  int gap = y.degree - x.degree;
  if (gap == 0) return dim_hom_mod(x.root, y.root);
  if (gap == 1) return dim_ext_mod(x.root, y.root);
  root_index(x.root);  // still validate
  root_index(y.root);
  return 0;
}

DerivedObject HomEngine::tau(const DerivedObject& x) const {
  int i = root_index(x.root);
  if (proj_vertex_[i] >= 0) return {inj_[proj_vertex_[i]], x.degree - 1};
  return {roots_[tau_idx_[i]], x.degree};
}

DerivedObject HomEngine::tau_inverse(const DerivedObject& x) const {
  int i = root_index(x.root);
  if (inj_vertex_[i] >= 0) return {proj_[inj_vertex_[i]], x.degree + 1};
  return {roots_[tau_inv_idx_[i]], x.degree};
}

DerivedObject HomEngine::serre(const DerivedObject& x) const {
  DerivedObject t = tau(x);
  t.degree += 1;
  return t;
}

DerivedObject HomEngine::f_power(const DerivedObject& x, int w, int k) const {
  if (w < 1) throw InvalidInput("orbit parameter w must be >= 1");
  DerivedObject cur = x;
  for (int s = 0; s < k; ++s) {
    cur = tau(cur);
    cur.degree += w + 1;
  }
  for (int s = 0; s > k; --s) {
    cur = tau_inverse(cur);
    cur.degree -= w + 1;
  }
  if (k == 0) root_index(cur.root);
  return cur;
}

void verify_exceptional_order(const HomEngine& engine, const std::vector<int>& order) {
  const int n = engine.rank();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < j; ++k) {
      DimVector sj(n, 0), sk(n, 0);
      sj[order[j]] = 1;
      sk[order[k]] = 1;
      // hereditary: only shifts 0 and 1 can carry morphisms between modules
      for (int shift = 0; shift <= 1; ++shift)
        if (engine.dim_hom_derived({sj, 0}, {sk, shift}) != 0)
          throw InternalError("exceptional vertex order violated at vertices " +
                              std::to_string(order[j] + 1) + " -> " +
                              std::to_string(order[k] + 1));
    }
}

}  // namespace smindy
