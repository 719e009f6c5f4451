#include "smindy/weyl.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace smindy {

namespace {

// Matrix of the reflection in a root alpha w.r.t. the symmetric form C:
// t_alpha(v) = v - (v, alpha) alpha, i.e. I - alpha (C alpha)^T as a matrix.
IntMatrix reflection_matrix(const IntMatrix& C, const DimVector& alpha) {
  int n = static_cast<int>(alpha.size());
  DimVector c_alpha = C.apply(alpha);
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) -= alpha[i] * c_alpha[j];
  return m;
}

}  // namespace

WeylGroup::WeylGroup(const Quiver& q) : quiver_(q), n_(q.n) {
  if (!q.dynkin) throw InvalidInput("Weyl group requires a Dynkin quiver");
  if (q.n == 0) throw InvalidInput("Weyl group requires a nonempty quiver");

  IntMatrix C = symmetric_form(q);

  // Closure under right multiplication by simple reflections.
  std::vector<IntMatrix> gens;
  for (int v = 0; v < n_; ++v) {
    DimVector e(n_, 0);
    e[v] = 1;
    gens.push_back(reflection_matrix(C, e));
  }

  elements_.push_back(IntMatrix::identity(n_));
  index_.emplace(elements_[0], 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (int v = 0; v < n_; ++v) {
      IntMatrix m = elements_[head] * gens[v];
      if (index_.count(m)) continue;
      index_.emplace(m, elements_.size());
      elements_.push_back(std::move(m));
    }
  }
  // Group matrices have determinant +-1, so exact matrix inversion gives the
  // group inverse directly.
  inverse_.resize(elements_.size());
  for (std::size_t id = 0; id < elements_.size(); ++id)
    inverse_[id] = index_.at(elements_[id].inverse_unimodular());
  abs_length_.assign(elements_.size(), -1);

  simples_.resize(n_);
  for (int v = 0; v < n_; ++v) simples_[v] = index_.at(gens[v]);

  // Reflections: one per positive root, sorted by root.
  for (const DimVector& alpha : positive_roots(q)) {
    std::size_t id = index_.at(reflection_matrix(C, alpha));
    reflections_.push_back(id);
    reflection_root_.emplace(id, alpha);
  }

  coxeter_ = 0;
  for (int v : exceptional_vertex_order(q)) coxeter_ = multiply(coxeter_, simples_[v]);
}

std::size_t WeylGroup::id_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InvalidInput("matrix is not a Weyl group element");
  return it->second;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t WeylGroup::inverse(std::size_t a) const { return inverse_[a]; }

const DimVector& WeylGroup::reflection_root(std::size_t id) const {
  auto it = reflection_root_.find(id);
  if (it == reflection_root_.end())
    throw InvalidInput("element is not a reflection");
  return it->second;
}

std::size_t WeylGroup::reflection_of_root(const DimVector& alpha) const {
  IntMatrix C = symmetric_form(quiver_);
  return id_of(reflection_matrix(C, alpha));
}

int WeylGroup::abs_length(std::size_t id) const {
  if (abs_length_[id] >= 0) return abs_length_[id];
  IntMatrix m = elements_[id] - IntMatrix::identity(n_);
  return abs_length_[id] = m.rank();
}

std::vector<int> WeylGroup::support(std::size_t id) const {
  // Peel simple reflections off the left: if u(alpha_i) < 0 then i is in the
  // support and l(s_i u) < l(u).  Every simple used this way is recorded.
  std::vector<bool> seen(n_, false);
  std::size_t u = id;
  while (u != identity_id()) {
    bool progressed = false;
    for (int i = 0; i < n_; ++i) {
      DimVector e(n_, 0);
      e[i] = 1;
      DimVector image = elements_[u].apply(e);
      if (all_nonpositive(image) && !is_zero(image)) {
        // u sends alpha_i to a negative root, so s_i shortens u on the left...
        // but support peels from the side of the expression; either side gives
        // the same vertex set, we use u -> u s_i (right descent).
        seen[i] = true;
        u = multiply(u, simples_[i]);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw InternalError("support computation failed to descend");
  }
  std::vector<int> result;
  for (int i = 0; i < n_; ++i)
    if (seen[i]) result.push_back(i);
  return result;
}

std::vector<std::size_t> WeylGroup::t_reduced_against(
    std::size_t id, const std::vector<std::size_t>& order) const {
  std::vector<std::size_t> expr;
  std::size_t u = id;
  while (u != identity_id()) {
    int len = abs_length(u);
    bool progressed = false;
    for (std::size_t t : order) {
      std::size_t next = multiply(t, u);
      if (abs_length(next) == len - 1) {
        expr.push_back(t);
        u = next;
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw InternalError("no reflection shortens element in T-reduction");
  }
  return expr;
}

std::vector<std::size_t> WeylGroup::t_reduced_expression(std::size_t id) const {
  return t_reduced_against(id, reflections_);
}

std::vector<std::size_t> WeylGroup::t_reduced_expression(std::size_t id,
                                                         std::uint64_t seed) const {
  std::vector<std::size_t> order = reflections_;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return t_reduced_against(id, order);
}

std::vector<NCTuple> enumerate_nc(const WeylGroup& W, int w) {
  if (w < 1) throw InvalidInput("NC_w requires w >= 1");

  // Recursively split the remainder r (initially c) as r = u * (u^{-1} r)
  // over all u below r in absolute order: l(u) + l(u^{-1} r) = l(r).
  std::vector<NCTuple> out;
  NCTuple current;
  current.parts.assign(static_cast<std::size_t>(w) + 1, W.identity_id());

  auto rec = [&](auto&& self, int slot, std::size_t remainder) -> void {
    if (slot == w) {
      current.parts[slot] = remainder;
      out.push_back(current);
      return;
    }
    int rlen = W.abs_length(remainder);
    for (std::size_t u = 0; u < W.order(); ++u) {
      std::size_t rest = W.multiply(W.inverse(u), remainder);
      if (W.abs_length(u) + W.abs_length(rest) != rlen) continue;
      current.parts[slot] = u;
      self(self, slot + 1, rest);
    }
  };
  rec(rec, 0, W.coxeter_element());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_positive(const WeylGroup& W, const NCTuple& t) {
  std::size_t tail = W.identity_id();
  for (std::size_t i = 1; i < t.parts.size(); ++i) tail = W.multiply(tail, t.parts[i]);
  return static_cast<int>(W.support(tail).size()) == W.rank();
}

std::vector<NCTuple> filter_positive(const WeylGroup& W,
                                     const std::vector<NCTuple>& tuples) {
  std::vector<NCTuple> out;
  for (const NCTuple& t : tuples)
    if (is_positive(W, t)) out.push_back(t);
  return out;
}

}  // namespace smindy
