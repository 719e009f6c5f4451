// Weyl group elements as exact integer matrices acting on the root lattice,
// absolute (reflection) length, and enumeration of the poset NC_w of
// w-noncrossing partitions together with its positive part.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "smindy/hom_engine.hpp"
#include "smindy/matrix.hpp"
#include "smindy/quiver.hpp"

namespace smindy {

class WeylGroup {
 public:
  explicit WeylGroup(const Quiver& q);

  const Quiver& quiver() const { return quiver_; }
  int rank() const { return n_; }
  std::size_t order() const { return elements_.size(); }

  const std::vector<IntMatrix>& elements() const { return elements_; }
  const IntMatrix& element(std::size_t id) const { return elements_[id]; }
  std::size_t id_of(const IntMatrix& m) const;
  std::size_t identity_id() const { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const;  // id of a*b
  std::size_t inverse(std::size_t a) const;

  // Simple reflections s_1..s_n and the full set of reflections, the latter
  // sorted by their positive root (lex).
  std::size_t simple_reflection(int vertex) const { return simples_[vertex]; }
  const std::vector<std::size_t>& reflections() const { return reflections_; }
  const DimVector& reflection_root(std::size_t id) const;  // id must be a reflection

  std::size_t reflection_of_root(const DimVector& alpha) const;

  // Coxeter element: product of the simple reflections along the exceptional
  // vertex order of the quiver (sources first).
  std::size_t coxeter_element() const { return coxeter_; }

  // Absolute length l_T(u) = rank(u - 1).
  int abs_length(std::size_t id) const;

  // Support of u: the set of vertices whose simple reflections occur in some
  // (equivalently, any) reduced expression of u in the simple generators.
  std::vector<int> support(std::size_t id) const;

  // A T-reduced expression for u: reflections t_1,...,t_k (k = abs_length(u))
  // with u = t_1 ... t_k, chosen greedily in reflection order.  With a seed,
  // the reflection order is shuffled first (used for randomized cross-checks).
  std::vector<std::size_t> t_reduced_expression(std::size_t id) const;
  std::vector<std::size_t> t_reduced_expression(std::size_t id, std::uint64_t seed) const;

 private:
  Quiver quiver_;
  int n_;
  std::vector<IntMatrix> elements_;
  std::vector<std::size_t> inverse_;
  std::unordered_map<IntMatrix, std::size_t, MatrixHash> index_;
  std::vector<std::size_t> simples_;
  std::vector<std::size_t> reflections_;
  std::unordered_map<std::size_t, DimVector> reflection_root_;
  std::size_t coxeter_ = 0;
  mutable std::vector<int> abs_length_;  // -1 = not yet computed

  std::vector<std::size_t> t_reduced_against(std::size_t id,
                                             const std::vector<std::size_t>& order) const;
};

// A w-noncrossing partition: a (w+1)-tuple (u_1,...,u_{w+1}) with
// u_1 ... u_{w+1} = c and sum of absolute lengths equal to the rank.
struct NCTuple {
  std::vector<std::size_t> parts;  // element ids, length w+1
  auto operator<=>(const NCTuple&) const = default;
};

std::vector<NCTuple> enumerate_nc(const WeylGroup& W, int w);

// Positive tuples: support(u_2 ... u_{w+1}) is all of Q_0.
bool is_positive(const WeylGroup& W, const NCTuple& t);
std::vector<NCTuple> filter_positive(const WeylGroup& W, const std::vector<NCTuple>& tuples);

}  // namespace smindy
