// Exact Hom/Ext dimension calculus for the bounded derived category of a
// Dynkin quiver.  Indecomposables are (positive root, degree) pairs; module
// Hom dimensions come from the Euler form plus the Auslander-Reiten
// translation recursion, memoised over root-index pairs.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "smindy/quiver.hpp"

namespace smindy {

// Stalk-complex indecomposable Sigma^degree M(root).
struct DerivedObject {
  DimVector root;
  int degree = 0;
  auto operator<=>(const DerivedObject&) const = default;  // root lex, then degree
};

std::string format_object(const DerivedObject& x);        // "(1,0)@-1"
DerivedObject parse_object(const std::string& text);

class HomEngine {
 public:
  // Requires a Dynkin quiver (disjoint ADE unions allowed); rank 0 permitted.
  explicit HomEngine(Quiver q);

  const Quiver& quiver() const { return q_; }
  int rank() const { return q_.n; }
  int coxeter_number() const { return h_; }

  const std::vector<DimVector>& roots() const { return roots_; }
  int root_index(const DimVector& d) const;  // throws InvalidInput on non-root
  bool is_root(const DimVector& d) const;

  bool is_projective(int root_idx) const { return proj_vertex_[root_idx] >= 0; }
  bool is_injective(int root_idx) const { return inj_vertex_[root_idx] >= 0; }
  const DimVector& projective(int vertex) const { return proj_[vertex]; }
  const DimVector& injective(int vertex) const { return inj_[vertex]; }

  const IntMatrix& euler() const { return euler_; }
  const IntMatrix& cartan_symmetric() const { return sym_; }
  const IntMatrix& coxeter() const { return phi_; }

  Int euler_form(const DimVector& d, const DimVector& e) const;

  // dim Hom(M, N) between indecomposable modules given by positive roots.
  Int dim_hom_mod(const DimVector& m, const DimVector& n) const;
  // dim Ext^1(M, N); Auslander-Reiten duality Ext^1(M,N) = D Hom(N, tau M).
  Int dim_ext_mod(const DimVector& m, const DimVector& n) const;

  // dim Hom(x, y) in the derived category; nonzero only for degree gap 0 or 1.
  Int dim_hom_derived(const DerivedObject& x, const DerivedObject& y) const;

  // Derived AR translation and its inverse; Serre functor S = Sigma tau.
  DerivedObject tau(const DerivedObject& x) const;
  DerivedObject tau_inverse(const DerivedObject& x) const;
  DerivedObject serre(const DerivedObject& x) const;

  // k-th power (k may be negative) of the orbit functor F = Sigma^{w+1} tau.
  DerivedObject f_power(const DerivedObject& x, int w, int k) const;

  // Deepest chain the memoised recursion ever walked; bounded by 10*n*h.
  int max_recursion_depth() const { return max_depth_; }

 private:
  DerivedObject validated(const DerivedObject& x) const;

  Quiver q_;
  IntMatrix euler_, sym_, phi_, phi_inv_;
  int h_ = 1;
  std::vector<DimVector> roots_;
  std::unordered_map<DimVector, int, VecHash> root_idx_;
  std::vector<DimVector> proj_, inj_;       // by vertex
  std::vector<int> proj_vertex_, inj_vertex_;  // by root index, -1 if not
  std::vector<int> tau_idx_, tau_inv_idx_;     // by root index, -1 at boundary
  std::vector<Int> hom_;                       // n_roots x n_roots, precomputed
  int max_depth_ = 0;
};

// Checks that the simples, taken in `order`, form a complete exceptional
// sequence (no backward homs in any shift).  Throws InternalError otherwise.
void verify_exceptional_order(const HomEngine& engine, const std::vector<int>& order);

}  // namespace smindy
