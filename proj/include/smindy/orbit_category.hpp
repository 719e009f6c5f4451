// The negative cluster category C_{-w} = D^b(kQ) / (Sigma^w S) presented by a
// fundamental domain: indecomposable modules in degrees 0..w-1 plus the
// non-injectives in degree w.  Orbit Hom spaces are finite sums over powers
// of the orbit functor F = Sigma^{w+1} tau.
#pragma once

#include <utility>
#include <vector>

#include "smindy/hom_engine.hpp"

namespace smindy {

struct OrbitObject {
  DerivedObject rep;  // the canonical representative, inside the domain
  int w = 0;
  auto operator<=>(const OrbitObject&) const = default;
};

class OrbitCategory {
 public:
  OrbitCategory(const HomEngine& engine, int w);

  int w() const { return w_; }
  const HomEngine& engine() const { return engine_; }

  // Sorted (root lex, then degree) list of canonical representatives; one per
  // isomorphism class of indecomposables of C_{-w}.
  const std::vector<DerivedObject>& domain() const { return domain_; }

  bool in_domain(const DerivedObject& x) const;                // explicit description
  bool in_domain_by_definition(const DerivedObject& x) const;  // X cap Sigma^w S Y route

  // The unique F-power mapping x into the domain; returns (object, k) with
  // F^k x = object.rep.  Uniqueness is asserted on every call.
  std::pair<OrbitObject, int> canonicalize(const DerivedObject& x) const;

  // dim Hom_C(x, y) = sum_k dim Hom_D(x, F^k y); representative-independent.
  Int dim_hom(const DerivedObject& x, const DerivedObject& y) const;
  Int dim_hom(const OrbitObject& x, const OrbitObject& y) const;

  // Checks Hom_C(x, Sigma^{-i} y) = Hom_D(x, Sigma^{-i} y) (+) D Hom_D(y, Sigma^{i-w} x)
  // for x, y in the domain and 0 <= i <= w.
  bool lemma_check(const DerivedObject& x, const DerivedObject& y, int i) const;

 private:
  const HomEngine& engine_;
  int w_;
  std::vector<DerivedObject> domain_;
};

}  // namespace smindy
