// The Kronecker quiver 1 => 2: indecomposables fall into preprojectives
// pp(k) of dimension (k, k+1), preinjectives pi(k) of dimension (k+1, k) and
// homogeneous regular tubes reg(t, l) of dimension (l, l).  Hom spaces follow
// the same tau-recursion as the Dynkin engine, with the tube structure as
// extra base cases.  Used for the C_{-1} example in the orbit category of
// F = Sigma^2 tau, where the regular simples over two disjoint label sets
// form a 1-orthogonal system.
#pragma once

#include <compare>
#include <string>

#include "smindy/matrix.hpp"
#include "smindy/report.hpp"

namespace smindy {

enum class KronFamily { Preprojective, Regular, Preinjective };

struct KronModule {
  KronFamily family = KronFamily::Preprojective;
  Int index = 0;  // pp(k), pi(k): k >= 0; regular: tube length >= 1
  int tube = -1;  // regular only: opaque tube label
  auto operator<=>(const KronModule&) const = default;
};

struct KronObject {
  KronModule m;
  int degree = 0;
  auto operator<=>(const KronObject&) const = default;
};

DimVector kron_dim(const KronModule& m);
std::string format_kron(const KronObject& x);

Int kron_hom_mod(const KronModule& x, const KronModule& y);
Int kron_ext_mod(const KronModule& x, const KronModule& y);
Int kron_hom_derived(const KronObject& x, const KronObject& y);

KronObject kron_tau(const KronObject& x);          // derived tau; projectives wrap
KronObject kron_tau_inverse(const KronObject& x);  // injectives wrap forward
KronObject kron_f(const KronObject& x, int k);     // F^k with F = Sigma^2 tau

// Hom in the orbit category of F: sum over k of Hom(x, F^k y); the summation
// window is derived from the degree gap and checked to be wide enough.
Int kron_hom_orbit(const KronObject& x, const KronObject& y);

// The worked example: Lambda and Omega are disjoint nonempty tube label sets;
// X = {reg(t,1)@0 : t in Lambda} u {reg(t,1)@1 : t in Omega}.  Checks
// (a) 1-orthogonality of X in the orbit category,
// (b) that an overlapping choice of labels is detected as a violation,
// (c) that every candidate object in a window (transjectives up to the
//     window, tube objects over Lambda u Omega) receives and emits a nonzero
//     map from/to X, and that doubling the window changes nothing.
VerificationReport verify_kronecker_example(int n_lambda, int n_omega, Int window);

}  // namespace smindy
