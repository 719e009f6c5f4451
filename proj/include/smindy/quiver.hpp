// Quiver type, the two input grammars, Dynkin classification, and the root
// lattice data (Euler form, symmetric form, Coxeter matrix, positive roots).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "smindy/matrix.hpp"

namespace smindy {

struct Quiver {
  int n = 0;                                   // vertex count
  std::vector<std::pair<int, int>> arrows;     // 0-based (source, target)
  std::vector<std::string> labels;             // defaults to "1".."n"
  bool dynkin = false;                         // every component simply-laced ADE
  std::string type_name;                       // "A2", "D4", "A1+A1+A1", "Kronecker", ...

  // Number of arrows i -> j.
  Int arrow_count(int i, int j) const;
};

// Builds a validated quiver from raw data (0-based arrows).  Throws
// InvalidInput on out-of-range vertices or an oriented cycle.  n = 0 is
// permitted here (it arises as the perpendicular category of a complete
// collection); the textual parser rejects it.
Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows,
                   std::vector<std::string> labels = {});

// Parses either grammar, auto-detected by the first non-space character:
//   text: vertices <n>; arrows <s>-><t>[, <s>-><t>]*      (1-based vertices)
//   json: {"vertices": n, "arrows": [[s,t], ...], "labels"?: [...]}
Quiver parse_quiver(const std::string& input);

// E = I - A with A[i][j] = #arrows i->j; <d,e> = d^T E e.
IntMatrix euler_matrix(const Quiver& q);

// Cartan-like symmetric form E + E^T.
IntMatrix symmetric_form(const Quiver& q);

// Coxeter matrix Phi = -E^{-1} E^T (column convention: [tau M] = Phi [M]).
IntMatrix coxeter_matrix(const Quiver& q);

// Positive roots by reflection closure of the simples; sorted lexicographically.
// Requires q.dynkin.
std::vector<DimVector> positive_roots(const Quiver& q);

// Topological order of the vertices (sources first, ties by ascending index);
// the simples in this order form a complete exceptional sequence.  Requires
// acyclicity, which construction already guarantees.
std::vector<int> exceptional_vertex_order(const Quiver& q);

}  // namespace smindy
