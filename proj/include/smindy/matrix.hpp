// Exact integer vectors/matrices used for dimension vectors, Euler forms and
// Weyl-group elements.  Everything is int64 with fraction-free (Bareiss)
// elimination; magnitudes at the supported ranks stay far below overflow.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smindy {

using Int = std::int64_t;
using DimVector = std::vector<Int>;

// --- error taxonomy -------------------------------------------------------

// Malformed textual/JSON input; carries a byte offset where known.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Structurally valid input outside the supported domain (cycle, non-Dynkin,
// non-root vector, degree out of range, ...).
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Search-space guard tripped.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, never a user error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// --- small helpers ---------------------------------------------------------

bool all_nonnegative(const DimVector& v);
bool all_nonpositive(const DimVector& v);
bool is_zero(const DimVector& v);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
DimVector negate(const DimVector& a);
Int dot(const DimVector& a, const DimVector& b);

std::string format_dim_vector(const DimVector& v);   // "(1,0,2)"
DimVector parse_dim_vector(const std::string& text); // inverse of the above

struct VecHash {
  std::size_t operator()(const DimVector& v) const noexcept;
};

// --- dense integer matrix ---------------------------------------------------

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  Int at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

  // Column-vector convention: returns M v.
  DimVector apply(const DimVector& v) const;

  IntMatrix transposed() const;

  Int determinant() const;            // Bareiss, exact
  int rank() const;                   // over Q, full-pivot Bareiss
  IntMatrix inverse_unimodular() const;  // requires det = ±1

  const std::vector<Int>& data() const { return data_; }
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

struct MatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

// Solves sum_i c_i * cols[i] = rhs exactly over the integers.  The columns
// must be linearly independent; returns nullopt when the system has no
// integral solution.  Cramer on a maximal invertible square subsystem,
// verified against every remaining equation.
std::optional<DimVector> solve_integral_combination(const std::vector<DimVector>& cols,
                                                    const DimVector& rhs);

}  // namespace smindy
