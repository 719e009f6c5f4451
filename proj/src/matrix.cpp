#include "smindy/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace smindy {

bool all_nonnegative(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

bool all_nonpositive(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x <= 0; });
}

bool is_zero(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

static void require_same_size(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) throw InternalError("dimension vector size mismatch");
}

DimVector add(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVector sub(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DimVector negate(const DimVector& a) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Int dot(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string format_dim_vector(const DimVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

DimVector parse_dim_vector(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' in dimension vector", i);
  ++i;
  DimVector v;
  skip_ws();
  if (i < text.size() && text[i] == ')') { ++i; }
  else {
    while (true) {
      skip_ws();
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) { neg = text[i] == '-'; ++i; }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected integer in dimension vector", i);
      Int x = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        x = x * 10 + (text[i] - '0');
        ++i;
      }
      v.push_back(neg ? -x : x);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ')') { ++i; break; }
      throw ParseError("expected ',' or ')' in dimension vector", i);
    }
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after dimension vector", i);
  return v;
}

std::size_t VecHash::operator()(const DimVector& v) const noexcept {
  std::size_t h = 1469598103934665603ull;  // FNV-1a
  for (Int x : v) {
    auto u = static_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
  IntMatrix r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Int aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw InternalError("matrix difference shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
  return r;
}

DimVector IntMatrix::apply(const DimVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InternalError("matrix apply shape mismatch");
  DimVector r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Int IntMatrix::determinant() const {
  if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  std::vector<Int> a(data_);
  auto e = [&](int i, int j) -> Int& { return a[std::size_t(i) * n + j]; };
  Int sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
    prev = e(k, k);
  }
  return sign * e(n - 1, n - 1);
}

// Bareiss elimination with full pivoting (exact divisions hold with row and
// column swaps).  Column swaps do not change the rank.
int IntMatrix::rank() const {
  int m = rows_, n = cols_;
  std::vector<Int> a(data_);
  auto e = [&](int i, int j) -> Int& { return a[std::size_t(i) * n + j]; };
  int r = 0;
  Int prev = 1;
  while (r < m && r < n) {
    int pi = -1, pj = -1;
    for (int i = r; i < m && pi < 0; ++i)
      for (int j = r; j < n; ++j)
        if (e(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    if (pi != r)
      for (int j = 0; j < n; ++j) std::swap(e(r, j), e(pi, j));
    if (pj != r)
      for (int i = 0; i < m; ++i) std::swap(e(i, r), e(i, pj));
    for (int i = r + 1; i < m; ++i) {
      for (int j = r + 1; j < n; ++j)
        e(i, j) = (e(i, j) * e(r, r) - e(i, r) * e(r, j)) / prev;
      e(i, r) = 0;
    }
    prev = e(r, r);
    ++r;
  }
  return r;
}

IntMatrix IntMatrix::inverse_unimodular() const {
  if (rows_ != cols_) throw InternalError("inverse of non-square matrix");
  int n = rows_;
  Int det = determinant();
  if (det != 1 && det != -1)
    throw InternalError("inverse_unimodular: determinant is " + std::to_string(det));
  IntMatrix inv(n, n);
  // adjugate via (n-1)x(n-1) minors; n stays tiny so this is cheap.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix mm(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          mm.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = ((i + j) % 2 == 0 ? 1 : -1) * mm.determinant();
      inv.at(j, i) = cof / det;  // det = ±1, division exact
    }
  return inv;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
  }
  os << ']';
  return os.str();
}

std::size_t MatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = VecHash{}(m.data());
  h ^= std::size_t(m.rows()) * 0x9e3779b97f4a7c15ull;
  return h;
}

std::optional<DimVector> solve_integral_combination(const std::vector<DimVector>& cols,
                                                    const DimVector& rhs) {
  int k = static_cast<int>(cols.size());
  int n = static_cast<int>(rhs.size());
  if (k == 0) return is_zero(rhs) ? std::optional<DimVector>(DimVector{}) : std::nullopt;
  for (const DimVector& c : cols)
    if (static_cast<int>(c.size()) != n) throw InternalError("solve: column size mismatch");

  IntMatrix A(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) A.at(i, j) = cols[j][i];
  if (A.rank() != k) throw InternalError("solve: columns are linearly dependent");

  // Pick k rows forming an invertible square block (greedy by rank growth).
  std::vector<int> rows;
  for (int i = 0; i < n && static_cast<int>(rows.size()) < k; ++i) {
    rows.push_back(i);
    IntMatrix sub(static_cast<int>(rows.size()), k);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int j = 0; j < k; ++j) sub.at(static_cast<int>(r), j) = A.at(rows[r], j);
    if (sub.rank() != static_cast<int>(rows.size())) rows.pop_back();
  }
  if (static_cast<int>(rows.size()) != k) throw InternalError("solve: no invertible block");

  IntMatrix B(k, k);
  for (int r = 0; r < k; ++r)
    for (int j = 0; j < k; ++j) B.at(r, j) = A.at(rows[r], j);
  Int det = B.determinant();

  DimVector c(k, 0);
  for (int j = 0; j < k; ++j) {
    IntMatrix Bj = B;
    for (int r = 0; r < k; ++r) Bj.at(r, j) = rhs[rows[r]];
    Int num = Bj.determinant();
    if (num % det != 0) return std::nullopt;  // rational but not integral
    c[j] = num / det;
  }

  // The square block determined c; verify the full (possibly overdetermined) system.
  for (int i = 0; i < n; ++i) {
    Int acc = 0;
    for (int j = 0; j < k; ++j) acc += A.at(i, j) * c[j];
    if (acc != rhs[i]) return std::nullopt;
  }
  return c;
}

}  // namespace smindy
