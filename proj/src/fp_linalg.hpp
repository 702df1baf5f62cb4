#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Dense and sparse linear algebra over a prime field F_p.
namespace tidal::fp {

using Vec = std::vector<std::uint32_t>;

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

/// Row-echelon basis of a subspace; rows are normalized (pivot 1) and every
/// row's pivot is its first nonzero entry.
class Echelon {
 public:
  Echelon(std::uint32_t p, std::size_t dim);

  /// Reduces v modulo the span. Returns true if v lies in the span.
  bool reduce(Vec& v) const;
  /// Adds v to the span; returns true if the span grew.
  bool insert(Vec v);
  bool contains(Vec v) const { return reduce(v); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::int32_t> row_of_pivot_;
};

/// Linear operator stored by columns: column c is a list of (row, value).
struct SparseOp {
  std::size_t dim = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols;

  Vec apply(const Vec& v, std::uint32_t p) const;
  Vec column(std::size_t c) const;
};

/// Images N^k V for k = 1, 2, ... of a nilpotent operator, stopping at zero
/// or after max_steps. chain[k-1] spans N^k V.
std::vector<Echelon> image_chain(const SparseOp& op, std::uint32_t p, std::size_t max_steps);

/// Block sizes (weakly decreasing) from rank(N^0), rank(N^1), ... ending in 0.
std::vector<unsigned> jordan_from_ranks(const std::vector<std::size_t>& ranks);

/// Dense matrix as a list of rows.
using Matrix = std::vector<Vec>;

std::size_t rank(Matrix m, std::uint32_t p);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b, std::uint32_t p);
Matrix multiply(const Matrix& a, const Matrix& b, std::uint32_t p);

}  // namespace tidal::fp
