#include "fp_linalg.hpp"

#include <stdexcept>

namespace tidal::fp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

Echelon::Echelon(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim), row_of_pivot_(dim, -1) {}

bool Echelon::reduce(Vec& v) const {
  bool zero = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!v[i]) continue;
    const std::int32_t r = row_of_pivot_[i];
    if (r < 0) {
      zero = false;
      continue;
    }
    const std::uint64_t c = p_ - v[i];
    const Vec& row = rows_[r];
    for (std::size_t j = i; j < dim_; ++j)
      if (row[j]) v[j] = static_cast<std::uint32_t>((v[j] + c * row[j]) % p_);
  }
  return zero;
}

bool Echelon::insert(Vec v) {
  if (reduce(v)) return false;
  std::size_t piv = 0;
  while (!v[piv]) ++piv;
  const std::uint64_t inv = inverse(v[piv], p_);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = static_cast<std::uint32_t>(v[j] * inv % p_);
  row_of_pivot_[piv] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

Vec SparseOp::apply(const Vec& v, std::uint32_t p) const {
  Vec out(dim, 0);
  for (std::size_t c = 0; c < dim; ++c) {
    if (!v[c]) continue;
    for (auto [r, x] : cols[c]) out[r] = static_cast<std::uint32_t>((out[r] + std::uint64_t(x) * v[c]) % p);
  }
  return out;
}

Vec SparseOp::column(std::size_t c) const {
  Vec out(dim, 0);
  for (auto [r, x] : cols[c]) out[r] = x;
  return out;
}

std::vector<Echelon> image_chain(const SparseOp& op, std::uint32_t p, std::size_t max_steps) {
  std::vector<Echelon> chain;
  if (max_steps == 0) return chain;
  Echelon first(p, op.dim);
  for (std::size_t c = 0; c < op.dim; ++c) first.insert(op.column(c));
  chain.push_back(std::move(first));
  while (chain.back().rank() > 0 && chain.size() < max_steps) {
    Echelon next(p, op.dim);
    for (const Vec& row : chain.back().rows()) next.insert(op.apply(row, p));
    if (next.rank() >= chain.back().rank()) throw std::logic_error("operator is not nilpotent");
    chain.push_back(std::move(next));
  }
  return chain;
}

std::vector<unsigned> jordan_from_ranks(const std::vector<std::size_t>& ranks) {
  std::vector<unsigned> blocks;
  for (std::size_t i = ranks.size() - 1; i >= 1; --i) {
    // blocks of size >= i minus blocks of size >= i+1
    const std::size_t at_least = ranks[i - 1] - ranks[i];
    const std::size_t at_least_next = i + 1 < ranks.size() ? ranks[i] - ranks[i + 1] : 0;
    for (std::size_t c = 0; c < at_least - at_least_next; ++c) blocks.push_back(static_cast<unsigned>(i));
  }
  return blocks;
}

std::size_t rank(Matrix m, std::uint32_t p) {
  if (m.empty()) return 0;
  Echelon e(p, m.front().size());
  for (auto& row : m) e.insert(std::move(row));
  return e.rank();
}

std::optional<Vec> solve(const Matrix& a, const Vec& b, std::uint32_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  // Gauss-Jordan on the augmented matrix.
  Matrix m(rows, Vec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j] % p;
    m[i][cols] = b[i] % p;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && !m[sel][c]) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const std::uint64_t inv = inverse(m[r][c], p);
    for (auto& x : m[r]) x = static_cast<std::uint32_t>(x * inv % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      const std::uint64_t f = p - m[i][c];
      for (std::size_t j = c; j <= cols; ++j)
        if (m[r][j]) m[i][j] = static_cast<std::uint32_t>((m[i][j] + f * m[r][j]) % p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols]) return std::nullopt;
  Vec x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols];
  return x;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::uint32_t p) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b.front().size() : 0;
  Matrix out(n, Vec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (!a[i][t]) continue;
      for (std::size_t j = 0; j < m; ++j)
        out[i][j] = static_cast<std::uint32_t>((out[i][j] + std::uint64_t(a[i][t]) * b[t][j]) % p);
    }
  return out;
}

}  // namespace tidal::fp
