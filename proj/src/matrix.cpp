#include "cgdl/matrix.hpp"

#include "cgdl/error.hpp"
#include "cgdl/simd.hpp"

#include <algorithm>
#include <optional>

namespace cgdl {

namespace {

std::size_t padded(std::size_t cols) {
  const std::size_t align = simd::kRowAlign;
  return std::max<std::size_t>(align, (cols + align - 1) / align * align);
}

std::optional<simd::Product> chain_product(const ActionLattice& lattice) {
  switch (lattice.kind()) {
  case LatticeKind::boolean:
  case LatticeKind::godel_chain:
    return simd::Product::min;
  case LatticeKind::lukasiewicz_chain:
    if (lattice.top().index() <= simd::kMaxLukasiewiczTop)
      return simd::Product::lukasiewicz;
    return std::nullopt;
  case LatticeKind::table:
    return std::nullopt;
  }
  return std::nullopt;
}

void require_same_lattice(const LatticeMatrix& m, const LatticeMatrix& n) {
  if (!same_lattice(*m.lattice(), *n.lattice()))
    throw DimensionError("matrices are over different lattices");
}

LatticeMatrix entrywise_join(const LatticeMatrix& m, const LatticeMatrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw DimensionError("matrix sum of " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " and " + std::to_string(n.rows()) + "x" +
                         std::to_string(n.cols()));
  require_same_lattice(m, n);
  LatticeMatrix out(m.lattice(), m.rows(), m.cols());
  const ActionLattice& l = *m.lattice();
  if (l.is_chain()) {
    simd::active_kernels().join(m.data(), n.data(), out.data(), m.rows() * m.stride());
    return out;
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.set(i, j, l.join(m(i, j), n(i, j)));
  return out;
}

} // namespace

LatticeMatrix::LatticeMatrix(LatticePtr lattice, std::size_t rows, std::size_t cols)
    : lattice_(std::move(lattice)), rows_(rows), cols_(cols), stride_(padded(cols)),
      data_(rows * stride_, 0) {}

LatticeMatrix LatticeMatrix::identity(LatticePtr lattice, std::size_t n) {
  LatticeMatrix m(lattice, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, lattice->one());
  return m;
}

LatticeMatrix LatticeMatrix::from_rows(LatticePtr lattice,
                                       const std::vector<std::vector<Value>>& rows) {
  LatticeMatrix m(lattice, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw DimensionError("matrix row " + std::to_string(i) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
      m.set(i, j, rows[i][j]);
  }
  return m;
}

void LatticeMatrix::set(std::size_t i, std::size_t j, Value v) {
  if (!lattice_->contains(v))
    throw LatticeError("matrix entry outside " + lattice_->name());
  data_[i * stride_ + j] = v.index();
}

std::vector<std::vector<Value>> LatticeMatrix::to_rows() const {
  std::vector<std::vector<Value>> out(rows_, std::vector<Value>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i][j] = (*this)(i, j);
  return out;
}

LatticeMatrix LatticeMatrix::block(std::size_t row, std::size_t col, std::size_t rows,
                                   std::size_t cols) const {
  LatticeMatrix out(lattice_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    std::copy_n(data_.data() + (row + i) * stride_ + col, cols, out.data_.data() + i * out.stride_);
  return out;
}

void LatticeMatrix::paste(std::size_t row, std::size_t col, const LatticeMatrix& b) {
  for (std::size_t i = 0; i < b.rows_; ++i)
    std::copy_n(b.data_.data() + i * b.stride_, b.cols_, data_.data() + (row + i) * stride_ + col);
}

bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
         same_lattice(*a.lattice_, *b.lattice_);
}

LatticeMatrix mat_product(const LatticeMatrix& m, const LatticeMatrix& n) {
  if (m.cols() != n.rows())
    throw DimensionError("matrix product of " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " and " + std::to_string(n.rows()) + "x" +
                         std::to_string(n.cols()));
  require_same_lattice(m, n);
  const ActionLattice& l = *m.lattice();
  LatticeMatrix out(m.lattice(), m.rows(), n.cols());
  if (const auto product = chain_product(l)) {
    simd::active_kernels().multiply(m.data(), m.stride(), n.data(), out.data(), out.stride(),
                                    m.rows(), m.cols(), *product, l.top().index());
    return out;
  }
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j) {
      Value acc = l.zero();
      for (std::size_t k = 0; k < m.cols(); ++k)
        acc = l.join(acc, l.seq(m(i, k), n(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

LatticeMatrix mat_op(MatOp op, const LatticeMatrix& m, const LatticeMatrix& n) {
  if (!m.is_square() || !n.is_square() || m.dimension() != n.dimension())
    throw DimensionError("matrix operands must be square and of equal dimension");
  return op == MatOp::add ? entrywise_join(m, n) : mat_product(m, n);
}

LatticeMatrix mat_add(const LatticeMatrix& m, const LatticeMatrix& n) {
  return mat_op(MatOp::add, m, n);
}

LatticeMatrix mat_mul(const LatticeMatrix& m, const LatticeMatrix& n) {
  return mat_op(MatOp::mul, m, n);
}

LatticeMatrix mat_star(const LatticeMatrix& m) {
  if (!m.is_square())
    throw DimensionError("star of a non-square matrix");
  const std::size_t n = m.dimension();
  if (n == 0)
    return m;
  if (n == 1) {
    LatticeMatrix out(m.lattice(), 1);
    out.set(0, 0, m.lattice()->star(m(0, 0)));
    return out;
  }
  const std::size_t k = (n + 1) / 2;
  const LatticeMatrix a = m.block(0, 0, k, k);
  const LatticeMatrix b = m.block(0, k, k, n - k);
  const LatticeMatrix c = m.block(k, 0, n - k, k);
  const LatticeMatrix d = m.block(k, k, n - k, n - k);

  const LatticeMatrix a_star = mat_star(a);
  const LatticeMatrix a_star_b = mat_product(a_star, b);
  const LatticeMatrix c_a_star = mat_product(c, a_star);
  const LatticeMatrix f = mat_star(entrywise_join(d, mat_product(c, a_star_b)));
  const LatticeMatrix a_star_b_f = mat_product(a_star_b, f);

  LatticeMatrix out(m.lattice(), n);
  out.paste(0, 0, entrywise_join(a_star, mat_product(a_star_b_f, c_a_star)));
  out.paste(0, k, a_star_b_f);
  out.paste(k, 0, mat_product(f, c_a_star));
  out.paste(k, k, f);
  return out;
}

} // namespace cgdl
