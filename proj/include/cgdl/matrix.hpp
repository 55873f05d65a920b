#pragma once

#include "cgdl/lattice.hpp"

#include <cstdint>
#include <vector>

namespace cgdl {

/// A rows x cols matrix over a finite action lattice.
///
/// Storage is row-major with rows padded to simd::kRowAlign bytes; padding is
/// always zero. The public matrix algebra works on square matrices; the
/// block decomposition behind `mat_star` uses rectangular blocks internally.
class LatticeMatrix {
public:
  LatticeMatrix(LatticePtr lattice, std::size_t rows, std::size_t cols);
  /// Square zero matrix.
  LatticeMatrix(LatticePtr lattice, std::size_t n) : LatticeMatrix(std::move(lattice), n, n) {}

  static LatticeMatrix identity(LatticePtr lattice, std::size_t n);
  static LatticeMatrix from_rows(LatticePtr lattice, const std::vector<std::vector<Value>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dimension() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t stride() const { return stride_; }
  const LatticePtr& lattice() const { return lattice_; }

  Value operator()(std::size_t i, std::size_t j) const { return Value{data_[i * stride_ + j]}; }
  void set(std::size_t i, std::size_t j, Value v);

  const std::uint8_t* data() const { return data_.data(); }
  std::uint8_t* data() { return data_.data(); }

  std::vector<std::vector<Value>> to_rows() const;

  /// Copies the block starting at (row, col).
  LatticeMatrix block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const;
  void paste(std::size_t row, std::size_t col, const LatticeMatrix& block);

  friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b);

private:
  LatticePtr lattice_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint8_t> data_;
};

enum class MatOp { add, mul };

/// add: entrywise join. mul: row-by-column with seq as product and join as sum.
/// Both operands must be square, of equal dimension, over the same lattice.
LatticeMatrix mat_op(MatOp op, const LatticeMatrix& m, const LatticeMatrix& n);
LatticeMatrix mat_add(const LatticeMatrix& m, const LatticeMatrix& n);
LatticeMatrix mat_mul(const LatticeMatrix& m, const LatticeMatrix& n);

/// Kleene star by block decomposition, splitting at ceil(n/2):
///
///   [A B]*   [A* + A*B F C A*   A*B F]
///   [C D]  = [F C A*            F    ]     F = (D + C A* B)*
///
/// A 1x1 matrix delegates to the lattice star.
LatticeMatrix mat_star(const LatticeMatrix& m);

/// Rectangular product, cols(m) == rows(n). Dispatches to the SIMD kernels
/// for chain lattices and falls back to table lookups otherwise.
LatticeMatrix mat_product(const LatticeMatrix& m, const LatticeMatrix& n);

} // namespace cgdl
