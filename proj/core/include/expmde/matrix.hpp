#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace expmde {

using cplx = std::complex<double>;

/// Dense complex matrix stored column-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of column-major `entries`; throws InvalidArgument on a
  /// size mismatch or a non-finite entry.
  static ComplexMatrix from_column_major(std::size_t rows, std::size_t cols,
                                         std::vector<cplx> entries);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i + j * rows_]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i + j * rows_];
  }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }
  std::span<cplx> col(std::size_t j) noexcept { return {data_.data() + j * rows_, rows_}; }
  std::span<const cplx> col(std::size_t j) const noexcept {
    return {data_.data() + j * rows_, rows_};
  }

  bool all_finite() const noexcept;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /// this += s·I
  void add_to_diagonal(cplx s) noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

}  // namespace expmde
