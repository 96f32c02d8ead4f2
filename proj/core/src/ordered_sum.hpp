#pragma once

// Deterministic reduction of matrix-valued terms f(first..last). Terms may be
// computed on several threads, but they are always added in ascending index
// order with compensated summation, so the result does not depend on the
// thread count.

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "expmde/matrix.hpp"

namespace expmde::detail {

/// Neumaier-compensated accumulator, applied to real and imaginary parts
/// independently.
class CompensatedSum {
 public:
  CompensatedSum(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), sum_(2 * rows * cols, 0.0), comp_(2 * rows * cols, 0.0) {}

  void add(const ComplexMatrix& m) {
    const auto d = m.data();
    for (std::size_t i = 0; i < d.size(); ++i) {
      add_one(2 * i, d[i].real());
      add_one(2 * i + 1, d[i].imag());
    }
  }

  void add(cplx z) {
    add_one(0, z.real());
    add_one(1, z.imag());
  }

  ComplexMatrix result() const {
    ComplexMatrix out(rows_, cols_);
    auto d = out.data();
    for (std::size_t i = 0; i < d.size(); ++i) {
      d[i] = cplx(sum_[2 * i] + comp_[2 * i], sum_[2 * i + 1] + comp_[2 * i + 1]);
    }
    return out;
  }

  cplx scalar() const { return {sum_[0] + comp_[0], sum_[1] + comp_[1]}; }

 private:
  void add_one(std::size_t i, double x) {
    const double s = sum_[i];
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      comp_[i] += (s - t) + x;
    } else {
      comp_[i] += (x - t) + s;
    }
    sum_[i] = t;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> sum_;
  std::vector<double> comp_;
};

template <class TermFn>
ComplexMatrix ordered_sum(long first, long last, unsigned threads, std::size_t rows,
                          std::size_t cols, TermFn&& term) {
  CompensatedSum acc(rows, cols);
  if (last < first) return acc.result();
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (long k = first; k <= last; ++k) acc.add(term(k));
    return acc.result();
  }

  const long batch = static_cast<long>(threads) * 2;
  std::vector<ComplexMatrix> slots(static_cast<std::size_t>(batch));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(batch));
  for (long base = first; base <= last; base += batch) {
    const long count = std::min(batch, last - base + 1);
    {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          for (long i = t; i < count; i += threads) {
            try {
              slots[static_cast<std::size_t>(i)] = term(base + i);
            } catch (...) {
              errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
          }
        });
      }
    }
    for (long i = 0; i < count; ++i) {
      if (errors[static_cast<std::size_t>(i)]) std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
      acc.add(slots[static_cast<std::size_t>(i)]);
    }
  }
  return acc.result();
}

}  // namespace expmde::detail
