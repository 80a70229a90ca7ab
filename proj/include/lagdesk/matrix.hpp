#pragma once
#include <initializer_list>
#include <vector>

#include "lagdesk/rational.hpp"

namespace lagdesk {

// Dense matrix over Q. Sizes here are tiny (<= ~24 per side); everything is exact.
class Mat {
public:
  Mat() : r_(0), c_(0) {}
  Mat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(size_t n);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Rat& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rat& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& s) const;
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  bool is_zero() const;
  bool is_symmetric() const;

  Mat col(size_t j) const;                 // single column as a rows x 1 matrix
  static Mat hcat(const Mat& l, const Mat& r);
  // Block diagonal [this 0; 0 o].
  Mat block_diag(const Mat& o) const;

  size_t rank() const;
  Rat det() const;          // square only
  Mat inverse() const;      // square invertible; RankDeficient otherwise
  // Solves A x = b for square A (RankDeficient if singular); b may have many columns.
  Mat solve(const Mat& b) const;

private:
  size_t r_, c_;
  std::vector<Rat> a_;
};

}  // namespace lagdesk
