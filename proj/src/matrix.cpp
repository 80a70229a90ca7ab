#include "lagdesk/matrix.hpp"

namespace lagdesk {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  a_.reserve(r_ * c_);
  for (const auto& row : rows) {
    require(row.size() == c_, ErrorCode::BadInput, "ragged matrix literal");
    for (const auto& v : row) a_.push_back(v);
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  require(c_ == o.r_, ErrorCode::SpaceMismatch, "matrix product shape");
  Mat p(r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < o.c_; ++j) p.at(i, j) += v * o.at(k, j);
    }
  return p;
}

Mat Mat::operator+(const Mat& o) const {
  require(r_ == o.r_ && c_ == o.c_, ErrorCode::SpaceMismatch, "matrix sum shape");
  Mat s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Mat Mat::operator-(const Mat& o) const {
  require(r_ == o.r_ && c_ == o.c_, ErrorCode::SpaceMismatch, "matrix difference shape");
  Mat s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

Mat Mat::scaled(const Rat& s) const {
  Mat m = *this;
  for (auto& v : m.a_) v *= s;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (r_ != c_) return false;
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = i + 1; j < c_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Mat Mat::col(size_t j) const {
  Mat v(r_, 1);
  for (size_t i = 0; i < r_; ++i) v.at(i, 0) = at(i, j);
  return v;
}

Mat Mat::hcat(const Mat& l, const Mat& r) {
  require(l.rows() == r.rows(), ErrorCode::SpaceMismatch, "hcat row mismatch");
  Mat m(l.rows(), l.cols() + r.cols());
  for (size_t i = 0; i < l.rows(); ++i) {
    for (size_t j = 0; j < l.cols(); ++j) m.at(i, j) = l.at(i, j);
    for (size_t j = 0; j < r.cols(); ++j) m.at(i, l.cols() + j) = r.at(i, j);
  }
  return m;
}

Mat Mat::block_diag(const Mat& o) const {
  Mat m(r_ + o.r_, c_ + o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m.at(i, j) = at(i, j);
  for (size_t i = 0; i < o.r_; ++i)
    for (size_t j = 0; j < o.c_; ++j) m.at(r_ + i, c_ + j) = o.at(i, j);
  return m;
}

size_t Mat::rank() const {
  Mat w = *this;
  size_t rank = 0;
  for (size_t col = 0; col < w.c_ && rank < w.r_; ++col) {
    size_t piv = rank;
    while (piv < w.r_ && w.at(piv, col) == 0) ++piv;
    if (piv == w.r_) continue;
    for (size_t j = 0; j < w.c_; ++j) std::swap(w.at(rank, j), w.at(piv, j));
    Rat lead = w.at(rank, col);
    for (size_t i = rank + 1; i < w.r_; ++i) {
      if (w.at(i, col) == 0) continue;
      Rat f = w.at(i, col) / lead;
      for (size_t j = col; j < w.c_; ++j) w.at(i, j) -= f * w.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

Rat Mat::det() const {
  require(r_ == c_, ErrorCode::BadInput, "det of non-square");
  Mat w = *this;
  Rat d(1);
  for (size_t col = 0; col < w.c_; ++col) {
    size_t piv = col;
    while (piv < w.r_ && w.at(piv, col) == 0) ++piv;
    if (piv == w.r_) return Rat(0);
    if (piv != col) {
      for (size_t j = 0; j < w.c_; ++j) std::swap(w.at(col, j), w.at(piv, j));
      d = -d;
    }
    Rat lead = w.at(col, col);
    d *= lead;
    for (size_t i = col + 1; i < w.r_; ++i) {
      if (w.at(i, col) == 0) continue;
      Rat f = w.at(i, col) / lead;
      for (size_t j = col; j < w.c_; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  return d;
}

Mat Mat::solve(const Mat& b) const {
  require(r_ == c_, ErrorCode::BadInput, "solve with non-square A");
  require(b.rows() == r_, ErrorCode::SpaceMismatch, "solve rhs shape");
  Mat w = Mat::hcat(*this, b);
  size_t n = r_, m = w.cols();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w.at(piv, col) == 0) ++piv;
    require(piv < n, ErrorCode::RankDeficient, "singular system");
    if (piv != col)
      for (size_t j = 0; j < m; ++j) std::swap(w.at(col, j), w.at(piv, j));
    Rat lead = w.at(col, col);
    for (size_t j = col; j < m; ++j) w.at(col, j) /= lead;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || w.at(i, col) == 0) continue;
      Rat f = w.at(i, col);
      for (size_t j = col; j < m; ++j) w.at(i, j) -= f * w.at(col, j);
    }
  }
  Mat x(n, b.cols());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < b.cols(); ++j) x.at(i, j) = w.at(i, n + j);
  return x;
}

Mat Mat::inverse() const { return solve(Mat::identity(r_)); }

}  // namespace lagdesk
