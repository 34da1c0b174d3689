#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakalab {

// Exact linear algebra over the prime field F_p.
//
// Convention used throughout the library: vectors are rows, and a linear
// map V -> W is a dim(V) x dim(W) matrix A acting by x |-> x * A.
// Compositions therefore read left to right, like paths in a quiver.

bool is_prime(unsigned n);

// Inverse of a mod p (a not divisible by p).
unsigned fp_inv(unsigned a, unsigned p);

class Mat {
public:
  Mat() : rows_(0), cols_(0), p_(2) {}
  Mat(int rows, int cols, unsigned p)
      : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  }

  static Mat identity(int n, unsigned p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  unsigned prime() const { return p_; }

  unsigned at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, long long v) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    a_[static_cast<size_t>(i) * cols_ + j] = static_cast<unsigned>(r);
  }

  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(unsigned c) const;
  Mat transposed() const;

  // k-th power of a square matrix, k >= 0.
  Mat pow(long long k) const;

  Mat row(int i) const;
  void set_row(int i, const Mat& r);

  // Flatten to a 1 x (rows*cols) row vector.
  Mat flattened() const;

  std::string to_string() const;

private:
  int rows_, cols_;
  unsigned p_;
  std::vector<unsigned> a_;
};

Mat vstack(const std::vector<Mat>& parts, int cols, unsigned p);
Mat hstack(const std::vector<Mat>& parts, int rows, unsigned p);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref_in_place(Mat& m);

int rank_of(Mat m);

// Basis of the row space, in reduced row echelon form (zero rows dropped).
Mat row_basis(Mat m);

// Left kernel {x : x A = 0}, as RREF basis rows.
Mat left_kernel(const Mat& a);

// True if v (1 x n) lies in the row space of the RREF basis u.
bool in_row_space(const Mat& v, const Mat& u);

// True if every row of v lies in the row space of u (u in RREF).
bool space_contains(const Mat& u, const Mat& v);

Mat space_sum(const Mat& u, const Mat& v);
Mat space_intersect(const Mat& u, const Mat& v);

// Image {x A : x in rowspace(u)} as RREF basis.
Mat space_image(const Mat& u, const Mat& a);

// Preimage {x : x A in rowspace(w)} as RREF basis; w in RREF, A is d x c.
Mat space_preimage(const Mat& a, const Mat& w);

// Solve x * a = b for a single row vector b; a need not be square.
// Returns true and fills x (1 x a.rows()) when solvable.
bool solve_left(const Mat& a, const Mat& b, Mat& x);

}  // namespace nakalab
