#include "nakalab/matrix.hpp"

#include <sstream>

namespace nakalab {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned fp_inv(unsigned a, unsigned p) {
  // Fermat: a^(p-2) mod p.
  a %= p;
  if (a == 0) throw std::domain_error("fp_inv(0)");
  unsigned long long r = 1, b = a;
  unsigned e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<unsigned>(r);
}

Mat Mat::identity(int n, unsigned p) {
  Mat m(n, n, p);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool Mat::is_zero() const {
  for (unsigned v : a_)
    if (v) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product shape");
  Mat r(rows_, o.cols_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      unsigned long long v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.a_[static_cast<size_t>(i) * o.cols_ + j] =
            static_cast<unsigned>((r.a_[static_cast<size_t>(i) * o.cols_ + j] + v * o.at(k, j)) % p_);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix sum shape");
  Mat r(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix difference shape");
  Mat r(rows_, cols_, p_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return r;
}

Mat Mat::scaled(unsigned c) const {
  Mat r(rows_, cols_, p_);
  c %= p_;
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<unsigned>(static_cast<unsigned long long>(a_[i]) * c % p_);
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_, p_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

Mat Mat::pow(long long k) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
  Mat r = identity(rows_, p_), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Mat Mat::row(int i) const {
  Mat r(1, cols_, p_);
  for (int j = 0; j < cols_; ++j) r.set(0, j, at(i, j));
  return r;
}

void Mat::set_row(int i, const Mat& r) {
  for (int j = 0; j < cols_; ++j) set(i, j, r.at(0, j));
}

Mat Mat::flattened() const {
  Mat r(1, rows_ * cols_, p_);
  r.a_ = a_;
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << at(i, j) << (j + 1 < cols_ ? "," : "");
    os << ']' << (i + 1 < rows_ ? "," : "");
  }
  os << ']';
  return os.str();
}

Mat vstack(const std::vector<Mat>& parts, int cols, unsigned p) {
  int rows = 0;
  for (const Mat& m : parts) rows += m.rows();
  Mat r(rows, cols, p);
  int at = 0;
  for (const Mat& m : parts) {
    if (m.cols() != cols) throw std::invalid_argument("vstack width");
    for (int i = 0; i < m.rows(); ++i, ++at)
      for (int j = 0; j < cols; ++j) r.set(at, j, m.at(i, j));
  }
  return r;
}

Mat hstack(const std::vector<Mat>& parts, int rows, unsigned p) {
  int cols = 0;
  for (const Mat& m : parts) cols += m.cols();
  Mat r(rows, cols, p);
  int at = 0;
  for (const Mat& m : parts) {
    if (m.rows() != rows) throw std::invalid_argument("hstack height");
    for (int j = 0; j < m.cols(); ++j, ++at)
      for (int i = 0; i < rows; ++i) r.set(i, at, m.at(i, j));
  }
  return r;
}

std::vector<int> rref_in_place(Mat& m) {
  const unsigned p = m.prime();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) {
        unsigned t = m.at(r, j);
        m.set(r, j, m.at(piv, j));
        m.set(piv, j, t);
      }
    unsigned inv = fp_inv(m.at(r, c), p);
    for (int j = 0; j < m.cols(); ++j)
      m.set(r, j, static_cast<long long>(static_cast<unsigned long long>(m.at(r, j)) * inv % p));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      unsigned f = m.at(i, c);
      if (!f) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.set(i, j,
              static_cast<long long>(m.at(i, j)) -
                  static_cast<long long>(static_cast<unsigned long long>(f) * m.at(r, j) % p));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank_of(Mat m) { return static_cast<int>(rref_in_place(m).size()); }

Mat row_basis(Mat m) {
  std::vector<int> piv = rref_in_place(m);
  Mat r(static_cast<int>(piv.size()), m.cols(), m.prime());
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j));
  return r;
}

Mat left_kernel(const Mat& a) {
  // Reduce [A | I]; rows whose A-part vanishes span the left kernel.
  const unsigned p = a.prime();
  Mat aug(a.rows(), a.cols() + a.rows(), p);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols() + i, 1);
  }
  rref_in_place(aug);
  std::vector<Mat> rows;
  for (int i = 0; i < aug.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < a.cols(); ++j)
      if (aug.at(i, j)) {
        zero = false;
        break;
      }
    if (!zero) continue;
    Mat r(1, a.rows(), p);
    for (int j = 0; j < a.rows(); ++j) r.set(0, j, aug.at(i, a.cols() + j));
    rows.push_back(r);
  }
  return row_basis(vstack(rows, a.rows(), p));
}

bool in_row_space(const Mat& v, const Mat& u) {
  if (u.rows() == 0) return v.is_zero();
  Mat stacked = vstack({u, v}, u.cols(), u.prime());
  return rank_of(stacked) == u.rows();
}

bool space_contains(const Mat& u, const Mat& v) {
  for (int i = 0; i < v.rows(); ++i)
    if (!in_row_space(v.row(i), u)) return false;
  return true;
}

Mat space_sum(const Mat& u, const Mat& v) {
  return row_basis(vstack({u, v}, u.cols(), u.prime()));
}

Mat space_intersect(const Mat& u, const Mat& v) {
  // Rows (a|b) with aU + bV = 0 give intersection vectors aU.
  if (u.rows() == 0 || v.rows() == 0) return Mat(0, u.cols(), u.prime());
  Mat stacked = vstack({u, v}, u.cols(), u.prime());
  Mat k = left_kernel(stacked);
  Mat apart(k.rows(), u.rows(), u.prime());
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < u.rows(); ++j) apart.set(i, j, k.at(i, j));
  return row_basis(apart * u);
}

Mat space_image(const Mat& u, const Mat& a) { return row_basis(u * a); }

Mat space_preimage(const Mat& a, const Mat& w) {
  // x A = y W for some y; solve (x|y) [A; -W] = 0 and project to x.
  const unsigned p = a.prime();
  Mat neg = w.scaled(p - 1);
  Mat stacked = vstack({a, neg}, a.cols(), p);
  Mat k = left_kernel(stacked);
  Mat xpart(k.rows(), a.rows(), p);
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) xpart.set(i, j, k.at(i, j));
  return row_basis(xpart);
}

bool solve_left(const Mat& a, const Mat& b, Mat& x) {
  // x a = b <=> a^T x^T = b^T; eliminate on [a^T | b^T].
  const unsigned p = a.prime();
  Mat at = a.transposed();
  Mat aug(at.rows(), at.cols() + 1, p);
  for (int i = 0; i < at.rows(); ++i) {
    for (int j = 0; j < at.cols(); ++j) aug.set(i, j, at.at(i, j));
    aug.set(i, at.cols(), b.at(0, i));
  }
  std::vector<int> piv = rref_in_place(aug);
  x = Mat(1, a.rows(), p);
  for (size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == at.cols()) return false;  // inconsistent row
    x.set(0, piv[k], aug.at(static_cast<int>(k), at.cols()));
  }
  return true;
}

}  // namespace nakalab
