#include "doctest.h"
#include "nakalab/matrix.hpp"

using namespace nakalab;

namespace {

Mat from(std::vector<std::vector<int>> rows, unsigned p, int cols = -1) {
  int r = static_cast<int>(rows.size());
  int c = cols >= 0 ? cols : (r ? static_cast<int>(rows[0].size()) : 0);
  Mat m(r, c, p);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("mod-p arithmetic and inverses") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK(fp_inv(3, 7) == 5);
  CHECK(fp_inv(1, 2) == 1);
  CHECK(fp_inv(4, 5) == 4);

  Mat m(1, 1, 5);
  m.set(0, 0, -3);
  CHECK(m.at(0, 0) == 2);
}

TEST_CASE("product, power, identity") {
  Mat a = from({{1, 1}, {0, 1}}, 3);
  Mat b = a * a;
  CHECK(b.at(0, 1) == 2);
  CHECK((a * Mat::identity(2, 3)).at(0, 1) == 1);

  Mat n = from({{0, 1}, {0, 0}}, 2);
  CHECK(n.pow(2).is_zero());
  CHECK_FALSE(n.is_zero());
}

TEST_CASE("rref and rank over small primes") {
  Mat a = from({{1, 1}, {1, 1}}, 2);
  CHECK(rank_of(a) == 1);
  CHECK(row_basis(a).rows() == 1);

  Mat b = from({{2, 1}, {1, 2}}, 3);
  CHECK(rank_of(b) == 1);  // second row is twice the first mod 3

  Mat c = from({{2, 1}, {1, 2}}, 5);
  CHECK(rank_of(c) == 2);
}

TEST_CASE("left kernel") {
  Mat a = from({{1}, {1}}, 2);
  Mat k = left_kernel(a);
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(0, 1) == 1);
  CHECK((k * a).is_zero());

  CHECK(left_kernel(Mat::identity(3, 5)).rows() == 0);
}

TEST_CASE("solve_left finds coordinates and rejects inconsistency") {
  Mat a = from({{1, 0}, {1, 1}}, 2);
  Mat b = from({{1, 1}}, 2);
  Mat x(1, 2, 2);
  REQUIRE(solve_left(a, b, x));
  CHECK((x * a).at(0, 0) == 1);
  CHECK((x * a).at(0, 1) == 1);
  CHECK(x.at(0, 0) == 0);
  CHECK(x.at(0, 1) == 1);

  Mat thin = from({{1, 0}}, 2);
  Mat target = from({{0, 1}}, 2);
  Mat y(1, 1, 2);
  CHECK_FALSE(solve_left(thin, target, y));
}

TEST_CASE("subspace lattice operations") {
  unsigned p = 2;
  Mat e1 = from({{1, 0}}, p);
  Mat e2 = from({{0, 1}}, p);
  Mat diag = from({{1, 1}}, p);
  Mat full = space_sum(e1, e2);
  CHECK(full.rows() == 2);
  CHECK(space_contains(full, diag));
  CHECK_FALSE(space_contains(e1, diag));
  CHECK(space_intersect(full, diag).rows() == 1);
  CHECK(space_intersect(e1, e2).rows() == 0);

  Mat a = from({{1, 1}, {0, 1}}, p);
  Mat img = space_image(e1, a);
  CHECK(img.rows() == 1);
  CHECK(space_contains(img, diag));
  Mat pre = space_preimage(a, diag);
  CHECK(pre.rows() == 1);
  CHECK(space_contains(pre, e1));
}

TEST_CASE("stacking") {
  Mat a = from({{1, 0}}, 2);
  Mat b = from({{0, 1}}, 2);
  Mat v = vstack({a, b}, 2, 2);
  CHECK(v.rows() == 2);
  CHECK(v.at(1, 1) == 1);
  Mat h = hstack({a, b}, 1, 2);
  CHECK(h.cols() == 4);
  CHECK(h.at(0, 0) == 1);
  CHECK(h.at(0, 3) == 1);
}
