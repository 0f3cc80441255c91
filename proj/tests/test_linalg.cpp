#include <doctest.h>

#include <random>

#include "algext/linalg.hpp"
#include "algext/smith.hpp"

using namespace algext;

namespace {

RatMatrix mat(std::size_t r, std::size_t c, const std::vector<int>& e) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = e[i * c + j];
  return m;
}

IntMatrix imat(std::size_t r, std::size_t c, const std::vector<int>& e) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = e[i * c + j];
  return m;
}

RatMatrix random_mat(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(num(rng), den(rng));
  return m;
}

std::vector<Rational> vec(const std::vector<int>& e) {
  return std::vector<Rational>(e.begin(), e.end());
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/-4") == Rational(3, 2));
  CHECK(parse_rational("3/-6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(rational_string(parse_rational("3/-6")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("rref examples") {
  RatMatrix id = RatMatrix::identity(3);
  auto r1 = rref(id);
  CHECK(r1.r == id);
  CHECK(r1.pivots == std::vector<std::size_t>{0, 1, 2});

  RatMatrix z(2, 4);
  auto r2 = rref(z);
  CHECK(r2.r == z);
  CHECK(r2.pivots.empty());

  auto m = mat(2, 2, {1, 2, 2, 4});
  auto r3 = rref(m);
  CHECK(r3.r == mat(2, 2, {1, 2, 0, 0}));
  CHECK(r3.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 30; ++t) {
    auto m = random_mat(rng, 1 + t % 5, 1 + (t * 7) % 6);
    auto r = rref(m).r;
    CHECK(rref(r).r == r);
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel(RatMatrix::identity(3)).dim() == 0);

  Subspace k = kernel(RatMatrix(2, 3));
  CHECK(k == Subspace::full(3));

  Subspace k2 = kernel(mat(1, 3, {1, 1, 0}));
  CHECK(k2.dim() == 2);
  CHECK(k2.contains(vec({1, -1, 0})));
  CHECK(k2.contains(vec({0, 0, 1})));
}

TEST_CASE("image examples") {
  CHECK(image(RatMatrix::identity(4)) == Subspace::full(4));
  CHECK(image(RatMatrix(3, 2)).dim() == 0);
  Subspace im = image(mat(2, 2, {1, 2, 2, 4}));
  CHECK(im.dim() == 1);
  CHECK(im.contains(vec({1, 2})));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(777);
  for (int t = 0; t < 40; ++t) {
    auto m = random_mat(rng, 1 + t % 6, 1 + (t * 5) % 7);
    CHECK(kernel(m).dim() + image(m).dim() == m.cols());
  }
}

TEST_CASE("quotient_dim examples") {
  auto q1 = quotient_dim(Subspace::full(3), Subspace::zero(3));
  CHECK(q1.dim == 3);
  CHECK(q1.representatives.size() == 3);

  Subspace z = Subspace::span(2, {vec({1, 0}), vec({0, 1})});
  auto q2 = quotient_dim(z, z);
  CHECK(q2.dim == 0);
  CHECK(q2.representatives.empty());

  Subspace b = Subspace::span(2, {vec({1, 1})});
  auto q3 = quotient_dim(z, b);
  CHECK(q3.dim == 1);
  CHECK(q3.representatives.size() == 1);

  Subspace big = Subspace::span(3, {vec({1, 0, 0})});
  Subspace small = Subspace::span(3, {vec({0, 1, 0})});
  CHECK_THROWS_WITH_AS(static_cast<void>(quotient_dim(big, small)),
                       doctest::Contains("ContainmentViolation"), Error);
}

TEST_CASE("quotient dimension adds up on random flags") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 25; ++t) {
    auto m = random_mat(rng, 4, 5);
    Subspace z = image(m.transpose());
    // b spanned by a couple of z's basis vectors combined
    std::vector<std::vector<Rational>> gens;
    for (std::size_t i = 0; i + 1 < z.dim(); i += 2) {
      auto v = z.basis_vector(i);
      auto w = z.basis_vector(i + 1);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += 3 * w[k];
      gens.push_back(v);
    }
    Subspace b = Subspace::span(5, gens);
    auto q = quotient_dim(z, b);
    CHECK(q.dim + b.dim() == z.dim());
  }
}

TEST_CASE("subspace intersection and sum") {
  Subspace a = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Subspace b = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.intersect(b).contains(vec({0, 1, 0})));
  CHECK(a.sum(b) == Subspace::full(3));
}

TEST_CASE("solve and inverse") {
  auto m = mat(2, 2, {1, 2, 3, 4});
  auto x = solve(m, vec({5, 11}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == vec({5, 11}));

  auto inv = inverse(m);
  CHECK(m * inv == RatMatrix::identity(2));

  auto sing = mat(2, 2, {1, 2, 2, 4});
  CHECK(!solve(sing, vec({1, 0})).has_value());
  CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("smith normal form examples") {
  auto s1 = smith_normal_form(imat(2, 2, {2, 0, 0, 4}));
  CHECK(s1.factors == std::vector<Int>{2, 4});

  auto s2 = smith_normal_form(IntMatrix(2, 3));
  CHECK(s2.factors == std::vector<Int>{0, 0});

  auto s3 = smith_normal_form(imat(2, 2, {2, 4, 6, 8}));
  CHECK(s3.factors == std::vector<Int>{2, 4});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> ent(-6, 6);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t * 3) % 4;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = ent(rng);
    auto s = smith_normal_form(m);

    // u m v is the diagonal of the factors
    IntMatrix d = s.u * m * s.v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        CHECK(d.at(i, j) == (i == j ? s.factors[i] : Int(0)));

    // unimodular transforms
    Int du = determinant(s.u), dv = determinant(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));

    // divisibility chain (zeros trail)
    for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
      CHECK(s.factors[i] >= 0);
      if (s.factors[i] == 0)
        CHECK(s.factors[i + 1] == 0);
      else
        CHECK(s.factors[i + 1] % s.factors[i] == 0);
    }

    // product of factors = |det| for square input
    if (r == c) {
      Int det = determinant(m);
      Int prod = 1;
      for (const auto& f : s.factors) prod *= f;
      CHECK(prod == (det < 0 ? Int(-det) : det));
    }
  }
}

TEST_CASE("sparse kernel agrees with dense kernel") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 10; ++t) {
    std::size_t rows = 30 + t, cols = 6;
    std::uniform_int_distribution<int> ent(-3, 3);
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<std::vector<std::pair<std::size_t, Rational>>> sparse(rows);
    RatMatrix dense(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (int k = 0; k < 3; ++k) {
        std::size_t j = pick(rng);
        int v = ent(rng);
        if (v == 0) continue;
        sparse[i].push_back({j, v});
        dense.at(i, j) += v;
      }
    // collapse duplicate columns in the sparse rows the way the builder does
    for (auto& row : sparse) {
      std::vector<std::pair<std::size_t, Rational>> merged;
      for (auto& [j, v] : row) {
        bool hit = false;
        for (auto& [mj, mv] : merged)
          if (mj == j) {
            mv += v;
            hit = true;
          }
        if (!hit) merged.push_back({j, v});
      }
      row = merged;
    }
    CHECK(kernel_of_sparse_rows(sparse, cols) == kernel(dense));
  }
}
