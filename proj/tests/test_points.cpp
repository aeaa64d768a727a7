#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detm/errors.hpp"
#include "detm/points.hpp"
#include "oracles.hpp"

using namespace detm;
using oracle::parse;

namespace {
Ideal affine_corpus(const std::string& name) {
  return affine_ideal(read_ideal_file(oracle::corpus(name + ".ideal")));
}
Ideal projective_corpus(const std::string& name) {
  return projective_ideal(read_ideal_file(oracle::corpus(name + ".ideal")));
}
}  // namespace

TEST_CASE("affine enumeration examples") {
  const auto parabola = enumerate_affine(affine_corpus("parabola"), 100);
  CHECK(parabola.points.size() == 21);
  CHECK(parabola.points.front() == IntPoint{-10, 100});
  CHECK(std::is_sorted(parabola.points.begin(), parabola.points.end()));

  for (double b : {1.0, 2.5, 40.0}) {
    const auto circle = enumerate_affine(affine_corpus("circle"), b);
    const std::vector<IntPoint> expect{{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    CHECK(circle.points == expect);
  }
  CHECK(enumerate_affine(affine_corpus("empty"), 500).points.empty());
  CHECK(enumerate_affine(affine_corpus("single_point"), 3).points == std::vector<IntPoint>{{2, 3}});
  CHECK(enumerate_affine(affine_corpus("single_point"), 2.9).points.empty());
  CHECK(enumerate_affine(affine_corpus("line"), 7).points.size() == 15);
}

TEST_CASE("affine enumeration agrees with a naive scan") {
  for (const char* name : {"parabola", "circle", "line", "single_point", "empty", "twisted_cubic_affine"}) {
    const Ideal ideal = affine_corpus(name);
    for (long b : {1L, 4L, 17L, 30L}) {
      INFO(name << " B=" << b);
      EnumerationOptions plain;
      plain.linear_solve = false;
      const auto fast = enumerate_affine(ideal, static_cast<double>(b));
      CHECK(fast.points == oracle::affine_points(ideal, b));
      CHECK(enumerate_affine(ideal, static_cast<double>(b), plain).points == fast.points);
      EnumerationOptions threaded;
      threaded.jobs = 3;
      CHECK(enumerate_affine(ideal, static_cast<double>(b), threaded).points == fast.points);
      for (const auto& p : fast.points) CHECK(kills_all(ideal, p));
    }
  }
}

TEST_CASE("projective enumeration") {
  const Ideal conic = projective_corpus("conic");
  const auto ps = enumerate_projective(conic, HeightBox::uniform(3, 4));
  CHECK(ps.points == oracle::projective_points(conic, {4, 4, 4}));
  CHECK(ps.points.size() == 8);
  for (const auto& p : ps.points) {
    std::int64_t g = 0, first = 0;
    for (auto v : p) {
      g = std::gcd(g, v);
      if (first == 0) first = v;
    }
    CHECK(g == 1);
    CHECK(first > 0);
    CHECK(kills_all(conic, p));
  }

  const auto p1 = enumerate_projective(Ideal(2, {}), HeightBox::uniform(2, 1));
  const std::vector<IntPoint> expect{{0, 1}, {1, -1}, {1, 0}, {1, 1}};
  CHECK(p1.points == expect);

  const auto narrow = enumerate_projective(Ideal(3, {}), HeightBox({0.5, 3, 3}));
  CHECK_FALSE(narrow.points.empty());
  for (const auto& p : narrow.points) CHECK(p[0] == 0);

  const Ideal tc = projective_corpus("twisted_cubic");
  CHECK(enumerate_projective(tc, HeightBox({3, 5, 7, 9})).points == oracle::projective_points(tc, {3, 5, 7, 9}));
  CHECK_THROWS_AS((void)enumerate_projective(Ideal(2, {parse("x1 - x0^2", 2)}), HeightBox::uniform(2, 3)),
                  ContractError);
  CHECK_THROWS_AS((void)enumerate_projective(conic, HeightBox::uniform(2, 3)), InputError);
}

TEST_CASE("budget guard") {
  EnumerationOptions small;
  small.budget = 1000;
  CHECK_THROWS_AS((void)enumerate_affine(affine_corpus("circle"), 100, small), BudgetError);
  try {
    (void)enumerate_affine(affine_corpus("circle"), 100, small);
  } catch (const BudgetError& e) {
    CHECK(e.required() == doctest::Approx(201.0 * 201.0));
  }
  CHECK_NOTHROW((void)enumerate_affine(affine_corpus("circle"), 15, small));  // 31^2 = 961
  CHECK_THROWS_AS((void)enumerate_projective(projective_corpus("conic"), HeightBox::uniform(3, 10), small), BudgetError);
  CHECK_THROWS_AS((void)HeightBox({1.0, 0.0}), InputError);
  CHECK_THROWS_AS((void)HeightBox({1.0, -2.0}), InputError);
}

TEST_CASE("class partition") {
  const HeightBox box = HeightBox::uniform(3, 4);
  CHECK(point_class({4, 2, 1}, box) == 0);
  CHECK(point_class({1, 1, 1}, box) == 0);
  CHECK(point_class({1, -3, 3}, box) == 1);
  CHECK(point_class({1, 2, 3}, HeightBox({1, 10, 10})) == 0);
  CHECK(point_class({1, 20, 3}, HeightBox({1, 10, 10})) == 1);

  const Ideal conic = projective_corpus("conic");
  const HeightBox skew({2, 5, 9});
  const auto ps = enumerate_projective(conic, skew);
  const auto classes = partition_classes(ps, skew);
  REQUIRE(classes.size() == 3);
  std::size_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    total += classes[i].points.size();
    for (const auto& x : classes[i].points)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(Rational(std::abs(x[j])) / Rational(skew[j]) <= Rational(std::abs(x[i])) / Rational(skew[i]));
  }
  CHECK(total == ps.points.size());
  CHECK_THROWS_AS((void)partition_classes(enumerate_affine(affine_corpus("line"), 3), skew), ContractError);
}

TEST_CASE("tau normalization") {
  const HeightBox box = HeightBox::uniform(3, 4);
  const auto t = tau_normalize({4, 2, 1}, box);
  CHECK(t == std::vector<Rational>{1, Rational(1, 2), Rational(1, 4)});
  CHECK(tau_normalize({0, 0, 3}, box)[0] == 0);
  const HeightBox skew({2, 6, 10});
  const IntPoint x{2, -3, 5};
  const auto y = tau_normalize(x, skew);
  for (std::size_t j = 1; j < 3; ++j)
    CHECK(y[j] / y[0] == oracle::q(x[j] * 2, x[0] * static_cast<long>(skew[j])));
  for (const auto& v : y) CHECK(abs(v) <= 1);
  CHECK_THROWS_AS((void)tau_normalize({5, 0, 0}, box), ContractError);
}
