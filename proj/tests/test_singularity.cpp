#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maxface/forces.hpp"
#include "maxface/identities.hpp"
#include "maxface/presets.hpp"
#include "maxface/singularity.hpp"
#include "support.hpp"

using namespace maxface;
using std::numbers::pi;

TEST_CASE("symmetry evidence") {
  auto c4 = preset_chm(4);
  auto ev = detect_symmetries(c4, {1, 1});
  CHECK(ev.rotational_order == 4);
  CHECK(!ev.rotation_unbounded);
  CHECK(ev.vertical_mirror_angles.size() == 4);
  CHECK(!ev.horizontal_mirror);
  CHECK(ev.waist_fixed_angles.size() == 8);

  auto cat = detect_symmetries(preset_catenoid(), {1, 1});
  CHECK(cat.rotation_unbounded);
  CHECK(cat.horizontal_mirror);

  Configuration generic({{Complex(0.1, 0.2), Complex(1.3, -0.4)}, {Complex(-0.7, 0.9), Complex(0.5, 1.7)}},
                        {-1.0, 0.5, 0.5});
  auto g = detect_symmetries(generic, {1, 1});
  CHECK(g.rotational_order == 1);
  CHECK(g.vertical_mirror_angles.empty());
  CHECK(!g.horizontal_mirror);

  auto costa_outer = detect_symmetries(preset_chm(2), {2, 1});
  CHECK(costa_outer.rotational_order == 1);
  // only the real axis: the perpendicular through -1 moves the centre neck
  CHECK(costa_outer.vertical_mirror_angles.size() == 1);
}

TEST_CASE("predictions on presets") {
  auto cat = preset_catenoid();
  CHECK(predict(cat, neck_sizes(cat), {1, 1}).kind == PredictionKind::ConeLike);

  auto costa = preset_chm(2);
  auto sc = neck_sizes(costa);
  for (NeckId n : costa.necks()) {
    auto p = predict(costa, sc, n);
    CHECK(p.kind == PredictionKind::Discrete);
    CHECK(p.leading_order == 2);
    REQUIRE(p.count == 4);
    CHECK(p.type_claim == TypeClaim::Swallowtail);
    for (int i = 0; i + 1 < 4; ++i) CHECK(std::abs(p.angles[i + 1] - p.angles[i] - pi / 2) < 1e-10);
  }
  for (int m = 3; m <= 5; ++m) {
    auto c = preset_chm(m);
    auto p = predict(c, neck_sizes(c), {1, 1});
    CHECK(p.leading_order == m);
    REQUIRE(p.count == 2 * m);
    CHECK(p.type_claim == TypeClaim::Swallowtail);
    CHECK(p.claim_basis == "rotational symmetry of order m");
    for (int i = 0; i + 1 < 2 * m; ++i) CHECK(std::abs(p.angles[i + 1] - p.angles[i] - pi / m) < 1e-10);
  }
}

TEST_CASE("CHM outer necks: amplitude 3(m-1) with phase 4k pi/m") {
  for (int m = 3; m <= 5; ++m) {
    auto c = preset_chm(m);
    auto s = neck_sizes(c);
    for (int k = 1; k <= m; ++k) {
      auto R = R_function(c, s, {2, k}, 1);
      // -3(m-1) sin(2 theta - 4 k pi/m); hand expansion: -3h_0^2 + 3h_1 + 3h_0'^2 + 3h_1'
      for (double th : {0.1, 0.7, 2.3})
        CHECK(std::abs(R(th) + 3.0 * (m - 1) * std::sin(2 * th - 4 * k * pi / m)) < 1e-10);
    }
  }
}

TEST_CASE("predicted angles rotate with the configuration") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto cfg = testsupport::random_config(rng, 6);
    auto s = neck_sizes(cfg);
    const NeckId neck = cfg.necks().front();
    const double phi = 0.3 + 0.1 * trial;
    const Complex rot = std::polar(1.0, phi), c = cfg.position(neck);
    auto turned = cfg.translated(-c).scaled(rot).translated(c);
    auto a = predict(cfg, s, neck), b = predict(turned, s, neck);
    if (a.kind != PredictionKind::Discrete) continue;
    REQUIRE(a.count == b.count);
    const double shift = (neck.level % 2 == 1) ? -phi : phi;
    for (double x : a.angles) {
      double best = 10;
      for (double y : b.angles) {
        double d = std::fmod(std::abs(x + shift - y), 2 * pi);
        best = std::min(best, std::min(d, 2 * pi - d));
      }
      CHECK(best < 1e-10);
    }
  }
}

TEST_CASE("classification of synthetic data") {
  const double eps = 1e-3;
  auto f = [&](double th) { return Complex(-1.0, eps * std::sin(2 * th)); };
  auto cl = classify_function(0.1, 512, f);
  CHECK(!cl.cone_like);
  REQUIRE(cl.points.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(cl.points[i].theta - i * pi / 2) < 1e-10);
    CHECK(cl.points[i].cls == PointClass::Swallowtail);
  }
  CHECK(cl.class_at(0.3, 1e-6) == PointClass::CuspidalEdge);

  auto flat = classify_function(0.1, 512, [](double) { return Complex(-2.0, 0.0); });
  CHECK(flat.cone_like);
  CHECK(flat.points.empty());

  for (int m = 1; m <= 6; ++m) {
    auto g = [&](double th) { return Complex(-1.0, 0.01 * std::sin(m * th + 0.37)); };
    auto c = classify_function(0.05, 1024, g);
    CHECK(c.points.size() == std::size_t(2 * m));
    for (auto& p : c.points) CHECK(p.cls == PointClass::Swallowtail);
  }

  // a split double zero lands inside one cell
  CHECK_THROWS_AS(classify_function(0.1, 512, [](double th) { return Complex(-1.0, 1e-2 * (1 - std::cos(2 * th)) - 1e-9); }),
                  Error);
  // degenerate real part
  auto d = classify_function(0.1, 512, [](double th) { return Complex(std::cos(th), 0.1 * std::sin(3 * th)); });
  bool degenerate = false;
  for (auto& p : d.points) degenerate |= p.cls == PointClass::DegenerateFrontViolation;
  CHECK(degenerate);
}

TEST_CASE("generalized A ladder") {
  // Im A = sin^3(theta) near 0 has its first nonzero derivative at order 3 -> A5.
  auto f = [](double th) { return Complex(-1.0, 1e-2 * (std::sin(th) * std::sin(th) * std::sin(th) + 1e-9 * 0)); };
  std::vector<double> grid(512);
  std::vector<Complex> vals(512);
  for (int i = 0; i < 512; ++i) {
    grid[i] = 2 * pi * (i + 0.5) / 512;
    vals[i] = f(grid[i]);
  }
  auto c = classify_at_t(0.1, grid, vals, f);
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].cls == PointClass::GeneralizedA);
  CHECK(c.points[0].a_index == 5);
}

TEST_CASE("colliding zeros are reported") {
  // zeros at 1.0 and 1.0 + 1e-4, far below the grid spacing
  auto f = [](double th) { return Complex(-1.0, (th - 1.0) * (th - 1.0001) + 0.0 * th); };
  std::vector<double> grid;
  std::vector<Complex> vals;
  for (int i = 0; i < 512; ++i) {
    double th = 2 * pi * i / 512;
    grid.push_back(th);
    vals.push_back(f(th));
  }
  // both zeros sit inside one cell: no sign change, so nothing is found
  auto c = classify_at_t(0.1, grid, vals, f);
  CHECK(c.points.empty());
  // place a sample between the two zeros so both cells change sign
  grid[81] = 0.9999;
  vals[81] = f(0.9999);
  grid[82] = 1.00005;
  vals[82] = f(1.00005);
  CHECK_THROWS_AS(classify_at_t(0.1, grid, vals, f), Error);
}

TEST_CASE("vertical mirror check") {
  auto c4 = preset_chm(4);
  auto ev = detect_symmetries(c4, {1, 1});
  auto synth = classify_function(0.05, 1024, [](double th) { return Complex(-3.0, 1e-3 * std::sin(4 * th)); });
  CHECK(vertical_mirror_noncuspidal_check(ev, synth));
  auto shifted = classify_function(0.05, 1024, [](double th) { return Complex(-3.0, 1e-3 * std::sin(4 * th + 0.3)); });
  CHECK(!vertical_mirror_noncuspidal_check(ev, shifted));
  Configuration generic({{Complex(0.1, 0.2), Complex(1.3, -0.4)}, {Complex(-0.7, 0.9), Complex(0.5, 1.7)}},
                        {-1.0, 0.5, 0.5});
  CHECK_THROWS_AS(vertical_mirror_noncuspidal_check(detect_symmetries(generic, {1, 1}), synth), Error);
}

TEST_CASE("identities") {
  CHECK(identity2(1) == 1);
  CHECK(identity2(2) == 1);
  for (int m = 1; m <= 12; ++m) CHECK(identity2(m) == 1);
  CHECK(identity1(3, -2, 1) == Rational(1, 2));
  CHECK(identity1(2, -2, 1) == Rational(1));
  CHECK(identity1(4, -3, 2) == Rational(1, 2));
  int checked = 0;
  for (int m = 2; m <= 8; ++m)
    for (int n = -m; n <= -2; ++n)
      for (int l = 0; l <= m; ++l)
        if (identity1_in_domain(m, n, l)) {
          CHECK(identity1(m, n, l) == identity1_closed_form(m, n, l));
          ++checked;
        }
  CHECK(checked > 50);
}
