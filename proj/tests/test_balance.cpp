#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "maxface/forces.hpp"
#include "maxface/presets.hpp"
#include "support.hpp"

using namespace maxface;
using std::numbers::pi;

TEST_CASE("jacobian matches central differences") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto cfg = testsupport::random_config(rng);
    auto s = neck_sizes(cfg);
    auto J = balance_jacobian(cfg, s);
    const double h = 1e-6;
    for (NeckId col : cfg.necks()) {
      auto plus = cfg.all_positions(), minus = cfg.all_positions();
      plus[col.level - 1][col.index - 1] += h;
      minus[col.level - 1][col.index - 1] -= h;
      auto fp = all_forces(cfg.with_positions(plus), s);
      auto fm = all_forces(cfg.with_positions(minus), s);
      for (int row = 0; row < cfg.total_necks(); ++row) {
        Complex fd = (fp[row] - fm[row]) / (2 * h);
        Complex an = J(row, cfg.flat_index(col));
        CHECK(std::abs(fd - an) <= 1e-5 * std::max(1.0, std::abs(an)));
      }
    }
  }
}

TEST_CASE("catenoid jacobian is a 1x1 zero") {
  auto cat = preset_catenoid();
  auto J = balance_jacobian(cat, neck_sizes(cat));
  CHECK(J.rows == 1);
  CHECK(J(0, 0) == Complex(0.0));
}

TEST_CASE("rigidity of presets") {
  auto cat = preset_catenoid();
  auto rc = rigidity(cat, neck_sizes(cat));
  CHECK(rc.jacobian_rank == 0);
  CHECK(rc.expected_rank == 0);
  CHECK(rc.is_rigid);
  for (int m = 2; m <= 4; ++m) {
    auto c = preset_chm(m);
    auto r = rigidity(c, neck_sizes(c));
    CHECK(r.balanced);
    CHECK(r.jacobian_rank == m - 1);
    CHECK(r.is_rigid);
    CHECK(r.singular_values[m - 2] / std::max(r.singular_values[m - 1], 1e-300) >= 1e4);
  }
}

TEST_CASE("rigidity rank is gauge invariant") {
  auto c = preset_chm(3);
  auto s = neck_sizes(c);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 10; ++i) {
    Complex lambda(u(rng), u(rng));
    if (std::abs(lambda) < 0.1) lambda += 1.0;
    auto g = c.scaled(lambda).translated({u(rng), u(rng)});
    CHECK(rigidity(g, s).jacobian_rank == 2);
  }
}

TEST_CASE("newton recovers perturbed CHM m=3") {
  auto base = preset_chm(3);
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> ang(0, 2 * pi);
  auto p = base.all_positions();
  for (auto& z : p[1]) z += std::polar(0.05, ang(rng));
  GaugeFixing gauge{{{{1, 1}, 0.0}, {{2, 1}, base.position({2, 1})}}};
  auto res = newton_balance(base.with_positions(p), gauge);
  CHECK(res.iterations <= 10);
  CHECK(res.residual <= 1e-12);
  for (NeckId n : base.necks()) CHECK(std::abs(res.config.position(n) - base.position(n)) < 1e-10);
  CHECK(max_force(res.config, neck_sizes(res.config)) <= 1e-12);
}

TEST_CASE("newton leaves balanced input alone") {
  auto base = preset_chm(4);
  auto res = newton_balance(base, GaugeFixing::standard(base));
  CHECK(res.iterations == 0);
  CHECK(res.config.all_positions() == base.all_positions());
}

TEST_CASE("two necks on one level never balance") {
  // 2c^2/(p1-p2) cannot vanish; both pinned -> deterministic NoConvergence.
  Configuration pair({{-1.0, 1.0}}, {-2.0, 2.0});
  auto gauge = GaugeFixing::standard(pair);
  CHECK(gauge.pinned.size() == 2);
  try {
    newton_balance(pair, gauge);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
    CHECK(e.value() == doctest::Approx(1.0));
  }
}

TEST_CASE("newton balances a three-level random start") {
  // CHM m=4 with a scrambled outer ring; standard gauge.
  auto base = preset_chm(4);
  auto p = base.all_positions();
  p[1][1] += Complex(0.03, -0.02);
  p[1][2] += Complex(-0.02, 0.04);
  auto res = newton_balance(base.with_positions(p), GaugeFixing::standard(base));
  CHECK(res.residual <= 1e-12);
}

TEST_CASE("dW/dQ rank") {
  CHECK(dW_dQ_rank(preset_catenoid()) == 0);
  CHECK(dW_dQ_rank(preset_chm(3)) == 1);
  Configuration flat({{0.0, 1.0}, {2.0, 3.0}}, {0.0, 0.0, 0.0});
  CHECK(dW_dQ_rank(flat) == 0);
  // finite-difference cross check on the closed form
  auto cfg = preset_chm(3);
  auto grad = dW_dQ_gradient(cfg);
  const double h = 1e-6;
  for (int j = 1; j < cfg.plane_count(); ++j) {
    auto Qp = cfg.growths(), Qm = cfg.growths();
    Qp[j - 1] += h;
    Qp.back() -= h;
    Qm[j - 1] -= h;
    Qm.back() += h;
    Configuration cp(cfg.all_positions(), Qp), cm(cfg.all_positions(), Qm);
    double fd = (scalar_W(cp, neck_sizes(cp)).closed_form - scalar_W(cm, neck_sizes(cm)).closed_form) / (2 * h);
    CHECK(std::abs(fd - grad[j - 1]) < 1e-6);
  }
}

TEST_CASE("CHM presets") {
  auto costa = preset_chm(2);
  CHECK(costa.position({1, 1}) == Complex(0.0));
  CHECK(costa.position({2, 1}) == Complex(-1.0, 0.0));
  CHECK(costa.position({2, 2}) == Complex(1.0, 0.0));
  CHECK(costa.growths() == std::vector<double>{-1.0, -1.0, 2.0});
  for (int m = 2; m <= 5; ++m) {
    auto c = preset_chm(m);
    auto s = neck_sizes(c);
    CHECK(max_force(c, s) <= 1e-12);
    CHECK(std::abs(scalar_W(c, s).closed_form) <= 1e-10);
    auto topo = topology(c, s);
    CHECK(topo.genus == m - 1);
    CHECK(topo.end_count == 3);
    CHECK(topo.embeddable == (m >= 3));
  }
}

TEST_CASE("catenoid topology") {
  auto c = preset_catenoid();
  auto t = topology(c, neck_sizes(c));
  CHECK(t.genus == 0);
  CHECK(t.end_count == 2);
  CHECK(t.embeddable);
}

TEST_CASE("dihedral preset") {
  DihedralOptions o;
  auto d = preset_dihedral(o);
  auto s = neck_sizes(d);
  CHECK(max_force(d, s) <= 1e-12);
  CHECK(std::abs(scalar_W(d, s).closed_form) <= 1e-10);
  // regression fixture for the default seed
  CHECK(d.position({3, 5}).real() == doctest::Approx(-1.12195515).epsilon(1e-7));
  CHECK(d.growth(1) == doctest::Approx(-2.56));
  CHECK(d.growth(4) == doctest::Approx(4.0));
  auto topo = topology(d, s);
  CHECK(topo.genus == 5 * 2 - 4 + 2);
  CHECK(topo.embeddable);

  DihedralOptions far = o;
  far.rho_seed = {3.0};
  CHECK_THROWS_AS(preset_dihedral(far), Error);
}

TEST_CASE("dihedral with five levels") {
  DihedralOptions o;
  o.L = 5;
  o.m = 7;
  auto d = preset_dihedral(o);
  CHECK(max_force(d, neck_sizes(d)) <= 1e-12);
  CHECK(topology(d, neck_sizes(d)).genus == 7 * 3 - 5 + 2);
}

TEST_CASE("polynomial method") {
  auto c3 = preset_chm(3);
  auto s3 = neck_sizes(c3);
  CHECK(polynomial_check(c3.all_positions(), s3) <= 1e-10);
  auto cat = preset_catenoid();
  CHECK(polynomial_check(cat.all_positions(), neck_sizes(cat)) == 0.0);
  auto bent = c3.all_positions();
  bent[1][0] += Complex(0.1, 0.05);
  CHECK(polynomial_check(bent, s3) > 1e-3);
  CHECK_THROWS_AS(preset_polynomial(bent, s3), Error);
  auto rebuilt = preset_polynomial(c3.all_positions(), s3);
  CHECK(rebuilt.growths()[0] == doctest::Approx(-2.0));
  CHECK_THROWS_AS(polynomial_check({{0.0, 1.0}, {1.0}}, s3), Error);
  // polynomial identity agrees with force balance on dihedral data
  auto d = preset_dihedral({});
  CHECK(polynomial_check(d.all_positions(), neck_sizes(d)) <=
        1e-9 * polynomial_check_scale(d.all_positions(), neck_sizes(d)));
}
