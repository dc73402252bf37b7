#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>

#include "extel/config.hpp"
#include "extel/errors.hpp"
#include "extel/numerics.hpp"
#include "extel/table.hpp"

using namespace extel;

TEST_CASE("natural units are all one") {
  const auto c = natural_units();
  CHECK(c.m() == 1.0);
  CHECK(c.c() == 1.0);
  CHECK(c.hbar() == 1.0);
  CHECK(c.e() == 1.0);
  CHECK(c.sigma_bar() == 1.0);
  CHECK(c.rho_bar() == 1.0);
  CHECK(c.h() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(c.rest_energy() == 1.0);
}

TEST_CASE("constants must be finite and positive") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(PhysicalConfig(0, 1, 1, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(PhysicalConfig(1, -1, 1, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(PhysicalConfig(1, 1, nan, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(PhysicalConfig(1, 1, 1, inf, 1, 1), DomainError);
  CHECK_THROWS_AS(PhysicalConfig(1, 1, 1, 1, 0, 1), DomainError);
  CHECK_THROWS_AS(PhysicalConfig(1, 1, 1, 1, 1, -2), DomainError);
}

TEST_CASE("si units describe the electron") {
  const auto c = si_units();
  CHECK(c.m() == doctest::Approx(9.1093837015e-31));
  CHECK(c.c() == 299792458.0);
  CHECK(c.sigma_bar() == c.e());
}

TEST_CASE("config text round-trips exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-30.0, 30.0);
  for (int i = 0; i < 200; ++i) {
    auto draw = [&] { return std::pow(10.0, exponent(rng)); };
    const PhysicalConfig original(draw(), draw(), draw(), draw(), draw(), draw());
    CHECK(parse_config_text(to_config_text(original)) == original);
  }
  CHECK(parse_config_text(to_config_text(si_units())) == si_units());
}

TEST_CASE("config parsing") {
  SUBCASE("defaults, comments and whitespace") {
    const auto c = parse_config_text("# comment\n\n  m = 2 \r\nc=3\n");
    CHECK(c.m() == 2.0);
    CHECK(c.c() == 3.0);
    CHECK(c.hbar() == 1.0);
  }
  SUBCASE("h sets hbar") {
    const auto c = parse_config_text("h = 6.283185307179586\n");
    CHECK(c.hbar() == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_config_text("mass = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("m = 1\nm = 2"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("m = abc"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("m 1"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("m = 1x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("h = 1\nhbar = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("m = -1"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("c = 0"), ConfigError);
  }
}

TEST_CASE("config files") {
  const auto dir = std::filesystem::temp_directory_path() / "extel_config_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "units.cfg";
  {
    std::ofstream out(path);
    out << to_config_text(si_units());
  }
  CHECK(load_config_file(path) == si_units());
  CHECK_THROWS_AS(load_config_file(dir / "missing.cfg"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("shortest round-trip formatting") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> bits;
  int checked = 0;
  while (checked < 2000) {
    const auto raw = bits(rng);
    double x;
    std::memcpy(&x, &raw, sizeof x);
    if (!std::isfinite(x)) continue;
    const auto back = parse_double(format_double(x));
    REQUIRE(back.has_value());
    CHECK(*back == x);
    ++checked;
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double("1.0 x").has_value());
  CHECK(parse_double(" 1.5\r").value() == 1.5);
  CHECK(parse_double("+2.5").value() == 2.5);
}

TEST_CASE("linear fit recovers exact lines") {
  const auto x = linspace(-3.0, 5.0, 17);
  std::vector<double> y;
  for (double v : x) y.push_back(0.25 * v - 1.5);
  const auto fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(fit.intercept == doctest::Approx(-1.5).epsilon(1e-14));
  CHECK(fit.rms_residual < 1e-15);
  const std::vector<double> flat{1.0, 1.0};
  CHECK_THROWS_AS(fit_line(flat, flat), DomainError);
}

TEST_CASE("grids") {
  const auto l = linspace(0.0, 0.3, 4);
  CHECK(l.front() == 0.0);
  CHECK(l.back() == 0.3);
  const auto g = logspace(1e-2, 1e2, 5);
  CHECK(g[2] == doctest::Approx(1.0));
  CHECK(g.back() == 1e2);
  CHECK_THROWS_AS(linspace(0, 1, 1), DomainError);
  CHECK_THROWS_AS(logspace(0, 1, 3), DomainError);
}

TEST_CASE("quadrature weights integrate polynomials") {
  const auto x = linspace(0.0, 2.0, 65);
  const auto simpson = simpson_weights(0.0, 2.0, 64);
  const auto trap = trapezoid_weights(0.0, 2.0, 64);
  double s = 0.0, t = 0.0, one = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += simpson[i] * x[i] * x[i] * x[i];
    t += trap[i] * x[i];
    one += simpson[i];
  }
  CHECK(s == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(t == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(one == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(simpson_weights(0, 1, 3), DomainError);
}

TEST_CASE("tables") {
  Table t{{"a", "b"}, {}};
  t.add_row({1.0, 0.5});
  t.add_row({-2.0, std::numeric_limits<double>::quiet_NaN()});
  CHECK(to_csv(t) == "a,b\n1,0.5\n-2,nan\n");
  CHECK(to_json(t).find("null") != std::string::npos);
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
}
