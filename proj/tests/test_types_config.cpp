// SPDX-License-Identifier: Apache-2.0
//
// covert-irs: covert-rate optimization for IRS-aided wireless links
// Copyright (C) 2026 The covert-irs authors
// ------------------------------------------------------------------------

#include <sstream>

#include "covert_irs/config.hpp"
#include "covert_irs/types.hpp"
#include "doctest.h"

using namespace covert_irs;

TEST_CASE("phase vector accepts only unit-modulus entries") {
  CVector ok(2);
  ok << cplx(1.0, 0.0), std::polar(1.0, 0.3);
  CHECK(PhaseVector(ok).size() == 2);

  CVector bad(2);
  bad << cplx(1.0, 0.0), cplx(0.5, 0.0);
  CHECK_THROWS_AS(PhaseVector{bad}, InvalidArgument);

  const std::vector<double> theta = {0.0, 1.0, -2.5};
  const PhaseVector v = PhaseVector::from_angles(theta);
  const auto back = v.angles();
  for (std::size_t i = 0; i < theta.size(); ++i) CHECK(back[i] == doctest::Approx(theta[i]).epsilon(1e-14));

  CVector raw(3);
  raw << cplx(0.0, 0.0), cplx(-3.0, 0.0), cplx(0.0, 2.0);
  const PhaseVector p = PhaseVector::from_phases_of(raw);
  CHECK(std::abs(p.values()[0] - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(p.values()[1] - cplx(-1.0, 0.0)) < 1e-15);
  CHECK(std::abs(p.values()[2] - cplx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("rate_from_snr clamps negative snr") {
  CHECK(rate_from_snr(1.0) == doctest::Approx(1.0));
  CHECK(rate_from_snr(-0.5) == 0.0);
}

TEST_CASE("unit conversions") {
  CHECK(dbm_to_watts(10.0) == doctest::Approx(1e-2));
  CHECK(dbm_to_watts(-90.0) == doctest::Approx(1e-12));
  CHECK(db_to_linear(3.0) == doctest::Approx(1.9952623149688795));
}

TEST_CASE("scenario parser reads keys, comments and units") {
  std::istringstream in(
      "# comment line\n"
      "M = 4\n"
      "N = 16   # trailing comment\n"
      "P_max_dbm = 10\n"
      "rho_db = 5\n"
      "bob_side = left\n"
      "z_mean = irs\n"
      "zeta_aw = 1e-9\n"
      "\n");
  const Scenario s = parse_scenario(in);
  CHECK(s.system.M == 4);
  CHECK(s.system.N == 16);
  CHECK(s.system.P_max == doctest::Approx(1e-2));
  CHECK(s.system.rho == doctest::Approx(db_to_linear(5.0)));
  CHECK(s.geometry.bob_side == BobSide::kLeft);
  CHECK(s.system.z_mean == ZMeanConvention::kIrsPlusCascade);
  CHECK(s.bounds.zeta_aw == 1e-9);
}

TEST_CASE("scenario parser reports the offending line") {
  std::istringstream unknown("M = 2\nfoo = 3\n");
  try {
    parse_scenario(unknown);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream not_number("kappa = abc\n");
  CHECK_THROWS_AS(parse_scenario(not_number), ConfigError);
  std::istringstream no_eq("kappa 0.1\n");
  CHECK_THROWS_AS(parse_scenario(no_eq), ConfigError);
  std::istringstream bad_kappa("kappa = 1.5\n");
  CHECK_THROWS_AS(parse_scenario(bad_kappa), ConfigError);
  std::istringstream bad_rho("rho = 0.5\n");
  CHECK_THROWS_AS(parse_scenario(bad_rho), ConfigError);
  std::istringstream negative_zeta("zeta_sw = -1\n");
  CHECK_THROWS_AS(parse_scenario(negative_zeta), ConfigError);
  CHECK_THROWS_AS(parse_scenario_file("/nonexistent/covert.cfg"), ConfigError);
}

TEST_CASE("config validation") {
  SystemConfig c;
  CHECK_NOTHROW(c.validate());
  c.M = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SystemConfig{};
  c.L = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  Geometry g;
  g.d_ab_h = 0.0;
  CHECK_THROWS_AS(g.validate(), ConfigError);
}
