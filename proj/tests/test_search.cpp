#include "doctest.h"
#include "tightlie/search.hpp"

#include <cmath>

using namespace tightlie::geom;

TEST_CASE("lattice distance") {
  CHECK(lattice_distance(0.5, 1) == doctest::Approx(0.0));
  CHECK(lattice_distance(0.4, 1) == doctest::Approx(0.1));
  CHECK(lattice_distance(0.0, 2) == doctest::Approx(0.0));
  CHECK(lattice_distance(-0.75, 2) == doctest::Approx(0.25));
}

TEST_CASE("parallel kernel and serial reference agree bitwise") {
  BoundedDomain d = BoundedDomain::polydisk(2);
  SupResult a = sup_search(d, 6, 800, 42);
  SupResult b = sup_search_serial(d, 6, 800, 42);
  CHECK(a.best_beta == b.best_beta);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.evals == b.evals);
  for (int i = 0; i < 3; ++i) CHECK((a.argmax[i] - b.argmax[i]).cwiseAbs().maxCoeff() == 0.0);

  ScanResult sa = integrality_scan(BoundedDomain::ball(2, 2), 64, 7);
  ScanResult sb = integrality_scan_serial(BoundedDomain::ball(2, 2), 64, 7);
  REQUIRE(sa.rows.size() == sb.rows.size());
  for (size_t i = 0; i < sa.rows.size(); ++i) {
    CHECK(sa.rows[i].beta == sb.rows[i].beta);
    CHECK(sa.rows[i].min_h == sb.rows[i].min_h);
  }
  CHECK(sa.attempted == sb.attempted);
}

TEST_CASE("sup_search approaches rank/2 on the disk") {
  BoundedDomain d = BoundedDomain::disk();
  SupResult r = sup_search(d, 8, 4000, 0);
  CHECK(r.best_beta == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(r.best_beta <= 0.5 + 1e-6);
}

TEST_CASE("integrality scan: tube lattice vs non-tube spread") {
  ScanResult tube = integrality_scan(BoundedDomain::ball(2, 2), 200, 3);
  REQUIRE(tube.rows.size() == 200);
  for (const auto& row : tube.rows) CHECK(row.lattice_distance < 1e-6);
  ScanResult non = integrality_scan(BoundedDomain::ball(1, 2), 200, 3);
  int off_lattice = 0;
  for (const auto& row : non.rows)
    if (row.lattice_distance > 1e-3) ++off_lattice;
  CHECK(off_lattice > 100);  // the non-tube values spread over the interval
}
