#include "ppmesh/theory.hpp"

#include <functional>

#include "doctest.h"

using namespace ppmesh;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a ppmesh::error");
  return errc::invalid_spec;
}

const mesh_spec sq22{family::square, 2, 2};
const mesh_spec sq23{family::square, 2, 3};
const mesh_spec hex11{family::hexagonal, 1, 1};
const mesh_spec tri12{family::triangular, 1, 2};

}  // namespace

TEST_CASE("maximum path lengths") {
  CHECK(max_path_length(sq22) == 17);
  CHECK(max_path_length(sq23) == 25);
  CHECK(max_path_length(hex11) == 7);
  CHECK(max_path_length(tri12) == 7);
}

TEST_CASE("single-path realizability on square meshes") {
  CHECK(single_path_realizable(sq23, 7).ok);
  CHECK(single_path_realizable(sq23, 7).witness_set == "odd-cols-window");
  CHECK_FALSE(single_path_realizable(sq23, 3).ok);

  CHECK_FALSE(single_path_realizable(sq22, 3).ok);
  CHECK_FALSE(single_path_realizable(sq22, 7).ok);

  const mesh_spec sq11{family::square, 1, 1};
  CHECK(single_path_realizable(sq11, 3).ok);
  CHECK(single_path_realizable(sq11, 3).witness_set == "odd-cols-window");

  for (const long long x : {1, 2, 4, 5, 6, 8, 9, 17})
    CHECK(single_path_realizable(sq22, x).witness_set == "full");
  CHECK_FALSE(single_path_realizable(sq22, 18).ok);

  const mesh_spec sq32{family::square, 3, 2};
  CHECK(single_path_realizable(sq32, 7).ok);
  CHECK(single_path_realizable(sq32, 7).witness_set == "odd-rows-window");

  CHECK(code_of([] { single_path_realizable(sq22, 0); }) == errc::out_of_range);
}

TEST_CASE("hex and tri realize every length up to the maximum") {
  for (long long x = 1; x <= 7; ++x) {
    CHECK(single_path_realizable(hex11, x).ok);
    CHECK(single_path_realizable(tri12, x).ok);
  }
  CHECK_FALSE(single_path_realizable(hex11, 8).ok);
  CHECK_FALSE(single_path_realizable(tri12, 8).ok);
}

TEST_CASE("per-type residue rules and length windows") {
  const type_rule s = type_constraints(sq22, path_type::S, side_label::left);
  CHECK(s.residues == std::vector<int>{1});
  CHECK(s.min_len == 1);
  CHECK(s.max_len == 17);

  const type_rule a = type_constraints(sq22, path_type::A, side_label::top);
  CHECK(a.residues == std::vector<int>{0, 2});
  CHECK(a.min_len == 2);
  CHECK(a.max_len == 16);

  const type_rule o_left = type_constraints(sq22, path_type::O, side_label::left);
  CHECK(o_left.residues == std::vector<int>{1});
  CHECK(o_left.min_len == 5);
  CHECK(o_left.max_len == 13);

  const type_rule o_top = type_constraints({family::square, 3, 2}, path_type::O, side_label::top);
  CHECK(o_top.residues == std::vector<int>{3});
  CHECK(o_top.min_len == 7);
  CHECK(o_top.max_len == 19);

  CHECK(code_of([] { type_constraints(hex11, path_type::S, side_label::left); }) ==
        errc::unsupported_family);
}

TEST_CASE("multi-path bound components") {
  SUBCASE("x = 1 leaves the division component inactive") {
    const multi_path_bound b = multi_path_upper_bound(sq23, 1);
    CHECK_FALSE(b.floor_component.has_value());
    CHECK(b.y_max == 10);
    CHECK(b.active == "path-count");
  }
  SUBCASE("even lengths cap at four simultaneous paths") {
    const multi_path_bound b = multi_path_upper_bound(sq23, 2);
    CHECK(b.floor_component == 24);
    CHECK(b.count_component == 10);
    CHECK(b.c1 == 4);
    CHECK_FALSE(b.c2.has_value());
    CHECK(b.y_max == 4);
    CHECK(b.active == "even-length-cap");
    CHECK(b.tightness_caveat);
  }
  SUBCASE("unrealizable lengths give zero") {
    const multi_path_bound b = multi_path_upper_bound(sq22, 3);
    CHECK(b.c2 == 0);
    CHECK(b.y_max == 0);
    CHECK(b.active == "not-realizable");
    CHECK_FALSE(b.note.empty());
  }
  SUBCASE("the division component wins for long paths") {
    const multi_path_bound b = multi_path_upper_bound(sq22, 17);
    CHECK(b.floor_component == 1);
    CHECK(b.y_max == 1);
    CHECK(b.active == "floor");
    CHECK_FALSE(b.tightness_caveat);
  }
  SUBCASE("lengths beyond the maximum floor to zero") {
    CHECK(multi_path_upper_bound(sq22, 18).y_max == 0);
  }
  SUBCASE("hex and tri use only two components") {
    const multi_path_bound h = multi_path_upper_bound(hex11, 2);
    CHECK_FALSE(h.c1.has_value());
    CHECK_FALSE(h.c2.has_value());
    CHECK(h.y_max == 6);
    CHECK(multi_path_upper_bound(hex11, 7).y_max == 1);
    CHECK(multi_path_upper_bound(tri12, 4).y_max == 2);
    CHECK(multi_path_upper_bound(tri12, 1).y_max == 4);
  }
}

TEST_CASE("path-length sum spectra") {
  const sum_spectrum sq = path_sum_spectrum(sq22);
  CHECK(sq.base == 8);
  CHECK(sq.step == 4);
  CHECK(sq.kmax == 4);
  CHECK(sq.contains(8));
  CHECK(sq.contains(24));
  CHECK_FALSE(sq.contains(10));
  CHECK_FALSE(sq.contains(28));
  CHECK_FALSE(sq.contains(4));

  const sum_spectrum hx = path_sum_spectrum({family::hexagonal, 2, 3});
  CHECK(hx.base == 18);
  CHECK(hx.step == 6);
  CHECK(hx.kmax == 6);

  const sum_spectrum tr = path_sum_spectrum(tri12);
  CHECK(tr.base == 4);
  CHECK(tr.step == 3);
  CHECK(tr.kmax == 2);
  CHECK(tr.value(2) == 10);
}

TEST_CASE("statistics bounds are exact rationals") {
  const stats_bound full = stats_bounds(sq22, 4);
  CHECK(full.mean == rat64(3));
  CHECK(full.max_len == 17);
  CHECK(full.var_bound == rat64(28));

  const stats_bound none = stats_bounds(sq22, 0);
  CHECK(none.mean == rat64(1));
  CHECK(none.max_len == 1);
  CHECK(none.var_bound == rat64(0));

  const stats_bound hex = stats_bounds(hex11, 1);
  CHECK(hex.mean == rat64(2));
  CHECK(hex.max_len == 7);
  CHECK(hex.var_bound == rat64(5));

  const stats_bound tri = stats_bounds(tri12, 2);
  CHECK(tri.mean == rat64(5, 2));
  CHECK(tri.max_len == 7);
  CHECK(tri.var_bound == rat64(27, 4));

  CHECK(code_of([] { stats_bounds(sq22, 5); }) == errc::out_of_range);
  CHECK(code_of([] { stats_bounds(sq22, -1); }) == errc::out_of_range);
}
