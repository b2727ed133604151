#include "ppmesh/advisor.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "ppmesh/errors.hpp"

using namespace ppmesh;

namespace {

bool violates(const feasibility_report& r, const std::string& constraint) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const constraint_violation& v) { return v.constraint == constraint; });
}

std::string detail_of(const feasibility_report& r, const std::string& constraint) {
  for (const constraint_violation& v : r.violations)
    if (v.constraint == constraint) return v.detail;
  return {};
}

}  // namespace

TEST_CASE("a comfortably small request passes on 2x2") {
  const feasibility_report r = check_feasibility(2, 2, {2, 4, 6, 8});
  CHECK(r.passed());
  CHECK(r.violations.empty());
  CHECK(feasibility_verdict_name(r.verdict) == std::string("passes_necessary"));
  // passing is a screen, not a guarantee; the scaling remark still applies
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("factor 2") != std::string::npos);
}

TEST_CASE("each necessary condition is reported by name") {
  SUBCASE("a length beyond the longest route") {
    const feasibility_report r = check_feasibility(2, 2, {1, 18});
    CHECK(!r.passed());
    CHECK(violates(r, "max-path-length"));
    CHECK(detail_of(r, "max-path-length").find("18 > 17") != std::string::npos);
  }
  SUBCASE("a sum beyond the mesh capacity") {
    const feasibility_report r = check_feasibility(2, 2, {1, 2, 4, 5, 8, 10});
    CHECK(!r.passed());
    CHECK(!violates(r, "max-path-length"));
    CHECK(violates(r, "path-sum-capacity"));
    CHECK(detail_of(r, "path-sum-capacity").find("30") != std::string::npos);
    CHECK(detail_of(r, "path-sum-capacity").find("24") != std::string::npos);
  }
  SUBCASE("more lengths than the mesh has paths") {
    const feasibility_report r =
        check_feasibility(1, 1, {1, 1, 1, 1, 1});
    CHECK(violates(r, "path-count"));
  }
  SUBCASE("a length no route can have") {
    const feasibility_report r = check_feasibility(2, 2, {3});
    CHECK(!r.passed());
    CHECK(violates(r, "per-length-realizability"));
    CHECK(detail_of(r, "per-length-realizability").find("odd") != std::string::npos);
  }
  SUBCASE("a full set of paths whose mean cannot be attained") {
    const feasibility_report r = check_feasibility(2, 2, {1, 1, 1, 1, 2, 4, 5, 10});
    CHECK(!r.passed());
    CHECK(violates(r, "mean-format"));
    CHECK(detail_of(r, "mean-format").find("3.125") != std::string::npos);
  }
}

TEST_CASE("the even-length copy cap depends on the mesh size") {
  const std::vector<long long> five_twos{2, 2, 2, 2, 2};

  const feasibility_report big = check_feasibility(4, 4, five_twos);
  CHECK(!big.passed());
  CHECK(violates(big, "even-length-multiplicity"));

  const feasibility_report small = check_feasibility(2, 2, five_twos);
  CHECK(small.passed());
  CHECK(!violates(small, "even-length-multiplicity"));
  const bool skipped = std::any_of(small.notes.begin(), small.notes.end(),
                                   [](const std::string& n) {
                                     return n.find("not checked") != std::string::npos;
                                   });
  CHECK(skipped);
}

TEST_CASE("all violations are collected, not just the first") {
  const feasibility_report r = check_feasibility(1, 1, {3, 6, 7, 11, 50});
  CHECK(violates(r, "max-path-length"));
  CHECK(violates(r, "path-sum-capacity"));
  CHECK(violates(r, "path-count"));
  CHECK(r.violations.size() >= 3);
}

TEST_CASE("growing a square mesh until the request clears") {
  SUBCASE("short even lengths need 2x2") {
    const square_size_result r = minimal_square_size({2, 4, 6, 8});
    CHECK(r.size == 2);
    REQUIRE(!r.binding_at_previous.empty());
    CHECK(r.binding_at_previous[0].constraint == "max-path-length");
  }
  SUBCASE("the arithmetic sequence from the worked example needs 5x5") {
    const square_size_result r = minimal_square_size({6, 10, 14, 18, 22, 26});
    CHECK(r.size == 5);
    bool sum_bound = false;
    for (const constraint_violation& v : r.binding_at_previous)
      if (v.constraint == "path-sum-capacity" &&
          v.detail.find("96") != std::string::npos &&
          v.detail.find("80") != std::string::npos)
        sum_bound = true;
    CHECK(sum_bound);
  }
  SUBCASE("a trivial request needs no growth") {
    const square_size_result r = minimal_square_size({1});
    CHECK(r.size == 1);
    CHECK(r.binding_at_previous.empty());
  }
  SUBCASE("some requests never fit a square") {
    try {
      minimal_square_size({3, 5, 7, 9, 11, 13});
      FAIL("expected no_size_within_cap");
    } catch (const error& e) {
      CHECK(e.code() == errc::no_size_within_cap);
    }
  }
}

TEST_CASE("the rectangular frontier keeps only Pareto-minimal passing sizes") {
  SUBCASE("odd lengths that no square accepts fit a 1x8 strip") {
    const frontier_result f = minimal_sizes({3, 5, 7, 9, 11, 13});
    const std::vector<std::pair<int, int>> expected{{1, 8}, {8, 1}};
    CHECK(f.sizes == expected);
  }
  SUBCASE("short even lengths") {
    const frontier_result f = minimal_sizes({2, 4, 6, 8});
    const std::vector<std::pair<int, int>> expected{{1, 3}, {2, 2}, {3, 1}};
    CHECK(f.sizes == expected);
  }
  SUBCASE("a single unit length fits everywhere") {
    const frontier_result f = minimal_sizes({1});
    CHECK(f.sizes == std::vector<std::pair<int, int>>{{1, 1}});
  }
  SUBCASE("frontier entries are mutually incomparable") {
    const frontier_result f = minimal_sizes({6, 10, 14, 18, 22, 26});
    REQUIRE(!f.sizes.empty());
    for (size_t i = 1; i < f.sizes.size(); ++i) {
      CHECK(f.sizes[i].first > f.sizes[i - 1].first);
      CHECK(f.sizes[i].second < f.sizes[i - 1].second);
    }
    for (const auto& [n, m] : f.sizes) {
      CHECK(check_feasibility(n, m, {6, 10, 14, 18, 22, 26}).passed());
      if (m > 1) CHECK(!check_feasibility(n, m - 1, {6, 10, 14, 18, 22, 26}).passed());
      if (n > 1) CHECK(!check_feasibility(n - 1, m, {6, 10, 14, 18, 22, 26}).passed());
    }
  }
}

TEST_CASE("degenerate requests are rejected up front") {
  for (auto&& bad : {std::vector<long long>{}, {0}, {-2, 4}}) {
    try {
      check_feasibility(2, 2, bad);
      FAIL("expected invalid_argument");
    } catch (const error& e) {
      CHECK(e.code() == errc::invalid_argument);
    }
    CHECK_THROWS_AS(minimal_square_size(bad), error);
    CHECK_THROWS_AS(minimal_sizes(bad), error);
  }
  CHECK_THROWS_AS(check_feasibility(0, 2, {1}), error);
}
