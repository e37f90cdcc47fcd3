#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hilbloc/poly.hpp"
#include "hilbloc/rational.hpp"

namespace hilbloc {

/// quick: n <= 3 (seconds); standard: n <= 5; long: adds n = 6, 7 and twist orders 6-8.
enum class Profile { Quick, Standard, Long };

Profile parse_profile(const std::string& name);
std::string to_string(Profile p);

enum class Status { Pass, Fail, Warn };

struct CheckResult {
  int id = 0;
  std::string title;
  Status status = Status::Pass;
  std::string detail;
};

/// "PASS [3] title: detail"
std::string format_line(const CheckResult& r);

/// Published low-order expansions of log A_r and B_r: entry m is the z^m
/// coefficient as a polynomial in r, for m <= 5.
std::vector<Poly> published_log_a();
std::vector<Poly> published_b();

/// Runs one acceptance check (1..10). Never throws: errors become FAIL.
CheckResult run_check(int id, Profile profile);

/// All checks in order; `on_result` is called as each one finishes.
std::vector<CheckResult> run_acceptance(Profile profile,
                                        const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace hilbloc
