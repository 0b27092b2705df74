#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frechet::cli {

struct Profile {
  std::string name;
  /// Meijer-G vs quadrature tolerance, relative to max(1, |oracle|).
  double cross_path_tol;
};

/// "default" (1e-8) or "strict" (1e-9).
std::optional<Profile> find_profile(std::string_view name);

struct CheckOutcome {
  bool passed;
  std::string detail;
};

struct Check {
  std::string name;
  std::function<CheckOutcome(const Profile&)> run;
};

const std::vector<Check>& selfcheck_suite();

/// Runs every check, one PASS/FAIL line each. Returns true iff all pass.
bool run_selfcheck(const Profile& profile, std::ostream& out);

}  // namespace frechet::cli
