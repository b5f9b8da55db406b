#pragma once

#include "k3ball/lattice.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace k3ball {

constexpr std::uint64_t kDefaultSeed = 0x4B334C;

enum class CheckStatus { Pass, Fail, Skip };
std::string to_string(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct CheckReport {
  std::string check;
  std::string anchor;
  CheckStatus status = CheckStatus::Skip;
  nlohmann::json witness;
  /// Wall time; left empty unless timing was requested so reports stay reproducible.
  std::optional<std::int64_t> millis;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

void to_json(nlohmann::json& j, const CheckReport& r);
void from_json(const nlohmann::json& j, CheckReport& r);

struct CheckOutcome {
  bool pass = false;
  nlohmann::json witness;
};

struct CheckDef {
  std::string id;
  std::string anchor;
  std::function<CheckOutcome(std::uint64_t seed)> run;
};

/// Every check in report order.
const std::vector<CheckDef>& check_registry();

/// Ids matching a pattern: "all", an exact id, a dotted prefix ("disc" matches
/// "disc.anti.s_t"), or a glob with '*'. Throws std::invalid_argument when nothing matches.
std::vector<std::string> select_checks(const std::string& pattern);

/// Runs the selected checks with up to `jobs` in flight; output order is registry order.
std::vector<CheckReport> run_suite(const std::string& pattern, std::uint64_t seed, unsigned jobs = 1,
                                   bool timing = false);
CheckReport run_check(const CheckDef& def, std::uint64_t seed, bool timing = false);

bool all_passed(const std::vector<CheckReport>& reports);
nlohmann::json reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);

/// Exhaustive scan of T over the box [-2, 2]^12.
struct BoxScan {
  using Vec = std::array<std::int8_t, 12>;
  struct Root {
    Vec v;
    std::int8_t m1, m2;  // <r, rho r>, <r, rho^2 r>
    bool negative_definite;
  };
  std::vector<Vec> isotropic;  // nonzero, norm 0
  std::vector<Root> roots;     // norm -2
  std::uint64_t scanned = 0;
};
const BoxScan& t_box_scan();
LatticeVec to_lattice_vec(const BoxScan::Vec& v);

/// Deterministic picks of vectors with h(a, a) = -1 from the box scan.
std::vector<LatticeVec> sample_unit_vectors(std::uint64_t seed, std::size_t count);

/// #{alpha in A_T : q(alpha) = -4/5} / +-1 with a (-2)-vector realizing each class.
CheckReport lines_census_check();

}  // namespace k3ball
