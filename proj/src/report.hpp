#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "attain.hpp"
#include "chains.hpp"
#include "extremal.hpp"
#include "hyp.hpp"
#include "lym.hpp"
#include "model.hpp"

namespace sperner {

inline constexpr const char* tool_version = "1.0.0";

// JSON fragments reused across reports.
nlohmann::json json_of_mask(SetMask m);
nlohmann::json json_of_family_summary(const Family& f);
nlohmann::json json_of_witness(const HypothesisVerdict& v);
nlohmann::json json_of_lym(const LymReport& rep);
nlohmann::json json_of_family(const Family& f);

// Deterministic envelope; objects serialize with sorted keys, no timestamps.
std::string envelope(const std::string& command, nlohmann::json parameters,
                     nlohmann::json results);

// Command-level API. verdict: 0 holds/attained, 1 violated/unattained,
// 3 budget exhausted before a proof. Errors raise ModelError.
struct CmdOutcome {
  std::string text;  // JSON report (or family document / CSV where noted)
  int verdict = 0;
};

CmdOutcome cmd_bound(const std::string& theorem, int n, int p, int r,
                     const std::string& scope_override);
CmdOutcome cmd_check(const Family& f, const std::string& theorem, int r);
CmdOutcome cmd_lym(const Family& f, const std::string& theorem, int r);
CmdOutcome cmd_construct(const std::string& kind, int n, int p, int r);  // family document
CmdOutcome cmd_search(const std::string& theorem, int n, int p, int r, long long budget_ms);
CmdOutcome cmd_separate_count(int n, const std::vector<int>& shape);
CmdOutcome cmd_separate_max(const Family& f, bool sampled, std::uint64_t samples,
                            std::uint64_t seed);
CmdOutcome cmd_attain(int n, int p, int r);  // r = 0: table only
CmdOutcome cmd_attain_sweep(int r_lo, int r_hi, int p_lo, int p_hi, int n_lo, int n_hi);  // CSV

}  // namespace sperner
