#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/code.hpp"
#include "lrc/construct_seq.hpp"

namespace lrc {

enum class VerifyMode { Auto, Exhaustive, Sampled, Certificate };

// Errors: InvalidMode.
VerifyMode parse_verify_mode(const std::string& s);

struct VerifyReport {
    std::string property;
    bool pass = false;
    std::string mode;  // exhaustive, sampled, certificate, or a '+' join of them
    std::optional<std::uint64_t> seed;
    std::uint64_t samples = 0;
    std::uint64_t checked = 0;  // patterns or objects examined
    nlohmann::json witness;     // null unless there is something to show
    nlohmann::json details = nlohmann::json::object();
    nlohmann::json to_json() const;
};

struct SampleOptions {
    VerifyMode mode = VerifyMode::Auto;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

// Supports of dual codewords of weight <= max_weight: rows of H, plus every such dual
// codeword when n <= 14 and the dual is small enough to enumerate.
std::vector<std::vector<int>> low_weight_checks(const LinearCode& c, int max_weight);

// Greedy peeling with the given checks; true when every erased index is recovered.
bool peel(const std::vector<std::vector<int>>& checks_of, const std::vector<std::vector<int>>& checks,
          const std::vector<int>& erased);

VerifyReport seq_recovery_check(const LinearCode& c, int r, int t, const SampleOptions& opt = {});
// Errors: BudgetExceeded.
VerifyReport availability_check(const LinearCode& c, int r, int t);
VerifyReport sa_check(const Mat& H, int r, int t);
// Every delta erasures per group plus s_extra further erasures must be correctable.
VerifyReport pmds_check(const LinearCode& c, const LocalStructure& ls, int delta, int s_extra,
                        const SampleOptions& opt = {});
VerifyReport pmr_check(const LinearCode& c, const LocalStructure& ls);
VerifyReport staircase_check(const Mat& H, int r, int t);
// Errors: NotRateOptimal.
VerifyReport classify_rate_optimal_t2(const LinearCode& c, int r);

nlohmann::json profile_to_json(const StaircaseProfile& p);

}  // namespace lrc
