#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairtest/classify.hpp"
#include "fairtest/model.hpp"
#include "fairtest/mr.hpp"
#include "json.hpp"

namespace fairtest {

// Sorted, duplicate-free category ids.
using Combination = std::vector<std::string>;

Combination make_combination(std::vector<std::string> categories);
std::string join_combination(const Combination& c, char sep = ';');

struct PairResult {
  std::string pair_id;
  MRId mr = MRId::MR1;
  std::string source_prompt;
  std::string followup_prompt;
  ModelResponse source_response;
  ModelResponse followup_response;
  Classification source_class;
  Classification followup_class;
  Combination combination;
};

struct ViolationRecord {
  std::string pair_id;
  MRId mr = MRId::MR1;
  bool sentiment_violation = false;
  bool tone_violation = false;
  Combination combination;
  std::string campaign_id;
  bool errored = false;
  std::string error;  // "<stage>: <kind>: <message>" when errored
  // Full classifications, kept for distribution-level analysis.
  std::optional<Classification> source_class;
  std::optional<Classification> followup_class;
};

nlohmann::json to_json(const ViolationRecord& r);
ViolationRecord violation_from_json(const nlohmann::json& j);

// Throws PreconditionError when the two classifications come from different
// classifiers.
ViolationRecord check_pair(const PairResult& pair, const std::string& campaign_id);

ViolationRecord errored_pair(std::string pair_id, MRId mr, Combination combination,
                             std::string campaign_id, std::string error);

struct MrCounts {
  std::size_t attempted = 0;
  std::size_t pairs = 0;  // counted, i.e. attempted minus errored
  std::size_t errored = 0;
  std::size_t sentiment_faults = 0;
  std::size_t tone_faults = 0;
  bool operator==(const MrCounts&) const = default;
};

struct ComboCounts {
  std::size_t pairs = 0;
  std::size_t sentiment_faults = 0;
  std::size_t tone_faults = 0;
  bool operator==(const ComboCounts&) const = default;
};

struct CampaignReport {
  nlohmann::json config_echo;
  std::string campaign_id;
  std::vector<MRId> mrs;
  std::map<MRId, MrCounts> per_mr;
  // Ordered by MR, then combination.
  std::map<std::pair<MRId, Combination>, ComboCounts> per_combination;

  bool operator==(const CampaignReport&) const = default;
};

// Stable id of a campaign configuration echo.
std::string campaign_id_of(const nlohmann::json& config_echo);

// Rows exist for every (observed combination, configured MR), zeros included.
// Throws MixedCampaign when a record's campaign id differs from the echo's.
CampaignReport aggregate(const std::vector<ViolationRecord>& records,
                         const nlohmann::json& config_echo, const std::vector<MRId>& mrs);

enum class Metric { kTone, kSentiment };

struct RankedCombination {
  Combination combination;
  std::size_t faults = 0;
};

// Totals over all MRs, descending; ties in lexicographic combination order.
std::vector<RankedCombination> top_combinations(const CampaignReport& report, Metric metric,
                                                std::size_t n);

}  // namespace fairtest
