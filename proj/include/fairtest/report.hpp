#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fairtest/detector.hpp"
#include "json.hpp"

namespace fairtest {

enum class ArtifactKind { kSummaryText, kPerMrCsv, kPerCombinationCsv, kJsonFull };

struct ReportArtifact {
  ArtifactKind kind;
  std::filesystem::path path;
  std::string checksum;  // fnv1a64 hex of the file content
};

std::string_view to_string(ArtifactKind kind) noexcept;

// Column order: mr,pairs,sentiment_faults,tone_faults
std::string per_mr_csv(const CampaignReport& report);
// Column order: combination,mr,tone_faults,sentiment_faults; combination
// categories joined with ';'.
std::string per_combination_csv(const CampaignReport& report);
std::string summary_text(const CampaignReport& report);
nlohmann::json report_json(const CampaignReport& report);

std::map<MRId, MrCounts> parse_per_mr_csv(const std::string& csv);

// Writes summary.txt, per_mr.csv, per_combination.csv and report.json.
// Throws IoError.
std::vector<ReportArtifact> render(const CampaignReport& report, const std::filesystem::path& out_dir);

}  // namespace fairtest
