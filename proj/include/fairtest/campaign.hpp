#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fairtest/catalog.hpp"
#include "fairtest/classify.hpp"
#include "fairtest/detector.hpp"
#include "fairtest/generator.hpp"
#include "fairtest/model.hpp"
#include "fairtest/mr.hpp"
#include "json.hpp"

namespace fairtest {

struct ModelSettings {
  std::string endpoint;  // empty when the simulator is active
  DecodingConfig decoding;
  int max_retries = 3;
  double timeout_s = 60.0;
};

struct ClassifierSettings {
  std::string backend = "lexicon";  // lexicon | remote
  std::filesystem::path lexicon;
  std::string endpoint;
};

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::filesystem::path catalog;
  std::filesystem::path templates;
  std::vector<MRId> mrs;
  KRange k_range{2, 4};
  std::size_t case_cap = 1000;
  ModelSettings model;
  ClassifierSettings classifier;
  std::size_t concurrency = 4;
  double rate_limit = 0.0;  // requests per second; 0 = unlimited
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> simulator;
};

// Relative paths resolve against `base_dir`. Throws ConfigError.
CampaignConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
CampaignConfig load_config(const std::filesystem::path& path);

// Switches decoding to temperature 0.7 / 150 tokens with sampling.
void apply_paper_decoding(CampaignConfig& config);

struct ExecuteStats {
  std::size_t prompts = 0;    // distinct prompts across all pairs
  std::size_t cached = 0;     // answered from the cache
  std::size_t requested = 0;  // sent to the backend
  std::size_t failed = 0;
};

// One end-to-end campaign. Each stage reads the previous stage's files from
// the output directory and writes its own.
class Campaign {
 public:
  explicit Campaign(CampaignConfig config);

  // Replaces the backend built from the config.
  void set_backend(std::unique_ptr<ModelBackend> backend);

  void generate();
  void derive();
  ExecuteStats execute();
  CampaignReport analyze();
  CampaignReport report();
  CampaignReport run();

  const CampaignConfig& config() const noexcept { return config_; }
  const AttributeCatalog& catalog() const noexcept { return catalog_; }
  const std::vector<Template>& templates() const noexcept { return templates_; }
  const nlohmann::json& config_echo() const noexcept { return echo_; }
  std::filesystem::path path(std::string_view file) const { return config_.output_dir / file; }

 private:
  ModelBackend& backend();

  CampaignConfig config_;
  AttributeCatalog catalog_;
  std::vector<Template> templates_;
  std::unique_ptr<Classifier> classifier_;
  std::unique_ptr<ModelBackend> backend_;
  nlohmann::json echo_;
};

}  // namespace fairtest
