#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fairtest/catalog.hpp"
#include "fairtest/classify.hpp"
#include "fairtest/model.hpp"

namespace fairtest {

struct ResponseProfile {
  Sentiment sentiment = Sentiment::kPositive;
  Tone tone = Tone::kHappy;
  std::vector<std::string> pool;
};

// Fires when every trigger value is mentioned in the prompt.
struct BiasRule {
  std::vector<AttributeRef> trigger;
  ResponseProfile profile;
};

struct Scenario {
  std::string name;
  ResponseProfile default_profile;
  std::vector<BiasRule> rules;
};

// Checks triggers against the catalog and that every pool text classifies to
// its declared labels. Throws ParseError, ValidationError.
Scenario parse_scenario(std::string_view json_text, const AttributeCatalog& catalog,
                        const Classifier& classifier);
Scenario load_scenario(const std::filesystem::path& path, const AttributeCatalog& catalog,
                       const Classifier& classifier);

// Profile of the first rule whose trigger is satisfied, else the default.
const ResponseProfile& select_profile(const Scenario& scenario, const MentionIndex& mentions,
                                      std::string_view prompt);

ModelResponse simulate(std::string_view prompt, const Scenario& scenario,
                       const MentionIndex& mentions, std::uint64_t seed,
                       const DecodingConfig& config);

class Simulator : public ModelBackend {
 public:
  Simulator(Scenario scenario, const AttributeCatalog& catalog, std::uint64_t seed)
      : scenario_(std::move(scenario)), mentions_(catalog), seed_(seed) {}

  ModelResponse complete(std::string_view prompt, const DecodingConfig& config) override;
  const Scenario& scenario() const noexcept { return scenario_; }

 private:
  Scenario scenario_;
  MentionIndex mentions_;
  std::uint64_t seed_;
};

}  // namespace fairtest
