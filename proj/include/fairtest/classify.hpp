#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fairtest/http.hpp"
#include "json.hpp"

namespace fairtest {

enum class Sentiment { kPositive, kNegative };

// Declaration order is the argmax tie-break order.
enum class Tone { kHappy, kSad, kAngry, kFear, kSurprised, kNeutral };

inline constexpr std::array<Tone, 6> kAllTones = {Tone::kHappy, Tone::kSad,       Tone::kAngry,
                                                  Tone::kFear,  Tone::kSurprised, Tone::kNeutral};

std::string_view to_string(Sentiment s) noexcept;
std::string_view to_string(Tone t) noexcept;
std::optional<Sentiment> parse_sentiment(std::string_view s) noexcept;
std::optional<Tone> parse_tone(std::string_view s) noexcept;

struct Classification {
  Sentiment sentiment = Sentiment::kPositive;
  Tone tone = Tone::kNeutral;
  double sentiment_score = 0.0;        // [-1, 1]; >= 0 means positive
  std::map<Tone, double> tone_scores;  // every label present, each in [0, 1]
  std::string classifier_id;

  bool operator==(const Classification&) const = default;
};

nlohmann::json to_json(const Classification& c);
// Validates the wire protocol; throws SchemaError.
Classification classification_from_json(const nlohmann::json& j);

// Highest score; ties go to the earliest label in kAllTones.
Tone argmax_tone(const std::map<Tone, double>& scores);

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Classification classify(std::string_view text) const = 0;
  virtual std::string id() const = 0;
};

struct LexiconEntry {
  double weight = 0.0;  // [-1, 1]
  std::vector<Tone> emotions;
};

// One entry per line: `token weight [emotion ...]`. `#` starts a comment.
class Lexicon {
 public:
  static Lexicon parse(std::string_view text);
  static Lexicon load(const std::filesystem::path& path);

  const LexiconEntry* find(std::string_view lower_token) const;
  std::size_t size() const noexcept { return entries_.size(); }
  // Content hash; two lexicons with the same entries share an id.
  const std::string& id() const noexcept { return id_; }

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
  std::string id_;
};

// sentiment_score = sum of nonzero weights / max(1, their count);
// tone_scores = emotion tag counts normalized to 1, or neutral = 1 without any.
// Throws EmptyText.
Classification classify_lexicon(std::string_view text, const Lexicon& lexicon);

class LexiconClassifier : public Classifier {
 public:
  explicit LexiconClassifier(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}
  Classification classify(std::string_view text) const override;
  std::string id() const override { return lexicon_.id(); }

 private:
  Lexicon lexicon_;
};

// POST {endpoint}/classify {"text": ...}. Throws EmptyText, TransportError,
// SchemaError.
Classification classify_remote(std::string_view text, std::string_view endpoint,
                               double timeout_s = 30.0);

class RemoteClassifier : public Classifier {
 public:
  explicit RemoteClassifier(std::string endpoint, double timeout_s = 30.0)
      : endpoint_(std::move(endpoint)), timeout_s_(timeout_s) {}
  Classification classify(std::string_view text) const override;
  std::string id() const override { return "remote:" + endpoint_; }

 private:
  std::string endpoint_;
  double timeout_s_;
};

}  // namespace fairtest
