#pragma once

#include <array>
#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace fairtest {

enum class RealizationKind { kAdjective, kNounPhrase, kPrepositionalPhrase, kApposition };

// Order tried when a value lacks the requested realization.
inline constexpr std::array<RealizationKind, 4> kFallbackOrder = {
    RealizationKind::kAdjective, RealizationKind::kNounPhrase,
    RealizationKind::kApposition, RealizationKind::kPrepositionalPhrase};

std::string_view to_string(RealizationKind kind) noexcept;
RealizationKind parse_realization_kind(std::string_view s);

struct AttributeValue {
  std::string canonical;
  std::map<RealizationKind, std::string> surface_forms;
  // Alternative surface text per kind, used by semantic paraphrasing.
  std::map<RealizationKind, std::string> paraphrases;
  std::optional<std::string> contrast;

  bool operator==(const AttributeValue&) const = default;
};

struct AttributeCategory {
  std::string id;
  std::vector<AttributeValue> values;

  const AttributeValue* find(std::string_view canonical) const;
  std::size_t index_of(std::string_view canonical) const;

  bool operator==(const AttributeCategory&) const = default;
};

// (category id, canonical value). Ordered by category, then value.
struct AttributeRef {
  std::string category;
  std::string value;

  auto operator<=>(const AttributeRef&) const = default;
  bool operator==(const AttributeRef&) const = default;
};

// Immutable after construction; every instance satisfies the catalog
// invariants (unique ids, >= 2 values per category, valid contrasts,
// unambiguous surface forms).
class AttributeCatalog {
 public:
  AttributeCatalog(std::string version, std::vector<AttributeCategory> categories);

  static AttributeCatalog from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  const std::string& version() const noexcept { return version_; }
  const std::vector<AttributeCategory>& categories() const noexcept { return categories_; }

  bool has_category(std::string_view id) const;
  // Both throw UnknownAttribute.
  const AttributeCategory& category(std::string_view id) const;
  const AttributeValue& value(std::string_view category, std::string_view canonical) const;

  bool operator==(const AttributeCatalog&) const = default;

 private:
  void validate() const;

  std::string version_;
  std::vector<AttributeCategory> categories_;
};

AttributeCatalog load_catalog(const std::filesystem::path& path);
AttributeCatalog parse_catalog(std::string_view text);

// Designated opposing value: the configured contrast, else the next value
// in category order (wrapping). Never returns its input.
std::string contrast_value(const AttributeCatalog& catalog, std::string_view category,
                           std::string_view value);

struct SurfaceForm {
  std::string text;
  RealizationKind kind;  // kind actually used
  bool fallback = false;
};

SurfaceForm surface_form(const AttributeCatalog& catalog, std::string_view category,
                         std::string_view value, RealizationKind kind);

struct Mention {
  AttributeRef attribute;
  std::size_t begin = 0;
  std::size_t end = 0;
};

// Case-insensitive, word-bounded scan of free text for catalog surface forms
// (including paraphrases). Longest match wins at each position; matches
// never overlap.
class MentionIndex {
 public:
  explicit MentionIndex(const AttributeCatalog& catalog);

  std::vector<Mention> scan(std::string_view text) const;
  // Sorted multiset of attributes mentioned in `text`.
  std::vector<AttributeRef> attributes(std::string_view text) const;

 private:
  struct Entry {
    std::vector<std::string> words;
    AttributeRef attribute;
  };
  std::unordered_map<std::string, std::vector<Entry>> by_first_word_;
};

}  // namespace fairtest
