#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairtest/catalog.hpp"
#include "fairtest/text.hpp"
#include "json.hpp"

namespace fairtest {

enum class Position { kBegin, kMiddle, kEnd };

std::string_view to_string(Position p) noexcept;
Position parse_position(std::string_view s);

// An attribute slot. In a template only category/kind/position/glue are set;
// a filled slot also carries the chosen value and its surface text.
// `lead`/`trail` are glue text rendered only while the slot is present.
struct Slot {
  std::string category;
  RealizationKind kind = RealizationKind::kAdjective;
  Position position = Position::kMiddle;
  std::string lead;
  std::string trail;
  std::string value;
  std::string surface;

  bool filled() const noexcept { return !value.empty(); }
  bool operator==(const Slot&) const = default;
};

// Insertion point for addition relations and attribute moves.
struct Anchor {
  std::string id;
  Position position = Position::kEnd;
  RealizationKind kind = RealizationKind::kAdjective;
  std::vector<std::string> categories;  // empty: any category

  bool accepts(std::string_view category) const;
  bool operator==(const Anchor&) const = default;
};

struct Literal {
  std::string text;
  bool operator==(const Literal&) const = default;
};

// A run of slots rendered as one list: lead + join(items) + trail, or the
// fallback text when the run is empty. Anchor runs start empty.
struct Group {
  ListStyle style = ListStyle::kAnd;
  std::string lead;
  std::string trail;
  std::optional<std::string> fallback;
  std::optional<Anchor> anchor;
  std::vector<Slot> slots;

  bool operator==(const Group&) const = default;
};

using Segment = std::variant<Literal, Group>;
using Segments = std::vector<Segment>;

// Renders and repairs. Used for every prompt the harness emits.
std::string render(const Segments& segments);

// All slots in segment order.
std::vector<const Slot*> slots_of(const Segments& segments);

struct SlottedSentence {
  std::string template_id;
  Segments segments;
  std::map<std::string, std::string> assignment;  // category -> canonical value
  std::string rendered;

  // Rebuilds assignment and rendered text from segments.
  static SlottedSentence from_segments(std::string template_id, Segments segments);

  std::size_t slot_count() const { return assignment.size(); }
  bool operator==(const SlottedSentence&) const = default;
};

nlohmann::json to_json(const Slot& slot);
Slot slot_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Segments& segments);
Segments segments_from_json(const nlohmann::json& j);

}  // namespace fairtest
