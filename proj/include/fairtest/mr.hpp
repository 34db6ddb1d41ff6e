#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairtest/catalog.hpp"
#include "fairtest/generator.hpp"
#include "fairtest/sentence.hpp"
#include "json.hpp"

namespace fairtest {

enum class MRId {
  MR1, MR2, MR3_1, MR3_2, MR4, MR5, MR6_1, MR6_2, MR7, MR8,
  MR9, MR10, MR11, MR12, MR13, MR14, MR15, MR16, MR17
};

inline constexpr std::array<MRId, 19> kAllMRs = {
    MRId::MR1,  MRId::MR2,  MRId::MR3_1, MRId::MR3_2, MRId::MR4,  MRId::MR5,  MRId::MR6_1,
    MRId::MR6_2, MRId::MR7, MRId::MR8,   MRId::MR9,   MRId::MR10, MRId::MR11, MRId::MR12,
    MRId::MR13, MRId::MR14, MRId::MR15,  MRId::MR16,  MRId::MR17};

std::string_view to_string(MRId mr) noexcept;
// Accepts "MR3_1" and "MR3.1". Throws UsageError.
MRId parse_mr(std::string_view s);
std::vector<MRId> parse_mr_list(std::string_view comma_separated);

// True for MR1..MR3_2, whose sources must be attribute-free.
bool is_addition(MRId mr) noexcept;

// --- edit log ---------------------------------------------------------------

struct SlotAddress {
  std::size_t segment = 0;
  std::size_t index = 0;
  bool operator==(const SlotAddress&) const = default;
};

struct InsertSlot { SlotAddress at; Slot slot; };
struct RemoveSlot { SlotAddress at; Slot removed; };
struct ReplaceSlot { SlotAddress at; Slot slot; };
struct MoveSlot { SlotAddress from; SlotAddress to; Slot slot; };
// addresses[i] receives the content previously at addresses[order[i]];
// position tags stay with the location.
struct PermuteSlots { std::vector<SlotAddress> addresses; std::vector<std::size_t> order; };
struct ReplaceLiteral { std::size_t segment = 0; std::string text; };
struct Restructure { VariantKind variant; Segments segments; };

using Edit = std::variant<InsertSlot, RemoveSlot, ReplaceSlot, MoveSlot, PermuteSlots,
                          ReplaceLiteral, Restructure>;

nlohmann::json to_json(const Edit& edit);
Edit edit_from_json(const nlohmann::json& j);
nlohmann::json to_json(const std::vector<Edit>& edits);
std::vector<Edit> edits_from_json(const nlohmann::json& j);

// Applies the edits in order; indices refer to the state before each edit.
SlottedSentence replay(const SlottedSentence& source, const std::vector<Edit>& edits);

struct FollowUp {
  MRId mr;
  SlottedSentence sentence;
  std::vector<Edit> edits;
};

struct ApplicabilityReport {
  MRId mr;
  bool applicable = false;
  std::string reason;
};

using Derived = std::variant<FollowUp, ApplicabilityReport>;
using MrResult = std::variant<std::vector<FollowUp>, ApplicabilityReport>;

// --- relation families -------------------------------------------------------

struct AllSlots {};
struct OneCategory { std::string category; };
struct AtPosition { Position position; };
using RemoveSelector = std::variant<AllSlots, OneCategory, AtPosition>;
using ValueSelector = std::variant<AllSlots, OneCategory>;

enum class ShuffleMode { kAttributePosition, kContext };
enum class PermuteMode { kAttributeOrder, kDemographicData };
enum class ParaphraseMode { kSemantic, kContextual, kStructural };

// Inserts attributes into the first anchor with `anchor_position`
// (or the anchor named `anchor_id` when given).
Derived add_attributes(MRId mr, const SlottedSentence& source,
                       const std::vector<AttributeRef>& attrs, Position anchor_position,
                       const AttributeCatalog& catalog, std::string_view anchor_id = {});
Derived remove_attributes(MRId mr, const SlottedSentence& source, const RemoveSelector& selector);
Derived negate_attributes(MRId mr, const SlottedSentence& source, const ValueSelector& selector,
                          const AttributeCatalog& catalog);
Derived shuffle(MRId mr, const SlottedSentence& source, ShuffleMode mode,
                const std::vector<Template>& templates, const AttributeCatalog& catalog,
                std::uint64_t seed);
Derived permute(MRId mr, const SlottedSentence& source, PermuteMode mode, std::uint64_t seed);
Derived paraphrase(MRId mr, const SlottedSentence& source, ParaphraseMode mode,
                   const std::vector<Template>& templates, const AttributeCatalog& catalog);
Derived substitute(MRId mr, const SlottedSentence& source, const ValueSelector& selector,
                   const AttributeCatalog& catalog, std::uint64_t seed);

struct MrContext {
  const AttributeCatalog& catalog;
  const std::vector<Template>& templates;
};

// Dispatches one relation. MR5, MR7 and MR16 yield one follow-up per slot
// category; the rest yield at most one. A follow-up whose rendering equals the
// source is never returned.
MrResult apply_mr(MRId mr, const SlottedSentence& source, const MrContext& ctx, std::uint64_t seed);

// Seed for one (campaign, case, relation) triple.
std::uint64_t pair_seed(std::uint64_t campaign_seed, std::string_view case_id, MRId mr);

// Attribute-free companion of a source: every slot removed.
SlottedSentence strip_attributes(const SlottedSentence& source);

}  // namespace fairtest
