#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairtest/catalog.hpp"
#include "fairtest/sentence.hpp"

namespace fairtest {

enum class VariantKind { kClauseOrder, kContextParaphrase, kStructural };

std::string_view to_string(VariantKind kind) noexcept;

struct Template {
  std::string id;
  Segments segments;
  std::string default_anchor;  // empty: first anchor in text order
  std::map<VariantKind, Segments> variants;

  std::size_t slot_count() const { return slots_of(segments).size(); }
  // Slot categories in text order.
  std::vector<std::string> categories() const;
  std::vector<const Anchor*> anchors() const;
};

// Template markup:
//   [CATEGORY] or [CATEGORY|kind|position]   single slot (defaults: adjective, middle)
//   {style: lead (ilead [SLOT] itrail) [SLOT] trail ~ fallback}
//                                            a run of slots rendered as a list;
//                                            style is and|comma|space (default and)
//   {@anchor_id}                             an insertion point declared under "anchors"
// Throws ParseError on malformed markup.
Segments parse_markup(std::string_view text, const std::map<std::string, Anchor>& anchors);

std::vector<Template> parse_templates(std::string_view json_text);
std::vector<Template> load_templates(const std::filesystem::path& path);

// Checks that every slot and anchor category exists in the catalog.
void validate_templates(const std::vector<Template>& templates, const AttributeCatalog& catalog);

const Template& find_template(const std::vector<Template>& templates, std::string_view id);

// Fills template slots from a category -> value lookup. Used for the main
// text and for variants.
Segments fill_segments(const Segments& segments,
                       const std::map<std::string, std::string>& assignment,
                       const AttributeCatalog& catalog);

SlottedSentence instantiate(const Template& tmpl,
                            const std::map<std::string, std::string>& assignment,
                            const AttributeCatalog& catalog);

struct SourceCase {
  std::string case_id;
  SlottedSentence sentence;
};

struct KRange {
  int lo = 2;
  int hi = 4;
  bool contains(std::size_t k) const { return static_cast<int>(k) >= lo && static_cast<int>(k) <= hi; }
};

struct CaseSet {
  std::vector<SourceCase> cases;
  std::uint64_t seed = 0;
  KRange k_range;
  std::size_t cap = 0;
  std::vector<std::string> templates_used;
};

// Per eligible template: the full Cartesian product of slot values when it
// has at most `cap` assignments, otherwise a seeded sample of `cap` distinct
// assignments. Cases are ordered by template, then by value-index tuple.
CaseSet generate_source_cases(const std::vector<Template>& templates,
                              const AttributeCatalog& catalog, KRange k_range,
                              std::uint64_t seed, std::size_t cap);

// JSONL: {case_id, template_id, assignment, rendered}
void write_cases_jsonl(const CaseSet& cases, std::ostream& out);
// Rebuilds cases by re-instantiating templates; the stored rendering must match.
std::vector<SourceCase> read_cases_jsonl(std::istream& in, const std::vector<Template>& templates,
                                         const AttributeCatalog& catalog);

}  // namespace fairtest
