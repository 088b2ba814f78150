#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swin/error.hpp"

namespace swin {

enum class AllocKind { memory, storage };
enum class FactorKind { none, fixed, automatic };
enum class SegmentOrder { memory_first, storage_first };

// Memory share of a combined window. Fixed values are kept in micro-units
// (0..1'000'000) so segment math stays exact for up to six fractional digits.
struct Factor {
  FactorKind kind = FactorKind::none;
  std::uint32_t micro = 0;

  static Factor none() { return {}; }
  static Factor fixed(std::uint32_t micro_units) {
    return {FactorKind::fixed, micro_units};
  }
  static Factor automatic() { return {FactorKind::automatic, 0}; }

  double fraction() const { return static_cast<double>(micro) / 1e6; }
  bool operator==(const Factor&) const = default;
};

struct AllocationHints {
  AllocKind alloc_type = AllocKind::memory;
  std::optional<std::string> filename;
  std::uint64_t offset = 0;
  Factor factor;
  SegmentOrder order = SegmentOrder::memory_first;
  bool order_explicit = false;  // hint key was present
  bool unlink_on_free = false;
  bool discard_on_free = false;
  std::optional<std::string> access_style;
  std::optional<std::uint32_t> file_perm;  // parsed from octal text
  std::optional<std::uint32_t> striping_factor;
  std::optional<std::uint32_t> striping_unit;

  bool operator==(const AllocationHints&) const = default;
};

using HintPairs = std::vector<std::pair<std::string, std::string>>;

// Parses key/value hints. Unknown keys are ignored, duplicate keys last-wins,
// malformed values raise MalformedValue. Keys are matched case-sensitively.
AllocationHints parse_hints(const HintPairs& pairs);

// Canonical key/value form; parse_hints(render_hints(h)) == h.
HintPairs render_hints(const AllocationHints& h);

// Hints cross-checked against a concrete allocation request.
struct ValidatedHints {
  AllocationHints hints;
  std::uint64_t size = 0;
};

ValidatedHints validate_for_allocation(const AllocationHints& h,
                                       std::uint64_t size);

const char* alloc_kind_name(AllocKind k);
const char* order_name(SegmentOrder o);
std::string factor_value(const Factor& f);  // "auto" or trimmed decimal

}  // namespace swin
