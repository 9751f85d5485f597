#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uoce {

/// The ten components of an opinion, in canonical order.
enum class Slot : std::size_t {
  AspectTerm,
  AspectCategory,
  TargetEntity,
  SentimentExpression,
  SentimentPolarity,
  SentimentIntensity,
  HolderSpan,
  HolderEntity,
  Qualifier,
  Reason,
};

inline constexpr std::size_t kSlotCount = 10;

inline constexpr std::array<Slot, kSlotCount> kAllSlots = {
    Slot::AspectTerm,          Slot::AspectCategory,    Slot::TargetEntity,
    Slot::SentimentExpression, Slot::SentimentPolarity, Slot::SentimentIntensity,
    Slot::HolderSpan,          Slot::HolderEntity,      Slot::Qualifier,
    Slot::Reason,
};

/// Short key used in files and model output ("at", "ac", ...).
std::string_view slot_key(Slot slot);
/// Human-readable name ("aspect term").
std::string_view slot_name(Slot slot);
std::optional<Slot> slot_from_key(std::string_view key);

/// Slots that must be present in gold data.
bool is_required(Slot slot);
/// Slots whose value is a span copied from the input text.
bool is_span(Slot slot);

enum class Polarity { Positive, Negative, Neutral };
enum class Intensity { Weak, Average, Strong };  // ordered

std::optional<Polarity> parse_polarity(std::string_view normalized);
std::optional<Intensity> parse_intensity(std::string_view normalized);
std::string_view to_string(Polarity p);
std::string_view to_string(Intensity i);

/// One opinion. Every stored value has passed normalize_value; an absent
/// slot is std::nullopt. Enumerated slots keep whatever text was supplied
/// so that validation can report out-of-range values.
class OpinionTuple {
 public:
  OpinionTuple() = default;

  /// Normalizes @p raw before storing; null spellings clear the slot.
  OpinionTuple& set(Slot slot, std::string_view raw);
  OpinionTuple& clear(Slot slot);

  const std::optional<std::string>& get(Slot slot) const {
    return values_[static_cast<std::size_t>(slot)];
  }
  bool has(Slot slot) const { return get(slot).has_value(); }
  std::size_t present_count() const;

  std::optional<Polarity> polarity() const;
  std::optional<Intensity> intensity() const;

  friend bool operator==(const OpinionTuple&, const OpinionTuple&) = default;
  friend auto operator<=>(const OpinionTuple&, const OpinionTuple&) = default;

 private:
  std::array<std::optional<std::string>, kSlotCount> values_{};
};

enum class Domain { Books, Clothing, Hotel, Restaurant, Laptop };

std::string_view to_string(Domain d);
/// Case-insensitive.
std::optional<Domain> parse_domain(std::string_view text);

struct SentenceRecord {
  std::string id;
  Domain domain = Domain::Books;
  std::string text;
  std::vector<OpinionTuple> opinions;

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

enum class TaskKind { UOCE, ACOS, ASTE };

std::string_view to_string(TaskKind task);
std::optional<TaskKind> parse_task(std::string_view text);

/// Slots belonging to a task, in the task's conventional order.
std::span<const Slot> task_slots(TaskKind task);
bool task_has_slot(TaskKind task, Slot slot);

/// Returns a copy of @p tuple with every slot outside the task cleared.
OpinionTuple project_tuple(const OpinionTuple& tuple, TaskKind task);

}  // namespace uoce
