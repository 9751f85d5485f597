#include "uoce/core/opinion.hpp"

#include <algorithm>

#include "uoce/core/diagnostics.hpp"
#include "uoce/core/normalize.hpp"

namespace uoce {

namespace {

constexpr std::array<std::string_view, kSlotCount> kKeys = {
    "at", "ac", "te", "se", "sp", "si", "hs", "he", "q", "r"};

constexpr std::array<std::string_view, kSlotCount> kNames = {
    "aspect term",     "aspect category", "target entity",
    "sentiment expression", "sentiment polarity", "sentiment intensity",
    "holder span",     "holder entity",   "qualifier",
    "reason"};

constexpr std::array<Slot, 5> kAcosSlots = {Slot::TargetEntity, Slot::AspectCategory,
                                            Slot::AspectTerm, Slot::SentimentPolarity,
                                            Slot::SentimentExpression};
constexpr std::array<Slot, 3> kAsteSlots = {Slot::AspectTerm, Slot::SentimentPolarity,
                                            Slot::SentimentExpression};

std::size_t index(Slot s) { return static_cast<std::size_t>(s); }

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

}  // namespace

std::string_view slot_key(Slot slot) { return kKeys[index(slot)]; }
std::string_view slot_name(Slot slot) { return kNames[index(slot)]; }

std::optional<Slot> slot_from_key(std::string_view key) {
  for (Slot s : kAllSlots) {
    if (slot_key(s) == key) return s;
  }
  return std::nullopt;
}

bool is_required(Slot slot) {
  switch (slot) {
    case Slot::AspectCategory:
    case Slot::TargetEntity:
    case Slot::SentimentPolarity:
    case Slot::SentimentIntensity:
    case Slot::HolderEntity:
      return true;
    default:
      return false;
  }
}

bool is_span(Slot slot) {
  switch (slot) {
    case Slot::AspectTerm:
    case Slot::SentimentExpression:
    case Slot::HolderSpan:
    case Slot::Qualifier:
    case Slot::Reason:
      return true;
    default:
      return false;
  }
}

std::optional<Polarity> parse_polarity(std::string_view v) {
  if (v == "positive") return Polarity::Positive;
  if (v == "negative") return Polarity::Negative;
  if (v == "neutral") return Polarity::Neutral;
  return std::nullopt;
}

std::optional<Intensity> parse_intensity(std::string_view v) {
  if (v == "weak") return Intensity::Weak;
  if (v == "average") return Intensity::Average;
  if (v == "strong") return Intensity::Strong;
  return std::nullopt;
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Neutral: return "neutral";
  }
  return "";
}

std::string_view to_string(Intensity i) {
  switch (i) {
    case Intensity::Weak: return "weak";
    case Intensity::Average: return "average";
    case Intensity::Strong: return "strong";
  }
  return "";
}

OpinionTuple& OpinionTuple::set(Slot slot, std::string_view raw) {
  values_[index(slot)] = normalize_value(raw);
  return *this;
}

OpinionTuple& OpinionTuple::clear(Slot slot) {
  values_[index(slot)].reset();
  return *this;
}

std::size_t OpinionTuple::present_count() const {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); }));
}

std::optional<Polarity> OpinionTuple::polarity() const {
  const auto& v = get(Slot::SentimentPolarity);
  return v ? parse_polarity(*v) : std::nullopt;
}

std::optional<Intensity> OpinionTuple::intensity() const {
  const auto& v = get(Slot::SentimentIntensity);
  return v ? parse_intensity(*v) : std::nullopt;
}

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::Books: return "Books";
    case Domain::Clothing: return "Clothing";
    case Domain::Hotel: return "Hotel";
    case Domain::Restaurant: return "Restaurant";
    case Domain::Laptop: return "Laptop";
  }
  return "";
}

std::optional<Domain> parse_domain(std::string_view text) {
  const std::string lower = ascii_lower(text);
  for (Domain d : {Domain::Books, Domain::Clothing, Domain::Hotel, Domain::Restaurant,
                   Domain::Laptop}) {
    if (ascii_lower(to_string(d)) == lower) return d;
  }
  return std::nullopt;
}

std::string_view to_string(TaskKind task) {
  switch (task) {
    case TaskKind::UOCE: return "uoce";
    case TaskKind::ACOS: return "acos";
    case TaskKind::ASTE: return "aste";
  }
  return "";
}

std::optional<TaskKind> parse_task(std::string_view text) {
  const std::string lower = ascii_lower(text);
  if (lower == "uoce") return TaskKind::UOCE;
  if (lower == "acos") return TaskKind::ACOS;
  if (lower == "aste") return TaskKind::ASTE;
  return std::nullopt;
}

std::span<const Slot> task_slots(TaskKind task) {
  switch (task) {
    case TaskKind::UOCE: return kAllSlots;
    case TaskKind::ACOS: return kAcosSlots;
    case TaskKind::ASTE: return kAsteSlots;
  }
  return {};
}

bool task_has_slot(TaskKind task, Slot slot) {
  const auto slots = task_slots(task);
  return std::find(slots.begin(), slots.end(), slot) != slots.end();
}

OpinionTuple project_tuple(const OpinionTuple& tuple, TaskKind task) {
  OpinionTuple out = tuple;
  for (Slot s : kAllSlots) {
    if (!task_has_slot(task, s)) out.clear(s);
  }
  return out;
}

std::string_view to_string(Severity s) { return s == Severity::Error ? "error" : "warning"; }

std::string format_diagnostic(const Diagnostic& d) {
  std::string out(to_string(d.severity));
  out += " [" + d.code + "]";
  if (!d.location.empty()) out += " " + d.location;
  out += ": " + d.message;
  return out;
}

}  // namespace uoce
