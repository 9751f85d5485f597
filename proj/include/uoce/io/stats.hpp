#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "uoce/core/opinion.hpp"
#include "uoce/io/dataset.hpp"

namespace uoce::io {

struct SlotStats {
  std::size_t total = 0;   // opinions with the slot present
  std::size_t unique = 0;  // distinct normalized values

  friend bool operator==(const SlotStats&, const SlotStats&) = default;
};

struct DatasetStats {
  std::size_t sentences = 0;
  std::size_t opinions = 0;
  std::array<SlotStats, kSlotCount> slots{};

  const SlotStats& operator[](Slot s) const { return slots[static_cast<std::size_t>(s)]; }
  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

DatasetStats dataset_stats(std::span<const SentenceRecord> records);
inline DatasetStats dataset_stats(const DatasetFile& ds) { return dataset_stats(ds.records); }

}  // namespace uoce::io
