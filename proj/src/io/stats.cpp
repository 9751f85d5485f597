#include "uoce/io/stats.hpp"

#include <set>
#include <string>

namespace uoce::io {

DatasetStats dataset_stats(std::span<const SentenceRecord> records) {
  DatasetStats st;
  std::array<std::set<std::string>, kSlotCount> distinct;
  st.sentences = records.size();
  for (const SentenceRecord& r : records) {
    st.opinions += r.opinions.size();
    for (const OpinionTuple& t : r.opinions) {
      for (Slot s : kAllSlots) {
        const auto& v = t.get(s);
        if (!v) continue;
        const auto i = static_cast<std::size_t>(s);
        ++st.slots[i].total;
        distinct[i].insert(*v);
      }
    }
  }
  for (std::size_t i = 0; i < kSlotCount; ++i) st.slots[i].unique = distinct[i].size();
  return st;
}

}  // namespace uoce::io
