#include <map>

#include "dualtrace/metrics.hpp"

namespace dualtrace {

TimingDecomposition decompose_timing(std::span<const KeyEvent> keys) {
  struct Stroke {
    const KeyEvent* down = nullptr;
    const KeyEvent* up = nullptr;
  };
  std::map<std::int64_t, Stroke> strokes;
  TimingDecomposition out;
  for (const auto& k : keys) {
    auto& s = strokes[k.id];
    auto& slot = k.is_down() ? s.down : s.up;
    if (slot) {
      out.diagnostics.push_back("duplicate " + std::string(k.is_down() ? "keydown" : "keyup") +
                                " for key " + std::to_string(k.id));
      continue;
    }
    slot = &k;
  }

  const KeyEvent* prev_up = nullptr;
  for (const auto& [id, s] : strokes) {
    if (!s.down) {
      out.diagnostics.push_back("keyup without keydown for key " + std::to_string(id));
      continue;
    }
    if (prev_up) {
      const auto gap = s.down->t - prev_up->t;
      (gap < 0 ? out.rollover : out.positive_iki).push_back(gap);
    }
    if (!s.up) {
      out.diagnostics.push_back("keydown without keyup for key " + std::to_string(id));
      prev_up = nullptr;
      continue;
    }
    out.dwell.push_back(s.up->t - s.down->t);
    prev_up = s.up;
  }
  return out;
}

}  // namespace dualtrace
