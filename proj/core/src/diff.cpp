#include "dualtrace/diff.hpp"

#include <algorithm>
#include <string>

#include "dualtrace/errors.hpp"

namespace dualtrace {
namespace {

using Kind = EditOp::Kind;

// Appends one op, merging with the previous op of the same kind.
void push(DiffDelta& out, Kind kind, std::size_t n, std::u32string_view text = {}) {
  if (n == 0) return;
  if (!out.empty() && out.back().kind == kind) {
    out.back().count += n;
    if (kind == Kind::ins) out.back().text.append(text);
    return;
  }
  EditOp op;
  op.kind = kind;
  op.count = n;
  if (kind == Kind::ins) op.text = std::u32string(text);
  out.push_back(std::move(op));
}

// Greedy forward Myers search keeping every V frontier for the backtrack.
// Memory is O(D^2), fine once common prefix and suffix are trimmed.
void myers(std::u32string_view a, std::u32string_view b, DiffDelta& out) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (n == 0) {
    push(out, Kind::ins, b.size(), b);
    return;
  }
  if (m == 0) {
    push(out, Kind::del, a.size());
    return;
  }
  const int max_d = n + m;
  const int off = max_d + 1;
  std::vector<int> v(2 * max_d + 3, 0);
  std::vector<std::vector<int>> trace;

  int final_d = -1;
  for (int d = 0; d <= max_d && final_d < 0; ++d) {
    trace.push_back(v);
    for (int k = -d; k <= d; k += 2) {
      int x = (k == -d || (k != d && v[off + k - 1] < v[off + k + 1])) ? v[off + k + 1]
                                                                        : v[off + k - 1] + 1;
      int y = x - k;
      while (x < n && y < m && a[x] == b[y]) {
        ++x;
        ++y;
      }
      v[off + k] = x;
      if (x >= n && y >= m) {
        final_d = d;
        break;
      }
    }
  }

  // Backtrack into a reversed list of (kind, a-index, b-index) steps.
  struct Step {
    Kind kind;
    int ai;
    int bi;
  };
  std::vector<Step> steps;
  int x = n;
  int y = m;
  for (int d = final_d; d > 0; --d) {
    const auto& pv = trace[d];
    const int k = x - y;
    const bool down = (k == -d || (k != d && pv[off + k - 1] < pv[off + k + 1]));
    const int prev_k = down ? k + 1 : k - 1;
    const int prev_x = pv[off + prev_k];
    const int prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y && (down ? x > prev_x : x > prev_x + 1)) {
      --x;
      --y;
      steps.push_back({Kind::keep, x, y});
    }
    if (down) {
      steps.push_back({Kind::ins, x, prev_y});
    } else {
      steps.push_back({Kind::del, prev_x, y});
    }
    x = prev_x;
    y = prev_y;
  }
  while (x > 0 && y > 0) {
    --x;
    --y;
    steps.push_back({Kind::keep, x, y});
  }
  std::reverse(steps.begin(), steps.end());

  // Emit, reordering each change run so deletions come first.
  std::size_t i = 0;
  while (i < steps.size()) {
    if (steps[i].kind == Kind::keep) {
      push(out, Kind::keep, 1);
      ++i;
      continue;
    }
    std::size_t dels = 0;
    std::u32string ins;
    while (i < steps.size() && steps[i].kind != Kind::keep) {
      if (steps[i].kind == Kind::del) {
        ++dels;
      } else {
        ins.push_back(b[steps[i].bi]);
      }
      ++i;
    }
    push(out, Kind::del, dels);
    push(out, Kind::ins, ins.size(), ins);
  }
}

}  // namespace

DiffDelta diff(std::u32string_view new_text, std::u32string_view old_text) {
  DiffDelta out;
  const auto& a = old_text;
  const auto& b = new_text;
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  push(out, Kind::keep, prefix);
  myers(a.substr(prefix, a.size() - prefix - suffix), b.substr(prefix, b.size() - prefix - suffix),
        out);
  push(out, Kind::keep, suffix);
  return out;
}

std::u32string apply_delta(std::u32string_view old_text, const DiffDelta& delta) {
  std::u32string out;
  std::size_t pos = 0;
  for (const auto& op : delta) {
    switch (op.kind) {
      case Kind::keep:
      case Kind::del:
        if (op.count > old_text.size() - pos) {
          throw ReconstructionError("edit span of " + std::to_string(op.count) +
                                    " at offset " + std::to_string(pos) +
                                    " overruns text of length " +
                                    std::to_string(old_text.size()));
        }
        if (op.kind == Kind::keep) out.append(old_text.substr(pos, op.count));
        pos += op.count;
        break;
      case Kind::ins:
        out.append(op.text);
        break;
    }
  }
  if (pos != old_text.size()) {
    throw ReconstructionError("edit script covers " + std::to_string(pos) + " of " +
                              std::to_string(old_text.size()) + " symbols");
  }
  return out;
}

std::size_t edit_length(const DiffDelta& delta) noexcept {
  std::size_t n = 0;
  for (const auto& op : delta) {
    if (op.kind != Kind::keep) n += op.count;
  }
  return n;
}

}  // namespace dualtrace
