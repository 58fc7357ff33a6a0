#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualtrace/trace_model.hpp"

namespace dualtrace {

// All logs are UTF-8, one JSON object per line. Blank lines are ignored.
//
//   keystroke: {"id","kind":"down"|"up","key","position","t_ms"}
//   text:      {"pass","text","dsw":[l,r],"offset","t_ms","source"[,"delta"]}
//   dual:      keystroke fields + {"status"[,"rule"][,"ime"][,"correction"]}

/// Validates dense ascending keydown ids, keyup pairing and monotone time.
std::vector<KeyEvent> parse_keystroke_log(std::string_view bytes);
std::string write_keystroke_log(std::span<const KeyEvent> events);

/// Requires pass 0 first; pass ids strictly ascending; time monotone.
std::vector<TextSnapshot> parse_text_log(std::string_view bytes);
std::string write_text_log(std::span<const TextSnapshot> snapshots);

std::string write_dual_trace(std::span<const DualTraceEvent> events);
std::vector<DualTraceEvent> parse_dual_trace(std::string_view bytes);

std::string_view to_string(AlignmentStatus s) noexcept;
std::string_view to_string(SnapshotSource s) noexcept;

/// Whole-file helpers; throw std::runtime_error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace dualtrace
