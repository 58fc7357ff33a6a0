#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace dualtrace {

struct EditOp {
  enum class Kind { keep, del, ins };

  Kind kind = Kind::keep;
  std::size_t count = 0;  // keep/del span; equals text.size() for ins
  std::u32string text;    // ins only

  static EditOp keep(std::size_t n) { return {Kind::keep, n, {}}; }
  static EditOp del(std::size_t n) { return {Kind::del, n, {}}; }
  static EditOp ins(std::u32string s) {
    const auto n = s.size();
    return {Kind::ins, n, std::move(s)};
  }

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

/// Edit script turning an old text into a new one.
using DiffDelta = std::vector<EditOp>;

/// Minimal edit script (Myers O(ND)) from old_text to new_text. Argument
/// order follows delta(new, old). Within each change run deletions precede
/// insertions and adjacent ops of the same kind are merged.
DiffDelta diff(std::u32string_view new_text, std::u32string_view old_text);

/// Applies a script to old_text. Throws ReconstructionError when a keep or
/// delete span runs past the end of old_text.
std::u32string apply_delta(std::u32string_view old_text, const DiffDelta& delta);

/// Total inserted plus deleted symbols.
std::size_t edit_length(const DiffDelta& delta) noexcept;

}  // namespace dualtrace
