#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dualtrace/trace_model.hpp"

namespace dualtrace {

struct DswStepInput {
  Dsw dsw;
  std::int64_t cursor = 0;
  std::int64_t selection_start = 0;  // equals cursor without a selection
  std::int64_t back_counter = 0;
  std::int64_t canc_counter = 0;
  std::int64_t doc_length = 0;
  std::int64_t prev_doc_length = 0;  // length at the previous pass
};

struct DswStepResult {
  std::optional<TextSnapshot> snapshot;
  Dsw next;
};

/// Net signed length change since the previous pass. CANC deletions and any
/// other shrinkage show up as negative values, insertions as positive ones.
std::int64_t compute_offset(std::int64_t canc_counter, std::int64_t doc_length,
                            std::int64_t prev_doc_length);

/// One pass of the dynamic snapshot window. The tuned window is
///   left  = max(0, min(min(dsw.left, selectionStart), min(dsw.left - back, cPos)))
///   right = min(docLength, max(dsw.right, cPos))
/// and no snapshot is produced when it is empty and both counters are zero.
/// Throws StepError (before touching anything) when the input is invalid or
/// doc does not have input.doc_length symbols.
DswStepResult dsw_step(const DswStepInput& input, std::u32string_view doc,
                       Timestamp now, std::int64_t pass_id);

/// Stateful editor-side logger driving dsw_step across passes.
class DswLogger {
 public:
  /// Pass 0: the whole initial text.
  TextSnapshot start(std::u32string_view doc, std::int64_t cursor,
                     std::int64_t selection_start, Timestamp now);

  void note_backspace(std::int64_t n = 1) noexcept { back_counter_ += n; }
  void note_canc(std::int64_t n = 1) noexcept { canc_counter_ += n; }

  /// Counters are reset only when the step succeeds.
  std::optional<TextSnapshot> pass(std::u32string_view doc, std::int64_t cursor,
                                   std::int64_t selection_start, Timestamp now);

  bool pending() const noexcept { return back_counter_ != 0 || canc_counter_ != 0; }
  const Dsw& window() const noexcept { return dsw_; }
  std::int64_t next_pass_id() const noexcept { return next_pass_; }

 private:
  Dsw dsw_;
  std::int64_t back_counter_ = 0;
  std::int64_t canc_counter_ = 0;
  std::int64_t prev_length_ = 0;
  std::int64_t next_pass_ = 0;
};

/// Browser-side logger: whole-text diff against the previous pass.
class DiffLogger {
 public:
  TextSnapshot start(std::u32string_view doc, Timestamp now);
  /// Absent when the text did not change.
  std::optional<TextSnapshot> pass(std::u32string_view doc, Timestamp now);

  std::int64_t next_pass_id() const noexcept { return next_pass_; }

 private:
  std::u32string previous_;
  std::int64_t next_pass_ = 0;
};

/// Replaces prior[w.left, w.left + w.width() - offset) with the window text.
std::u32string splice_snapshot(std::u32string_view prior, const TextSnapshot& s);

/// Full document after every logged pass. Editor snapshots are spliced,
/// browser snapshots replay their delta. Throws ReconstructionError naming
/// the pass on any out-of-bounds splice.
std::vector<PassState> reconstruct(std::span<const TextSnapshot> snapshots);

/// Ordering checks shared by the text-log reader and reconstruct.
void validate_snapshots(std::span<const TextSnapshot> snapshots);

}  // namespace dualtrace
