#include "dualtrace/snapshot_logger.hpp"

#include <algorithm>
#include <string>

#include "dualtrace/diff.hpp"
#include "dualtrace/errors.hpp"

namespace dualtrace {

std::int64_t compute_offset(std::int64_t canc_counter, std::int64_t doc_length,
                            std::int64_t prev_doc_length) {
  (void)canc_counter;
  return doc_length - prev_doc_length;
}

DswStepResult dsw_step(const DswStepInput& in, std::u32string_view doc, Timestamp now,
                       std::int64_t pass_id) {
  if (in.back_counter < 0 || in.canc_counter < 0) throw StepError("negative deletion counter");
  if (in.dsw.left < 0 || in.dsw.left > in.dsw.right) throw StepError("invalid window");
  if (in.cursor < 0 || in.cursor > in.doc_length || in.selection_start < 0 ||
      in.selection_start > in.doc_length) {
    throw StepError("cursor or selection outside the document");
  }
  if (static_cast<std::int64_t>(doc.size()) != in.doc_length) {
    throw StepError("document has " + std::to_string(doc.size()) + " symbols, expected " +
                    std::to_string(in.doc_length));
  }

  Dsw tuned;
  tuned.left = std::min(std::min(in.dsw.left, in.selection_start),
                        std::min(in.dsw.left - in.back_counter, in.cursor));
  tuned.left = std::max<std::int64_t>(0, tuned.left);
  tuned.right = std::max(in.dsw.right, in.cursor);
  tuned.right = std::min(tuned.right, in.doc_length);
  tuned.left = std::min(tuned.left, tuned.right);

  DswStepResult result;
  if (!(tuned.empty() && in.canc_counter == 0 && in.back_counter == 0)) {
    TextSnapshot s;
    s.pass_id = pass_id;
    s.text = std::u32string(doc.substr(static_cast<std::size_t>(tuned.left),
                                       static_cast<std::size_t>(tuned.width())));
    s.offset = compute_offset(in.canc_counter, in.doc_length, in.prev_doc_length);
    s.t = now;
    s.dsw = tuned;
    s.source = SnapshotSource::editor;
    result.snapshot = std::move(s);
  }
  result.next = {std::min(in.cursor, in.selection_start), in.cursor};
  return result;
}

TextSnapshot DswLogger::start(std::u32string_view doc, std::int64_t cursor,
                              std::int64_t selection_start, Timestamp now) {
  const auto len = static_cast<std::int64_t>(doc.size());
  TextSnapshot s;
  s.pass_id = 0;
  s.text = std::u32string(doc);
  s.dsw = {0, len};
  s.t = now;
  dsw_ = {std::min(cursor, selection_start), cursor};
  prev_length_ = len;
  back_counter_ = 0;
  canc_counter_ = 0;
  next_pass_ = 1;
  return s;
}

std::optional<TextSnapshot> DswLogger::pass(std::u32string_view doc, std::int64_t cursor,
                                            std::int64_t selection_start, Timestamp now) {
  DswStepInput in;
  in.dsw = dsw_;
  in.cursor = cursor;
  in.selection_start = selection_start;
  in.back_counter = back_counter_;
  in.canc_counter = canc_counter_;
  in.doc_length = static_cast<std::int64_t>(doc.size());
  in.prev_doc_length = prev_length_;
  auto result = dsw_step(in, doc, now, next_pass_);
  dsw_ = result.next;
  back_counter_ = 0;
  canc_counter_ = 0;
  prev_length_ = in.doc_length;
  ++next_pass_;
  return std::move(result.snapshot);
}

TextSnapshot DiffLogger::start(std::u32string_view doc, Timestamp now) {
  previous_ = std::u32string(doc);
  next_pass_ = 1;
  TextSnapshot s;
  s.pass_id = 0;
  s.text = previous_;
  s.dsw = {0, static_cast<std::int64_t>(doc.size())};
  s.t = now;
  s.source = SnapshotSource::browser;
  return s;
}

std::optional<TextSnapshot> DiffLogger::pass(std::u32string_view doc, Timestamp now) {
  const auto id = next_pass_++;
  if (doc == previous_) return std::nullopt;
  TextSnapshot s;
  s.pass_id = id;
  s.delta = diff(doc, previous_);
  s.offset = static_cast<std::int64_t>(doc.size()) - static_cast<std::int64_t>(previous_.size());
  s.t = now;
  s.source = SnapshotSource::browser;
  previous_ = std::u32string(doc);
  return s;
}

std::u32string splice_snapshot(std::u32string_view prior, const TextSnapshot& s) {
  const auto prior_len = static_cast<std::int64_t>(prior.size());
  const auto extent = s.dsw.width() - s.offset;
  if (s.dsw.left < 0 || extent < 0 || s.dsw.left > prior_len || extent > prior_len - s.dsw.left) {
    throw ReconstructionError("pass " + std::to_string(s.pass_id) + ": splice [" +
                              std::to_string(s.dsw.left) + "," +
                              std::to_string(s.dsw.left + extent) +
                              ") outside prior document of length " + std::to_string(prior_len));
  }
  if (static_cast<std::int64_t>(s.text.size()) != s.dsw.width()) {
    throw ReconstructionError("pass " + std::to_string(s.pass_id) +
                              ": snapshot text length differs from its window");
  }
  std::u32string out;
  out.reserve(prior.size() + s.text.size());
  out.append(prior.substr(0, static_cast<std::size_t>(s.dsw.left)));
  out.append(s.text);
  out.append(prior.substr(static_cast<std::size_t>(s.dsw.left + extent)));
  return out;
}

void validate_snapshots(std::span<const TextSnapshot> snapshots) {
  if (snapshots.empty() || snapshots.front().pass_id != 0) {
    throw IntegrityError("snapshot sequence has no initial pass 0");
  }
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (snapshots[i].pass_id <= snapshots[i - 1].pass_id) {
      throw IntegrityError("pass ids not ascending at pass " + std::to_string(snapshots[i].pass_id));
    }
    if (snapshots[i].t < snapshots[i - 1].t) {
      throw IntegrityError("timestamps decrease at pass " + std::to_string(snapshots[i].pass_id));
    }
  }
}

std::vector<PassState> reconstruct(std::span<const TextSnapshot> snapshots) {
  validate_snapshots(snapshots);
  std::vector<PassState> states;
  states.reserve(snapshots.size());
  states.push_back({0, snapshots.front().t, snapshots.front().text});
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    const auto& s = snapshots[i];
    const auto& prior = states.back().text;
    std::u32string next;
    if (s.delta) {
      try {
        next = apply_delta(prior, *s.delta);
      } catch (const ReconstructionError& e) {
        throw ReconstructionError("pass " + std::to_string(s.pass_id) + ": " + e.what());
      }
    } else {
      next = splice_snapshot(prior, s);
    }
    states.push_back({s.pass_id, s.t, std::move(next)});
  }
  return states;
}

}  // namespace dualtrace
