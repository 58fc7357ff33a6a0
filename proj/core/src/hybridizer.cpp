#include "dualtrace/hybridizer.hpp"

#include <algorithm>

#include <json.hpp>

#include "dualtrace/errors.hpp"
#include "dualtrace/snapshot_logger.hpp"

namespace dualtrace {
namespace {

bool typed_coherent(const KeyEvent& k, const std::u32string& after) {
  const auto symbol = k.key.symbol();
  if (k.position < 0 || symbol.empty()) return false;
  const auto pos = static_cast<std::size_t>(k.position);
  return pos + symbol.size() <= after.size() && after.compare(pos, symbol.size(), symbol) == 0;
}

bool erased_coherent(const std::u32string& before, const std::u32string& after,
                     std::int64_t at) {
  if (at < 0 || static_cast<std::size_t>(at) >= before.size()) return false;
  auto erased = before;
  erased.erase(static_cast<std::size_t>(at), 1);
  return erased == after;
}

bool coherent(const KeyEvent& k, const AlignedStates& s) {
  switch (k.key.kind()) {
    case KeyKind::backspace:
      if (!s.before) return false;
      if (k.position == 0) return *s.before == *s.after;
      return erased_coherent(*s.before, *s.after, k.position - 1);
    case KeyKind::canc:
      if (!s.before) return false;
      if (k.position == static_cast<std::int64_t>(s.before->size())) return *s.before == *s.after;
      return erased_coherent(*s.before, *s.after, k.position);
    default:
      return typed_coherent(k, *s.after);
  }
}

std::vector<const KeyEvent*> keydowns(std::span<const KeyEvent> keys) {
  std::vector<const KeyEvent*> out;
  for (const auto& k : keys)
    if (k.is_down()) out.push_back(&k);
  return out;
}

}  // namespace

AlignedStates align(const KeyEvent& keydown, std::span<const PassState> states) {
  auto it = std::upper_bound(states.begin(), states.end(), keydown.t,
                             [](Timestamp t, const PassState& s) { return t < s.t; });
  AlignedStates out;
  if (it != states.end()) out.after = &it->text;
  if (it != states.begin()) out.before = &std::prev(it)->text;
  return out;
}

CoherenceReport check_coherence(std::span<const KeyEvent> keys,
                                std::span<const PassState> states) {
  CoherenceReport report;
  for (const KeyEvent* k : keydowns(keys)) {
    const auto s = align(*k, states);
    bool ok = false;
    if (!s.after) {
      report.causes[k->id] = cause_no_text_window;
    } else if (coherent(*k, s)) {
      ok = true;
    } else {
      report.causes[k->id] = cause_mismatch;
    }
    if (!report.windows.empty() && report.windows.back().coherent == ok) {
      report.windows.back().end_id = k->id;
    } else {
      report.windows.push_back({k->id, k->id, ok});
    }
  }
  return report;
}

std::vector<RuleMatch> find_solutions(const CoherenceReport& report,
                                      std::span<const KeyEvent> keys,
                                      std::span<const PassState> states, const RuleSet& rules) {
  std::map<std::int64_t, const KeyEvent*> by_id;
  std::map<const std::u32string*, std::size_t> sharing;
  for (const KeyEvent* k : keydowns(keys)) {
    by_id[k->id] = k;
    ++sharing[align(*k, states).after];
  }

  std::vector<RuleMatch> matches;
  const auto& windows = report.windows;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    if (windows[w].coherent) continue;
    TripleContext context;
    context.incoherent = windows[w];
    if (w > 0) context.preceding = windows[w - 1];
    if (w + 1 < windows.size()) context.following = windows[w + 1];
    for (auto it = by_id.lower_bound(windows[w].start_id);
         it != by_id.end() && it->first <= windows[w].end_id; ++it) {
      const auto aligned = align(*it->second, states);
      const RuleInput input{*it->second, aligned, context, sharing[aligned.after]};
      for (const auto& rule : rules.rules()) {
        if (auto m = rule->match(input)) {
          matches.push_back(std::move(*m));
          break;
        }
      }
    }
  }
  return matches;
}

std::vector<DualTraceEvent> solve(std::span<const KeyEvent> keys, const CoherenceReport& report,
                                  std::span<const RuleMatch> matches) {
  std::map<std::int64_t, const RuleMatch*> by_event;
  for (const auto& m : matches) {
    if (!by_event.emplace(m.event_id, &m).second)
      throw HybridizationError("conflicting solutions for event " + std::to_string(m.event_id));
  }

  std::map<std::int64_t, AlignmentStatus> status;
  for (const auto& w : report.windows) {
    bool all = true;
    for (auto id = w.start_id; id <= w.end_id && !w.coherent; ++id)
      if (report.causes.contains(id) && !by_event.contains(id)) all = false;
    for (auto id = w.start_id; id <= w.end_id; ++id) {
      if (w.coherent) {
        status[id] = AlignmentStatus::coherent;
      } else {
        status[id] = all ? AlignmentStatus::resolved : AlignmentStatus::unresolved;
      }
    }
  }

  std::vector<DualTraceEvent> trace;
  trace.reserve(keys.size());
  for (const auto& k : keys) {
    DualTraceEvent e;
    e.base = k;
    if (!k.is_down()) {
      trace.push_back(std::move(e));
      continue;
    }
    auto st = status.find(k.id);
    e.status = st == status.end() ? AlignmentStatus::coherent : st->second;
    if (e.status == AlignmentStatus::resolved) {
      const RuleMatch& m = *by_event.at(k.id);
      e.rule = m.rule;
      std::visit(
          [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, payload::PositionShift>) {
              e.correction = Correction{k.position, std::nullopt, std::nullopt};
              e.base.position += p.shift;
            } else if constexpr (std::is_same_v<P, payload::SeparatorDeletion>) {
              e.correction = Correction{std::nullopt, p.deleted, std::nullopt};
            } else if constexpr (std::is_same_v<P, payload::Punctuation>) {
              e.correction = Correction{std::nullopt, std::nullopt, std::u32string(1, p.chinese)};
            } else {
              e.ime = p.annotation;
            }
          },
          m.payload);
    }
    trace.push_back(std::move(e));
  }
  return trace;
}

std::size_t HybridDiagnostics::resolved_total() const noexcept {
  std::size_t n = 0;
  for (const auto& [rule, count] : resolved) n += count;
  return n;
}

std::string HybridDiagnostics::to_json() const {
  nlohmann::ordered_json j;
  j["keydowns"] = keydowns;
  j["coherent"] = coherent;
  j["resolved"] = resolved_total();
  j["unresolved"] = unresolved;
  j["rules"] = nlohmann::ordered_json::object();
  for (const auto& [rule, count] : resolved) j["rules"][rule] = count;
  j["unresolved_ids"] = unresolved_ids;
  return j.dump();
}

HybridDiagnostics diagnose(std::span<const DualTraceEvent> trace) {
  HybridDiagnostics d;
  for (const auto& e : trace) {
    if (!e.base.is_down()) continue;
    ++d.keydowns;
    switch (e.status) {
      case AlignmentStatus::coherent:
        ++d.coherent;
        break;
      case AlignmentStatus::resolved:
        ++d.resolved[e.rule.value_or("")];
        break;
      case AlignmentStatus::unresolved:
        ++d.unresolved;
        d.unresolved_ids.push_back(e.base.id);
        break;
    }
  }
  return d;
}

HybridResult hybridize(std::span<const KeyEvent> keys, std::span<const TextSnapshot> snapshots,
                       const RuleSet& rules) {
  const auto states = reconstruct(snapshots);
  HybridResult result;
  result.coherence = check_coherence(keys, states);
  for (const auto& [id, cause] : result.coherence.causes) {
    if (cause == cause_no_text_window)
      throw IntegrityError("keydown " + std::to_string(id) + " has no text event after it");
  }
  result.matches = find_solutions(result.coherence, keys, states, rules);
  result.trace = solve(keys, result.coherence, result.matches);
  result.diagnostics = diagnose(result.trace);
  return result;
}

}  // namespace dualtrace
