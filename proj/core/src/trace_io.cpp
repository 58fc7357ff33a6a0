#include "dualtrace/trace_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dualtrace/errors.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace {
namespace {

using json = nlohmann::ordered_json;

// Calls fn(line_number, record) for every non-blank line.
template <typename Fn>
void for_each_record(std::string_view bytes, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    const auto nl = bytes.find('\n', pos);
    const auto end = nl == std::string_view::npos ? bytes.size() : nl;
    auto line = bytes.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      json record;
      try {
        record = json::parse(line);
      } catch (const json::parse_error& e) {
        throw ParseError(line_no, std::string("malformed record: ") + e.what());
      }
      if (!record.is_object()) throw ParseError(line_no, "record is not an object");
      try {
        fn(line_no, record);
      } catch (const json::exception& e) {
        throw ParseError(line_no, std::string("bad field: ") + e.what());
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

const json& require(const json& record, const char* field, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) throw ParseError(line, std::string("missing field '") + field + "'");
  return *it;
}

std::u32string text_field(const json& v) { return utf8::decode(v.get<std::string>()); }

KeyEvent key_event_from(const json& r, std::size_t line) {
  KeyEvent e;
  e.id = require(r, "id", line).get<std::int64_t>();
  const auto kind = require(r, "kind", line).get<std::string>();
  if (kind == "down") {
    e.kind = KeyAction::down;
  } else if (kind == "up") {
    e.kind = KeyAction::up;
  } else {
    throw ParseError(line, "kind must be \"down\" or \"up\"");
  }
  e.key = Key::parse(require(r, "key", line).get<std::string>());
  e.position = require(r, "position", line).get<std::int64_t>();
  if (e.position < 0) throw ParseError(line, "negative position");
  e.t = Timestamp{require(r, "t_ms", line).get<std::int64_t>()};
  if (e.t.ms < 0) throw ParseError(line, "negative timestamp");
  return e;
}

json key_event_json(const KeyEvent& e) {
  json r;
  r["id"] = e.id;
  r["kind"] = e.is_down() ? "down" : "up";
  r["key"] = e.key.name();
  r["position"] = e.position;
  r["t_ms"] = e.t.ms;
  return r;
}

// Keydown ids dense ascending, keyups paired once with an earlier keydown
// of the same key, time non-decreasing in stream order.
void validate_key_stream(const std::vector<KeyEvent>& events,
                         const std::vector<std::size_t>& lines) {
  std::optional<std::int64_t> last_down;
  std::map<std::int64_t, const KeyEvent*> open;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    if (i > 0 && e.t < events[i - 1].t) {
      throw IntegrityError("timestamps decrease between events " +
                           std::to_string(events[i - 1].id) + " and " + std::to_string(e.id) +
                           " (line " + std::to_string(lines[i]) + ")");
    }
    if (e.is_down()) {
      if (last_down && e.id != *last_down + 1) {
        throw IntegrityError("keydown ids not dense ascending: " + std::to_string(*last_down) +
                             " followed by " + std::to_string(e.id) + " (line " +
                             std::to_string(lines[i]) + ")");
      }
      last_down = e.id;
      open[e.id] = &e;
    } else {
      auto it = open.find(e.id);
      if (it == open.end() || !(it->second->key == e.key)) {
        throw IntegrityError("keyup " + std::to_string(e.id) + " (" + e.key.name() +
                             ") has no open keydown (line " + std::to_string(lines[i]) + ")");
      }
      open.erase(it);
    }
  }
}

std::string_view source_name(SnapshotSource s) {
  return s == SnapshotSource::editor ? "editor" : "browser";
}

json delta_json(const DiffDelta& delta) {
  json arr = json::array();
  for (const auto& op : delta) {
    switch (op.kind) {
      case EditOp::Kind::keep:
        arr.push_back(json::array({"=", op.count}));
        break;
      case EditOp::Kind::del:
        arr.push_back(json::array({"-", op.count}));
        break;
      case EditOp::Kind::ins:
        arr.push_back(json::array({"+", utf8::encode(op.text)}));
        break;
    }
  }
  return arr;
}

DiffDelta delta_from(const json& arr, std::size_t line) {
  if (!arr.is_array()) throw ParseError(line, "delta must be an array");
  DiffDelta delta;
  for (const auto& op : arr) {
    if (!op.is_array() || op.size() != 2) throw ParseError(line, "delta op must be [kind, arg]");
    const auto kind = op[0].get<std::string>();
    if (kind == "=") {
      delta.push_back(EditOp::keep(op[1].get<std::size_t>()));
    } else if (kind == "-") {
      delta.push_back(EditOp::del(op[1].get<std::size_t>()));
    } else if (kind == "+") {
      delta.push_back(EditOp::ins(text_field(op[1])));
    } else {
      throw ParseError(line, "unknown delta op '" + kind + "'");
    }
  }
  return delta;
}

std::string join_lines(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

}  // namespace

std::string_view to_string(AlignmentStatus s) noexcept {
  switch (s) {
    case AlignmentStatus::coherent:
      return "coherent";
    case AlignmentStatus::resolved:
      return "resolved";
    case AlignmentStatus::unresolved:
      return "unresolved";
  }
  return "unknown";
}

std::string_view to_string(SnapshotSource s) noexcept { return source_name(s); }

std::vector<KeyEvent> parse_keystroke_log(std::string_view bytes) {
  std::vector<KeyEvent> events;
  std::vector<std::size_t> lines;
  for_each_record(bytes, [&](std::size_t line, const json& r) {
    events.push_back(key_event_from(r, line));
    lines.push_back(line);
  });
  validate_key_stream(events, lines);
  return events;
}

std::string write_keystroke_log(std::span<const KeyEvent> events) {
  std::vector<json> records;
  records.reserve(events.size());
  for (const auto& e : events) records.push_back(key_event_json(e));
  return join_lines(records);
}

std::vector<TextSnapshot> parse_text_log(std::string_view bytes) {
  std::vector<TextSnapshot> snapshots;
  for_each_record(bytes, [&](std::size_t line, const json& r) {
    TextSnapshot s;
    s.pass_id = require(r, "pass", line).get<std::int64_t>();
    s.text = text_field(require(r, "text", line));
    const auto& dsw = require(r, "dsw", line);
    if (!dsw.is_array() || dsw.size() != 2) throw ParseError(line, "dsw must be [left, right]");
    s.dsw = {dsw[0].get<std::int64_t>(), dsw[1].get<std::int64_t>()};
    if (s.dsw.left < 0 || s.dsw.left > s.dsw.right) {
      throw ParseError(line, "dsw bounds [" + std::to_string(s.dsw.left) + "," +
                                 std::to_string(s.dsw.right) + ") violate 0 <= left <= right");
    }
    s.offset = require(r, "offset", line).get<std::int64_t>();
    s.t = Timestamp{require(r, "t_ms", line).get<std::int64_t>()};
    const auto source = r.value("source", std::string("editor"));
    if (source == "editor") {
      s.source = SnapshotSource::editor;
    } else if (source == "browser") {
      s.source = SnapshotSource::browser;
    } else {
      throw ParseError(line, "source must be \"editor\" or \"browser\"");
    }
    if (auto it = r.find("delta"); it != r.end()) s.delta = delta_from(*it, line);
    snapshots.push_back(std::move(s));
  });
  if (snapshots.empty() || snapshots.front().pass_id != 0) {
    throw IntegrityError("text log has no initial pass-0 snapshot");
  }
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (snapshots[i].pass_id <= snapshots[i - 1].pass_id) {
      throw IntegrityError("pass ids not ascending at pass " + std::to_string(snapshots[i].pass_id));
    }
    if (snapshots[i].t < snapshots[i - 1].t) {
      throw IntegrityError("timestamps decrease at pass " + std::to_string(snapshots[i].pass_id));
    }
  }
  return snapshots;
}

std::string write_text_log(std::span<const TextSnapshot> snapshots) {
  std::vector<json> records;
  for (const auto& s : snapshots) {
    json r;
    r["pass"] = s.pass_id;
    r["text"] = utf8::encode(s.text);
    r["dsw"] = json::array({s.dsw.left, s.dsw.right});
    r["offset"] = s.offset;
    r["t_ms"] = s.t.ms;
    r["source"] = source_name(s.source);
    if (s.delta) r["delta"] = delta_json(*s.delta);
    records.push_back(std::move(r));
  }
  return join_lines(records);
}

std::string write_dual_trace(std::span<const DualTraceEvent> events) {
  std::vector<json> records;
  for (const auto& e : events) {
    json r = key_event_json(e.base);
    r["status"] = to_string(e.status);
    if (e.rule) r["rule"] = *e.rule;
    if (e.ime) {
      r["ime"] = {{"text", utf8::encode(e.ime->text)},
                  {"pinyin", e.ime->pinyin},
                  {"start", e.ime->start},
                  {"end", e.ime->end}};
    }
    if (e.correction && !e.correction->empty()) {
      json c = json::object();
      if (e.correction->logged_position) c["logged_position"] = *e.correction->logged_position;
      if (e.correction->deleted) c["deleted"] = *e.correction->deleted;
      if (e.correction->rendered) c["rendered"] = utf8::encode(*e.correction->rendered);
      r["correction"] = std::move(c);
    }
    records.push_back(std::move(r));
  }
  return join_lines(records);
}

std::vector<DualTraceEvent> parse_dual_trace(std::string_view bytes) {
  std::vector<DualTraceEvent> events;
  std::vector<KeyEvent> keys;
  std::vector<std::size_t> lines;
  for_each_record(bytes, [&](std::size_t line, const json& r) {
    DualTraceEvent e;
    e.base = key_event_from(r, line);
    const auto status = require(r, "status", line).get<std::string>();
    if (status == "coherent") {
      e.status = AlignmentStatus::coherent;
    } else if (status == "resolved") {
      e.status = AlignmentStatus::resolved;
    } else if (status == "unresolved") {
      e.status = AlignmentStatus::unresolved;
    } else {
      throw ParseError(line, "unknown status '" + status + "'");
    }
    if (auto it = r.find("rule"); it != r.end()) e.rule = it->get<std::string>();
    if ((e.status == AlignmentStatus::resolved) != e.rule.has_value()) {
      throw ParseError(line, "rule must be present exactly when status is resolved");
    }
    if (auto it = r.find("ime"); it != r.end()) {
      ImeAnnotation ime;
      ime.text = text_field(require(*it, "text", line));
      ime.pinyin = require(*it, "pinyin", line).get<std::string>();
      ime.start = require(*it, "start", line).get<std::int64_t>();
      ime.end = require(*it, "end", line).get<std::int64_t>();
      if (ime.start >= ime.end ||
          ime.end - ime.start != static_cast<std::int64_t>(ime.text.size())) {
        throw ParseError(line, "ime index range does not match the confirmed text");
      }
      e.ime = std::move(ime);
    }
    if (e.ime.has_value() != (e.rule && *e.rule == rule_names::ime_confirmation)) {
      throw ParseError(line, "ime annotation must accompany exactly the ime_confirmation rule");
    }
    if (auto it = r.find("correction"); it != r.end()) {
      Correction c;
      if (auto f = it->find("logged_position"); f != it->end()) {
        c.logged_position = f->get<std::int64_t>();
      }
      if (auto f = it->find("deleted"); f != it->end()) c.deleted = f->get<std::int64_t>();
      if (auto f = it->find("rendered"); f != it->end()) c.rendered = text_field(*f);
      e.correction = std::move(c);
    }
    keys.push_back(e.base);
    lines.push_back(line);
    events.push_back(std::move(e));
  });
  validate_key_stream(keys, lines);
  return events;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace dualtrace
