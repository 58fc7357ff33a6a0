#include <sstream>

#include <json.hpp>

#include "dualtrace/errors.hpp"
#include "dualtrace/session_simulator.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace {
namespace {

using json = nlohmann::ordered_json;

Layout layout_from(const std::string& s) {
  if (s == "latin") return Layout::latin;
  if (s == "pinyin") return Layout::pinyin;
  throw std::invalid_argument("unknown layout '" + s + "'");
}

const char* layout_name(Layout l) { return l == Layout::latin ? "latin" : "pinyin"; }

Key key_for(char32_t c) {
  if (c == U' ') return Key::space();
  return Key::parse(utf8::encode(c));
}

template <typename A>
void read_timing(const json& r, A& a) {
  a.dwell = r.value("dwell", a.dwell);
  a.gap = r.value("gap", a.gap);
}

}  // namespace

Script parse_script(std::string_view text) {
  Script script;
  bool autopass = false;
  bool seen_action = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const json r = json::parse(line);
      if (!r.is_object()) throw ParseError(line_no, "record is not an object");
      if (auto s = r.find("session"); s != r.end()) {
        if (seen_action) throw ParseError(line_no, "session record after actions");
        auto& cfg = script.config;
        cfg.initial_text = utf8::decode(s->value("init", std::string{}));
        cfg.cursor = s->value("cursor", static_cast<std::int64_t>(cfg.initial_text.size()));
        cfg.layout = layout_from(s->value("layout", std::string("latin")));
        const auto source = s->value("source", std::string("editor"));
        if (source == "editor") {
          cfg.source = SnapshotSource::editor;
        } else if (source == "browser") {
          cfg.source = SnapshotSource::browser;
        } else {
          throw ParseError(line_no, "unknown source '" + source + "'");
        }
        cfg.first_id = s->value("first_id", cfg.first_id);
        cfg.start_ms = s->value("start_ms", cfg.start_ms);
        autopass = s->value("autopass", false);
        continue;
      }
      seen_action = true;
      auto& acts = script.actions;
      bool keyed = true;
      if (auto k = r.find("key"); k != r.end()) {
        action::TypeKey a{Key::parse(k->get<std::string>())};
        read_timing(r, a);
        acts.emplace_back(a);
      } else if (auto t = r.find("type"); t != r.end()) {
        const auto chars = utf8::decode(t->get<std::string>());
        for (std::size_t i = 0; i < chars.size(); ++i) {
          action::TypeKey a{key_for(chars[i])};
          read_timing(r, a);
          acts.emplace_back(a);
          if (autopass && i + 1 < chars.size()) acts.emplace_back(action::Pass{});
        }
      } else if (auto c = r.find("confirm"); c != r.end()) {
        action::ImeConfirm a{Key::parse(c->get<std::string>())};
        read_timing(r, a);
        acts.emplace_back(a);
      } else if (auto m = r.find("move"); m != r.end()) {
        acts.emplace_back(action::MoveCursor{m->get<std::int64_t>()});
        keyed = false;
      } else if (auto s = r.find("select"); s != r.end()) {
        if (!s->is_array() || s->size() != 2)
          throw ParseError(line_no, "select expects [start, end]");
        acts.emplace_back(action::Select{(*s)[0].get<std::int64_t>(), (*s)[1].get<std::int64_t>()});
        keyed = false;
      } else if (r.contains("pass")) {
        acts.emplace_back(action::Pass{});
        keyed = false;
      } else if (auto l = r.find("layout"); l != r.end()) {
        acts.emplace_back(action::SetLayout{layout_from(l->get<std::string>())});
        keyed = false;
      } else {
        throw ParseError(line_no, "unknown action");
      }
      if (autopass && keyed) acts.emplace_back(action::Pass{});
    } catch (const json::exception& e) {
      throw ParseError(line_no, e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return script;
}

std::string write_script(const Script& script) {
  std::string out;
  const auto& cfg = script.config;
  json session = {{"init", utf8::encode(cfg.initial_text)},
                  {"cursor", cfg.cursor},
                  {"layout", layout_name(cfg.layout)},
                  {"source", cfg.source == SnapshotSource::editor ? "editor" : "browser"},
                  {"first_id", cfg.first_id},
                  {"start_ms", cfg.start_ms}};
  out += json{{"session", session}}.dump() + "\n";
  for (const auto& act : script.actions) {
    json r = std::visit(
        [](const auto& a) -> json {
          using A = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<A, action::TypeKey>) {
            return {{"key", a.key.name()}, {"dwell", a.dwell}, {"gap", a.gap}};
          } else if constexpr (std::is_same_v<A, action::ImeConfirm>) {
            return {{"confirm", a.choice.name()}, {"dwell", a.dwell}, {"gap", a.gap}};
          } else if constexpr (std::is_same_v<A, action::MoveCursor>) {
            return {{"move", a.index}};
          } else if constexpr (std::is_same_v<A, action::Select>) {
            return {{"select", {a.start, a.end}}};
          } else if constexpr (std::is_same_v<A, action::Pass>) {
            return {{"pass", true}};
          } else {
            return {{"layout", layout_name(a.layout)}};
          }
        },
        act);
    out += r.dump() + "\n";
  }
  return out;
}

}  // namespace dualtrace
