#include "dualtrace/lexicon.hpp"

#include <algorithm>
#include <sstream>

#include "dualtrace/errors.hpp"
#include "dualtrace/utf8.hpp"

namespace dualtrace {

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string pinyin;
    if (!(fields >> pinyin)) continue;
    if (!std::all_of(pinyin.begin(), pinyin.end(),
                     [](char c) { return c >= 'a' && c <= 'z'; }))
      throw ParseError(line_no, "pinyin key must be lower-case letters: " + pinyin);
    std::string cand;
    std::size_t count = 0;
    while (fields >> cand) {
      try {
        lex.add(pinyin, utf8::decode(cand));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      ++count;
    }
    if (count == 0) throw ParseError(line_no, "entry without candidates: " + pinyin);
  }
  return lex;
}

void Lexicon::add(const std::string& pinyin, const std::u32string& candidate) {
  if (pinyin.empty() || candidate.empty())
    throw std::invalid_argument("empty lexicon entry");
  auto& list = entries_[pinyin];
  if (std::find(list.begin(), list.end(), candidate) == list.end())
    list.push_back(candidate);
  longest_key_ = std::max(longest_key_, pinyin.size());
}

std::vector<std::u32string> Lexicon::candidates(std::string_view buffer) const {
  if (buffer.empty()) return {};
  if (auto it = entries_.find(buffer); it != entries_.end()) return it->second;

  std::u32string composed;
  std::size_t i = 0;
  while (i < buffer.size()) {
    std::size_t n = std::min(longest_key_, buffer.size() - i);
    for (; n > 0; --n) {
      auto it = entries_.find(buffer.substr(i, n));
      if (it != entries_.end()) {
        composed += it->second.front();
        break;
      }
    }
    if (n == 0) return {};
    i += n;
  }
  return {composed};
}

std::vector<std::u32string> Lexicon::words() const {
  std::vector<std::u32string> out;
  for (const auto& [key, list] : entries_)
    out.insert(out.end(), list.begin(), list.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> Lexicon::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.first);
  return out;
}

}  // namespace dualtrace
