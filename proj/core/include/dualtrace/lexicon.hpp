#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dualtrace {

/// Separator-free pinyin mapped to ordered candidate strings. The same
/// candidates double as the word list for dictionary segmentation.
class Lexicon {
 public:
  Lexicon() = default;

  /// One entry per line: `pinyin cand1 [cand2 ...]`; '#' starts a comment.
  /// Repeated pinyin keys append candidates. Throws ParseError.
  static Lexicon parse(std::string_view text);

  void add(const std::string& pinyin, const std::u32string& candidate);

  /// Exact entry if present; otherwise a single candidate composed from the
  /// first candidates of a greedy longest-key cover of the buffer; otherwise
  /// empty.
  std::vector<std::u32string> candidates(std::string_view buffer) const;

  std::vector<std::u32string> words() const;
  std::vector<std::string> keys() const;
  bool empty() const noexcept { return entries_.empty(); }

 private:
  std::map<std::string, std::vector<std::u32string>, std::less<>> entries_;
  std::size_t longest_key_ = 0;
};

}  // namespace dualtrace
