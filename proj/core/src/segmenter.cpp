#include "dualtrace/segmenter.hpp"

#include <stdexcept>

#include "dualtrace/errors.hpp"

namespace dualtrace {

ForwardMaxMatchSegmenter::ForwardMaxMatchSegmenter(const std::vector<std::u32string>& words) {
  for (const auto& w : words) {
    if (w.empty()) continue;
    words_.insert(w);
    longest_ = std::max(longest_, w.size());
  }
}

std::vector<std::u32string> ForwardMaxMatchSegmenter::segment(std::u32string_view text) const {
  std::vector<std::u32string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t n = std::min(longest_, text.size() - i);
    while (n > 1 && !words_.contains(std::u32string(text.substr(i, n)))) --n;
    out.emplace_back(text.substr(i, n));
    i += n;
  }
  return out;
}

std::vector<std::u32string> CharacterSegmenter::segment(std::u32string_view text) const {
  std::vector<std::u32string> out;
  out.reserve(text.size());
  for (char32_t c : text) out.emplace_back(1, c);
  return out;
}

std::unique_ptr<Segmenter> make_segmenter(std::string_view name,
                                          const std::vector<std::u32string>& words) {
  if (name == "fmm") return std::make_unique<ForwardMaxMatchSegmenter>(words);
  if (name == "char") return std::make_unique<CharacterSegmenter>();
  throw std::invalid_argument("unknown segmenter '" + std::string(name) + "'");
}

std::vector<std::u32string> segment_words(std::u32string_view text, const Segmenter& seg) {
  if (text.empty()) throw AnalysisError("cannot segment empty text");
  auto words = seg.segment(text);
  std::u32string joined;
  for (const auto& w : words) {
    if (w.empty()) throw AnalysisError("segmenter produced an empty word");
    joined += w;
  }
  if (joined != text) throw AnalysisError("segmentation does not concatenate back to the text");
  return words;
}

}  // namespace dualtrace
