#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace dualtrace {

/// Word segmentation contract: the words concatenate back to the input and
/// none is empty.
class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual std::vector<std::u32string> segment(std::u32string_view text) const = 0;
};

/// Forward maximum matching: the longest dictionary word starting at the
/// current position wins; an unmatched character becomes its own word.
class ForwardMaxMatchSegmenter final : public Segmenter {
 public:
  explicit ForwardMaxMatchSegmenter(const std::vector<std::u32string>& words);
  std::vector<std::u32string> segment(std::u32string_view text) const override;

 private:
  std::unordered_set<std::u32string> words_;
  std::size_t longest_ = 1;
};

/// One word per character.
class CharacterSegmenter final : public Segmenter {
 public:
  std::vector<std::u32string> segment(std::u32string_view text) const override;
};

/// "fmm" (needs the lexicon words) or "char". Throws std::invalid_argument.
std::unique_ptr<Segmenter> make_segmenter(std::string_view name,
                                          const std::vector<std::u32string>& words);

/// Runs seg and enforces the contract; throws AnalysisError on violation or
/// empty input.
std::vector<std::u32string> segment_words(std::u32string_view text, const Segmenter& seg);

}  // namespace dualtrace
