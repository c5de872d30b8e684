#pragma once

// Brute-force ground truth. Nothing here shares code with the production
// deciders it is used to check.

#include "rrmon/error.hpp"
#include "rrmon/grammars.hpp"
#include "rrmon/spec_type.hpp"
#include "rrmon/specs.hpp"
#include "rrmon/trace.hpp"

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

namespace rrmon::oracle {

inline constexpr std::size_t max_enumeration_length = 24;
inline constexpr std::size_t max_brute_force_length = 20;

/// Every word over `alphabet` of length <= max_len exactly once, in
/// length-lexicographic order (letters ordered as in `alphabet`).
template <class Letter>
class WordRange {
public:
  class iterator {
  public:
    using value_type = std::vector<Letter>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(const WordRange* range, bool end) : range_(range), done_(end) {}

    reference operator*() const { return word_; }
    pointer operator->() const { return &word_; }

    iterator& operator++() {
      const auto k = range_->alphabet_.size();
      std::size_t pos = digits_.size();
      while (pos > 0) {
        --pos;
        if (++digits_[pos] < k) {
          word_[pos] = range_->alphabet_[digits_[pos]];
          return *this;
        }
        digits_[pos] = 0;
        word_[pos] = range_->alphabet_[0];
      }
      if (digits_.size() == range_->max_len_) {
        done_ = true;
        return *this;
      }
      digits_.assign(digits_.size() + 1, 0);
      word_.assign(digits_.size(), range_->alphabet_[0]);
      return *this;
    }

    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_)
        return a.done_ == b.done_;
      return a.digits_ == b.digits_;
    }

  private:
    const WordRange* range_ = nullptr;
    bool done_ = true;
    std::vector<std::size_t> digits_;
    value_type word_;
  };

  WordRange(std::vector<Letter> alphabet, std::size_t max_len) : alphabet_(std::move(alphabet)), max_len_(max_len) {
    if (alphabet_.empty())
      throw InvalidArgument("enumeration alphabet must be nonempty");
    if (max_len_ > max_enumeration_length)
      throw InvalidArgument("enumeration length " + std::to_string(max_len_) + " exceeds " +
                            std::to_string(max_enumeration_length));
  }

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

  /// Σ_{k <= max_len} |alphabet|^k.
  std::size_t count() const {
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t k = 0; k <= max_len_; ++k) {
      total += layer;
      layer *= alphabet_.size();
    }
    return total;
  }

private:
  std::vector<Letter> alphabet_;
  std::size_t max_len_;
};

template <class Letter>
WordRange<Letter> enumerate_words(std::vector<Letter> alphabet, std::size_t max_len) {
  return WordRange<Letter>(std::move(alphabet), max_len);
}

/// All words over {req, resp} up to max_len.
WordRange<Event> enumerate_words(std::size_t max_len);

/// First valid correspondence in lexicographic order of assignments
/// (requests in order, candidate responses ascending), or nullopt.
/// Throws InvalidArgument when |w| exceeds max_brute_force_length.
std::optional<Correspondence> brute_correspondence(const Word& w, CorrespondenceKind kind);

/// Whole-word regex membership by direct set-of-positions interpretation of
/// the regex semantics.
bool regex_holds(const grammar::Regex& r, const Word& w);

/// Membership by brute force: regex semantics for the regular types,
/// correspondence search for RR3 / RR4.
bool oracle_member(SpecType s, const Word& w);

/// Whether some u with |u| <= depth puts prefix·u in the language, judged
/// by the counting characterisation (RR3 / RR4) or regex_holds.
bool extendable(SpecType s, const Word& prefix, std::size_t depth);

} // namespace rrmon::oracle
