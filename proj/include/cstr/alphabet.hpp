#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cstr {

constexpr char kGapChar = '-';

// An ordered alphabet of distinct symbols. '-' is reserved as the gap
// symbol of the extended alphabet and can never be a member. Sequences
// store dense integer codes; the character mapping only matters at I/O
// boundaries.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.size() < 2) {
      throw std::invalid_argument("Alphabet: need at least 2 symbols");
    }
    lookup_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(symbols_[i]);
      if (symbols_[i] == kGapChar) {
        throw std::invalid_argument("Alphabet: gap symbol '-' is reserved");
      }
      if (lookup_[c] >= 0) {
        throw std::invalid_argument(std::string("Alphabet: duplicate symbol '") +
                                    symbols_[i] + "'");
      }
      lookup_[c] = static_cast<int>(i);
    }
  }

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }

  bool contains(char c) const {
    return lookup_[static_cast<unsigned char>(c)] >= 0;
  }

  std::uint8_t encode(char c) const {
    int v = lookup_[static_cast<unsigned char>(c)];
    if (v < 0) {
      throw std::invalid_argument(std::string("Alphabet: symbol '") + c +
                                  "' not in alphabet " + symbols_);
    }
    return static_cast<std::uint8_t>(v);
  }

  char decode(std::uint8_t code) const {
    if (code >= symbols_.size()) {
      throw std::out_of_range("Alphabet: code out of range");
    }
    return symbols_[code];
  }

  // Index of the gap symbol in the extended alphabet Sigma' (one past the
  // last real symbol); cost tables are indexed this way.
  std::size_t gap_index() const { return symbols_.size(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }

 private:
  std::string symbols_;
  std::array<int, 256> lookup_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline AlphabetPtr make_alphabet(std::string_view symbols) {
  return std::make_shared<const Alphabet>(symbols);
}

inline AlphabetPtr dna() { return make_alphabet("ACGT"); }

// A sequence of code points over one alphabet. Empty sequences are valid
// (edit-distance base cases need them).
class Seq {
 public:
  Seq() = default;
  Seq(AlphabetPtr alphabet, std::vector<std::uint8_t> codes)
      : alphabet_(std::move(alphabet)), codes_(std::move(codes)) {
    check_codes_();
  }

  static Seq from_string(const AlphabetPtr& alphabet, std::string_view text) {
    std::vector<std::uint8_t> codes;
    codes.reserve(text.size());
    for (char c : text) codes.push_back(alphabet->encode(c));
    return Seq(alphabet, std::move(codes));
  }

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return codes_[i]; }
  const std::vector<std::uint8_t>& codes() const { return codes_; }
  std::vector<std::uint8_t>& codes() { return codes_; }

  std::string to_string() const {
    std::string out;
    out.reserve(codes_.size());
    for (std::uint8_t c : codes_) out.push_back(alphabet_->decode(c));
    return out;
  }

  Seq substr(std::size_t pos, std::size_t len) const {
    if (pos + len > codes_.size()) {
      throw std::out_of_range("Seq::substr: window out of range");
    }
    return Seq(alphabet_, std::vector<std::uint8_t>(
                              codes_.begin() + static_cast<std::ptrdiff_t>(pos),
                              codes_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  friend bool operator==(const Seq& a, const Seq& b) {
    return a.codes_ == b.codes_;
  }
  friend bool operator!=(const Seq& a, const Seq& b) { return !(a == b); }
  friend bool operator<(const Seq& a, const Seq& b) {
    return a.codes_ < b.codes_;
  }

 private:
  void check_codes_() {
    if (!alphabet_ && !codes_.empty()) {
      throw std::invalid_argument("Seq: codes without an alphabet");
    }
    for (std::uint8_t c : codes_) {
      if (c >= alphabet_->size()) {
        throw std::invalid_argument("Seq: code point outside alphabet");
      }
    }
  }

  AlphabetPtr alphabet_;
  std::vector<std::uint8_t> codes_;
};

namespace detail {

// Lexicographic odometer over [0,sigma)^len; false after the last word.
inline bool next_word(std::vector<std::uint8_t>& word, std::size_t sigma) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (++word[i] < sigma) return true;
    word[i] = 0;
  }
  return false;
}

}  // namespace detail

inline bool same_alphabet(const Seq& a, const Seq& b) {
  if (a.alphabet() == b.alphabet()) return true;
  if (!a.alphabet() || !b.alphabet()) return a.empty() && b.empty();
  return *a.alphabet() == *b.alphabet();
}

}  // namespace cstr
