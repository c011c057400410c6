#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace stallings {

// A letter of the free group F(x_1, ..., x_r): +i stands for x_i and -i for
// its inverse. Zero is not a letter.
using Letter = int;

constexpr Letter inverse_letter(Letter l) { return -l; }

// A freely reduced word over the signed alphabet. Construction performs free
// reduction, so no adjacent letter/inverse pair ever survives; the empty word
// is the group identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  // Parses a whitespace-separated list of signed integers, e.g. "1 -2 1".
  static Word parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word inverse() const;

  // Largest generator index appearing in the word; 0 for the identity.
  int max_index() const;

  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Free reduction: repeatedly cancels adjacent inverse pairs until none remain.
Word reduce(std::vector<Letter> letters);

}  // namespace stallings
