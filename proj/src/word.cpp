#include "stallings/word.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

std::vector<Letter> reduce_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0) throw AlphabetError("0 is not a letter");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(reduce_letters(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::vector<Letter>(letters)) {}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') {
      throw AlphabetError("not a letter: '" + tok + "'");
    }
    letters.push_back(static_cast<Letter>(v));
  }
  return Word(std::move(letters));
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l = -l;
  Word w;
  w.letters_ = std::move(rev);  // reversal of a reduced word is reduced
  return w;
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, std::abs(l));
  return m;
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> cat(a.letters_);
  cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(cat));
}

Word reduce(std::vector<Letter> letters) { return Word(std::move(letters)); }

}  // namespace stallings
