#include "revlang/alphabet.hpp"

#include <algorithm>

#include "revlang/error.hpp"

namespace revlang {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw AlphabetError("alphabet must not be empty");
  index_.fill(-1);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto& slot = index_[static_cast<unsigned char>(letters_[i])];
    if (slot >= 0) {
      throw AlphabetError(std::string("duplicate letter '") + letters_[i] +
                          "' in alphabet");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

void Alphabet::validate(std::string_view word) const {
  for (char c : word) {
    if (!contains(c)) {
      throw AlphabetError(std::string("letter '") + c +
                          "' is not in alphabet \"" + letters_ + "\"");
    }
  }
}

bool Alphabet::shortlex_less(std::string_view u, std::string_view v) const {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto a = index_[static_cast<unsigned char>(u[i])];
    const auto b = index_[static_cast<unsigned char>(v[i])];
    if (a != b) return a < b;
  }
  return false;
}

Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

std::vector<Word> words_of_length(const Alphabet& alphabet,
                                  std::size_t length) {
  std::vector<Word> out;
  Word current(length, alphabet[0]);
  std::vector<std::size_t> digits(length, 0);
  for (;;) {
    out.push_back(current);
    // Odometer increment, last position fastest.
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digits[i] < alphabet.size()) {
        current[i] = alphabet[digits[i]];
        break;
      }
      digits[i] = 0;
      current[i] = alphabet[0];
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto level = words_of_length(alphabet, len);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace revlang
