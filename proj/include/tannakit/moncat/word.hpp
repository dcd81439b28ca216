#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tannakit::moncat {

/// One letter of an object word: a generator index and an exponent of +1 or -1.
struct Letter {
  std::size_t gen = 0;
  int exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  /// Generator order first; a positive letter precedes its inverse.
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.exp > b.exp;
  }
};

using Word = std::vector<Letter>;

/// Object generators of a presented monoidal category.
struct Alphabet {
  std::vector<std::string> names;
  std::vector<bool> invertible;
  std::vector<int> weights;

  std::size_t size() const { return names.size(); }
};

/// Cancels adjacent g g^-1 and g^-1 g pairs until none remain. Throws
/// InputError for an unknown generator, an exponent other than +-1, or an
/// inverse of a non-invertible generator.
Word normalize(const Word& raw, const Alphabet& alphabet);

bool is_normalized(const Word& w);

/// Shortlex order: shorter words first, then letterwise.
bool shortlex_less(const Word& a, const Word& b);

/// Space-separated letters, "r1 r2^-1 r1"; the empty word renders as "1".
std::string render(const Word& w, const Alphabet& alphabet);

/// Inverse of render. Accepts "1" or blank text for the empty word and
/// normalizes the result.
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Sum of exponent * weight over the letters.
int weight(const Word& w, const Alphabet& alphabet);

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

}  // namespace tannakit::moncat
