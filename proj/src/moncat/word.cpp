#include "tannakit/moncat/word.hpp"

#include <algorithm>
#include <sstream>

#include "tannakit/error.hpp"

namespace tannakit::moncat {

Word normalize(const Word& raw, const Alphabet& alphabet) {
  Word out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.gen >= alphabet.size()) throw InputError("unknown object generator index " + std::to_string(l.gen));
    if (l.exp != 1 && l.exp != -1) throw InputError("letter exponents must be +1 or -1");
    if (l.exp == -1 && !alphabet.invertible[l.gen]) {
      throw InputError("generator " + alphabet.names[l.gen] + " is not invertible");
    }
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_normalized(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].gen == w[i - 1].gen && w[i].exp == -w[i - 1].exp) return false;
  }
  return true;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string render(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += alphabet.names.at(w[i].gen);
    if (w[i].exp == -1) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  std::istringstream in{std::string(text)};
  std::string tok;
  Word raw;
  std::vector<std::string> tokens;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "1") return {};
  for (const auto& t : tokens) {
    std::string name = t;
    int exp = 1;
    if (auto pos = t.find('^'); pos != std::string::npos) {
      std::string e = t.substr(pos + 1);
      if (e != "-1" && e != "{-1}") throw InputError("bad exponent in word token '" + t + "'");
      name = t.substr(0, pos);
      exp = -1;
    }
    auto it = std::find(alphabet.names.begin(), alphabet.names.end(), name);
    if (it == alphabet.names.end()) throw InputError("unknown object generator '" + name + "'");
    raw.push_back(Letter{static_cast<std::size_t>(it - alphabet.names.begin()), exp});
  }
  return normalize(raw, alphabet);
}

int weight(const Word& w, const Alphabet& alphabet) {
  int total = 0;
  for (const Letter& l : w) total += l.exp * alphabet.weights.at(l.gen);
  return total;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

}  // namespace tannakit::moncat
