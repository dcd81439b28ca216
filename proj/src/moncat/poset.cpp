#include "tannakit/moncat/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace tannakit::moncat {

namespace {

bool is_top(const Letter& l, int d) { return static_cast<int>(l.gen) + 1 == d; }

int index_of(const Letter& l) { return static_cast<int>(l.gen) + 1; }

void append_power(Word& w, int d, int p) {
  for (int k = 0; k < std::abs(p); ++k) w.push_back(r(d, p > 0 ? 1 : -1));
}

// Right-hand sides beta with r_d^deg < beta for deg in {0, 1}.
std::vector<Word> block_rules(int d, int deg) {
  std::vector<Word> out;
  for (int a = 1; a < d; ++a) {
    if (deg == 1) {
      out.push_back({r(a), r(d - a)});
    } else {
      out.push_back({r(d - a), r(d, -1), r(a)});
    }
  }
  return out;
}

// Right-hand sides beta with r_m < beta for 1 <= m < d.
std::vector<Word> letter_rules(int m, int d) {
  std::vector<Word> out;
  for (int a = 1; a < m; ++a) out.push_back({r(a), r(m - a)});
  for (int a = 1; d - m - a >= 1; ++a) {
    int b = d - m - a;
    out.push_back({r(d - a), r(d, -1), r(d - b)});
  }
  return out;
}

}  // namespace

int weight_ell(const Word& w, int d) {
  int total = 0;
  for (const Letter& l : w) total += l.exp * (is_top(l, d) ? d : index_of(l));
  return total;
}

std::vector<Word> successors(const Word& w, int d, std::size_t max_len) {
  std::set<Word> found;
  const std::size_t n = w.size();

  for (std::size_t pos = 0; pos < n; ++pos) {
    const Letter& l = w[pos];
    if (is_top(l, d)) continue;
    for (const Word& beta : letter_rules(index_of(l), d)) {
      if (n - 1 + beta.size() > max_len) continue;
      Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      next.insert(next.end(), beta.begin(), beta.end());
      next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 1), w.end());
      found.insert(std::move(next));
    }
  }

  // Maximal runs of r_d^{+-1}, including empty runs between other letters.
  for (std::size_t s = 0; s <= n; ++s) {
    if (s > 0 && is_top(w[s - 1], d)) continue;
    std::size_t e = s;
    int expo = 0;
    while (e < n && is_top(w[e], d)) expo += w[e++].exp;
    const std::size_t rest = n - (e - s);
    for (int deg = 0; deg <= 1; ++deg) {
      for (const Word& beta : block_rules(d, deg)) {
        if (rest + beta.size() > max_len) continue;
        const int budget = static_cast<int>(max_len - rest - beta.size());
        const int total = expo - deg;
        for (int p = -budget; p <= budget; ++p) {
          const int q = total - p;
          if (std::abs(p) + std::abs(q) > budget) continue;
          Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
          append_power(next, d, p);
          next.insert(next.end(), beta.begin(), beta.end());
          append_power(next, d, q);
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(e), w.end());
          found.insert(std::move(next));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

std::set<Word> upward_closure(const Word& lambda, int d, std::size_t max_len, int ell, const Word* stop_at) {
  std::set<Word> seen{lambda};
  std::deque<Word> queue{lambda};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word& next : successors(cur, d, max_len)) {
      if (weight_ell(next, d) != ell) continue;
      if (stop_at && next == *stop_at) return {next};
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

bool leq(const Word& lambda, const Word& mu, int d) {
  if (lambda == mu) return true;
  if (lambda.size() >= mu.size()) return false;
  const int ell = weight_ell(lambda, d);
  if (ell != weight_ell(mu, d)) return false;
  auto reached = upward_closure(lambda, d, mu.size(), ell, &mu);
  return reached.size() == 1 && *reached.begin() == mu;
}

std::vector<Word> interval(const Word& lambda, const Word& mu, int d) {
  if (!leq(lambda, mu, d)) return {};
  auto up = upward_closure(lambda, d, mu.size(), weight_ell(lambda, d), nullptr);
  std::vector<Word> out;
  for (const Word& psi : up) {
    if (leq(psi, mu, d)) out.push_back(psi);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Word> enumerate_words(int d, std::size_t max_len) {
  std::vector<Letter> letters;
  for (int i = 1; i <= d; ++i) letters.push_back(r(i));
  letters.push_back(r(d, -1));
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (const Letter& l : letters) {
        if (!w.empty() && w.back().gen == l.gen && w.back().exp == -l.exp) continue;
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string ElementaryMap::name() const {
  return std::string(kind == MorKind::phi ? "phi" : "theta") + "_" + std::to_string(a) + "_" + std::to_string(b);
}

std::vector<ElementaryMap> elementary_maps(const Word& lambda, int d, Direction dir) {
  const Alphabet al = lambda_alphabet(d);
  std::vector<ElementaryMap> out;
  const std::size_t n = lambda.size();
  auto slice = [&](std::size_t from, std::size_t to) {
    return Word(lambda.begin() + static_cast<std::ptrdiff_t>(from), lambda.begin() + static_cast<std::ptrdiff_t>(to));
  };
  auto positive_low = [&](const Letter& l) { return l.exp == 1 && !is_top(l, d); };
  if (dir == Direction::into) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      const Letter& x = lambda[p];
      const Letter& y = lambda[p + 1];
      if (!positive_low(x) || !positive_low(y)) continue;
      const int a = index_of(x), b = index_of(y);
      if (a + b > d) continue;
      ElementaryMap m{slice(0, p), MorKind::phi, a, b, slice(p + 2, n), {}};
      m.other = normalize(concat(m.left, Word{r(a + b)}, m.right), al);
      out.push_back(std::move(m));
    }
  } else {
    for (std::size_t p = 0; p + 2 < n; ++p) {
      const Letter& x = lambda[p];
      const Letter& mid = lambda[p + 1];
      const Letter& y = lambda[p + 2];
      if (!positive_low(x) || !positive_low(y) || !(is_top(mid, d) && mid.exp == -1)) continue;
      const int a = index_of(x), b = index_of(y);
      if (a + b < d) continue;
      ElementaryMap m{slice(0, p), MorKind::theta, a, b, slice(p + 3, n), {}};
      Word mid_word = a + b == d ? Word{} : Word{r(a + b - d)};
      m.other = normalize(concat(m.left, mid_word, m.right), al);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace tannakit::moncat
