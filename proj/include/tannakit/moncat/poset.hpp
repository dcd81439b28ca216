#pragma once

// The monoid Lambda = <r1, ..., r_{d-1}, r_d^{+-1}> and its partial order.
// Words use the lambda alphabet of category.hpp: letter index i-1 is r_i.

#include <optional>
#include <string>
#include <vector>

#include "tannakit/moncat/category.hpp"

namespace tannakit::moncat {

/// Sum of i over letters r_i, minus d per r_d^-1.
int weight_ell(const Word& w, int d);

/// All normalized words one generating inequality above w, of length at most
/// max_len. The generating pairs are r_{a+b} < r_a r_b (a + b <= d) and
/// r_{d-a-b} < r_{d-a} r_d^-1 r_{d-b} (a + b <= d, r_0 empty), closed under
/// multiplication by arbitrary words on both sides. Cancellation only occurs
/// against maximal runs of r_d^{+-1}, so those runs are re-split explicitly.
std::vector<Word> successors(const Word& w, int d, std::size_t max_len);

/// lambda <= mu. Every generating step lengthens a word, so a breadth-first
/// search over words of length <= |mu| decides it.
bool leq(const Word& lambda, const Word& mu, int d);

/// { psi : lambda <= psi <= mu } in shortlex order; empty unless lambda <= mu.
std::vector<Word> interval(const Word& lambda, const Word& mu, int d);

/// All normalized words of length <= max_len in shortlex order.
std::vector<Word> enumerate_words(int d, std::size_t max_len);

enum class Direction { into, outof };

/// A whiskered generator left (x) g (x) right. For `into`, g = phi_{a,b} maps
/// `other` onto the word; for `outof`, g = theta_{a,b} maps the word to `other`.
struct ElementaryMap {
  Word left;
  MorKind kind = MorKind::phi;
  int a = 0;
  int b = 0;
  Word right;
  Word other;

  std::string name() const;
};

/// into: every factorization lambda = w1 r_a r_b w2 with a + b <= d.
/// outof: every factorization lambda = w1 r_a r_d^-1 r_b w2 with a + b >= d.
/// Listed by position, then by (a, b).
std::vector<ElementaryMap> elementary_maps(const Word& lambda, int d, Direction dir);

}  // namespace tannakit::moncat
