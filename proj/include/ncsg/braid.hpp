#pragma once

#include <cstdint>
#include <vector>

#include "ncsg/rng.hpp"

// Braid group B_n in the Artin presentation: words, the word problem by
// handle reduction, and the Garside left canonical form.
namespace ncsg::braid {

// A word in the Artin generators. Letter +i is sigma_i, -i is its inverse,
// 1 <= i <= index-1. The empty word is the identity.
struct Word {
  int index = 2;
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

// A permutation braid given by the final position of each strand,
// 0-based: strand starting at position j ends at position image[j].
using PermutationBraid = std::vector<std::uint16_t>;

// Delta^infimum * factors[0] * ... * factors[k-1], left-weighted, with no
// factor equal to the identity or to Delta.
struct GarsideForm {
  int index = 2;
  std::int32_t infimum = 0;
  std::vector<PermutationBraid> factors;

  bool operator==(const GarsideForm&) const = default;
};

// Throws InvalidArgument for n < 2 or letters out of range.
void validate(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// The half twist Delta as a positive word of length n(n-1)/2.
Word fundamental(int n);

// Dehornoy handle reduction, always reducing the handle whose right end is
// leftmost. The result is empty iff w is trivial in B_n.
Word handle_reduce(const Word& w);
bool is_trivial(const Word& w);

GarsideForm left_canonical_form(const Word& w);
Word to_word(const GarsideForm& form);

// Permutation-braid helpers.
PermutationBraid identity_braid(int n);
PermutationBraid delta_braid(int n);
bool is_permutation(const PermutationBraid& p);
// Positive word spelling the permutation braid (reduced bubble-sort word).
std::vector<int> positive_letters(const PermutationBraid& p);
// Permutation induced by a word (ignores crossing signs).
PermutationBraid induced_permutation(const Word& w);
// Left descent set membership: p = sigma_{i+1} * ... (0-based i).
bool starts_with(const PermutationBraid& p, int i);
// Right descent set membership: p = ... * sigma_{i+1} (0-based i).
bool finishes_with(const PermutationBraid& p, int i);
// S(b) subset of F(a).
bool left_weighted(const PermutationBraid& a, const PermutationBraid& b);

// Generator indices of LB_n and UB_n: 1..floor(n/2)-1 and floor(n/2)+1..n-1.
// Throws IndexTooSmall when n < 5.
struct CommutingRanges {
  std::vector<int> lower;
  std::vector<int> upper;
};
CommutingRanges standard_commuting_ranges(int n);

// Every defining relator of the presentation, written as a trivial word:
// sigma_i sigma_i^-1, commutators of far generators, and braid relators.
std::vector<std::vector<int>> relators(int n);

// Inserts one relator (or an inverse or cyclic shift of it) at a random
// position. The result represents the same braid.
Word insert_random_relator(const Word& w, Rng& rng);

// Applies `count` random relator insertions.
Word scramble(const Word& w, std::size_t count, Rng& rng);

Word random_word(int n, std::size_t length, Rng& rng);

}  // namespace ncsg::braid
