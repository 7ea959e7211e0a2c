#include "ncsg/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ncsg/error.hpp"

namespace ncsg::braid {

namespace {

int sign(int letter) { return letter > 0 ? 1 : -1; }

PermutationBraid inverse_of(const PermutationBraid& p) {
  PermutationBraid inv(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) inv[p[j]] = static_cast<std::uint16_t>(j);
  return inv;
}

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
PermutationBraid flip(const PermutationBraid& p) {
  const auto n = p.size();
  PermutationBraid out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = static_cast<std::uint16_t>(n - 1 - p[n - 1 - j]);
  return out;
}

bool is_identity(const PermutationBraid& p) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != j) return false;
  return true;
}

bool is_delta(const PermutationBraid& p) {
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != p.size() - 1 - j) return false;
  return true;
}

// Moves simple prefixes of b into a until S(b) is contained in F(a).
// Returns whether anything moved.
bool normalize_pair(PermutationBraid& a, PermutationBraid& b) {
  const int n = static_cast<int>(a.size());
  PermutationBraid a_inv = inverse_of(a);
  bool changed = false;
  for (;;) {
    int t = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (b[i] > b[i + 1] && a_inv[i] < a_inv[i + 1]) {
        t = i;
        break;
      }
    }
    if (t < 0) return changed;
    // a <- a * sigma_t swaps the values t, t+1 in a's image.
    std::swap(a[a_inv[t]], a[a_inv[t + 1]]);
    std::swap(a_inv[t], a_inv[t + 1]);
    // b <- sigma_t^-1 * b swaps positions t, t+1.
    std::swap(b[t], b[t + 1]);
    changed = true;
  }
}

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int n) : n_(n) {}

  void set_infimum(std::int32_t k) { infimum_ = k; }

  void append(PermutationBraid p) {
    if (is_identity(p)) return;
    factors_.push_back(std::move(p));
    for (std::size_t i = factors_.size() - 1; i > 0; --i) {
      if (!normalize_pair(factors_[i - 1], factors_[i])) break;
    }
    trim();
  }

  GarsideForm finish() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = factors_.size(); i > 1; --i)
        changed |= normalize_pair(factors_[i - 2], factors_[i - 1]);
      trim();
    }
    GarsideForm out;
    out.index = n_;
    out.infimum = infimum_;
    out.factors = std::move(factors_);
    return out;
  }

 private:
  void trim() {
    while (!factors_.empty() && is_identity(factors_.back())) factors_.pop_back();
    std::size_t lead = 0;
    while (lead < factors_.size() && is_delta(factors_[lead])) ++lead;
    if (lead > 0) {
      infimum_ += static_cast<std::int32_t>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
  }

  int n_;
  std::int32_t infimum_ = 0;
  std::vector<PermutationBraid> factors_;
};

}  // namespace

void validate(const Word& w) {
  if (w.index < 2) throw Error(Errc::InvalidArgument, "braid index must be >= 2");
  for (int letter : w.letters) {
    if (letter == 0 || std::abs(letter) > w.index - 1)
      throw Error(Errc::InvalidArgument,
                  "generator " + std::to_string(letter) + " out of range for B_" +
                      std::to_string(w.index));
  }
}

Word inverse(const Word& w) {
  Word out{w.index, {}};
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out{a.index, a.letters};
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word fundamental(int n) {
  Word out{n, {}};
  for (int top = n - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) out.letters.push_back(i);
  return out;
}

Word handle_reduce(const Word& input) {
  std::vector<int> w = input.letters;
  const int n = input.index;
  // last[i]: most recent position holding a letter of index i.
  std::vector<long> last(static_cast<std::size_t>(n), -1);
  std::size_t resume = 0;
  for (;;) {
    std::fill(last.begin(), last.end(), -1);
    bool reduced = false;
    for (std::size_t q = 0; q < w.size(); ++q) {
      const int idx = std::abs(w[q]);
      if (q >= resume) {
        long p = -1;
        for (int j = 1; j <= idx; ++j) p = std::max(p, last[static_cast<std::size_t>(j)]);
        if (p >= 0 && std::abs(w[static_cast<std::size_t>(p)]) == idx &&
            sign(w[static_cast<std::size_t>(p)]) != sign(w[q])) {
          // w[p..q] is a permitted sigma_idx handle: its interior has only
          // indices > idx and sigma_{idx+1} with a single sign.
          const int e = sign(w[static_cast<std::size_t>(p)]);
          std::vector<int> middle;
          middle.reserve(q - static_cast<std::size_t>(p));
          for (std::size_t k = static_cast<std::size_t>(p) + 1; k < q; ++k) {
            if (std::abs(w[k]) == idx + 1) {
              const int d = sign(w[k]);
              middle.push_back(-e * (idx + 1));
              middle.push_back(d * idx);
              middle.push_back(e * (idx + 1));
            } else {
              middle.push_back(w[k]);
            }
          }
          std::vector<int> next;
          next.reserve(w.size() + 2 * middle.size());
          next.insert(next.end(), w.begin(), w.begin() + p);
          next.insert(next.end(), middle.begin(), middle.end());
          next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 1, w.end());
          w = std::move(next);
          resume = static_cast<std::size_t>(p);
          reduced = true;
          break;
        }
      }
      last[static_cast<std::size_t>(idx)] = static_cast<long>(q);
    }
    if (!reduced) break;
  }
  return Word{n, std::move(w)};
}

bool is_trivial(const Word& w) { return handle_reduce(w).empty(); }

PermutationBraid identity_braid(int n) {
  PermutationBraid p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(j);
  return p;
}

PermutationBraid delta_braid(int n) {
  PermutationBraid p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(n - 1 - j);
  return p;
}

bool is_permutation(const PermutationBraid& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool starts_with(const PermutationBraid& p, int i) {
  return p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i) + 1];
}

bool finishes_with(const PermutationBraid& p, int i) {
  const auto inv = inverse_of(p);
  return inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(i) + 1];
}

bool left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
  const auto a_inv = inverse_of(a);
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] > b[i + 1] && a_inv[i] < a_inv[i + 1]) return false;
  return true;
}

std::vector<int> positive_letters(const PermutationBraid& input) {
  PermutationBraid p = input;
  std::vector<int> letters;
  for (;;) {
    int t = -1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        t = static_cast<int>(i);
        break;
      }
    }
    if (t < 0) return letters;
    letters.push_back(t + 1);
    std::swap(p[static_cast<std::size_t>(t)], p[static_cast<std::size_t>(t) + 1]);
  }
}

PermutationBraid induced_permutation(const Word& w) {
  // Track which strand sits at each position, then invert.
  std::vector<std::uint16_t> strand_at = identity_braid(w.index);
  for (int letter : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return inverse_of(strand_at);
}

GarsideForm left_canonical_form(const Word& w) {
  validate(w);
  const int n = w.index;
  const auto delta = delta_braid(n);
  // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1); each Delta^-1 is pushed to the
  // front, conjugating every factor it passes.
  long negatives_after = 0;
  for (int letter : w.letters)
    if (letter < 0) ++negatives_after;

  NormalFormBuilder builder(n);
  builder.set_infimum(static_cast<std::int32_t>(-negatives_after));
  for (int letter : w.letters) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    PermutationBraid factor;
    if (letter > 0) {
      factor = identity_braid(n);
      std::swap(factor[i], factor[i + 1]);
    } else {
      --negatives_after;
      // (Delta * s_i)[j] = s_i[Delta[j]]
      factor = delta;
      for (auto& v : factor) {
        if (v == i) v = static_cast<std::uint16_t>(i + 1);
        else if (v == i + 1) v = static_cast<std::uint16_t>(i);
      }
    }
    if (negatives_after % 2 != 0) factor = flip(factor);
    builder.append(std::move(factor));
  }
  return builder.finish();
}

Word to_word(const GarsideForm& form) {
  Word out{form.index, {}};
  const Word delta = fundamental(form.index);
  const Word delta_inv = inverse(delta);
  const Word& block = form.infimum >= 0 ? delta : delta_inv;
  for (std::int32_t k = 0; k < std::abs(form.infimum); ++k)
    out.letters.insert(out.letters.end(), block.letters.begin(), block.letters.end());
  for (const auto& f : form.factors) {
    auto letters = positive_letters(f);
    out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  }
  return out;
}

CommutingRanges standard_commuting_ranges(int n) {
  if (n < 5)
    throw Error(Errc::IndexTooSmall,
                "B_" + std::to_string(n) + " has no two nonempty generator ranges with gap >= 2");
  CommutingRanges r;
  const int half = n / 2;
  for (int i = 1; i <= half - 1; ++i) r.lower.push_back(i);
  for (int i = half + 1; i <= n - 1; ++i) r.upper.push_back(i);
  return r;
}

std::vector<std::vector<int>> relators(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back({i, -i});
    out.push_back({-i, i});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      if (j - i > 1)
        out.push_back({i, j, -i, -j});
      else
        out.push_back({i, j, i, -j, -i, -j});
    }
  }
  return out;
}

Word insert_random_relator(const Word& w, Rng& rng) {
  static thread_local std::vector<std::vector<int>> cache;
  static thread_local int cached_n = -1;
  if (cached_n != w.index) {
    cache = relators(w.index);
    cached_n = w.index;
  }
  std::vector<int> rel = cache[rng.below(cache.size())];
  if (rng.bit()) {
    std::reverse(rel.begin(), rel.end());
    for (auto& l : rel) l = -l;
  }
  std::rotate(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(rng.below(rel.size())), rel.end());
  Word out = w;
  const auto at = static_cast<std::ptrdiff_t>(rng.below(w.letters.size() + 1));
  out.letters.insert(out.letters.begin() + at, rel.begin(), rel.end());
  return out;
}

Word scramble(const Word& w, std::size_t count, Rng& rng) {
  Word out = w;
  for (std::size_t k = 0; k < count; ++k) out = insert_random_relator(out, rng);
  return out;
}

Word random_word(int n, std::size_t length, Rng& rng) {
  Word out{n, {}};
  out.letters.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    const int g = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))) + 1;
    out.letters.push_back(rng.bit() ? g : -g);
  }
  return out;
}

}  // namespace ncsg::braid
