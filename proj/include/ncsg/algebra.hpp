#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncsg/braid.hpp"
#include "ncsg/bytes.hpp"
#include "ncsg/rng.hpp"

namespace ncsg {

enum class PlatformKind : std::uint8_t {
  Braid = 0x01,
  Permutation = 0x02,
  MatrixModP = 0x03,
};

// The ambient semigroup G. Braid(n): B_n. Permutation(d): S_d. MatrixModP:
// all dim x dim matrices over Z/p, a semigroup that is not a group.
class Platform {
 public:
  static Platform braid(int n);
  static Platform permutation(int degree);
  static Platform matrix_mod_p(int dim, int p);

  PlatformKind kind() const { return kind_; }
  // n for braids, degree for permutations, dim for matrices.
  int size() const { return size_; }
  int modulus() const { return modulus_; }

  bool has_inverses() const { return kind_ != PlatformKind::MatrixModP; }
  bool has_canonical_form() const { return true; }
  bool is_finite() const { return kind_ != PlatformKind::Braid; }

  // Number of elements for finite platforms, saturating at UINT64_MAX.
  std::uint64_t order() const;

  std::string name() const;

  bool operator==(const Platform&) const = default;

 private:
  Platform(PlatformKind kind, int size, int modulus)
      : kind_(kind), size_(size), modulus_(modulus) {}

  PlatformKind kind_;
  int size_;
  int modulus_;
};

// An element of a platform. The payload is a braid word (signed generator
// indices), a 0-based image table, or row-major matrix entries in [0, p).
// Equality of braid payloads is not equality in B_n; use equal().
class Element {
 public:
  Element(Platform platform, std::vector<std::int32_t> payload);

  const Platform& platform() const { return platform_; }
  std::span<const std::int32_t> payload() const { return payload_; }

  braid::Word braid_word() const;

  // Payload identity, not group equality.
  bool same_payload(const Element& other) const {
    return platform_ == other.platform_ && payload_ == other.payload_;
  }

 private:
  Platform platform_;
  std::vector<std::int32_t> payload_;
};

Element identity(const Platform& platform);
Element make_braid(int n, std::vector<int> letters);
Element make_braid(const braid::Word& w);
// 0-based image table.
Element make_permutation(std::vector<int> image);
// Product of disjoint cycles in 1-based cycle notation, e.g. {{1, 2}, {3, 4}}.
Element make_permutation_cycles(int degree, std::initializer_list<std::vector<int>> cycles);
Element make_matrix(int dim, int p, std::vector<int> row_major);

Element multiply(const Element& a, const Element& b);
Element multiply(std::initializer_list<std::reference_wrapper<const Element>> factors);
Element power(const Element& e, std::uint64_t k);
// Throws NonInvertible for singular matrices.
Element invert(const Element& e);
bool is_invertible(const Element& e);
bool equal(const Element& a, const Element& b);
bool is_identity(const Element& e);
bool commute(const Element& a, const Element& b);
// Braid: word of the Garside left canonical form. Finite platforms: unchanged.
Element canonicalize(const Element& e);

// Canonical serialization used for hashing and the wire. Equal elements
// serialize to identical bytes.
Bytes serialize(const Element& e);
Element deserialize_element(ByteReader& in);
Element deserialize_element(ByteView data);
// Serialization as a string, for use as a map key.
std::string element_key(const Element& e);

std::string to_string(const Element& e);

enum class SubsetLabel : std::uint8_t { LA, RA, LB, RB, Z, Custom };
std::string_view label_name(SubsetLabel label);

// A finitely generated subset with the word-length range used for sampling.
class SubsetSpec {
 public:
  SubsetSpec(std::vector<Element> generators, SubsetLabel label = SubsetLabel::Custom,
             std::size_t min_length = 1, std::size_t max_length = 1);

  const Platform& platform() const { return generators_.front().platform(); }
  const std::vector<Element>& generators() const { return generators_; }
  SubsetLabel label() const { return label_; }
  std::size_t min_length() const { return min_length_; }
  std::size_t max_length() const { return max_length_; }

  SubsetSpec with_label(SubsetLabel label) const;
  SubsetSpec with_range(std::size_t min_length, std::size_t max_length) const;

 private:
  std::vector<Element> generators_;
  SubsetLabel label_;
  std::size_t min_length_;
  std::size_t max_length_;
};

// Generator indices of a uniformly drawn positive word: length uniform in
// [min, max], each letter uniform with replacement.
std::vector<std::size_t> sample_indices(const SubsetSpec& subset, Rng& rng);
Element product_of(const SubsetSpec& subset, std::span<const std::size_t> indices);
Element sample(const SubsetSpec& subset, Rng& rng);

// Every element of a finite platform, in a fixed order. Throws
// InfinitePlatform for braids and SearchSpaceTooLarge above `cap`.
std::vector<Element> enumerate_platform(const Platform& platform,
                                        std::uint64_t cap = 1'000'000);

// C_G(e) as a member list. Throws InfinitePlatform for braids.
SubsetSpec centralizer_enumerate(const Platform& platform, const Element& e);
// Intersection of C_G(g) over the generators of s.
SubsetSpec centralizer_of_subset(const SubsetSpec& s);

// A generating set of the whole platform as a semigroup.
SubsetSpec platform_generators(const Platform& platform);

// LB_n and UB_n of B_n as generator lists (sigma_1..sigma_{n/2-1} and
// sigma_{n/2+1}..sigma_{n-1}). Throws IndexTooSmall for n < 5.
std::pair<SubsetSpec, SubsetSpec> standard_commuting_subgroups(int n);

// Requirements a platform should meet, evaluated from its capabilities.
enum class RequirementStatus { Holds, Fails, Assumed };
struct RequirementEntry {
  std::string id;
  std::string summary;
  RequirementStatus status;
  std::string evidence;
};
std::vector<RequirementEntry> requirements_report(const Platform& platform);
std::string_view status_name(RequirementStatus s);

}  // namespace ncsg
