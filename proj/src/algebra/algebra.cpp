#include "ncsg/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ncsg/error.hpp"

namespace ncsg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_same(const Platform& a, const Platform& b) {
  if (!(a == b))
    throw Error(Errc::PlatformMismatch, a.name() + " vs " + b.name());
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = r * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return r;
}

std::int32_t mod_inverse(std::int32_t a, std::int32_t p) {
  return static_cast<std::int32_t>(mod_pow(a, p - 2, p));
}

int primitive_root(int p) {
  if (p == 2) return 1;
  std::vector<int> factors;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int f : factors)
      if (mod_pow(g, (p - 1) / f, p) == 1) ok = false;
    if (ok) return g;
  }
  return 1;
}

// Gauss-Jordan over Z/p; returns nullopt when singular.
std::optional<std::vector<std::int32_t>> matrix_inverse(std::span<const std::int32_t> m, int dim,
                                                        int p) {
  const auto d = static_cast<std::size_t>(dim);
  std::vector<std::int64_t> a(m.begin(), m.end());
  std::vector<std::int64_t> inv(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) inv[i * d + i] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot * d + col] == 0) ++pivot;
    if (pivot == d) return std::nullopt;
    for (std::size_t k = 0; k < d; ++k) {
      std::swap(a[pivot * d + k], a[col * d + k]);
      std::swap(inv[pivot * d + k], inv[col * d + k]);
    }
    const std::int64_t s = mod_inverse(static_cast<std::int32_t>(a[col * d + col]), p);
    for (std::size_t k = 0; k < d; ++k) {
      a[col * d + k] = a[col * d + k] * s % p;
      inv[col * d + k] = inv[col * d + k] * s % p;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r * d + col] == 0) continue;
      const std::int64_t f = a[r * d + col];
      for (std::size_t k = 0; k < d; ++k) {
        a[r * d + k] = ((a[r * d + k] - f * a[col * d + k]) % p + p) % p;
        inv[r * d + k] = ((inv[r * d + k] - f * inv[col * d + k]) % p + p) % p;
      }
    }
  }
  return std::vector<std::int32_t>(inv.begin(), inv.end());
}

std::vector<std::int32_t> to_payload(const std::vector<int>& v) {
  return std::vector<std::int32_t>(v.begin(), v.end());
}

}  // namespace

// ---------------------------------------------------------------- Platform

Platform Platform::braid(int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "Braid(n) requires n >= 2");
  if (n > 256) throw Error(Errc::InvalidArgument, "Braid(n) supports n <= 256");
  return Platform(PlatformKind::Braid, n, 0);
}

Platform Platform::permutation(int degree) {
  if (degree < 1) throw Error(Errc::InvalidArgument, "Permutation(degree) requires degree >= 1");
  if (degree > 65535) throw Error(Errc::InvalidArgument, "degree too large");
  return Platform(PlatformKind::Permutation, degree, 0);
}

Platform Platform::matrix_mod_p(int dim, int p) {
  if (dim < 2) throw Error(Errc::InvalidArgument, "MatrixModP requires dim >= 2");
  if (dim > 255) throw Error(Errc::InvalidArgument, "dimension too large");
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "MatrixModP requires p prime");
  if (p > 65535) throw Error(Errc::InvalidArgument, "p must fit in 16 bits");
  return Platform(PlatformKind::MatrixModP, dim, p);
}

std::uint64_t Platform::order() const {
  std::uint64_t total = 1;
  auto mul = [&](std::uint64_t f) {
    if (total > UINT64_MAX / f) total = UINT64_MAX;
    else total *= f;
  };
  switch (kind_) {
    case PlatformKind::Braid:
      return UINT64_MAX;
    case PlatformKind::Permutation:
      for (int k = 2; k <= size_; ++k) mul(static_cast<std::uint64_t>(k));
      return total;
    case PlatformKind::MatrixModP:
      for (int k = 0; k < size_ * size_; ++k) mul(static_cast<std::uint64_t>(modulus_));
      return total;
  }
  return total;
}

std::string Platform::name() const {
  switch (kind_) {
    case PlatformKind::Braid:
      return "Braid(" + std::to_string(size_) + ")";
    case PlatformKind::Permutation:
      return "Permutation(" + std::to_string(size_) + ")";
    case PlatformKind::MatrixModP:
      return "MatrixModP(" + std::to_string(size_) + "," + std::to_string(modulus_) + ")";
  }
  return "?";
}

// ----------------------------------------------------------------- Element

Element::Element(Platform platform, std::vector<std::int32_t> payload)
    : platform_(platform), payload_(std::move(payload)) {
  const int n = platform_.size();
  switch (platform_.kind()) {
    case PlatformKind::Braid:
      for (auto l : payload_)
        if (l == 0 || std::abs(l) > n - 1)
          throw Error(Errc::InvalidArgument, "braid letter out of range");
      break;
    case PlatformKind::Permutation: {
      if (payload_.size() != static_cast<std::size_t>(n))
        throw Error(Errc::InvalidArgument, "image table has wrong length");
      std::vector<bool> seen(payload_.size(), false);
      for (auto v : payload_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
          throw Error(Errc::InvalidArgument, "image table is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
      }
      break;
    }
    case PlatformKind::MatrixModP:
      if (payload_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error(Errc::InvalidArgument, "matrix has wrong entry count");
      for (auto v : payload_)
        if (v < 0 || v >= platform_.modulus())
          throw Error(Errc::InvalidArgument, "matrix entry out of range");
      break;
  }
}

braid::Word Element::braid_word() const {
  if (platform_.kind() != PlatformKind::Braid)
    throw Error(Errc::PlatformMismatch, "not a braid element");
  return braid::Word{platform_.size(), std::vector<int>(payload_.begin(), payload_.end())};
}

Element identity(const Platform& platform) {
  const int n = platform.size();
  switch (platform.kind()) {
    case PlatformKind::Braid:
      return Element(platform, {});
    case PlatformKind::Permutation: {
      std::vector<std::int32_t> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      return Element(platform, std::move(img));
    }
    case PlatformKind::MatrixModP: {
      std::vector<std::int32_t> m(static_cast<std::size_t>(n * n), 0);
      for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
      return Element(platform, std::move(m));
    }
  }
  throw Error(Errc::InvalidArgument, "unknown platform");
}

Element make_braid(int n, std::vector<int> letters) {
  return Element(Platform::braid(n), to_payload(letters));
}

Element make_braid(const braid::Word& w) { return make_braid(w.index, w.letters); }

Element make_permutation(std::vector<int> image) {
  const auto degree = static_cast<int>(image.size());
  return Element(Platform::permutation(degree), to_payload(image));
}

Element make_permutation_cycles(int degree, std::initializer_list<std::vector<int>> cycles) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k];
      const int to = c[(k + 1) % c.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw Error(Errc::InvalidArgument, "cycle point out of range");
      img[static_cast<std::size_t>(from - 1)] = to - 1;
    }
  }
  return make_permutation(std::move(img));
}

Element make_matrix(int dim, int p, std::vector<int> row_major) {
  for (auto& v : row_major) v = ((v % p) + p) % p;
  return Element(Platform::matrix_mod_p(dim, p), to_payload(row_major));
}

Element multiply(const Element& a, const Element& b) {
  require_same(a.platform(), b.platform());
  const auto& plat = a.platform();
  const auto x = a.payload();
  const auto y = b.payload();
  std::vector<std::int32_t> out;
  switch (plat.kind()) {
    case PlatformKind::Braid:
      out.reserve(x.size() + y.size());
      out.insert(out.end(), x.begin(), x.end());
      out.insert(out.end(), y.begin(), y.end());
      break;
    case PlatformKind::Permutation:
      // a acts first: (ab)(j) = b(a(j)).
      out.resize(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) out[j] = y[static_cast<std::size_t>(x[j])];
      break;
    case PlatformKind::MatrixModP: {
      const auto d = static_cast<std::size_t>(plat.size());
      const std::int64_t p = plat.modulus();
      out.assign(d * d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
          std::int64_t s = 0;
          for (std::size_t k = 0; k < d; ++k) s += std::int64_t{x[i * d + k]} * y[k * d + j];
          out[i * d + j] = static_cast<std::int32_t>(s % p);
        }
      break;
    }
  }
  return Element(plat, std::move(out));
}

Element multiply(std::initializer_list<std::reference_wrapper<const Element>> factors) {
  if (factors.size() == 0) throw Error(Errc::InvalidArgument, "empty product");
  auto it = factors.begin();
  Element acc = it->get();
  for (++it; it != factors.end(); ++it) acc = multiply(acc, it->get());
  return acc;
}

Element power(const Element& e, std::uint64_t k) {
  Element acc = identity(e.platform());
  for (std::uint64_t i = 0; i < k; ++i) acc = multiply(acc, e);
  return acc;
}

Element invert(const Element& e) {
  const auto& plat = e.platform();
  const auto x = e.payload();
  switch (plat.kind()) {
    case PlatformKind::Braid: {
      std::vector<std::int32_t> out(x.rbegin(), x.rend());
      for (auto& l : out) l = -l;
      return Element(plat, std::move(out));
    }
    case PlatformKind::Permutation: {
      std::vector<std::int32_t> out(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) out[static_cast<std::size_t>(x[j])] = static_cast<std::int32_t>(j);
      return Element(plat, std::move(out));
    }
    case PlatformKind::MatrixModP: {
      auto inv = matrix_inverse(x, plat.size(), plat.modulus());
      if (!inv) throw Error(Errc::NonInvertible, "matrix is singular mod " + std::to_string(plat.modulus()));
      return Element(plat, std::move(*inv));
    }
  }
  throw Error(Errc::InvalidArgument, "unknown platform");
}

bool is_invertible(const Element& e) {
  if (e.platform().kind() != PlatformKind::MatrixModP) return true;
  return matrix_inverse(e.payload(), e.platform().size(), e.platform().modulus()).has_value();
}

bool equal(const Element& a, const Element& b) {
  require_same(a.platform(), b.platform());
  if (a.platform().kind() == PlatformKind::Braid)
    return braid::is_trivial(braid::concat(a.braid_word(), braid::inverse(b.braid_word())));
  return a.same_payload(b);
}

bool is_identity(const Element& e) { return equal(e, identity(e.platform())); }

bool commute(const Element& a, const Element& b) {
  return equal(multiply(a, b), multiply(b, a));
}

Element canonicalize(const Element& e) {
  if (e.platform().kind() != PlatformKind::Braid) return e;
  return make_braid(braid::to_word(braid::left_canonical_form(e.braid_word())));
}

// ----------------------------------------------------------- Serialization

Bytes serialize(const Element& e) {
  const auto& plat = e.platform();
  Bytes out;
  put_u8(out, static_cast<std::uint8_t>(plat.kind()));
  switch (plat.kind()) {
    case PlatformKind::Braid: {
      const auto form = braid::left_canonical_form(e.braid_word());
      put_u16(out, static_cast<std::uint16_t>(plat.size()));
      put_u32(out, static_cast<std::uint32_t>(form.factors.size()));
      put_i32(out, form.infimum);
      for (const auto& f : form.factors)
        for (auto v : f) put_u16(out, v);
      break;
    }
    case PlatformKind::Permutation:
      put_u16(out, static_cast<std::uint16_t>(plat.size()));
      for (auto v : e.payload()) put_u16(out, static_cast<std::uint16_t>(v));
      break;
    case PlatformKind::MatrixModP:
      put_u16(out, static_cast<std::uint16_t>(plat.size()));
      put_u16(out, static_cast<std::uint16_t>(plat.modulus()));
      for (auto v : e.payload()) put_u16(out, static_cast<std::uint16_t>(v));
      break;
  }
  return out;
}

Element deserialize_element(ByteReader& in) {
  const auto tag = in.u8();
  switch (tag) {
    case static_cast<std::uint8_t>(PlatformKind::Braid): {
      braid::GarsideForm form;
      form.index = in.u16();
      const auto count = in.u32();
      form.infimum = in.i32();
      if (form.index < 2 || form.index > 256) throw Error(Errc::MalformedData, "bad braid index");
      if (count > in.remaining() / (2u * static_cast<unsigned>(form.index)))
        throw Error(Errc::MalformedData, "factor count exceeds input");
      for (std::uint32_t k = 0; k < count; ++k) {
        braid::PermutationBraid f(static_cast<std::size_t>(form.index));
        for (auto& v : f) v = in.u16();
        if (!braid::is_permutation(f)) throw Error(Errc::MalformedData, "factor is not a permutation");
        form.factors.push_back(std::move(f));
      }
      return make_braid(braid::to_word(form));
    }
    case static_cast<std::uint8_t>(PlatformKind::Permutation): {
      const int degree = in.u16();
      std::vector<int> img(static_cast<std::size_t>(degree));
      for (auto& v : img) v = in.u16();
      try {
        return make_permutation(std::move(img));
      } catch (const Error& err) {
        throw Error(Errc::MalformedData, err.what());
      }
    }
    case static_cast<std::uint8_t>(PlatformKind::MatrixModP): {
      const int dim = in.u16();
      const int p = in.u16();
      std::vector<int> m(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
      for (auto& v : m) v = in.u16();
      try {
        auto plat = Platform::matrix_mod_p(dim, p);
        return Element(plat, to_payload(m));
      } catch (const Error& err) {
        throw Error(Errc::MalformedData, err.what());
      }
    }
    default:
      throw Error(Errc::MalformedData, "unknown element tag " + std::to_string(tag));
  }
}

Element deserialize_element(ByteView data) {
  ByteReader in(data);
  auto e = deserialize_element(in);
  if (!in.done()) throw Error(Errc::MalformedData, "trailing bytes after element");
  return e;
}

std::string element_key(const Element& e) {
  const auto b = serialize(e);
  return std::string(b.begin(), b.end());
}

std::string to_string(const Element& e) {
  std::ostringstream os;
  const auto x = e.payload();
  switch (e.platform().kind()) {
    case PlatformKind::Braid:
      if (x.empty()) return "e";
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) os << ' ';
        os << 's' << std::abs(x[k]);
        if (x[k] < 0) os << "^-1";
      }
      return os.str();
    case PlatformKind::Permutation: {
      std::vector<bool> seen(x.size(), false);
      for (std::size_t s = 0; s < x.size(); ++s) {
        if (seen[s] || x[s] == static_cast<std::int32_t>(s)) continue;
        os << '(';
        std::size_t j = s;
        bool first = true;
        while (!seen[j]) {
          seen[j] = true;
          if (!first) os << ' ';
          os << j + 1;
          first = false;
          j = static_cast<std::size_t>(x[j]);
        }
        os << ')';
      }
      const auto s = os.str();
      return s.empty() ? "()" : s;
    }
    case PlatformKind::MatrixModP: {
      const auto d = static_cast<std::size_t>(e.platform().size());
      os << '[';
      for (std::size_t i = 0; i < d; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < d; ++j) os << (j ? "," : "") << x[i * d + j];
        os << ']';
      }
      os << ']';
      return os.str();
    }
  }
  return "?";
}

// -------------------------------------------------------------- SubsetSpec

std::string_view label_name(SubsetLabel label) {
  switch (label) {
    case SubsetLabel::LA: return "L_A";
    case SubsetLabel::RA: return "R_A";
    case SubsetLabel::LB: return "L_B";
    case SubsetLabel::RB: return "R_B";
    case SubsetLabel::Z: return "Z";
    case SubsetLabel::Custom: return "custom";
  }
  return "?";
}

SubsetSpec::SubsetSpec(std::vector<Element> generators, SubsetLabel label, std::size_t min_length,
                       std::size_t max_length)
    : generators_(std::move(generators)),
      label_(label),
      min_length_(min_length),
      max_length_(max_length) {
  if (generators_.empty()) throw Error(Errc::InvalidArgument, "subset needs at least one generator");
  for (const auto& g : generators_) require_same(generators_.front().platform(), g.platform());
  if (min_length_ < 1 || min_length_ > max_length_)
    throw Error(Errc::InvalidArgument, "sample length range must satisfy 1 <= min <= max");
}

SubsetSpec SubsetSpec::with_label(SubsetLabel label) const {
  return SubsetSpec(generators_, label, min_length_, max_length_);
}

SubsetSpec SubsetSpec::with_range(std::size_t min_length, std::size_t max_length) const {
  return SubsetSpec(generators_, label_, min_length, max_length);
}

std::vector<std::size_t> sample_indices(const SubsetSpec& subset, Rng& rng) {
  const auto len = static_cast<std::size_t>(rng.between(subset.min_length(), subset.max_length()));
  std::vector<std::size_t> idx(len);
  for (auto& i : idx) i = static_cast<std::size_t>(rng.below(subset.generators().size()));
  return idx;
}

Element product_of(const SubsetSpec& subset, std::span<const std::size_t> indices) {
  Element acc = identity(subset.platform());
  for (auto i : indices) acc = multiply(acc, subset.generators().at(i));
  return acc;
}

Element sample(const SubsetSpec& subset, Rng& rng) {
  const auto idx = sample_indices(subset, rng);
  return product_of(subset, idx);
}

// ------------------------------------------------------------- Enumeration

std::vector<Element> enumerate_platform(const Platform& platform, std::uint64_t cap) {
  if (!platform.is_finite())
    throw Error(Errc::InfinitePlatform, platform.name() + " cannot be enumerated");
  const auto order = platform.order();
  if (order > cap)
    throw Error(Errc::SearchSpaceTooLarge,
                platform.name() + " has " + std::to_string(order) + " elements, cap is " + std::to_string(cap));
  std::vector<Element> out;
  out.reserve(order);
  if (platform.kind() == PlatformKind::Permutation) {
    std::vector<std::int32_t> img(static_cast<std::size_t>(platform.size()));
    std::iota(img.begin(), img.end(), 0);
    do {
      out.emplace_back(platform, img);
    } while (std::next_permutation(img.begin(), img.end()));
  } else {
    const auto cells = static_cast<std::size_t>(platform.size() * platform.size());
    std::vector<std::int32_t> m(cells, 0);
    for (std::uint64_t k = 0; k < order; ++k) {
      out.emplace_back(platform, m);
      for (std::size_t c = cells; c-- > 0;) {
        if (++m[c] < platform.modulus()) break;
        m[c] = 0;
      }
    }
  }
  return out;
}

SubsetSpec centralizer_enumerate(const Platform& platform, const Element& e) {
  require_same(platform, e.platform());
  std::vector<Element> members;
  for (auto& c : enumerate_platform(platform))
    if (commute(c, e)) members.push_back(std::move(c));
  return SubsetSpec(std::move(members));
}

SubsetSpec centralizer_of_subset(const SubsetSpec& s) {
  std::vector<Element> members;
  for (auto& c : enumerate_platform(s.platform())) {
    bool all = true;
    for (const auto& g : s.generators()) {
      if (!commute(c, g)) {
        all = false;
        break;
      }
    }
    if (all) members.push_back(std::move(c));
  }
  return SubsetSpec(std::move(members));
}

SubsetSpec platform_generators(const Platform& platform) {
  std::vector<Element> gens;
  const int n = platform.size();
  switch (platform.kind()) {
    case PlatformKind::Braid:
      for (int i = 1; i <= n - 1; ++i) {
        gens.push_back(make_braid(n, {i}));
        gens.push_back(make_braid(n, {-i}));
      }
      break;
    case PlatformKind::Permutation: {
      if (n == 1) {
        gens.push_back(identity(platform));
        break;
      }
      std::vector<int> swap12(static_cast<std::size_t>(n));
      std::iota(swap12.begin(), swap12.end(), 0);
      std::swap(swap12[0], swap12[1]);
      gens.push_back(make_permutation(swap12));
      if (n > 2) {
        std::vector<int> cycle(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) cycle[static_cast<std::size_t>(j)] = (j + 1) % n;
        gens.push_back(make_permutation(cycle));
      }
      break;
    }
    case PlatformKind::MatrixModP: {
      const int p = platform.modulus();
      auto unit = [&] {
        std::vector<int> m(static_cast<std::size_t>(n * n), 0);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
        return m;
      };
      // Transvections generate SL; a primitive-root diagonal extends to GL;
      // a rank n-1 idempotent reaches every singular matrix.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          auto m = unit();
          m[static_cast<std::size_t>(i * n + j)] = 1;
          gens.push_back(make_matrix(n, p, m));
        }
      if (p > 2) {
        auto m = unit();
        m[0] = primitive_root(p);
        gens.push_back(make_matrix(n, p, m));
      }
      auto idem = unit();
      idem[static_cast<std::size_t>(n * n - 1)] = 0;
      gens.push_back(make_matrix(n, p, idem));
      break;
    }
  }
  return SubsetSpec(std::move(gens));
}

// ------------------------------------------------------ Requirements (P1-P9)

std::string_view status_name(RequirementStatus s) {
  switch (s) {
    case RequirementStatus::Holds: return "holds";
    case RequirementStatus::Fails: return "fails";
    case RequirementStatus::Assumed: return "assumed";
  }
  return "?";
}

std::vector<RequirementEntry> requirements_report(const Platform& platform) {
  using S = RequirementStatus;
  const bool braid = platform.kind() == PlatformKind::Braid;
  std::vector<RequirementEntry> r;

  // Non-commutativity is decided by a witness among the platform generators.
  bool noncommutative = false;
  const auto gens = platform_generators(platform);
  for (std::size_t i = 0; i < gens.generators().size() && !noncommutative; ++i)
    for (std::size_t j = i + 1; j < gens.generators().size() && !noncommutative; ++j)
      noncommutative = !commute(gens.generators()[i], gens.generators()[j]);

  if (!noncommutative)
    r.push_back({"P1", "non-commutative with exponential growth", S::Fails, "generators commute"});
  else if (braid)
    r.push_back({"P1", "non-commutative with exponential growth", S::Holds,
                 "B_n with n > 2 has exponential growth"});
  else
    r.push_back({"P1", "non-commutative with exponential growth", S::Fails,
                 "finite, order " + std::to_string(platform.order())});

  r.push_back({"P2", "efficiently computable normal form", S::Holds,
               braid ? "Garside left canonical form" : "payload is canonical"});
  r.push_back({"P3", "easy multiplication and inversion", S::Holds,
               platform.has_inverses() ? "closed-form product and inverse"
                                       : "product closed-form; inverse only for nonsingular matrices"});
  if (braid)
    r.push_back({"P4", "easy generation of commuting pairs", platform.size() >= 5 ? S::Holds : S::Fails,
                 "LB_n / UB_n need n >= 5"});
  else
    r.push_back({"P4", "easy generation of commuting pairs", S::Holds, "centralizers by enumeration"});
  const S hard = braid ? S::Assumed : S::Fails;
  const std::string why = braid ? "no efficient algorithm known" : "whole platform is enumerable";
  r.push_back({"P5", "hard to compute centralizers of generic sets", hard, why});
  r.push_back({"P6", "hard double-coset membership search (centralizer, subgroup)", hard, why});
  r.push_back({"P7", "hard double-coset membership search (two centralizers)", hard, why});
  r.push_back({"P8", "hard double-coset membership search (two subgroups)", hard, why});
  r.push_back({"P9", "efficient word problem", S::Holds,
               braid ? "handle reduction" : "payload comparison"});
  return r;
}

}  // namespace ncsg
