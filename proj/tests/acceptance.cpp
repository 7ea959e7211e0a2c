// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when a criterion fails, unless that failure is the documented conflict in
// criterion 5 (see README), which is still printed as FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "ncsg/attacks.hpp"
#include "ncsg/error.hpp"
#include "ncsg/session.hpp"

using namespace ncsg;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned thresholds.
constexpr int kBraidPairs = 10'000;
constexpr std::size_t kBraidMaxLength = 40;
constexpr double kBraidSeconds = 60.0;
constexpr int kRelatorWords = 1'000;
constexpr int kCompletenessRuns = 1'000;
constexpr int kRegressionRuns = 1'000;
constexpr std::uint64_t kZkMaxPairs = 10'000;
constexpr int kAttackInstances = 100;
constexpr double kAttackSeconds = 120.0;
constexpr int kOracleInstances = 100;
constexpr int kBitRuns = 100;
constexpr std::size_t kBitsPerRun = 32;
constexpr int kWireRuns = 20;

struct Verdict {
  bool pass = false;
  std::string detail;
  // Failure explained by a conflict in the criterion itself; reported, not hidden.
  bool known_conflict = false;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Verdict braid_correctness() {
  const auto t0 = Clock::now();
  Rng rng(1);
  int disagreements = 0, equal_pairs = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int i = 0; i < kBraidPairs; ++i) {
      const auto w1 = braid::random_word(n, rng.between(0, kBraidMaxLength), rng);
      // Half the pairs are equal by construction so both answers get exercised.
      braid::Word w2;
      if (i % 2 == 0) {
        w2 = braid::scramble(w1, 3, rng);
        if (w2.letters.size() > kBraidMaxLength) w2 = w1;
      } else {
        w2 = braid::random_word(n, rng.between(0, kBraidMaxLength), rng);
      }
      const bool hr = braid::is_trivial(braid::concat(w1, braid::inverse(w2)));
      const bool garside = braid::left_canonical_form(w1) == braid::left_canonical_form(w2);
      disagreements += hr != garside;
      equal_pairs += garside;
    }
  }
  const double secs = seconds_since(t0);
  return {disagreements == 0 && secs <= kBraidSeconds,
          std::to_string(6 * kBraidPairs) + " pairs, n=3..8, " + std::to_string(equal_pairs) + " equal, " +
              std::to_string(disagreements) + " disagreements, " + fmt(secs) + " s (limit " +
              fmt(kBraidSeconds) + ")"};
}

Verdict relator_invariance() {
  Rng rng(2);
  int failures = 0, insertions = 0;
  for (int i = 0; i < kRelatorWords; ++i) {
    const int n = static_cast<int>(rng.between(3, 8));
    const auto w = braid::random_word(n, rng.between(0, kBraidMaxLength), rng);
    const auto form = braid::left_canonical_form(w);
    for (const auto& r : braid::relators(n)) {
      auto v = w;
      const auto pos = static_cast<std::ptrdiff_t>(rng.between(0, w.letters.size()));
      v.letters.insert(v.letters.begin() + pos, r.begin(), r.end());
      ++insertions;
      failures += !(braid::left_canonical_form(v) == form);
    }
  }
  return {failures == 0, std::to_string(kRelatorWords) + " words, " + std::to_string(insertions) +
                             " relator insertions, " + std::to_string(failures) + " form changes"};
}

Verdict commuting_subgroups() {
  int bad = 0;
  for (int n = 5; n <= 12; ++n) {
    const auto [lb, ub] = standard_commuting_subgroups(n);
    bad += !subsets_commute(lb, ub).commute;
  }
  const auto [lb, ub] = standard_commuting_subgroups(6);
  const auto e = identity(Platform::braid(6));
  const auto report = check_condition_b(make_family(e, lb, lb, ub, ub));
  const auto* first = report.first_failure();
  const bool reproduced = !report.all_hold && first != nullptr;
  return {bad == 0 && reproduced,
          "LB_n/UB_n commute for n=5..12 (" + std::to_string(bad) + " failures); SDG on B_6 with z=e: all_hold=" +
              (report.all_hold ? "true" : "false") + ", first failing clause " +
              (first ? first->label() : std::string("none"))};
}

bool auth_round(const ProtocolParams& p, Rng& rng) {
  const auto key = keygen(p, rng);
  const auto st = challenge(p, rng);
  return verify(p, st, key.z_prime, respond(p, key, st.x));
}

bool auth_variant_round(const ProtocolParams& p, Rng& rng) {
  const auto key = keygen_variant(p, rng);
  const auto st = challenge_variant(p, key.z_prime, rng);
  return verify_variant(p, st, respond_variant(p, key, st.x));
}

bool ka_round(const ProtocolParams& p, Rng& rng) {
  const auto a = ka_publish(p, Role::A, rng);
  const auto b = ka_publish(p, Role::B, rng);
  return equal(ka_shared(a, b.published), ka_shared(b, a.published));
}

bool ka_variant_round(const ProtocolParams& p, Rng& rng) {
  const auto a = ka_variant_publish_a(p, rng);
  const auto b = ka_variant_publish_b(p, a.published, rng);
  return equal(ka_variant_shared_a(a, b.published), ka_variant_shared_b(p, b));
}

Verdict completeness() {
  const std::vector<std::pair<std::string, std::function<bool(const ProtocolParams&, Rng&)>>> modes{
      {"auth", auth_round}, {"auth-variant", auth_variant_round}, {"ka", ka_round}, {"ka-variant", ka_variant_round}};
  int total = 0, ok = 0;
  std::string failures;
  std::uint64_t seed = 100;
  for (const auto* preset : {"perm6", "matrix-2-3", "sdg-b6", "cklhc-b6", "stickel"}) {
    const auto params = make_preset(preset).params;
    for (const auto& [mode, round] : modes) {
      int good = 0;
      for (int i = 0; i < kCompletenessRuns; ++i) {
        Rng rng(seed++);
        good += round(params, rng);
      }
      total += kCompletenessRuns;
      ok += good;
      if (good != kCompletenessRuns)
        failures += " " + std::string(preset) + "/" + mode + ":" + std::to_string(good);
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) +
                           " honest runs accepted or agreed (5 presets x 4 modes x " +
                           std::to_string(kCompletenessRuns) + ")" + failures};
}

Element power_by_squaring(Element base, std::uint64_t k) {
  auto acc = identity(base.platform());
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return acc;
}

Element word_product(std::initializer_list<braid::Word> parts) {
  braid::Word w{parts.begin()->index, {}};
  for (const auto& p : parts) w = braid::concat(w, p);
  return make_braid(w);
}

Verdict specialization() {
  Rng rng(5);
  // SDG: a2 = a1^-1, b2 = b1^-1, so z' and x are conjugates of z.
  const auto sdg = make_preset("sdg-b6").params;
  const auto zw = sdg.z().braid_word();
  int sdg_ok = 0;
  for (int i = 0; i < kRegressionRuns; ++i) {
    const auto key = keygen(sdg, rng);
    const auto st = challenge(sdg, rng);
    const auto a = key.a1.braid_word();
    const auto b = st.b1.braid_word();
    sdg_ok += equal(key.z_prime, word_product({a, zw, braid::inverse(a)})) &&
              equal(st.x, word_product({b, zw, braid::inverse(b)})) && equal(key.a2, invert(key.a1)) &&
              equal(st.b2, invert(st.b1));
  }

  const auto kl = make_preset("klchkp-b6").params;
  const auto kzw = kl.z().braid_word();
  int kl_ok = 0;
  for (int i = 0; i < kRegressionRuns; ++i) {
    const auto a = ka_publish(kl, Role::A, rng);
    const auto b = ka_publish(kl, Role::B, rng);
    const auto a1 = a.secret.first.braid_word();
    const auto b1 = b.secret.first.braid_word();
    const auto expected = word_product({a1, b1, kzw, braid::inverse(b1), braid::inverse(a1)});
    kl_ok += equal(ka_shared(a, b.published), expected) && equal(ka_shared(b, a.published), expected);
  }

  const auto st = make_preset("stickel").params;
  const auto& ga = st.family().L_A.generators()[0];
  const auto& gb = st.family().R_A.generators()[0];
  const auto log_of = [](const Element& base, const Element& target, std::size_t max) {
    auto acc = base;
    for (std::uint64_t k = 1; k <= max; ++k, acc = multiply(acc, base))
      if (acc.same_payload(target)) return k;
    return std::uint64_t{0};
  };
  int literal = 0, b_exponents = 0, public_key = 0;
  for (int i = 0; i < kRegressionRuns; ++i) {
    const auto a = ka_variant_publish_a(st, rng);
    const auto b = ka_variant_publish_b(st, a.published, rng);
    const auto kappa = ka_variant_shared_a(a, b.published);
    const auto max = st.family().L_A.max_length();
    const auto v = log_of(ga, a.secret.first, max), w = log_of(gb, a.secret.second, max);
    const auto r = log_of(ga, b.secret.first, max), s = log_of(gb, b.secret.second, max);
    const auto avbw = multiply(power_by_squaring(ga, v), power_by_squaring(gb, w));
    const auto arbs = multiply(power_by_squaring(ga, r), power_by_squaring(gb, s));
    literal += equal(kappa, avbw);
    b_exponents += equal(kappa, arbs) && equal(ka_variant_shared_b(st, b), arbs);
    public_key += equal(a.published, avbw);
  }

  const int n = kRegressionRuns;
  const bool sdg_pass = sdg_ok == n, kl_pass = kl_ok == n, stickel_pass = literal == n;
  std::ostringstream d;
  d << "sdg shapes " << sdg_ok << "/" << n << "; klchkp kappa " << kl_ok << "/" << n << "; stickel kappa = a^v b^w "
    << literal << "/" << n;
  Verdict v{sdg_pass && kl_pass && stickel_pass, d.str()};
  if (!v.pass && sdg_pass && kl_pass && b_exponents == n && public_key == n) {
    v.known_conflict = true;
    v.detail += " [conflict: kappa = a^r b^s (B's exponents) in " + std::to_string(b_exponents) + "/" +
                std::to_string(n) + ", and a^v b^w equals the public K_A in " + std::to_string(public_key) + "/" +
                std::to_string(n) + "]";
  }
  return v;
}

Verdict zk_simulator() {
  const auto params = make_preset("perm6").params;
  Rng rng(6);
  const auto key = keygen(params, rng);
  const auto left = sampling_distribution(params.family().L_B);
  const auto right = sampling_distribution(params.family().R_B);
  const std::uint64_t pairs = left.size() * right.size();
  std::map<std::pair<Bytes, Bytes>, std::uint64_t> honest, simulated;
  for (const auto& l : left)
    for (const auto& r : right) {
      const auto st = challenge_from(l.element, r.element, params.z());
      honest[{serialize(st.x), respond(params, key, st.x)}] += l.weight * r.weight;
      simulated[simulate_transcript(params, key.z_prime, l.element, r.element)] += l.weight * r.weight;
    }
  return {pairs <= kZkMaxPairs && honest == simulated,
          std::to_string(pairs) + " (b1, b2) word pairs, " + std::to_string(honest.size()) +
              " distinct transcripts, multisets " + (honest == simulated ? "equal" : "differ")};
}

std::pair<SessionOutcome, SessionOutcome> over_pipe(const SessionConfig& a, const SessionConfig& b) {
  auto [ta, tb] = make_pipe();
  return run_pair(a, b, *ta, *tb);
}

Verdict attack_soundness() {
  const auto t0 = Clock::now();
  int a_ok = 0, b_ok = 0, a_e2e = 0, b_e2e = 0, total = 0;
  for (const auto* preset : {"perm6", "matrix-2-3"}) {
    const auto params = make_preset(preset).params;
    for (int i = 0; i < kAttackInstances; ++i) {
      ++total;
      Rng rng(7000 + static_cast<std::uint64_t>(total));
      const auto key = keygen(params, rng);
      try {
        const auto res = attack_a_key(params, key.z_prime, rng);
        a_ok += res.verified;
        // End to end: the forged key runs a real session against an honest verifier.
        SessionConfig a(params), b(params);
        a.role = Role::A;
        b.role = Role::B;
        a.seed = b.seed = 7000 + static_cast<std::uint64_t>(total);
        a.key = KeyPair{res.equivalent_pair.first, res.equivalent_pair.second, params.z(), key.z_prime};
        b.peer_public = key.z_prime;
        const auto [oa, ob] = over_pipe(a, b);
        a_e2e += res.verified && ob.accepted;
      } catch (const Error&) {
      }
      const auto ka = ka_publish(params, Role::A, rng);
      const auto kb = ka_publish(params, Role::B, rng);
      const auto kappa = ka_shared(ka, kb.published);
      try {
        const auto res = attack_b_key(params, ka.published, kb.published, kappa);
        b_ok += res.verified;
        const auto forged = multiply({res.equivalent_pair.first, ka.published, res.equivalent_pair.second});
        b_e2e += res.verified &&
                 kappa_confirm_digest(params, forged) == kappa_confirm_digest(params, ka_shared(kb, ka.published));
      } catch (const Error&) {
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "perm6 + matrix-2-3, " << total << " instances: a-key " << a_ok << " verified / " << a_e2e
    << " accepted end to end; b-key " << b_ok << " verified / " << b_e2e << " kappa confirmed; " << fmt(secs)
    << " s (limit " << fmt(kAttackSeconds) << ")";
  return {a_ok == total && b_ok == total && a_e2e == total && b_e2e == total && secs <= kAttackSeconds, d.str()};
}

Verdict oracle_agreement() {
  int misses = 0, total = 0;
  std::string per;
  for (const auto* preset : {"perm6", "matrix-2-3", "b4-toy"}) {
    const auto params = make_preset(preset).params;
    const auto& f = params.family();
    int found = 0;
    for (int i = 0; i < kOracleInstances; ++i) {
      Rng rng(8000 + static_cast<std::uint64_t>(total++));
      const auto key = keygen(params, rng);
      const auto s = brute_force_dp({params.z(), key.z_prime, f.L_A, f.R_A, f.L_A.max_length(), f.R_A.max_length()});
      const bool ok = s.solution && equal(multiply({s.solution->first, params.z(), s.solution->second}), key.z_prime);
      found += ok;
      misses += !ok;
    }
    per += " " + std::string(preset) + " " + std::to_string(found) + "/" + std::to_string(kOracleInstances);
  }
  return {misses == 0, std::to_string(misses) + " misses over " + std::to_string(total) + " instances:" + per};
}

Verdict bit_exchange_runs() {
  const auto params = make_preset("b5-bits").params;
  int agreed = 0;
  std::size_t resamples = 0;
  for (int i = 0; i < kBitRuns; ++i) {
    SessionConfig a(params), b(params);
    a.role = Role::A;
    b.role = Role::B;
    a.mode = b.mode = SessionMode::Bits;
    a.bits = b.bits = kBitsPerRun;
    a.seed = b.seed = 9000 + static_cast<std::uint64_t>(i);
    const auto [oa, ob] = over_pipe(a, b);
    agreed += oa.accepted && ob.accepted && oa.bits.size() == kBitsPerRun && oa.bits == ob.bits;
    resamples += oa.resamples;
  }
  return {agreed == kBitRuns, std::to_string(agreed) + "/" + std::to_string(kBitRuns) + " runs of " +
                                  std::to_string(kBitsPerRun) + " bits on B_5 agree on every bit, " +
                                  std::to_string(resamples) + " resamples"};
}

Verdict wire_determinism() {
  int identical = 0;
  const SessionMode modes[] = {SessionMode::Auth, SessionMode::AuthVariant, SessionMode::Ka, SessionMode::KaVariant,
                               SessionMode::Bits};
  for (int i = 0; i < kWireRuns; ++i) {
    const auto mode = modes[i % 5];
    const auto params = make_preset(mode == SessionMode::Bits ? "b5-bits" : "perm6").params;
    SessionConfig a(params), b(params);
    a.role = Role::A;
    b.role = Role::B;
    a.mode = b.mode = mode;
    a.bits = b.bits = 16;
    a.seed = b.seed = 10'000 + static_cast<std::uint64_t>(i);
    if (mode == SessionMode::Auth || mode == SessionMode::AuthVariant) {
      Rng rng(*a.seed);
      a.key = mode == SessionMode::Auth ? keygen(params, rng) : keygen_variant(params, rng);
      b.peer_public = a.key->z_prime;
    }
    const auto [pa, pb] = over_pipe(a, b);
    TcpListener listener;
    std::unique_ptr<Transport> tb;
    std::thread acceptor([&] { tb = listener.accept(); });
    auto ta = tcp_connect("127.0.0.1", listener.port());
    acceptor.join();
    const auto [qa, qb] = run_pair(a, b, *ta, *tb);
    const auto bytes = pa.transcript.serialize();
    identical += bytes == pb.transcript.serialize() && bytes == qa.transcript.serialize() &&
                 bytes == qb.transcript.serialize();
  }
  return {identical == kWireRuns, std::to_string(identical) + "/" + std::to_string(kWireRuns) +
                                      " seeded runs with byte-identical pipe and tcp transcripts (5 modes)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"braid correctness", braid_correctness},
      {"relator invariance", relator_invariance},
      {"commuting subgroups", commuting_subgroups},
      {"protocol completeness", completeness},
      {"specialization regressions", specialization},
      {"zk simulator", zk_simulator},
      {"attack soundness", attack_soundness},
      {"oracle agreement", oracle_agreement},
      {"bit exchange", bit_exchange_runs},
      {"wire determinism", wire_determinism},
  };
  int unexplained = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %2zu %-27s %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    std::fflush(stdout);
    unexplained += !v.pass && !v.known_conflict;
  }
  return unexplained == 0 ? 0 : 1;
}
