#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "ncsg/attacks.hpp"
#include "ncsg/error.hpp"
#include "ncsg/session.hpp"

namespace ncsg {

namespace {

enum Exit { kAccept = 0, kReject = 1, kUsage = 2, kRuntime = 3 };

struct Common {
  std::string preset;
  std::string params_file;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* sub, Common& c) {
  auto* p = sub->add_option("--preset", c.preset, "Named parameter preset");
  auto* f = sub->add_option("--params", c.params_file, "Params file (NCSG1)");
  p->excludes(f);
  sub->add_option("--seed", c.seed, "Fixes all sampling");
}

ProtocolParams load_params(const Common& c) {
  if (!c.params_file.empty()) return parse_params(read_file(c.params_file));
  if (!c.preset.empty()) return make_preset(c.preset).params;
  throw Error(Errc::InvalidArgument, "one of --preset or --params is required");
}

Rng make_rng(const Common& c, std::uint64_t stream) {
  return c.seed ? Rng(*c.seed).fork(stream) : Rng(std::random_device{}());
}

Role parse_role(const std::string& s) {
  if (s == "A" || s == "a" || s == "prover") return Role::A;
  if (s == "B" || s == "b" || s == "verifier") return Role::B;
  throw Error(Errc::InvalidArgument, "role must be A or B");
}

struct Endpoint {
  std::string role;
  std::string connect;
  std::optional<std::uint16_t> listen;
  std::string host = "127.0.0.1";
  bool loopback = false;
  std::string transcript;
};

void add_endpoint(CLI::App* sub, Endpoint& e) {
  sub->add_option("--role", e.role, "A (prover / initiator) or B (verifier / responder)");
  auto* c = sub->add_option("--connect", e.connect, "Peer as HOST:PORT");
  auto* l = sub->add_option("--listen", e.listen, "Accept one connection on this port");
  auto* lb = sub->add_flag("--loopback", e.loopback, "Run both roles in-process over a pipe");
  c->excludes(l)->excludes(lb);
  l->excludes(lb);
  sub->add_option("--host", e.host, "Listen address")->capture_default_str();
  sub->add_option("--transcript", e.transcript, "Write the record stream here");
}

std::unique_ptr<Transport> open_endpoint(const Endpoint& e, std::ostream& out) {
  if (e.listen) {
    TcpListener l(e.host, *e.listen);
    out << "listening on " << e.host << ':' << l.port() << '\n' << std::flush;
    return l.accept(std::chrono::minutes(5));
  }
  if (!e.connect.empty()) {
    const auto colon = e.connect.rfind(':');
    if (colon == std::string::npos) throw Error(Errc::InvalidArgument, "--connect expects HOST:PORT");
    return tcp_connect(e.connect.substr(0, colon), static_cast<std::uint16_t>(std::stoul(e.connect.substr(colon + 1))));
  }
  throw Error(Errc::InvalidArgument, "one of --listen, --connect or --loopback is required");
}

void report_outcome(std::ostream& out, std::string_view who, const SessionOutcome& o) {
  out << who << ": " << (o.accepted ? "accept" : "reject") << '\n';
  if (o.kappa_digest) out << who << " kappa digest: " << to_hex(*o.kappa_digest) << '\n';
  if (!o.bits.empty()) {
    out << who << " bits: ";
    for (const bool b : o.bits) out << (b ? '1' : '0');
    out << '\n';
  }
}

// Runs one session mode from the command line.
int run_mode(SessionMode mode, const Common& c, const Endpoint& e, const std::string& key_file,
             const std::string& pub_file, std::size_t m, std::ostream& out) {
  const auto params = load_params(c);
  SessionConfig cfg{params};
  cfg.mode = mode;
  cfg.bits = m;
  cfg.seed = c.seed;
  const bool auth = mode == SessionMode::Auth || mode == SessionMode::AuthVariant;

  if (e.loopback) {
    SessionConfig a = cfg, b = cfg;
    a.role = Role::A;
    b.role = Role::B;
    if (auth) {
      if (!key_file.empty()) {
        a.key = parse_keypair(read_file(key_file));
      } else {
        auto rng = make_rng(c, 3);
        a.key = mode == SessionMode::AuthVariant ? keygen_variant(params, rng) : keygen(params, rng);
      }
      b.peer_public = pub_file.empty() ? a.key->z_prime : parse_public_key(read_file(pub_file)).second;
    }
    auto [ta, tb] = make_pipe();
    const auto [oa, ob] = run_pair(a, b, *ta, *tb);
    report_outcome(out, "A", oa);
    report_outcome(out, "B", ob);
    if (!e.transcript.empty()) write_file(e.transcript, oa.transcript.serialize());
    return oa.accepted && ob.accepted ? kAccept : kReject;
  }

  if (e.role.empty()) throw Error(Errc::InvalidArgument, "--role is required");
  cfg.role = parse_role(e.role);
  if (auth && cfg.role == Role::A) {
    if (key_file.empty()) throw Error(Errc::InvalidArgument, "--key is required for role A");
    cfg.key = parse_keypair(read_file(key_file));
  }
  if (auth && cfg.role == Role::B) {
    if (pub_file.empty()) throw Error(Errc::InvalidArgument, "--pub is required for role B");
    cfg.peer_public = parse_public_key(read_file(pub_file)).second;
  }
  auto t = open_endpoint(e, out);
  const auto o = run_session(cfg, *t);
  report_outcome(out, cfg.role == Role::A ? "A" : "B", o);
  if (!e.transcript.empty()) write_file(e.transcript, o.transcript.serialize());
  return o.accepted ? kAccept : kReject;
}

// Braid sides have no enumerable centralizer; search the public generators.
AttackOptions braid_defaults(const ProtocolParams& params, bool inverses) {
  AttackOptions opt;
  if (params.platform().is_finite()) return opt;
  const auto& f = params.family();
  auto side = [&](const SubsetSpec& s) {
    if (!inverses) return s;
    std::vector<Element> g;
    for (const auto& e : s.generators()) {
      g.push_back(e);
      g.push_back(invert(e));
    }
    return SubsetSpec(std::move(g));
  };
  opt.left_family = side(f.L_A);
  opt.right_family = side(f.R_A);
  opt.left_bound = f.L_A.max_length();
  opt.right_bound = f.R_A.max_length();
  return opt;
}

int run_attack(const std::string& target, const Common& c, std::optional<std::size_t> lb,
               std::optional<std::size_t> rb, std::ostream& out) {
  const auto params = load_params(c);
  auto rng = make_rng(c, 4);
  auto attack_rng = make_rng(c, 5);
  const auto res = [&]() -> AttackResult {
    if (target == "a-key") {
      auto opt = braid_defaults(params, false);
      if (lb) opt.left_bound = lb;
      if (rb) opt.right_bound = rb;
      const auto key = keygen(params, rng);
      out << "public z':    " << to_string(key.z_prime) << '\n';
      return attack_a_key(params, key.z_prime, attack_rng, opt);
    } else if (target == "b-key") {
      AttackOptions opt;
      opt.left_bound = lb;
      opt.right_bound = rb;
      const auto a = ka_publish(params, Role::A, rng);
      const auto b = ka_publish(params, Role::B, rng);
      out << "public K_A:   " << to_string(a.published) << '\n' << "public K_B:   " << to_string(b.published) << '\n';
      return attack_b_key(params, a.published, b.published, ka_shared(a, b.published), opt);
    } else if (target == "shared-key") {
      auto opt = braid_defaults(params, true);
      if (lb) opt.left_bound = lb;
      if (rb) opt.right_bound = rb;
      const auto a = ka_variant_publish_a(params, rng);
      const auto b = ka_variant_publish_b(params, a.published, rng);
      out << "public K_A:   " << to_string(a.published) << '\n' << "public K_B:   " << to_string(b.published) << '\n';
      return attack_variant_b(params, a.published, b.published, ka_variant_shared_b(params, b), opt);
    } else if (target == "challenge") {
      AttackOptions opt;
      opt.left_bound = lb;
      opt.right_bound = rb;
      const auto key = keygen(params, rng);
      return attack_challenge(params, key.z_prime, attack_rng, opt);
    } else {
      throw Error(Errc::InvalidArgument, "unknown target " + target);
    }
  }();
  out << res.to_report();
  return res.verified ? kAccept : kReject;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Authentication and key agreement over non-commuting semigroups", "ncsg"};
  app.require_subcommand(1);

  Common c;
  Endpoint ep;
  std::string key_file, pub_file, out_key, out_pub, target, condition, export_name, export_out;
  bool variant = false;
  std::size_t m = 32;
  std::optional<std::size_t> left_bound, right_bound;

  auto* presets = app.add_subcommand("presets", "List or export named parameter sets");
  presets->require_subcommand(1);
  auto* plist = presets->add_subcommand("list", "Print preset names");
  auto* pexport = presets->add_subcommand("export", "Write a preset as a params file");
  pexport->add_option("name", export_name, "Preset name")->required();
  pexport->add_option("-o,--out", export_out, "Output file")->required();

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate A's key pair");
  add_common(keygen_cmd, c);
  keygen_cmd->add_flag("--variant", variant, "Require invertible a1, a2");
  keygen_cmd->add_option("--out", out_key, "Key pair file");
  keygen_cmd->add_option("--pub", out_pub, "Public key file");

  auto* auth_cmd = app.add_subcommand("auth", "Run one authentication session");
  add_common(auth_cmd, c);
  add_endpoint(auth_cmd, ep);
  auth_cmd->add_flag("--variant", variant, "Variant scheme");
  auth_cmd->add_option("--key", key_file, "A's key pair file");
  auth_cmd->add_option("--pub", pub_file, "A's public key file (verifier)");

  auto* ka_cmd = app.add_subcommand("ka", "Run one key agreement session");
  add_common(ka_cmd, c);
  add_endpoint(ka_cmd, ep);
  ka_cmd->add_flag("--variant", variant, "Variant scheme");

  auto* bits_cmd = app.add_subcommand("bits", "Key agreement, then m bits over the agreed key");
  add_common(bits_cmd, c);
  add_endpoint(bits_cmd, ep);
  bits_cmd->add_option("-m", m, "Number of bits")->capture_default_str()->check(CLI::Range(1, 1 << 20));

  auto* cond_cmd = app.add_subcommand("check-conditions", "Evaluate the commutation conditions");
  add_common(cond_cmd, c);
  cond_cmd->add_option("--condition", condition, "a or b; default from the params")
      ->check(CLI::IsMember({"a", "b"}));

  auto* attack_cmd = app.add_subcommand("attack", "Recover an equivalent secret pair by search");
  add_common(attack_cmd, c);
  attack_cmd->add_option("--target", target, "a-key, b-key, shared-key or challenge")
      ->required()
      ->check(CLI::IsMember({"a-key", "b-key", "shared-key", "challenge"}));
  attack_cmd->add_option("--left-bound", left_bound, "Word length bound, left side");
  attack_cmd->add_option("--right-bound", right_bound, "Word length bound, right side");

  auto* report_cmd = app.add_subcommand("platform-report", "Requirements a platform meets");
  add_common(report_cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAccept;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAccept;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (plist->parsed()) {
      for (const auto& name : preset_names())
        out << std::left << std::setw(16) << name << make_preset(name).description << '\n';
      return kAccept;
    }
    if (pexport->parsed()) {
      write_file(export_out, serialize_params(make_preset(export_name).params));
      out << "wrote " << export_out << '\n';
      return kAccept;
    }
    if (keygen_cmd->parsed()) {
      const auto params = load_params(c);
      auto rng = make_rng(c, 3);
      const auto key = variant ? keygen_variant(params, rng) : keygen(params, rng);
      out << "z:  " << to_string(key.z) << '\n' << "z': " << to_string(key.z_prime) << '\n';
      if (!out_key.empty()) write_file(out_key, serialize_keypair(key));
      if (!out_pub.empty()) write_file(out_pub, serialize_public_key(key));
      return kAccept;
    }
    if (auth_cmd->parsed())
      return run_mode(variant ? SessionMode::AuthVariant : SessionMode::Auth, c, ep, key_file, pub_file, m, out);
    if (ka_cmd->parsed())
      return run_mode(variant ? SessionMode::KaVariant : SessionMode::Ka, c, ep, key_file, pub_file, m, out);
    if (bits_cmd->parsed()) return run_mode(SessionMode::Bits, c, ep, key_file, pub_file, m, out);
    if (cond_cmd->parsed()) {
      const auto params = load_params(c);
      ConditionReport rep = params.condition_report();
      if (!condition.empty()) {
        rep = check_condition(effective_family(params.selection()),
                              condition == "a" ? ConditionVariant::A : ConditionVariant::B);
      }
      out << rep.to_table();
      return rep.all_hold ? kAccept : kReject;
    }
    if (attack_cmd->parsed()) return run_attack(target, c, left_bound, right_bound, out);
    if (report_cmd->parsed()) {
      const auto params = load_params(c);
      out << "platform: " << params.platform().name() << '\n';
      for (const auto& r : requirements_report(params.platform()))
        out << std::left << std::setw(6) << r.id << std::setw(8) << status_name(r.status) << r.summary << " ("
            << r.evidence << ")\n";
      return kAccept;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntime;
  }
  err << app.help();
  return kUsage;
}

}  // namespace ncsg
