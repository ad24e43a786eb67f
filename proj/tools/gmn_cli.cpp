#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmn/conjugacy.hpp"
#include "gmn/errors.hpp"
#include "gmn/oracle.hpp"
#include "gmn/witness.hpp"
#include "gmn/words.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success/conjugate, 1 non-conjugate/unequal, 2 parse error,
// 3 parameter error, 4 witness-of-conjugate, 5 cap exhausted.
constexpr int kExitConjugate = 0;
constexpr int kExitNonConjugate = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBadParameter = 3;
constexpr int kExitInputsConjugate = 4;
constexpr int kExitCapExhausted = 5;

struct Config {
  long long m = 0;
  long long n = 0;
  long long t = 0;  // 0: infinite
  bool json_mode = false;
  std::uint64_t seed = 0;
  long long cap = 1000000;
  bool minimize = false;
};

gmn::GroupContext make_context(const Config& cfg) {
  std::optional<gmn::Int> t;
  if (cfg.t != 0) t = gmn::Int(cfg.t);
  return gmn::GroupContext(cfg.m, cfg.n, t);
}

json int_to_json(const gmn::Int& v) {
  // Certificates can in principle outgrow 64 bits; fall back to a string.
  static const gmn::Int lo = std::numeric_limits<std::int64_t>::min();
  static const gmn::Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) return gmn::to_string(v);
  return static_cast<std::int64_t>(v);
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  if (cfg.json_mode)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

json certificate_json(const gmn::Certificate& c) {
  json j;
  switch (c.kind) {
    case gmn::Certificate::Kind::LengthMismatch:
      j["kind"] = "length_mismatch";
      j["l_f"] = int_to_json(c.l_f);
      j["l_g"] = int_to_json(c.l_g);
      break;
    case gmn::Certificate::Kind::FactorCoreMismatch:
      j["kind"] = "factor_core_mismatch";
      break;
    case gmn::Certificate::Kind::FactorNotConjugate:
      j["kind"] = "factor_not_conjugate";
      break;
    case gmn::Certificate::Kind::NotHConjugate:
      j["kind"] = "not_h_conjugate";
      break;
    case gmn::Certificate::Kind::ModulusWitness:
      j["kind"] = "modulus_witness";
      j["t"] = int_to_json(c.t);
      break;
  }
  return j;
}

json witness_json(const gmn::WitnessCertificate& cert) {
  json moduli = json::object();
  for (const auto& [name, value] : cert.moduli) moduli[name] = int_to_json(value);
  return {{"schema", 1},
          {"t", int_to_json(cert.t)},
          {"case", cert.case_label},
          {"moduli", moduli},
          {"trace", cert.trace}};
}

int cmd_normalize(const Config& cfg, const std::string& text) {
  gmn::GroupContext ctx = make_context(cfg);
  gmn::GNormal g = ctx.word_to_normal(gmn::parse_word(text));
  std::string rendered = gmn::render_word(ctx.normal_to_word(g));
  gmn::Int len = ctx.length(g);
  emit(cfg,
       {{"schema", 1}, {"normal", rendered}, {"length", int_to_json(len)}},
       "normal: " + rendered + "\nlength: " + gmn::to_string(len));
  return 0;
}

int cmd_eq(const Config& cfg, const std::string& w1, const std::string& w2) {
  gmn::GroupContext ctx = make_context(cfg);
  bool equal = ctx.equal(ctx.word_to_normal(gmn::parse_word(w1)),
                         ctx.word_to_normal(gmn::parse_word(w2)));
  emit(cfg, {{"schema", 1}, {"equal", equal}}, equal ? "equal" : "not equal");
  return equal ? 0 : 1;
}

int cmd_conj(const Config& cfg, const std::string& w1, const std::string& w2) {
  gmn::GroupContext ctx = make_context(cfg);
  gmn::Verdict v = decide_conjugacy(ctx, ctx.word_to_normal(gmn::parse_word(w1)),
                                    ctx.word_to_normal(gmn::parse_word(w2)));
  if (v.conjugate) {
    std::string z = gmn::render_word(v.conjugator);
    emit(cfg, {{"schema", 1}, {"verdict", "conjugate"}, {"conjugator", z}},
         "conjugate\nconjugator: " + z);
    return kExitConjugate;
  }
  emit(cfg,
       {{"schema", 1},
        {"verdict", "non_conjugate"},
        {"certificate", certificate_json(v.certificate)}},
       "non-conjugate\nreason: " + certificate_json(v.certificate)["kind"]
           .get<std::string>());
  return kExitNonConjugate;
}

int cmd_witness(const Config& cfg, const std::string& w1, const std::string& w2) {
  if (cfg.t != 0)
    throw gmn::BadParameter("witness: runs in the infinite group; drop --t");
  gmn::GroupContext ctx = make_context(cfg);
  gmn::WitnessOptions opts;
  opts.cap = cfg.cap;
  opts.minimize = cfg.minimize;
  gmn::WitnessCertificate cert =
      find_witness_modulus(ctx, ctx.word_to_normal(gmn::parse_word(w1)),
                           ctx.word_to_normal(gmn::parse_word(w2)), opts);
  std::string text = "t: " + gmn::to_string(cert.t) + "\ncase: " + cert.case_label;
  for (const auto& line : cert.trace) text += "\n  " + line;
  emit(cfg, witness_json(cert), text);
  return 0;
}

int cmd_verify(const Config& cfg, const std::string& w1, const std::string& w2,
               long long t) {
  if (cfg.t != 0)
    throw gmn::BadParameter("verify: runs in the infinite group; drop --t");
  gmn::GroupContext ctx = make_context(cfg);
  bool ok = gmn::verify_witness(ctx, ctx.word_to_normal(gmn::parse_word(w1)),
                                ctx.word_to_normal(gmn::parse_word(w2)), t);
  emit(cfg, {{"schema", 1}, {"verified", ok}}, ok ? "verified" : "not a witness");
  return ok ? 0 : 1;
}

int cmd_random(const Config& cfg, long long min_syl, long long max_syl,
               long long max_exp) {
  if (min_syl < 0 || max_syl < min_syl)
    throw gmn::BadParameter("random: bad length range");
  gmn::RandomWordParams params;
  params.min_syllables = static_cast<size_t>(min_syl);
  params.max_syllables = static_cast<size_t>(max_syl);
  params.max_exponent = max_exp;
  params.m = cfg.m;
  params.n = cfg.n;
  if (cfg.t != 0) params.t = gmn::Int(cfg.t);
  std::string w = gmn::render_word(gmn::random_word(cfg.seed, params));
  emit(cfg, {{"schema", 1}, {"word", w}}, w);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Conjugacy decision and separability certificates for the "
               "groups <a,b; [a^m,b^n]=1>"};
  app.require_subcommand(1);
  app.add_option("--m", cfg.m, "exponent m (>= 2)")->required();
  app.add_option("--n", cfg.n, "exponent n (>= 2)")->required();
  app.add_option("--t", cfg.t, "work in the quotient G_mn(t)");
  app.add_flag("--json", cfg.json_mode, "machine-readable output");
  app.add_option("--seed", cfg.seed, "RNG seed for `random`");
  app.add_option("--cap", cfg.cap, "witness search iteration cap")
      ->check(CLI::PositiveNumber);
  app.add_flag("--minimize", cfg.minimize, "scan for the least verified witness t");

  std::string w1, w2;
  long long verify_t = 0;
  long long min_syl = 0, max_syl = 6, max_exp = 4;

  auto* normalize = app.add_subcommand("normalize", "canonical form and length");
  normalize->add_option("word", w1, "input word")->required();
  auto* eq = app.add_subcommand("eq", "equality of two words");
  eq->add_option("word1", w1)->required();
  eq->add_option("word2", w2)->required();
  auto* conj = app.add_subcommand("conj", "decide conjugacy");
  conj->add_option("word1", w1)->required();
  conj->add_option("word2", w2)->required();
  auto* witness = app.add_subcommand("witness", "separability certificate");
  witness->add_option("word1", w1)->required();
  witness->add_option("word2", w2)->required();
  auto* verify = app.add_subcommand("verify", "check a certificate modulus");
  verify->add_option("word1", w1)->required();
  verify->add_option("word2", w2)->required();
  verify->add_option("t", verify_t, "modulus to check")->required();
  auto* random = app.add_subcommand("random", "seeded random word");
  random->add_option("--min-syllables", min_syl);
  random->add_option("--max-syllables", max_syl);
  random->add_option("--max-exponent", max_exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitBadParameter;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(cfg, w1);
    if (eq->parsed()) return cmd_eq(cfg, w1, w2);
    if (conj->parsed()) return cmd_conj(cfg, w1, w2);
    if (witness->parsed()) return cmd_witness(cfg, w1, w2);
    if (verify->parsed()) return cmd_verify(cfg, w1, w2, verify_t);
    if (random->parsed()) return cmd_random(cfg, min_syl, max_syl, max_exp);
  } catch (const gmn::SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const gmn::InputsConjugate& e) {
    if (cfg.json_mode)
      std::cout << json{{"schema", 1},
                        {"verdict", "conjugate"},
                        {"conjugator", e.conjugator}}
                       .dump()
                << "\n";
    else
      std::cout << "conjugate\nconjugator: " << e.conjugator << "\n";
    return kExitInputsConjugate;
  } catch (const gmn::CapExhausted& e) {
    std::cerr << "cap exhausted: " << e.what() << "\n";
    return kExitCapExhausted;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParameter;
  }
  return kExitBadParameter;
}
