#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "binradix/admissible.hpp"
#include "binradix/error.hpp"
#include "binradix/numeric.hpp"
#include "binradix/radix.hpp"
#include "binradix/tiling.hpp"

namespace binradix::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "radix/1";
constexpr int kDefaultPrecision = 40;

struct Common {
  std::string alpha, beta;
  bool json = false;
  int precision = kDefaultPrecision;
  std::string variant = "-";
};

struct Io {
  std::ostream& out;
  std::ostream& err;
  const Common& opt;

  int emit(const Json& j, const std::string& text, int code = kOk) const {
    if (opt.json)
      out << j.dump(2, ' ', false) << "\n";
    else
      out << text;
    return code;
  }
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json pair_json(const AdmissiblePair& pair) {
  return Json{{"alpha", to_string(pair.alpha)}, {"beta", to_string(pair.beta)}};
}

AdmissiblePair load_pair(const Common& opt) {
  return make_pair(parse_epstring(opt.alpha), parse_epstring(opt.beta));
}

std::string interval_string(const RationalInterval& iv) { return "[" + to_string(iv.lo) + "," + to_string(iv.hi) + "]"; }

Json value_json(const AlgebraicReal& v, int precision) {
  Json j;
  if (auto q = v.rational_value()) {
    j["exact"] = to_string(*q);
  } else {
    const RationalInterval iv = v.isolating_interval();
    j["polynomial"] = v.minimal_polynomial().to_string();
    j["interval"] = {to_string(iv.lo), to_string(iv.hi)};
  }
  j["approx"] = v.to_float(precision);
  return j;
}

// Exact text for a value: "7/2", or "root of P in [lo,hi] ≈ x".
std::string value_text(const AlgebraicReal& v, int precision) {
  if (auto q = v.rational_value()) return to_string(*q);
  return "root of " + v.minimal_polynomial().to_string() + " in " + interval_string(v.isolating_interval()) + " ≈ " +
         v.to_float(precision);
}

std::string words_string(const std::vector<Word>& words) {
  std::string s;
  for (const Word& w : words) s += (s.empty() ? "" : ", ") + to_string(w);
  return s;
}

Json words_json(const std::vector<Word>& words) {
  Json j = Json::array();
  for (const Word& w : words) j.push_back(to_string(w));
  return j;
}

double log_integer(const Integer& n) {
  if (n <= 0) return -INFINITY;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::string approx6(const AlgebraicReal& v) { return v.to_fixed(6); }

int cmd_check(const Io& io) {
  const EpString a = parse_epstring(io.opt.alpha), b = parse_epstring(io.opt.beta);
  const std::vector<Violation> vs = check_admissible(a, b);
  Json j = header("check");
  j["alpha"] = to_string(a);
  j["beta"] = to_string(b);
  j["admissible"] = vs.empty();
  j["violations"] = Json::array();
  std::string text = vs.empty() ? "admissible\n" : "inadmissible\n";
  for (const Violation& v : vs) {
    j["violations"].push_back({{"which", v.which == Violation::Which::Alpha ? "alpha" : "beta"},
                               {"shift", v.shift ? Json(*v.shift) : Json(nullptr)},
                               {"message", v.message}});
    text += "  " + v.message + "\n";
  }
  return io.emit(j, text, vs.empty() ? kOk : kDomainError);
}

int cmd_base(const Io& io) {
  const AdmissiblePair pair = load_pair(io.opt);
  const RadixSystem sys = build(pair, Variant::Minus);
  Json j = header("base");
  j.update(pair_json(pair));
  j["base_equation"] = base_equation(pair.alpha, pair.beta).to_string();
  j["b"] = value_json(sys.b, io.opt.precision);
  j["B"] = value_json(sys.B, io.opt.precision);
  j["p"] = value_json(sys.p, io.opt.precision);
  j["p_in_b"] = sys.p.expression("b");
  std::string text;
  if (auto q = sys.b.rational_value())
    text = "b: " + to_string(*q) + ", B = " + to_string(*sys.B.rational_value()) + "\n";
  else
    text = "b: root of " + sys.b.minimal_polynomial().to_string() + " ≈ " + sys.b.to_fixed(4) +
           ", B ≈ " + sys.B.to_fixed(4) + "\n";
  text += "p = " + sys.p.expression("b") + " ≈ " + sys.p.to_fixed(4) + "\n";
  return io.emit(j, text);
}

int cmd_forbidden(const Io& io, std::size_t max_len) {
  const AdmissiblePair pair = load_pair(io.opt);
  const auto r = derive_forbidden_set(pair, max_len);
  Json j = header("forbidden");
  j.update(pair_json(pair));
  std::string text;
  if (const auto* f = std::get_if<ForbiddenSet>(&r)) {
    j["finite"] = true;
    j["words"] = words_json(f->words);
    j["verified_to"] = f->verified_to;
    text = "forbidden: {" + words_string(f->words) + "} (verified to length " + std::to_string(f->verified_to) + ")\n";
  } else {
    const auto& n = std::get<NoFiniteSet>(r);
    j["finite"] = false;
    j["witness"] = to_string(n.witness);
    j["family"] = words_json(n.family);
    j["reason"] = n.reason;
    text = "no finite forbidden set\n  witness: " + to_string(n.witness) + "\n  family: " + words_string(n.family) +
           ", ...\n  " + n.reason + "\n";
  }
  return io.emit(j, text);
}

int cmd_growth(const Io& io, std::size_t n_max) {
  const AdmissiblePair pair = load_pair(io.opt);
  const PrefixAutomaton aut = PrefixAutomaton::build(pair);
  Json j = header("growth");
  j.update(pair_json(pair));
  j["counts"] = Json::array();
  std::string text = "n\tcount\n";
  Integer last = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    last = aut.count_prefixes(n);
    j["counts"].push_back({{"n", n}, {"count", last.get_str()}});
    text += std::to_string(n) + "\t" + last.get_str() + "\n";
  }
  const double rate = aut.growth_rate();
  const double empirical = n_max > 0 ? log_integer(last) / static_cast<double>(n_max) : 0.0;
  const bool null = aut.is_null();
  j["growth_rate"] = rate;
  j["empirical_rate"] = empirical;
  j["null"] = null;
  char buf[128];
  std::snprintf(buf, sizeof buf, "growth rate: %.9f (log(count)/n at n=%zu: %.9f)\n", rate, n_max, empirical);
  text += buf;
  if (auto b = solve_base(pair.alpha, pair.beta)) {
    const double ln_b = -std::log(b->to_double());
    j["ln_B"] = ln_b;
    std::snprintf(buf, sizeof buf, "ln B: %.9f\n", ln_b);
    text += buf;
  } else {
    j["ln_B"] = nullptr;
  }
  text += std::string("null: ") + (null ? "yes" : "no") + "\n";
  return io.emit(j, text);
}

AlgebraicReal read_value(const Io& io, const RadixSystem& sys, const std::string& text) {
  if (text.find('b') != std::string::npos) return evaluate(parse_poly(text, 'b'), sys.b);
  bool was_float = false;
  const Rational q = parse_rational(text, &was_float);
  if (was_float) io.err << "warning: " << text << " is a float literal; using the rational " << to_string(q) << "\n";
  return AlgebraicReal(q);
}

int cmd_encode(const Io& io, const std::string& x_text, std::size_t digits, std::size_t max_steps) {
  const AdmissiblePair pair = load_pair(io.opt);
  const Variant v = parse_variant(io.opt.variant);
  const RadixSystem sys = build(pair, v);
  const AlgebraicReal x = read_value(io, sys, x_text);
  const EncodeResult r = encode(sys, x, digits, max_steps);
  bool member_ok;
  if (r.exact) {
    member_ok = member_decimal(*r.exact, pair, v);
  } else {
    member_ok = PrefixAutomaton::build(pair, PrefixAutomaton::Start::AfterZero).accepts(r.prefix);
  }
  Json j = header("encode");
  j.update(pair_json(pair));
  j["variant"] = std::string(to_string(v));
  j["input"] = x_text;
  j["value"] = value_json(x, io.opt.precision);
  j["decimal"] = r.to_string();
  j["truncated"] = r.truncated();
  if (r.truncated()) j["fraction_digits"] = digits;
  j["member"] = member_ok;
  return io.emit(j, r.to_string() + "\n");
}

int cmd_decode(const Io& io, const std::string& d_text) {
  const AdmissiblePair pair = load_pair(io.opt);
  const Variant v = parse_variant(io.opt.variant);
  const RadixSystem sys = build(pair, v);
  const Decimal d = parse_decimal(d_text);
  const AlgebraicReal x = radix_value(sys, d);
  Json j = header("decode");
  j.update(pair_json(pair));
  j["variant"] = std::string(to_string(v));
  j["decimal"] = to_string(d);
  j["value"] = value_json(x, io.opt.precision);
  j["value_in_b"] = x.expression("b");
  std::string text = value_text(x, io.opt.precision);
  if (!x.is_rational()) text += "\n  = " + x.expression("b");
  return io.emit(j, text + "\n");
}

std::string orbit_string(const Orbit& o) { return o.digits ? to_string(*o.digits) : to_string(o.prefix) + "…"; }

int cmd_pair_from_base(const Io& io, const std::string& poly_text, const std::string& interval_text,
                       const std::string& p_text, std::size_t max_steps) {
  const auto comma = interval_text.find(',');
  if (comma == std::string::npos) throw ParseError("interval must be lo,hi", interval_text.size());
  const Rational lo = parse_rational(interval_text.substr(0, comma));
  const Rational hi = parse_rational(interval_text.substr(comma + 1));
  const AlgebraicReal theta = AlgebraicReal::generator(NumberField::create(parse_poly(poly_text), lo, hi));
  const AlgebraicReal B = theta > AlgebraicReal(1) ? theta : AlgebraicReal(1) / theta;
  const AlgebraicReal p = evaluate(parse_poly(p_text), theta);
  const RecoveredPair r = pair_from_base(B, p, max_steps);
  Json j = header("pair-from-base");
  j["B"] = value_json(B, io.opt.precision);
  j["p"] = value_json(p, io.opt.precision);
  j["alpha"] = orbit_string(r.alpha);
  j["beta"] = orbit_string(r.beta);
  j["exact"] = r.exact();
  j["admissible"] = r.exact() && r.violations.empty();
  j["violations"] = Json::array();
  for (const Violation& v : r.violations) j["violations"].push_back(v.message);
  std::string text = "alpha: " + orbit_string(r.alpha) + "\nbeta: " + orbit_string(r.beta) + "\n";
  if (!r.exact()) text += "orbit not closed within " + std::to_string(max_steps) + " steps\n";
  for (const Violation& v : r.violations) text += "  " + v.message + "\n";
  if (r.exact() && r.violations.empty()) {
    const auto b = solve_base(*r.alpha.digits, *r.beta.digits);
    const bool same = b && *b == AlgebraicReal(1) / B;
    j["base_recovered"] = same;
    text += std::string("base of the recovered pair: ") + (same ? "equal to B" : "different from B") + "\n";
  } else {
    j["base_recovered"] = nullptr;
  }
  return io.emit(j, text);
}

void write_svg(const std::string& path, const Tiling& tiling) {
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  const double width = 1000.0;
  const double total = tiling.tiles.empty() ? 1.0 : tiling.tiles.back().hi.to_double();
  const double scale = width / total;
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"60\" viewBox=\"0 0 %.0f 60\">\n",
                width + 20, width + 20);
  f << buf;
  for (const Tile& t : tiling.tiles) {
    const double x0 = t.lo.to_double() * scale, x1 = t.hi.to_double() * scale;
    std::snprintf(buf, sizeof buf,
                  "  <rect x=\"%.3f\" y=\"10\" width=\"%.3f\" height=\"40\" fill=\"%s\" stroke=\"#222\" "
                  "stroke-width=\"0.5\"><title>%s %s</title></rect>\n",
                  10 + x0, x1 - x0, palette[t.type % std::size(palette)], to_string(t.label).c_str(),
                  tiling.type_names[t.type].c_str());
    f << buf;
  }
  f << "</svg>\n";
}

int cmd_tiling(const Io& io, std::size_t count, const std::string& svg) {
  const AdmissiblePair pair = load_pair(io.opt);
  const RadixSystem sys = build(pair, Variant::Minus);
  const Tiling tiling = generate_tiling(sys, count);
  const std::vector<TileLength> lengths = tile_lengths(sys, tiling);
  const bool self_rep = verify_self_replicating(sys, tiling);
  std::vector<std::size_t> types;
  for (const Tile& t : tiling.tiles) types.push_back(t.type);
  const std::string sequence = type_string(types, tiling.type_names);

  Json j = header("tiling");
  j.update(pair_json(pair));
  j["tiles"] = Json::array();
  std::string text = "tiles:\n";
  for (const Tile& t : tiling.tiles) {
    const AlgebraicReal len = t.length();
    j["tiles"].push_back({{"label", to_string(t.label)},
                          {"lo", t.lo.expression("b")},
                          {"hi", t.hi.expression("b")},
                          {"type", t.type},
                          {"length", len.expression("b")},
                          {"lo_approx", t.lo.to_double()},
                          {"hi_approx", t.hi.to_double()},
                          {"length_approx", len.to_double()}});
    text += "  " + to_string(t.label) + "\t[" + approx6(t.lo) + ", " + approx6(t.hi) + "]\t" +
            tiling.type_names[t.type] + "\n";
  }
  j["types"] = Json::array();
  text += "types:\n";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const TileLength& tl = lengths[i];
    j["types"].push_back({{"type", i},
                          {"name", tiling.type_names[i]},
                          {"length", tl.length.expression("b")},
                          {"length_approx", tl.length.to_double()},
                          {"occurrences", tl.occurrences},
                          {"candidate", tl.candidate}});
    text += "  " + std::to_string(i) + "\t" + tiling.type_names[i] + "\tlength " + approx6(tl.length) + "\tx" +
            std::to_string(tl.occurrences) + (tl.candidate ? "" : "\t(not a shift difference)") + "\n";
  }
  j["sequence"] = sequence;
  j["self_replicating"] = self_rep;
  text += "sequence: " + sequence + "\nself-replicating: " + (self_rep ? "yes" : "no") + "\n";
  if (!svg.empty()) write_svg(svg, tiling);
  return io.emit(j, text);
}

int cmd_subst(const Io& io, std::size_t count, std::size_t sample, std::size_t steps) {
  const AdmissiblePair pair = load_pair(io.opt);
  const RadixSystem sys = build(pair, Variant::Minus);
  const auto r = derive_substitution(sys, sample);
  Json j = header("subst");
  j.update(pair_json(pair));
  if (const auto* n = std::get_if<NotSubstitutive>(&r)) {
    j["substitutive"] = false;
    j["reason"] = n->reason;
    return io.emit(j, "not substitutive: " + n->reason + "\n");
  }
  const auto& s = std::get<SubstitutionSystem>(r);
  const Tiling tiling = generate_tiling(sys, count);
  const bool self_rep = verify_self_replicating(sys, tiling);

  std::vector<std::size_t> generated;
  for (const Tile& t : tiling.tiles) generated.push_back(t.type);
  std::vector<std::size_t> expanded{s.axiom};
  for (std::size_t k = 0; expanded.size() < generated.size() && k < 64; ++k) expanded = expand(s, k + 1);
  const std::size_t common = std::min(expanded.size(), generated.size());
  const bool matches = std::equal(generated.begin(), generated.begin() + static_cast<long>(common), expanded.begin());

  j["substitutive"] = true;
  j["types"] = Json::array();
  for (std::size_t i = 0; i < s.lengths.size(); ++i)
    j["types"].push_back({{"type", i},
                          {"name", s.names[i]},
                          {"length", s.lengths[i].expression("b")},
                          {"length_approx", s.lengths[i].to_double()}});
  j["rules"] = s.rule_strings(false);
  j["named_rules"] = s.rule_strings(true);
  j["axiom"] = s.axiom;
  j["expansion"] = type_string(expand(s, steps), s.names);
  j["expansion_matches_tiling"] = matches;
  j["self_replicating"] = self_rep;
  j["tiles_checked"] = count;

  auto joined = [](const std::vector<std::string>& v) {
    std::string out;
    for (const std::string& x : v) out += (out.empty() ? "" : ", ") + x;
    return out;
  };
  std::string text = "rules: " + joined(s.rule_strings(false)) + "\n";
  text += "by length: " + joined(s.rule_strings(true)) + "\n";
  text += "axiom: " + s.names[s.axiom] + "\n";
  text += "expand " + std::to_string(steps) + ": " + type_string(expand(s, steps), s.names) + "\n";
  text += std::string("expansion matches tiling: ") + (matches ? "yes" : "no") + "\n";
  text += "self-replicating on " + std::to_string(count) + " tiles: " + (self_rep ? "yes" : "no") + "\n";
  return io.emit(j, text);
}

int env_precision(std::ostream& err) {
  const char* env = std::getenv("RADIX_PRECISION");
  if (!env || !*env) return kDefaultPrecision;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 10000) {
    err << "warning: ignoring RADIX_PRECISION=" << env << "\n";
    return kDefaultPrecision;
  }
  return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Common opt;
  opt.precision = env_precision(err);

  CLI::App app{"Binary radix systems: bases, addresses, forbidden factors and tilings", "radix"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Machine-readable output (schema radix/1)");
  app.add_option("--precision", opt.precision, "Significant digits of float approximations")
      ->check(CLI::Range(1, 10000));

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("alpha", opt.alpha, "Upper kneading string, e.g. (01)")->required();
    sub->add_option("beta", opt.beta, "Lower kneading string, e.g. 1(0)")->required();
  };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", opt.variant, "Address space variant: - or +")->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "Admissibility verdict or violation witness");
  add_pair(check);

  auto* base = app.add_subcommand("base", "Base b, B and partition point p");
  add_pair(base);

  std::size_t max_len = 40;
  auto* forbidden = app.add_subcommand("forbidden", "Forbidden factor set");
  add_pair(forbidden);
  forbidden->add_option("--maxlen", max_len, "Verification length")->capture_default_str();

  std::size_t growth_n = 12;
  auto* growth = app.add_subcommand("growth", "Prefix counts, growth rate and null verdict");
  add_pair(growth);
  growth->add_option("--n", growth_n, "Largest prefix length")->capture_default_str();

  std::string x_text;
  std::size_t digits = 64, max_steps = kDefaultMaxSteps;
  auto* enc = app.add_subcommand("encode", "Decimal address of a non-negative number");
  add_pair(enc);
  enc->add_option("x", x_text, "p/q, an integer, a float, or a polynomial in b")->required();
  add_variant(enc);
  enc->add_option("--digits", digits, "Fractional digits when the orbit does not close")->capture_default_str();
  enc->add_option("--max-steps", max_steps, "Orbit steps before truncating")->capture_default_str();

  std::string d_text;
  auto* dec = app.add_subcommand("decode", "Value of a decimal address");
  add_pair(dec);
  dec->add_option("decimal", d_text, "Decimal such as 11.0(1)")->required();
  add_variant(dec);

  std::string poly_text, interval_text, p_text;
  auto* pfb = app.add_subcommand("pair-from-base", "Kneading pair of the map with base B and point p");
  pfb->add_option("--poly", poly_text, "Polynomial in x with the generator as a root")->required();
  pfb->add_option("--interval", interval_text, "lo,hi isolating the generator")->required();
  pfb->add_option("--p", p_text, "Partition point as a polynomial in the generator")->required();
  pfb->add_option("--max-steps", max_steps, "Orbit steps before truncating")->capture_default_str();

  std::size_t tile_count = 22;
  std::string svg;
  auto* til = app.add_subcommand("tiling", "Tiles, tile lengths and types");
  add_pair(til);
  til->add_option("--count", tile_count, "Number of tiles")->capture_default_str();
  til->add_option("--svg", svg, "Write an SVG strip to this file");

  std::size_t subst_count = 100, sample = 200, steps = 4;
  auto* sub = app.add_subcommand("subst", "Substitution rules and self-replication verdict");
  add_pair(sub);
  sub->add_option("--count", subst_count, "Tiles checked for self-replication")->capture_default_str();
  sub->add_option("--sample", sample, "Tiles sampled for the rules")->capture_default_str();
  sub->add_option("--steps", steps, "Rewriting steps shown")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  const Io io{out, err, opt};
  try {
    if (check->parsed()) return cmd_check(io);
    if (base->parsed()) return cmd_base(io);
    if (forbidden->parsed()) return cmd_forbidden(io, max_len);
    if (growth->parsed()) return cmd_growth(io, growth_n);
    if (enc->parsed()) return cmd_encode(io, x_text, digits, max_steps);
    if (dec->parsed()) return cmd_decode(io, d_text);
    if (pfb->parsed()) return cmd_pair_from_base(io, poly_text, interval_text, p_text, max_steps);
    if (til->parsed()) return cmd_tiling(io, tile_count, svg);
    if (sub->parsed()) return cmd_subst(io, subst_count, sample, steps);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    if (opt.json) {
      Json j = header(app.get_subcommands().front()->get_name());
      j["error"] = e.what();
      out << j.dump(2, ' ', false) << "\n";
    }
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace binradix::cli
