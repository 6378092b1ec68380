// Acceptance run: one PASS/FAIL line per criterion.  Exits non-zero only
// with --strict and at least one FAIL.

#include <binradix/numeric.hpp>
#include <binradix/tiling.hpp>

#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "examples.hpp"
#include "oracles.hpp"

using namespace binradix;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;  // printed under the verdict line

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

RadixSystem sys_of(const examples::Example& e, Variant v = Variant::Minus) { return build(examples::pair(e), v); }

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string fmt(double x, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

Outcome base_values() {
  Outcome o;
  const auto half = solve_base(parse_epstring("0(1)"), parse_epstring("1(0)"));
  o.check(half && half->is_rational() && *half->rational_value() == Rational(1, 2), "standard b is not exactly 1/2");

  const auto g = solve_base(parse_epstring("(01)"), parse_epstring("1(0)"));
  o.check(g && g->minimal_polynomial() == parse_poly("x^2+x-1"), "golden b does not solve x^2+x-1");
  if (g) {
    const double err = std::abs((AlgebraicReal(1) / *g).to_double() - (1 + std::sqrt(5.0)) / 2);
    o.check(err <= 1e-10, "golden B off by " + fmt(err));
  }
  for (const auto& e : examples::plastic()) {
    const auto b = solve_base(parse_epstring(e.alpha), parse_epstring(e.beta));
    if (!b) {
      o.fail(e.name + ": no base");
      continue;
    }
    o.check(b->minimal_polynomial() == parse_poly("x^3+x^2-1"), e.name + ": b does not solve x^3+x^2-1");
    o.check(std::abs(b->to_double() - 0.7549) <= 1e-4, e.name + ": b = " + fmt(b->to_double()));
    o.check(std::abs((AlgebraicReal(1) / *b).to_double() - 1.3247) <= 1e-4, e.name + ": B off");
  }
  o.detail = o.pass ? "b=1/2; |B-phi|<=1e-10 on x^2+x-1; three pairs on x^3+x^2-1 within 1e-4 of 0.7549/1.3247"
                    : o.detail;
  return o;
}

std::vector<std::string> forbidden_words(const AdmissiblePair& p) {
  const auto r = derive_forbidden_set(p);
  std::vector<std::string> out;
  if (const auto* f = std::get_if<ForbiddenSet>(&r))
    for (const Word& w : f->words) out.push_back(to_string(w));
  return out;
}

Outcome forbidden_sets() {
  Outcome o;
  struct Want {
    const char* alpha;
    const char* beta;
    std::set<std::string> words;
  };
  const std::vector<Want> wants{
      {"(01101)", "(100)", {"111", "11011", "000"}},
      {"(01)", "1(0)", {"11"}},
      {"(01000)", "1(0)", {"11", "101", "1001", "10001"}},
      {"(011)", "(10)", {"100", "111"}},
      {"(01)", "(100)", {"11", "1000"}},
  };
  std::size_t matched = 0;
  for (const Want& w : wants) {
    const AdmissiblePair p = make_pair(parse_epstring(w.alpha), parse_epstring(w.beta));
    const auto got = forbidden_words(p);
    if (std::set<std::string>(got.begin(), got.end()) == w.words) {
      ++matched;
      continue;
    }
    o.fail(std::string("(") + w.alpha + ", " + w.beta + ")");
    o.notes.push_back(std::string(w.alpha) + " " + w.beta + ": derived {" + join(got) + "}, published {" +
                      join({w.words.begin(), w.words.end()}) + "}");
    const bool zero_member = member(EpString(), p, Variant::Minus) && member(EpString(), p, Variant::Plus);
    if (w.words.count("000") && zero_member)
      o.notes.push_back("(0) is a member of both spaces, so 000 is not a forbidden factor");
  }
  const auto runaway = derive_forbidden_set(make_pair(parse_epstring("011(01)"), parse_epstring("1(0)")));
  o.check(std::holds_alternative<NoFiniteSet>(runaway), "011(01), 1(0) produced a finite set");
  if (o.pass)
    o.detail = "5/5 sets exact; NoFiniteSet for (011(01), 1(0))";
  else
    o.detail = std::to_string(matched) + "/5 sets exact; mismatch " + o.detail;
  return o;
}

Outcome nullity() {
  Outcome o;
  const AdmissiblePair alt = examples::pair(examples::kAlternating);
  const auto aut = PrefixAutomaton::build(alt);
  const double rate200 = std::log(aut.count_prefixes(200).get_d()) / 200.0;
  const bool alt_null = is_null(alt);
  for (const auto& e : examples::non_null()) o.check(!is_null(examples::pair(e)), e.name + " reported null");
  o.check(alt_null && rate200 < 0.05, "alternating pair: is_null=" + std::string(alt_null ? "true" : "false") +
                                          ", ln|G_200|/200=" + fmt(rate200, 4) + " (need < 0.05)");
  if (!alt_null) {
    o.notes.push_back("spectral growth rate " + fmt(aut.growth_rate(), 8) + " = ln sqrt(2); the base is sqrt(2)");
    const bool witness = member(parse_epstring("(0011)"), alt, Variant::Minus) &&
                         member(parse_epstring("(001011)"), alt, Variant::Minus);
    o.notes.push_back(std::string("(0011) and (001011) are members: ") + (witness ? "yes" : "no") +
                      "; doubled digits recur without bound");
    o.notes.push_back("brute-force prefix counts n=1..12 agree with the automaton (criterion 6)");
  }
  if (o.pass) o.detail = "alternating pair null with rate < 0.05 at n=200; six pairs non-null";
  return o;
}

Outcome entropy() {
  Outcome o;
  double worst = 0;
  for (const auto& e : examples::non_null()) {
    const RadixSystem s = sys_of(e);
    const double d = std::abs(PrefixAutomaton::build(s.pair).growth_rate() - std::log(s.B.to_double()));
    worst = std::max(worst, d);
    o.check(d <= 1e-6, e.name + ": |h - ln B| = " + fmt(d));
  }
  if (o.pass) o.detail = "six systems, max |growth_rate - ln B| = " + fmt(worst, 3) + " <= 1e-6";
  return o;
}

Outcome roundtrip() {
  Outcome o;
  std::mt19937_64 rng(20240501);
  std::size_t exact = 0, truncated = 0;
  double worst = 0;
  auto run_system = [&](const examples::Example& e, Variant v, int samples) {
    const RadixSystem s = sys_of(e, v);
    const auto aut = PrefixAutomaton::build(s.pair, PrefixAutomaton::Start::AfterZero);
    for (int t = 0; t < samples; ++t) {
      const long q = static_cast<long>(1 + rng() % 64);
      const Rational x(static_cast<long>(rng() % static_cast<unsigned long>(100 * q)), q);
      const EncodeResult r = encode(s, x, 64, kDefaultMaxSteps);
      if (r.exact) {
        ++exact;
        if (!member_decimal(*r.exact, s.pair, v)) o.fail(e.name + ": non-member output for " + x.get_str());
        if (radix_value(s, *r.exact) != AlgebraicReal(x)) o.fail(e.name + ": decode mismatch for " + x.get_str());
      } else {
        ++truncated;
        if (!aut.accepts(r.prefix)) o.fail(e.name + ": rejected prefix for " + x.get_str());
        const double err = std::abs((decimal_value(s.b, r.truncated_decimal()) - AlgebraicReal(x)).to_double());
        worst = std::max(worst, err);
        if (err >= 1e-6) o.fail(e.name + ": truncation error " + fmt(err) + " for " + x.get_str());
      }
    }
  };
  for (const auto& e : examples::non_null()) {
    run_system(e, Variant::Minus, 1000);
    run_system(e, Variant::Plus, 100);
  }
  if (o.pass)
    o.detail = std::to_string(exact) + " exact round trips, " + std::to_string(truncated) +
               " truncated with max error " + fmt(worst, 3) + " < 1e-6; all outputs members";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : examples::all()) {
    const AdmissiblePair p = examples::pair(e);
    const auto aut = PrefixAutomaton::build(p);
    std::optional<RadixSystem> s;
    if (!is_null(p)) s = build(p, Variant::Minus);
    for (std::size_t n = 1; n <= 12; ++n) {
      const Integer c = aut.count_prefixes(n);
      ++checks;
      o.check(c == oracle::brute_count(p.alpha, p.beta, n), e.name + ": brute force differs at n=" + std::to_string(n));
      if (!s) continue;
      ++checks;
      o.check(c == static_cast<unsigned long>(lap_count(s->B, s->p, Variant::Minus, n)),
              e.name + ": lap count differs at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " counts, n<=12, seven pairs, brute force and lap counts agree";
  return o;
}

Outcome golden_tiling() {
  Outcome o;
  const RadixSystem g = sys_of(examples::kGolden);
  const Tiling t = generate_tiling(g, 22);
  std::vector<std::size_t> seq;
  for (const Tile& tile : t.tiles) seq.push_back(tile.type);
  const std::string s = type_string(seq, t.type_names);
  o.check(s == "B1BB1B1BB1BB1B1BB1B1BB", "sequence " + s);
  const auto sub = derive_substitution(g);
  if (const auto* r = std::get_if<SubstitutionSystem>(&sub)) {
    const auto rules = r->rule_strings(true);
    o.check(std::set<std::string>(rules.begin(), rules.end()) == std::set<std::string>{"B←B1", "1←B"},
            "rules " + join(rules));
  } else {
    o.fail("not substitutive");
  }
  o.check(verify_self_replicating(g, generate_tiling(g, 50)), "not self-replicating on 50 tiles");
  if (o.pass) o.detail = "B1BB1B1BB1BB1B1BB1B1BB; rules {B←B1, 1←B}; self-replicating on 50 tiles";
  return o;
}

Outcome plastic_substitutions() {
  Outcome o;
  struct Published {
    examples::Example e;
    std::vector<std::string> rules;
    std::vector<std::string> lengths;
    std::string sequence;
  };
  const std::vector<Published> published{
      {examples::kPlastic1,
       {"0←1", "1←2", "2←3", "3←4", "4←40"},
       {"1", "B", "B^2", "B^3", "B^4"},
       "4012344040140124012340123440123440"},
      {examples::kPlastic2, {"0←1", "1←2", "2←10", "3←32"}, {"1", "B", "B^2", "B^3", "B^6"}, "3210211022110102212110102"},
      {examples::kPlastic3,
       {"0←1", "1←2", "2←01", "3←31"},
       {"1", "B", "B^2", "B^3", "1+B+B^2"},
       "31201122010112122012010112"},
  };
  int k = 0;
  for (const Published& p : published) {
    ++k;
    const RadixSystem s = sys_of(p.e);
    const auto sub = derive_substitution(s);
    const auto* r = std::get_if<SubstitutionSystem>(&sub);
    if (!r) {
      o.fail(p.e.name + " not substitutive");
      continue;
    }
    o.check(r->rule_strings(false) == p.rules, p.e.name + " rules " + join(r->rule_strings(false)));
    const Tiling t = generate_tiling(s, 100);
    o.check(verify_self_replicating(s, t), p.e.name + " not self-replicating on 100 tiles");

    std::vector<std::string> names = t.type_names;
    if (names != p.lengths)
      o.notes.push_back("system " + std::to_string(k) + " lengths: derived {" + join(names) + "}, published {" +
                        join(p.lengths) + "}");
    std::string seq;
    for (std::size_t i = 0; i < p.sequence.size() && i < t.tiles.size(); ++i) seq += std::to_string(t.tiles[i].type);
    o.notes.push_back("system " + std::to_string(k) + " opening sequence " +
                      (seq == p.sequence ? "matches the published one" : "differs: " + seq + " vs " + p.sequence));
  }
  if (o.pass) o.detail = "three rule tables exact; self-replicating on 100 tiles each (length notes below)";
  return o;
}

Outcome pair_recovery() {
  Outcome o;
  const RadixSystem g = sys_of(examples::kGolden);
  auto recover = [&](const AlgebraicReal& B, const AlgebraicReal& p, const char* a, const char* b) {
    const RecoveredPair r = pair_from_base(B, p);
    if (!r.exact()) return o.fail(std::string("orbit of p did not close for ") + a);
    o.check(*r.alpha.digits == parse_epstring(a) && *r.beta.digits == parse_epstring(b),
            "recovered (" + to_string(*r.alpha.digits) + ", " + to_string(*r.beta.digits) + ")");
    const auto base = solve_base(*r.alpha.digits, *r.beta.digits);
    o.check(base && AlgebraicReal(1) / *base == B, std::string("base not recovered for ") + a);
  };
  recover(g.B, g.b * g.b, "(01)", "1(0)");
  recover(AlgebraicReal(2), AlgebraicReal(Rational(1, 2)), "0(1)", "1(0)");
  if (o.pass) o.detail = "((01), 1(0)) from (phi, b^2) and (0(1), 1(0)) from (2, 1/2); bases recovered exactly";
  return o;
}

Outcome monotonicity() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::size_t pairs = 0;
  for (const auto& e : examples::non_null())
    for (Variant v : {Variant::Minus, Variant::Plus}) {
      const RadixSystem s = sys_of(e, v);
      for (int done = 0; done < 500;) {
        const Decimal a(oracle::random_epstring(rng, 5, 6), static_cast<long>(rng() % 7) - 1);
        const Decimal b(oracle::random_epstring(rng, 5, 6), static_cast<long>(rng() % 7) - 1);
        if (a == b || !member_decimal(a, s.pair, v) || !member_decimal(b, s.pair, v)) continue;
        ++done;
        ++pairs;
        const bool lex_less = a < b;
        const bool value_less = radix_value(s, a) < radix_value(s, b);
        if (lex_less != value_less) o.fail(e.name + ": " + to_string(a) + " vs " + to_string(b));
      }
    }
  if (o.pass) o.detail = std::to_string(pairs) + " member pairs (500 per system and variant), order preserved";
  return o;
}

// CLI side: in-process invocations checked against the library and the
// golden files.
json cli_json(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "--json");
  std::ostringstream out, err;
  const int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str().empty() ? json() : json::parse(out.str());
}

bool near_json(const json& a, const json& b) {
  if (a.is_number_float() || b.is_number_float())
    return a.is_number() && b.is_number() &&
           std::abs(a.get<double>() - b.get<double>()) <= 1e-9 * std::max({1.0, std::abs(a.get<double>())});
  if (a.type() != b.type() || a.size() != b.size()) return false;
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !near_json(*it, b[it.key()])) return false;
    return true;
  }
  if (a.is_array()) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!near_json(a[i], b[i])) return false;
    return true;
  }
  return a == b;
}

Outcome cli_reproduction() {
  Outcome o;
  std::size_t checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    o.check(ok, what);
  };

  // 1
  expect(cli_json({"base", "0(1)", "1(0)"})["b"]["exact"] == "1/2", "base standard");
  expect(cli_json({"base", "(01)", "1(0)"})["b"]["polynomial"] == "x^2+x-1", "base golden");
  for (const auto& e : examples::plastic())
    expect(cli_json({"base", e.alpha, e.beta})["b"]["polynomial"] == "x^3+x^2-1", "base " + e.name);
  // 2, 3, 4, 6
  for (const auto& e : examples::all()) {
    const AdmissiblePair p = examples::pair(e);
    const json f = cli_json({"forbidden", e.alpha, e.beta});
    if (f.contains("words")) expect(f["words"] == json(forbidden_words(p)), "forbidden " + e.name);
    const json g = cli_json({"growth", e.alpha, e.beta, "--n", "12"});
    expect(g["null"] == is_null(p), "null verdict " + e.name);
    const auto aut = PrefixAutomaton::build(p);
    expect(std::abs(g["growth_rate"].get<double>() - aut.growth_rate()) < 1e-12, "growth rate " + e.name);
    for (const json& row : g["counts"])
      expect(row["count"] == aut.count_prefixes(row["n"].get<std::size_t>()).get_str(), "count " + e.name);
    if (!g["ln_B"].is_null())
      expect(std::abs(g["growth_rate"].get<double>() - g["ln_B"].get<double>()) <= 1e-6, "ln B " + e.name);
  }
  const json runaway = cli_json({"forbidden", "011(01)", "1(0)"});
  expect(runaway.contains("family"), "forbidden runaway");
  // 5
  std::mt19937_64 rng(5);
  for (const auto& e : examples::non_null())
    for (const char* v : {"-", "+"}) {
      const RadixSystem s = sys_of(e, parse_variant(v));
      for (int t = 0; t < 10; ++t) {
        const std::string x = std::to_string(rng() % 700) + "/" + std::to_string(1 + rng() % 7);
        const json enc = cli_json({"encode", e.alpha, e.beta, x, "--variant", v});
        const EncodeResult lib = encode(s, parse_rational(x));
        expect(enc["decimal"] == lib.to_string(), "encode " + e.name + " " + x);
        if (enc["truncated"].get<bool>()) continue;
        const json dec = cli_json({"decode", e.alpha, e.beta, enc["decimal"].get<std::string>(), "--variant", v});
        expect(dec["value"] == enc["value"], "decode " + e.name + " " + x);
      }
    }
  // 7, 8
  expect(cli_json({"tiling", "(01)", "1(0)", "--count", "22"})["sequence"] == "B1BB1B1BB1BB1B1BB1B1BB", "tiling golden");
  const json gs = cli_json({"subst", "(01)", "1(0)", "--count", "50"});
  expect(gs["self_replicating"] == true && gs["named_rules"] == json({"1←B", "B←B1"}), "subst golden");
  const std::vector<std::vector<std::string>> tables{
      {"0←1", "1←2", "2←3", "3←4", "4←40"}, {"0←1", "1←2", "2←10", "3←32"}, {"0←1", "1←2", "2←01", "3←31"}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto e = examples::plastic()[i];
    const json s = cli_json({"subst", e.alpha, e.beta, "--count", "100"});
    expect(s["rules"] == json(tables[i]) && s["self_replicating"] == true, "subst " + e.name);
  }
  // 9
  const json pg = cli_json({"pair-from-base", "--poly", "x^2-x-1", "--interval", "1,2", "--p", "2-x"});
  expect(pg["alpha"] == "(01)" && pg["beta"] == "1(0)" && pg["base_recovered"] == true, "pair-from-base golden");
  const json ps = cli_json({"pair-from-base", "--poly", "x-2", "--interval", "1,3", "--p", "1/2"});
  expect(ps["alpha"] == "0(1)" && ps["beta"] == "1(0)" && ps["base_recovered"] == true, "pair-from-base standard");
  // 10
  for (const auto& e : {examples::kGolden, examples::kPlastic2}) {
    const RadixSystem s = sys_of(e);
    std::vector<Decimal> ds;
    std::mt19937_64 r(9);
    while (ds.size() < 12) {
      const Decimal d(oracle::random_epstring(r, 4, 4), static_cast<long>(r() % 4) - 1);
      if (member_decimal(d, s.pair, s.variant)) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::vector<long double> values;
    for (const Decimal& d : ds)
      values.push_back(std::stold(cli_json({"decode", e.alpha, e.beta, to_string(d)})["value"]["approx"].get<std::string>()));
    expect(std::is_sorted(values.begin(), values.end()) &&
               std::adjacent_find(values.begin(), values.end()) == values.end(),
           "decode order " + e.name);
  }

  // Golden files.
  std::size_t golden = 0;
  std::ifstream cases(std::filesystem::path(BINRADIX_GOLDEN_DIR) / "cases.txt");
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string name;
    int code = 0;
    words >> name >> code;
    std::vector<std::string> args;
    for (std::string a; words >> a;) args.push_back(a);
    int got = -1;
    const json j = cli_json(args, &got);
    if (code == cli::kUsageError) {
      expect(got == code, "exit code " + name);
      continue;
    }
    std::ifstream in(std::filesystem::path(BINRADIX_GOLDEN_DIR) / (name + ".json"));
    expect(in && got == code && near_json(json::parse(in), j), "golden " + name);
    ++golden;
  }
  if (o.pass)
    o.detail = std::to_string(checks) + " CLI checks against the library, " + std::to_string(golden) +
               " golden JSON files match";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"base values", base_values},
      {"forbidden sets", forbidden_sets},
      {"nullity", nullity},
      {"entropy identity", entropy},
      {"round trip", roundtrip},
      {"oracle equivalence", oracle_equivalence},
      {"golden tiling", golden_tiling},
      {"plastic substitutions", plastic_substitutions},
      {"pair recovery", pair_recovery},
      {"monotonicity", monotonicity},
      {"cli", cli_reproduction},
  };
  int failures = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << ". " << name << ": " << o.detail << " ["
              << fmt(secs, 3) << "s]\n";
    for (const auto& note : o.notes) std::cout << "        " << note << "\n";
    std::cout.flush();
  }
  std::cout << (n - failures) << "/" << n << " criteria pass\n";
  return strict && failures ? 1 : 0;
}
