#include "binradix/tiling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "binradix/numeric.hpp"

namespace binradix {

namespace {

Word strip_zeros(const Word& s) {
  auto it = std::find(s.begin(), s.end(), Bit{1});
  return Word(it, s.end());
}

// Greedy extreme path from `state`: prefer `bit` whenever it stays live.
EpString greedy_completion(const PrefixAutomaton& aut, std::size_t state, Bit prefer) {
  std::map<std::size_t, std::size_t> seen;
  Word digits;
  while (seen.emplace(state, digits.size()).second) {
    Bit c = prefer;
    if (aut.next(state, c) == PrefixAutomaton::kReject) c = static_cast<Bit>(1 - c);
    digits.push_back(c);
    state = aut.next(state, c);
  }
  const std::size_t j = seen[state];
  return EpString::normalize(Word(digits.begin(), digits.begin() + static_cast<long>(j)),
                             Word(digits.begin() + static_cast<long>(j), digits.end()));
}

std::optional<Tile> tile_with(const RadixSystem& sys, const PrefixAutomaton& aut, const Word& s) {
  Tile t;
  t.label = strip_zeros(s);
  const std::size_t state = aut.run(t.label);
  if (state == PrefixAutomaton::kReject) return std::nullopt;
  const AlgebraicReal base = integer_value(sys.B, t.label);
  t.lo = base + sys.b * series_value(greedy_completion(aut, state, 0), sys.b);
  t.hi = base + sys.b * series_value(greedy_completion(aut, state, 1), sys.b);
  if (t.label.empty()) t.label = Word{0};
  return t;
}

// Integer part of the + address of x.
Word plus_integer_part(const RadixSystem& sys, const AlgebraicReal& x) {
  AlgebraicReal y = (AlgebraicReal(1) - sys.b) * x;
  std::size_t n = 0;
  while (cmp(y, sys.p) >= 0) {
    y *= sys.b;
    ++n;
  }
  return strip_zeros(itinerary(sys.B, sys.p, y, Variant::Plus, n + 1));
}

std::string length_name(const AlgebraicReal& ratio, const AlgebraicReal& B) {
  AlgebraicReal power(1);
  for (int k = 0; k <= 32; ++k) {
    const auto c = cmp(power, ratio);
    if (c == 0) return k == 0 ? "1" : k == 1 ? "B" : "B^" + std::to_string(k);
    if (c > 0) break;
    power *= B;
  }
  return "(" + ratio.expression("b") + ")";
}

// Index of `x` among sorted endpoints, if present.
std::optional<std::size_t> find_endpoint(const std::vector<AlgebraicReal>& ends, const AlgebraicReal& x) {
  auto it = std::lower_bound(ends.begin(), ends.end(), x, AlgebraicLess{});
  if (it == ends.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - ends.begin());
}

std::vector<AlgebraicReal> endpoints(const Tiling& tiling) {
  std::vector<AlgebraicReal> ends;
  if (tiling.tiles.empty()) return ends;
  ends.push_back(tiling.tiles.front().lo);
  for (const Tile& t : tiling.tiles) ends.push_back(t.hi);
  return ends;
}

}  // namespace

std::optional<Tile> tile_interval(const RadixSystem& sys, const Word& s) {
  const PrefixAutomaton aut = PrefixAutomaton::build(sys.pair, PrefixAutomaton::Start::AfterZero);
  return tile_with(sys, aut, s);
}

Tiling generate_tiling(const RadixSystem& sys, std::size_t m) {
  const PrefixAutomaton aut = PrefixAutomaton::build(sys.pair, PrefixAutomaton::Start::AfterZero);
  Tiling tiling;
  Word label;
  for (std::size_t i = 0; i < m; ++i) {
    auto tile = tile_with(sys, aut, label);
    if (!tile) throw std::logic_error("boundary address has an empty tile: " + to_string(label));
    if (i > 0 && tile->lo != tiling.tiles.back().hi)
      throw std::logic_error("tile " + to_string(tile->label) + " does not start at the previous boundary");
    tiling.tiles.push_back(std::move(*tile));
    label = plus_integer_part(sys, tiling.tiles.back().hi);
  }
  for (const Tile& t : tiling.tiles) {
    const AlgebraicReal len = t.length();
    auto it = std::lower_bound(tiling.type_lengths.begin(), tiling.type_lengths.end(), len, AlgebraicLess{});
    if (it == tiling.type_lengths.end() || *it != len) tiling.type_lengths.insert(it, len);
  }
  for (Tile& t : tiling.tiles) t.type = *find_endpoint(tiling.type_lengths, t.length());
  for (const AlgebraicReal& len : tiling.type_lengths)
    tiling.type_names.push_back(length_name(len / tiling.type_lengths.front(), sys.B));
  return tiling;
}

bool verify_self_replicating(const RadixSystem& sys, const Tiling& tiling) {
  const std::vector<AlgebraicReal> ends = endpoints(tiling);
  if (ends.empty()) return true;
  for (const AlgebraicReal& x : ends) {
    const AlgebraicReal bx = sys.B * x;
    if (bx > ends.back()) break;
    if (!find_endpoint(ends, bx)) return false;
  }
  return true;
}

std::vector<TileLength> tile_lengths(const RadixSystem& sys, std::size_t sample) {
  return tile_lengths(sys, generate_tiling(sys, sample));
}

std::vector<TileLength> tile_lengths(const RadixSystem& sys, const Tiling& tiling) {
  std::vector<AlgebraicReal> candidates;
  for (const EpString& a : sys.pair.alpha.distinct_shifts())
    for (const EpString& c : sys.pair.beta.distinct_shifts()) {
      const AlgebraicReal d = sys.b * (series_value(a, sys.b) - series_value(c, sys.b));
      if (d.sign() > 0) candidates.push_back(d);
    }
  std::vector<TileLength> out;
  for (const AlgebraicReal& len : tiling.type_lengths) {
    TileLength tl{len, 0, false};
    for (const Tile& t : tiling.tiles)
      if (t.length() == len) ++tl.occurrences;
    tl.candidate = std::any_of(candidates.begin(), candidates.end(), [&](const AlgebraicReal& c) { return c == len; });
    out.push_back(std::move(tl));
  }
  return out;
}

std::string SubstitutionSystem::rule_string(std::size_t t, bool by_name) const {
  const std::vector<std::string> idx = [&] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < lengths.size(); ++i) v.push_back(std::to_string(i));
    return v;
  }();
  const auto& sym = by_name ? names : idx;
  return sym[t] + "←" + type_string(rules[t], sym);
}

std::vector<std::string> SubstitutionSystem::rule_strings(bool by_name) const {
  std::vector<std::string> out;
  for (std::size_t t = 0; t < rules.size(); ++t) out.push_back(rule_string(t, by_name));
  return out;
}

std::string type_string(const std::vector<std::size_t>& types, const std::vector<std::string>& names) {
  auto symbol = [&](std::size_t t) { return names.empty() ? std::to_string(t) : names[t]; };
  const bool spaced = names.empty()
                          ? std::any_of(types.begin(), types.end(), [](std::size_t t) { return t > 9; })
                          : std::any_of(names.begin(), names.end(), [](const std::string& n) { return n.size() > 1; });
  std::string out;
  for (std::size_t t : types) {
    if (spaced && !out.empty()) out += ' ';
    out += symbol(t);
  }
  return out;
}

std::variant<SubstitutionSystem, NotSubstitutive> derive_substitution(const RadixSystem& sys,
                                                                      std::size_t sample_size) {
  for (std::size_t sample = std::max<std::size_t>(sample_size, 2);; sample *= 2) {
    const Tiling tiling = generate_tiling(sys, sample);
    const std::vector<AlgebraicReal> ends = endpoints(tiling);
    const std::size_t k = tiling.type_lengths.size();
    std::vector<std::optional<std::vector<std::size_t>>> rules(k);
    std::vector<std::size_t> witness(k, 0);
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
      const Tile& t = tiling.tiles[i];
      const AlgebraicReal blo = sys.B * t.lo, bhi = sys.B * t.hi;
      if (bhi > ends.back()) break;
      const auto start = find_endpoint(ends, blo);
      if (!start)
        return NotSubstitutive{"B times the left end of tile " + to_string(t.label) + " is not a tile boundary"};
      std::vector<std::size_t> cover;
      std::size_t j = *start;
      while (ends[j] < bhi) cover.push_back(tiling.tiles[j++].type);
      if (ends[j] != bhi)
        return NotSubstitutive{"B times tile " + to_string(t.label) + " does not end on a tile boundary"};
      if (!rules[t.type]) {
        rules[t.type] = std::move(cover);
        witness[t.type] = i;
      } else if (*rules[t.type] != cover) {
        return NotSubstitutive{"tiles " + to_string(tiling.tiles[witness[t.type]].label) + " and " +
                               to_string(t.label) + " share a length but expand differently: " +
                               type_string(*rules[t.type], {}) + " vs " + type_string(cover, {})};
      }
    }
    const bool complete = std::all_of(rules.begin(), rules.end(), [](const auto& r) { return r.has_value(); });
    if (!complete) {
      if (sample >= 8 * std::max<std::size_t>(sample_size, 2))
        return NotSubstitutive{"some tile type has no complete expanded occurrence in the sample"};
      continue;
    }
    SubstitutionSystem s;
    s.lengths = tiling.type_lengths;
    s.names = tiling.type_names;
    for (auto& r : rules) s.rules.push_back(std::move(*r));
    s.axiom = tiling.tiles.front().type;
    return s;
  }
}

std::vector<std::size_t> expand(const SubstitutionSystem& subst, std::size_t steps) {
  std::vector<std::size_t> seq{subst.axiom};
  for (std::size_t i = 0; i < steps; ++i) {
    std::vector<std::size_t> next;
    for (std::size_t t : seq) next.insert(next.end(), subst.rules[t].begin(), subst.rules[t].end());
    seq = std::move(next);
  }
  return seq;
}

}  // namespace binradix
