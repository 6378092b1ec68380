#include "binradix/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "binradix/error.hpp"

namespace binradix {

std::string_view to_string(Variant v) { return v == Variant::Minus ? "-" : "+"; }

Variant parse_variant(std::string_view text) {
  if (text == "-" || text == "minus") return Variant::Minus;
  if (text == "+" || text == "plus") return Variant::Plus;
  throw ParseError("variant must be '-' or '+'", 0);
}

std::vector<Violation> check_admissible(const EpString& alpha, const EpString& beta) {
  std::vector<Violation> out;
  if (alpha.at(0) != 0 || alpha.at(1) != 1)
    out.push_back({Violation::Which::Alpha, std::nullopt, "alpha = " + to_string(alpha) + " must start with 01"});
  if (beta.at(0) != 1 || beta.at(1) != 0)
    out.push_back({Violation::Which::Beta, std::nullopt, "beta = " + to_string(beta) + " must start with 10"});
  if (!out.empty()) return out;
  for (std::size_t n = 1; n < beta.shift_count(); ++n) {
    const EpString s = beta.shift(n);
    if (alpha <= s && s < beta)
      out.push_back({Violation::Which::Beta, n,
                     "S^" + std::to_string(n) + " beta = " + to_string(s) + " lies in [alpha, beta)"});
  }
  for (std::size_t n = 1; n < alpha.shift_count(); ++n) {
    const EpString s = alpha.shift(n);
    if (alpha < s && s <= beta)
      out.push_back({Violation::Which::Alpha, n,
                     "S^" + std::to_string(n) + " alpha = " + to_string(s) + " lies in (alpha, beta]"});
  }
  return out;
}

AdmissiblePair make_pair(const EpString& alpha, const EpString& beta) {
  const auto violations = check_admissible(alpha, beta);
  if (!violations.empty()) throw DomainError("inadmissible pair: " + violations.front().message);
  return {alpha, beta};
}

bool member(const EpString& w, const AdmissiblePair& pair, Variant v) {
  for (std::size_t n = 0; n < w.shift_count(); ++n) {
    const EpString s = w.shift(n);
    if (s.at(0) == 0) {
      const auto c = lex_cmp(s, pair.alpha);
      if (v == Variant::Minus ? c > 0 : c >= 0) return false;
    } else {
      const auto c = lex_cmp(s, pair.beta);
      if (v == Variant::Minus ? c <= 0 : c < 0) return false;
    }
  }
  return true;
}

bool member_decimal(const Decimal& d, const AdmissiblePair& pair, Variant v) {
  const EpString& digits = d.digits();
  if (digits.is_zero()) return true;
  std::size_t first = 0;
  while (digits.at(first) == 0) ++first;
  const EpString stripped = digits.shift(first);
  if (!member(stripped, pair, v)) return false;
  const auto c = lex_cmp(stripped.prepend(Word{0}), pair.alpha);
  return v == Variant::Minus ? c <= 0 : c < 0;
}

namespace {

// Shifts of an EpString indexed 0..count-1, with their lexicographic ranks.
struct ShiftTable {
  explicit ShiftTable(const EpString& w) : word(w), count(w.shift_count()), rank(count) {
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    const auto shifts = w.distinct_shifts();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return shifts[a] < shifts[b]; });
    for (std::size_t r = 0; r < count; ++r) rank[order[r]] = r;
  }
  std::size_t next(std::size_t i) const { return i + 1 < count ? i + 1 : word.preperiod().size(); }
  Bit first(std::size_t i) const { return word.at(i); }

  const EpString& word;
  std::size_t count;
  std::vector<std::size_t> rank;
};

constexpr long kNone = -1;

}  // namespace

PrefixAutomaton PrefixAutomaton::build(const AdmissiblePair& pair, Start start) {
  const ShiftTable a(pair.alpha), b(pair.beta);
  using Key = std::pair<long, long>;  // (alpha shift or kNone, beta shift or kNone)

  auto step = [&](Key k, Bit c) -> std::optional<Key> {
    const auto [ai, bi] = k;
    if (ai != kNone && c > a.first(static_cast<std::size_t>(ai))) return std::nullopt;
    if (bi != kNone && c < b.first(static_cast<std::size_t>(bi))) return std::nullopt;
    long na = kNone, nb = kNone;
    auto take_min = [&](long cand) {
      if (na == kNone || a.rank[static_cast<std::size_t>(cand)] < a.rank[static_cast<std::size_t>(na)]) na = cand;
    };
    auto take_max = [&](long cand) {
      if (nb == kNone || b.rank[static_cast<std::size_t>(cand)] > b.rank[static_cast<std::size_t>(nb)]) nb = cand;
    };
    if (ai != kNone && c == a.first(static_cast<std::size_t>(ai)))
      take_min(static_cast<long>(a.next(static_cast<std::size_t>(ai))));
    if (c == 0) take_min(1);
    if (bi != kNone && c == b.first(static_cast<std::size_t>(bi)))
      take_max(static_cast<long>(b.next(static_cast<std::size_t>(bi))));
    if (c == 1) take_max(1);
    return Key{na, nb};
  };

  // Reachable states.
  std::map<Key, std::size_t> index;
  std::vector<Key> keys;
  std::vector<std::array<std::size_t, 2>> next;
  const Key init = start == Start::Free ? Key{kNone, kNone} : Key{1, kNone};
  index[init] = 0;
  keys.push_back(init);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::array<std::size_t, 2> row{kReject, kReject};
    for (Bit c = 0; c < 2; ++c) {
      const auto k = step(keys[i], c);
      if (!k) continue;
      auto [it, inserted] = index.emplace(*k, keys.size());
      if (inserted) keys.push_back(*k);
      row[c] = it->second;
    }
    next.push_back(row);
  }

  // Drop states without an infinite continuation.
  std::vector<bool> live(keys.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < keys.size(); ++s) {
      if (!live[s]) continue;
      const bool any = (next[s][0] != kReject && live[next[s][0]]) || (next[s][1] != kReject && live[next[s][1]]);
      if (!any) {
        live[s] = false;
        changed = true;
      }
    }
  }
  if (!live[0]) throw std::logic_error("empty address space");
  std::vector<std::size_t> renum(keys.size(), kReject);
  std::size_t n = 0;
  for (std::size_t s = 0; s < keys.size(); ++s)
    if (live[s]) renum[s] = n++;
  PrefixAutomaton aut;
  aut.next_.assign(n, {kReject, kReject});
  for (std::size_t s = 0; s < keys.size(); ++s) {
    if (!live[s]) continue;
    for (int c = 0; c < 2; ++c)
      if (next[s][c] != kReject) aut.next_[renum[s]][c] = renum[next[s][c]];
  }
  return aut;
}

std::size_t PrefixAutomaton::run(const Word& w) const {
  std::size_t s = initial();
  for (Bit c : w) {
    s = next_[s][c];
    if (s == kReject) return kReject;
  }
  return s;
}

Integer PrefixAutomaton::count_prefixes(std::size_t n) const {
  std::vector<Integer> v(next_.size(), 0), w(next_.size());
  v[initial()] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::fill(w.begin(), w.end(), 0);
    for (std::size_t s = 0; s < next_.size(); ++s) {
      if (v[s] == 0) continue;
      for (int c = 0; c < 2; ++c)
        if (next_[s][c] != kReject) w[next_[s][c]] += v[s];
    }
    std::swap(v, w);
  }
  return std::accumulate(v.begin(), v.end(), Integer(0));
}

double PrefixAutomaton::spectral_radius() const {
  const std::size_t n = next_.size();
  // Strongly connected components (Tarjan).
  std::vector<long> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  long counter = 0, ncomp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    idx[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int c = 0; c < 2; ++c) {
      const std::size_t w = next_[v][c];
      if (w == kReject) continue;
      if (idx[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], idx[w]);
      }
    }
    if (low[v] == idx[v]) {
      for (;;) {
        const std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (idx[v] < 0) visit(v);

  double best = 0;
  for (long c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (comp[v] == c) members.push_back(v);
    std::vector<long> local(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<long>(i);
    bool cyclic = false;
    for (std::size_t v : members)
      for (int b = 0; b < 2; ++b)
        if (next_[v][b] != kReject && local[next_[v][b]] >= 0) cyclic = true;
    if (!cyclic) continue;
    // Power iteration on A + I, which is primitive on an irreducible block;
    // the Collatz-Wielandt quotients bracket its Perron root.
    std::vector<double> x(members.size(), 1.0), y(members.size());
    double lo = 0, hi = 0;
    for (int iter = 0; iter < 1000000; ++iter) {
      y = x;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (int b = 0; b < 2; ++b) {
          const std::size_t w = next_[members[i]][b];
          if (w != kReject && local[w] >= 0) y[static_cast<std::size_t>(local[w])] += x[i];
        }
      lo = INFINITY;
      hi = 0;
      double top = 0;
      for (std::size_t i = 0; i < y.size(); ++i) {
        lo = std::min(lo, y[i] / x[i]);
        hi = std::max(hi, y[i] / x[i]);
        top = std::max(top, y[i]);
      }
      for (std::size_t i = 0; i < y.size(); ++i) x[i] = y[i] / top;
      if (hi - lo < 1e-13 * hi) break;
    }
    best = std::max(best, (lo + hi) / 2 - 1);
  }
  return best;
}

double PrefixAutomaton::growth_rate() const {
  const double rho = spectral_radius();
  return rho <= 1 ? 0.0 : std::log(rho);
}

bool PrefixAutomaton::is_null() const { return spectral_radius() <= 1 + kNullTolerance; }

std::string PrefixAutomaton::edge_list() const {
  std::string out;
  for (std::size_t s = 0; s < next_.size(); ++s)
    for (int c = 0; c < 2; ++c)
      if (next_[s][c] != kReject)
        out += std::to_string(s) + " " + std::to_string(c) + " " + std::to_string(next_[s][c]) + "\n";
  return out;
}

bool is_null(const AdmissiblePair& pair) { return PrefixAutomaton::build(pair).is_null(); }

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Words forced outside the space: a 0-suffix running along alpha and then
// stepping above it (the leading 0 is implied, since every run of 1s in a
// decimal follows a 0), and a 1-suffix running along beta and then
// stepping below it.
std::vector<Word> candidate_words(const AdmissiblePair& pair, std::size_t max_alpha_k, std::size_t max_beta_k) {
  std::vector<Word> words;
  for (std::size_t k = 2; k <= max_alpha_k; ++k) {
    if (pair.alpha.at(k) != 0) continue;
    Word w = pair.alpha.prefix(k);
    w.erase(w.begin());
    w.push_back(1);
    words.push_back(std::move(w));
  }
  for (std::size_t k = 2; k <= max_beta_k; ++k) {
    if (pair.beta.at(k) != 1) continue;
    Word w = pair.beta.prefix(k);
    w.push_back(0);
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end(), shortlex_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::vector<Word> minimal;
  for (const Word& w : words) {
    const bool covered =
        std::any_of(minimal.begin(), minimal.end(), [&](const Word& m) { return word_contains(w, m); });
    if (!covered) minimal.push_back(w);
  }
  return minimal;
}

// Factor-avoidance automaton (Aho-Corasick), restricted to states with an
// infinite continuation.
struct FactorFree {
  explicit FactorFree(const std::vector<Word>& words) {
    go.push_back({kMissing, kMissing});
    bad.push_back(false);
    for (const Word& w : words) {
      std::size_t s = 0;
      for (Bit c : w) {
        if (go[s][c] == kMissing) {
          go[s][c] = go.size();
          go.push_back({kMissing, kMissing});
          bad.push_back(false);
        }
        s = go[s][c];
      }
      bad[s] = true;
    }
    std::vector<std::size_t> fail(go.size(), 0);
    std::queue<std::size_t> q;
    for (int c = 0; c < 2; ++c) {
      if (go[0][c] == kMissing) {
        go[0][c] = 0;
      } else {
        fail[go[0][c]] = 0;
        q.push(go[0][c]);
      }
    }
    while (!q.empty()) {
      const std::size_t s = q.front();
      q.pop();
      bad[s] = bad[s] || bad[fail[s]];
      for (int c = 0; c < 2; ++c) {
        const std::size_t t = go[s][c];
        if (t == kMissing) {
          go[s][c] = go[fail[s]][c];
        } else {
          fail[t] = go[fail[s]][c];
          q.push(t);
        }
      }
    }
    live.assign(go.size(), true);
    for (std::size_t s = 0; s < go.size(); ++s) live[s] = !bad[s];
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t s = 0; s < go.size(); ++s) {
        if (live[s] && !live[go[s][0]] && !live[go[s][1]]) {
          live[s] = false;
          changed = true;
        }
      }
    }
  }

  std::size_t step(std::size_t s, Bit c) const {
    const std::size_t t = go[s][c];
    return live[t] ? t : PrefixAutomaton::kReject;
  }

  static constexpr std::size_t kMissing = static_cast<std::size_t>(-2);
  std::vector<std::array<std::size_t, 2>> go;
  std::vector<bool> bad;
  std::vector<bool> live;
};

}  // namespace

std::variant<ForbiddenSet, NoFiniteSet> derive_forbidden_set(const AdmissiblePair& pair, std::size_t max_len) {
  const std::size_t ka = pair.alpha.preperiod().size() + 2 * pair.alpha.period().size();
  const std::size_t kb = pair.beta.preperiod().size() + 2 * pair.beta.period().size();
  const std::vector<Word> words = candidate_words(pair, ka, kb);

  const FactorFree ff(words);
  const PrefixAutomaton aut = PrefixAutomaton::build(pair, PrefixAutomaton::Start::AfterZero);

  // Breadth-first walk of the product up to length max_len.
  struct Node {
    std::size_t f, a, parent;
    Bit bit;
  };
  std::vector<Node> nodes{{0, aut.initial(), 0, 0}};
  std::map<std::pair<std::size_t, std::size_t>, bool> seen{{{0, aut.initial()}, true}};
  auto path = [&nodes](std::size_t i, Bit last) {
    Word w{last};
    for (; i != 0; i = nodes[i].parent) w.push_back(nodes[i].bit);
    std::reverse(w.begin(), w.end());
    return w;
  };
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < max_len && level_begin < nodes.size(); ++depth) {
    const std::size_t level_end = nodes.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Bit c = 0; c < 2; ++c) {
        const std::size_t f = ff.step(nodes[i].f, c);
        const std::size_t a = aut.next(nodes[i].a, c);
        const bool in_ff = f != PrefixAutomaton::kReject, in_aut = a != PrefixAutomaton::kReject;
        if (in_ff && !in_aut) {
          NoFiniteSet r;
          r.witness = path(i, c);
          r.reason = "word " + to_string(r.witness) + " avoids every candidate but is not a prefix of the space";
          const auto family = candidate_words(pair, max_len, max_len);
          r.family.assign(family.begin(), family.begin() + static_cast<long>(std::min<std::size_t>(family.size(), 5)));
          return r;
        }
        if (!in_ff && in_aut) {
          NoFiniteSet r;
          r.witness = path(i, c);
          r.reason = "candidate words exclude the valid prefix " + to_string(r.witness);
          r.family = words;
          return r;
        }
        if (!in_ff) continue;
        if (seen.emplace(std::make_pair(f, a), true).second) nodes.push_back({f, a, i, c});
      }
    }
    level_begin = level_end;
  }
  return ForbiddenSet{words, max_len};
}

}  // namespace binradix
