#pragma once

// Admissible pairs (alpha, beta), their address spaces, forbidden factors,
// and the prefix automaton used for counting and growth rates.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "binradix/poly.hpp"
#include "binradix/word.hpp"

namespace binradix {

enum class Variant { Minus, Plus };

std::string_view to_string(Variant v);  // "-" or "+"
Variant parse_variant(std::string_view text);  // "-", "+", "minus", "plus"

struct AdmissiblePair {
  EpString alpha;
  EpString beta;
};

struct Violation {
  enum class Which { Alpha, Beta };
  Which which;
  // Shift index n of the offending S^n; unset for the prefix condition.
  std::optional<std::size_t> shift;
  std::string message;
};

// Every violated condition, beta witnesses first; empty iff admissible.
std::vector<Violation> check_admissible(const EpString& alpha, const EpString& beta);

// Throws DomainError carrying the first violation.
AdmissiblePair make_pair(const EpString& alpha, const EpString& beta);

// Membership in the address space, through the suffix form: every suffix
// starting with 0 is <= alpha (Minus) / < alpha (Plus), every suffix
// starting with 1 is > beta (Minus) / >= beta (Plus).
bool member(const EpString& w, const AdmissiblePair& pair, Variant v);

// Membership of a decimal: its digits are a member and additionally
// 0·digits <= alpha (Minus) / < alpha (Plus).  The point does not matter.
bool member_decimal(const Decimal& d, const AdmissiblePair& pair, Variant v);

// Deterministic automaton accepting the finite prefixes of the address
// space.  A state records the tightest pending constraint from each side:
// the least shift of alpha that the rest of the string must stay below and
// the greatest shift of beta it must stay above.  The Minus and Plus
// spaces have the same prefix sets, so one automaton serves both.
class PrefixAutomaton {
 public:
  enum class Start {
    Free,       // prefixes of strings in the space
    AfterZero,  // as if a 0 had been read first: prefixes of decimals
  };
  static constexpr std::size_t kReject = static_cast<std::size_t>(-1);

  static PrefixAutomaton build(const AdmissiblePair& pair, Start start = Start::Free);

  std::size_t state_count() const noexcept { return next_.size(); }
  std::size_t initial() const noexcept { return 0; }
  std::size_t next(std::size_t state, Bit b) const { return next_[state][b]; }
  // State after reading `w` from the initial state, or kReject.
  std::size_t run(const Word& w) const;
  bool accepts(const Word& w) const { return run(w) != kReject; }

  Integer count_prefixes(std::size_t n) const;
  // Logarithm of the spectral radius of the transition matrix.
  double spectral_radius() const;
  double growth_rate() const;
  bool is_null() const;

  // "state bit state" lines.
  std::string edge_list() const;

 private:
  std::vector<std::array<std::size_t, 2>> next_;
};

inline constexpr double kNullTolerance = 1e-6;

bool is_null(const AdmissiblePair& pair);

struct ForbiddenSet {
  std::vector<Word> words;  // shortlex order
  std::size_t verified_to = 0;
};

struct NoFiniteSet {
  std::vector<Word> family;  // the first few candidates that keep appearing
  Word witness;              // shortest word free of the finite candidates yet outside the space
  std::string reason;
};

std::variant<ForbiddenSet, NoFiniteSet> derive_forbidden_set(const AdmissiblePair& pair, std::size_t max_len = 40);

}  // namespace binradix
