#pragma once

// The tiling of the half-line by the sets of values sharing an integer
// part, its tile lengths, and the substitution rules it obeys.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "binradix/radix.hpp"

namespace binradix {

struct Tile {
  Word label;  // integer part, no leading zeros; "0" for the empty part
  AlgebraicReal lo;
  AlgebraicReal hi;
  std::size_t type = 0;
  AlgebraicReal length() const { return hi - lo; }
};

// Tile of integer part `s` (leading zeros ignored), or nullopt when no
// decimal of the address space has that integer part.
std::optional<Tile> tile_interval(const RadixSystem& sys, const Word& s);

struct Tiling {
  std::vector<Tile> tiles;
  // Distinct lengths in increasing order; Tile::type indexes this.
  std::vector<AlgebraicReal> type_lengths;
  // "1", "B", "B^2", ... when a length is a power of B times the smallest,
  // otherwise the ratio as a polynomial in b.
  std::vector<std::string> type_names;
};

// First m tiles from 0, walking boundaries: the tile after a boundary x is
// labelled by the integer part of the + address of x.  Throws
// std::logic_error if consecutive tiles fail to meet exactly.
Tiling generate_tiling(const RadixSystem& sys, std::size_t m);

// Every endpoint x with B x inside the generated range has B x among the
// endpoints.
bool verify_self_replicating(const RadixSystem& sys, const Tiling& tiling);

struct TileLength {
  AlgebraicReal length;
  std::size_t occurrences = 0;  // in the generated prefix
  bool candidate = false;       // of the form pi(.S^m alpha) - pi(.S^n beta)
};

// Lengths observed in the first `sample` tiles (or in `tiling`), flagged
// against the candidate differences.
std::vector<TileLength> tile_lengths(const RadixSystem& sys, const Tiling& tiling);
std::vector<TileLength> tile_lengths(const RadixSystem& sys, std::size_t sample = 200);

struct SubstitutionSystem {
  std::vector<AlgebraicReal> lengths;
  std::vector<std::string> names;  // as in Tiling::type_names
  // rules[t]: the types covering B * (tile of type t), left to right.
  std::vector<std::vector<std::size_t>> rules;
  std::size_t axiom = 0;

  // "t←uv" using type indices ("4←40") or names ("B←B1").
  std::string rule_string(std::size_t t, bool by_name) const;
  std::vector<std::string> rule_strings(bool by_name) const;
};

struct NotSubstitutive {
  std::string reason;
};

std::variant<SubstitutionSystem, NotSubstitutive> derive_substitution(const RadixSystem& sys,
                                                                      std::size_t sample_size = 200);

// Rewrites the axiom `steps` times.
std::vector<std::size_t> expand(const SubstitutionSystem& subst, std::size_t steps);

// Names or indices of a type sequence, concatenated when every symbol is a
// single character and space separated otherwise.
std::string type_string(const std::vector<std::size_t>& types, const std::vector<std::string>& names);

}  // namespace binradix
