#pragma once

// Text formats for finite spaces.
//
// Poset format, one statement per line:
//   a < b      b covers a
//   a          declares the point a
//   @base a    sets the basepoint
//   # ...      comment (also after a statement)
// Identifiers match [A-Za-z0-9_]+.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finito/poset.hpp"

namespace finito {

struct PosetDocument {
  std::vector<std::string> labels;  // in order of first appearance
  std::vector<std::pair<Element, Element>> covers;
  std::optional<Element> base;
  std::vector<std::string> warnings;  // e.g. repeated cover statements
};

// Throws ParseError. Input starting with '{' is read as the JSON format.
PosetDocument parse_poset(std::string_view text);
// Throws CycleError, EmptyError.
FinitePoset to_poset(const PosetDocument& doc);
FinitePoset load_poset(std::string_view text);

enum class Format { poset, json, dot, faces };

// Throws Error on an unknown name.
Format parse_format(std::string_view name);

// poset: isolated points, then cover statements sorted by index, then @base.
// json:  {"labels": [...], "covers": [[lower, upper], ...], "base": label|null}
// dot:   Hasse diagram, lower elements drawn below, one rank per level.
// faces: order complex, one face per line as vertex indices.
std::string emit(const FinitePoset& p, Format format, std::optional<Element> base = {});

// Map file: one `src -> dst` line per source point, labels as identifiers.
// Throws ParseError.
std::vector<Element> parse_map(std::string_view text, const FinitePoset& src,
                               const FinitePoset& dst);

bool is_identifier(std::string_view s);

}  // namespace finito
