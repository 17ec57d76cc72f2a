#pragma once

#include <compare>
#include <string>
#include <vector>

namespace glbrown {

// One letter of a *-word: a component index (1-based) with an optional star.
struct Letter {
  int index = 1;
  bool star = false;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Lexicographically smallest cyclic rotation.  Traces are invariant under
// rotation, so this is the canonical representative of a trace word.
Word cyclic_canonical(const Word& w);

// Reverse the word and flip every star (the adjoint of the matrix word).
Word word_adjoint(const Word& w);

bool single_index(const Word& w);

// Parse "1 1* 2" style specs: whitespace-separated letters, index with an
// optional trailing '*'.
Word parse_word(const std::string& spec);
std::string format_word(const Word& w);

}  // namespace glbrown
