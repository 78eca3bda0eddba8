#pragma once

// Rule-generated Cyrillic/Latin word pairs for oracle testing.
//
// Words are built from syllables over the unambiguous Cyrillic letters plus
// the context-dependent ц, е, я, ю, ё, and romanized with the official rules:
//   ц -> s at either end of the word or after a consonant, ts after a vowel;
//   е -> ye at the start of a word or after a vowel, e after a consonant;
//   я, ю, ё -> ya, yu, yo.
// A few letter combinations are never generated (с; э outside word start;
// й before a vowel; т before ц or ш; ц before ҳ) so that each Latin letter is
// also decidable from its immediate neighbours. As a result, samples
// extracted at any window with x >= 1 and y >= 1 carry no conflicting labels
// in either direction.

#include "translit/corpus.hpp"

#include <cstdint>
#include <string>

namespace translit {

/// `size` distinct pairs, deterministic in `seed`. Throws InvalidArgument for size 0.
Corpus gen_corpus(std::size_t size, std::uint64_t seed);

/// The romanization rules above applied to one generated Cyrillic word.
std::string romanize_generated(std::u32string_view cyrillic);

}  // namespace translit
