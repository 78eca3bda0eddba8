#pragma once

// Coverage check used while bootstrapping a mapping table: which corpus pairs
// the current table cannot align, and where the search got stuck. Fix the
// table for the reported character, re-run, repeat until the report is empty.

#include "translit/aligner.hpp"
#include "translit/scripts.hpp"

#include <span>
#include <vector>

namespace translit {

std::vector<AlignmentFailure> discover_unmapped(std::span<const WordPair> corpus, const MappingTable& table);

}  // namespace translit
