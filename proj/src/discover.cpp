#include "translit/discover.hpp"

namespace translit {

std::vector<AlignmentFailure> discover_unmapped(std::span<const WordPair> corpus, const MappingTable& table) {
    return align_corpus(corpus, table).failures;
}

}  // namespace translit
