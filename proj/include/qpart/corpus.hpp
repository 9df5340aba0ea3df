#ifndef QPART_CORPUS_HPP
#define QPART_CORPUS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

// Expression-language transcription of a catalog entry.
struct CorpusEntry {
  std::string_view key;
  std::string_view source;
};

/// One transcription per catalog key, in catalog order.
const std::vector<CorpusEntry>& corpus();

/// Throws UnknownName.
std::string_view corpus_source(std::string_view key);

/// Parses and evaluates the transcription of `key`.
Series corpus_series(std::string_view key, std::size_t order);

}  // namespace qpart

#endif  // QPART_CORPUS_HPP
