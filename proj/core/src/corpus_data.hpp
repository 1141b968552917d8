#ifndef HAMPLANE_SRC_CORPUS_DATA_HPP
#define HAMPLANE_SRC_CORPUS_DATA_HPP

#include <vector>

namespace hamplane::detail {

// Corpus files embedded at build time; `rotation` is empty when none ships.
struct RawCorpusFile {
  const char* name;
  const char* edges;
  const char* rotation;
  const char* facts;
};

const std::vector<RawCorpusFile>& raw_corpus();

}  // namespace hamplane::detail

#endif  // HAMPLANE_SRC_CORPUS_DATA_HPP
