#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "linkhom/braid.hpp"

#ifndef LINKHOM_FIXTURE_DIR
#error "LINKHOM_FIXTURE_DIR must be defined by the build"
#endif

namespace linkhom::testing {

inline std::vector<BraidWord> load_corpus() {
  std::ifstream in(std::string(LINKHOM_FIXTURE_DIR) + "/corpus.txt");
  std::vector<BraidWord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_braid(line));
  }
  return out;
}

// Short words on at most `max_strands` strands, enumerated deterministically.
inline std::vector<BraidWord> all_words(int strands, int max_len) {
  std::vector<BraidWord> out{BraidWord{strands, {}}};
  size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (int g = 1; g < strands; ++g)
        for (int s : {1, -1}) {
          BraidWord w = out[i];
          w.letters.push_back({g, s});
          out.push_back(std::move(w));
        }
    begin = end;
  }
  return out;
}

}  // namespace linkhom::testing
