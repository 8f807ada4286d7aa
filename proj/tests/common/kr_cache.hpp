#pragma once

#include <map>
#include <string>
#include <utility>

#include "linkhom/soergel.hpp"

namespace linkhom::testing {

// KR series are the expensive part of the suites; several checks reuse them.
inline const TriGradedSeries& kr_series(const BraidWord& b, int cutoff = kDefaultCutoff) {
  static std::map<std::pair<std::string, int>, TriGradedSeries> cache;
  const auto key = std::make_pair(to_string(b), cutoff);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, kr(b, cutoff).series).first;
  return it->second;
}

}  // namespace linkhom::testing
