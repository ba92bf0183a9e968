#pragma once

#include <string>
#include <vector>

namespace lipdist {

enum class Family {
  smooth,    // trigonometric polynomials
  rough,     // lacunary series with a fixed Hoelder exponent
  singular,  // x log x
  atom,      // single wavelets
};

struct CorpusEntry {
  std::string name;
  std::string spec;     // function mini-DSL line
  Family family;
  double exponent = 0;  // the series' own exponent for rough entries
};

/// The twelve one-dimensional test functions; lacunary series use every
/// frequency the grid resolves (levels = depth - 2).
std::vector<CorpusEntry> default_corpus(int depth);

const char* family_name(Family f) noexcept;

}  // namespace lipdist
