#include "lipdist/corpus.hpp"

namespace lipdist {

std::vector<CorpusEntry> default_corpus(int depth) {
  const std::string levels = " levels=" + std::to_string(depth - 2);
  return {
      {"trig-1", "trig k=1 a=1", Family::smooth},
      {"trig-3", "trig k=3 a=0.5 phase=0.3", Family::smooth},
      {"trig-1-5", "sum trig k=1 a=1 + trig k=5 a=0.2", Family::smooth},
      {"weierstrass-0.5", "weierstrass s=0.5" + levels, Family::rough, 0.5},
      {"weierstrass-1", "weierstrass s=1" + levels, Family::rough, 1.0},
      {"weierstrass-signed-0.5", "weierstrass s=0.5" + levels + " seed=7 signs=random", Family::rough, 0.5},
      {"weierstrass-signed-1", "weierstrass s=1" + levels + " seed=7 signs=random", Family::rough, 1.0},
      {"lacunary-0.5", "lacunary-random s=0.5" + levels + " seed=11", Family::rough, 0.5},
      {"lacunary-1", "lacunary-random s=1" + levels + " seed=11", Family::rough, 1.0},
      {"xlogx", "xlogx", Family::singular},
      {"atom-3", "wavelet-atom l=1 j=3 k=2", Family::atom},
      {"atom-6", "wavelet-atom l=1 j=6 k=17", Family::atom},
  };
}

const char* family_name(Family f) noexcept {
  switch (f) {
    case Family::smooth:
      return "smooth";
    case Family::rough:
      return "rough";
    case Family::singular:
      return "singular";
    case Family::atom:
      return "atom";
  }
  return "?";
}

}  // namespace lipdist
