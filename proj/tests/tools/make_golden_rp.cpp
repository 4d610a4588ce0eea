// Regenerates the reference recurrence plot used by the acceptance suite.
// It goes through the naive oracle, not the library's recurrence code, so
// the image is an independent check on the CLI.
//
//   make_golden_rp <out.pgm>

#include <fstream>
#include <iostream>

#include "oracles.hpp"
#include "phaserqa/signals.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_golden_rp <out.pgm>\n";
    return 2;
  }
  const auto s = phaserqa::signals::gen_lorenz({}, 500);
  oracle::Matrix states;
  for (std::size_t i = 0; i < 500; ++i) states.push_back({s.x[i], s.y[i], s.z[i]});
  const auto bits = oracle::recurrence(states, 5.0, oracle::Norm::kEuclidean);
  std::ofstream(argv[1], std::ios::binary) << oracle::pgm(bits);
  return 0;
}
