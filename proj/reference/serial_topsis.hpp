#pragma once

#include <array>
#include <vector>

// Straight-line serial Fuzzy TOPSIS over plain arrays. Shares no code with
// the ftopsis library; tests use it as an independent oracle and the
// benchmark uses it as the serial baseline.

namespace ftopsis_reference {

using Triple = std::array<double, 3>;

struct Problem {
  int alternatives = 0;
  int criteria = 0;
  int decision_makers = 0;
  std::vector<bool> cost;         // [criterion]
  std::vector<Triple> weights;    // [dm][criterion]
  std::vector<Triple> ratings;    // [dm][alternative][criterion]
};

struct Result {
  std::vector<Triple> aggregate;  // [alternative][criterion]
  std::vector<Triple> normalized;
  std::vector<Triple> weighted;
  std::vector<double> d_star;
  std::vector<double> d_minus;
  std::vector<double> closeness;
};

Result evaluate(const Problem& p);

}  // namespace ftopsis_reference
