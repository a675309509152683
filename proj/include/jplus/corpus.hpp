#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jplus/constructions.hpp"
#include "jplus/moves.hpp"

namespace jplus {

// Applies `count` positive direct tangencies, each at the first such site.
CurveDiagram with_direct_tangencies(const CurveDiagram& d, int count);

// An interior-sum operand pair with J+ 2 / rot 3 and J+ -2 / rot 3, built
// from K3 by positive direct tangencies.
struct NestedSumPair {
  CurveDiagram base;      // J+ 2, rot 3
  int face = 0;           // winding 2
  int arc = 0;            // face on its left
  CurveDiagram inserted;  // J+ -2, rot 3
  int inserted_arc = 0;   // inner winding +1
};
NestedSumPair nested_sum_pair();

struct GoldenCheck {
  std::string name;  // "<role>/<case>"
  Integer expected;
  std::function<Integer()> compute;
};

std::vector<GoldenCheck> golden_checks();

struct CheckOutcome {
  std::string name;
  Integer expected;
  Integer actual;
  bool passed = false;
  std::string error;  // set when the computation threw
};

struct CorpusOptions {
  std::string filter;   // substring of the check name; empty runs all
  std::string corrupt;  // name of a check whose golden value is shifted by one
  unsigned threads = 0; // 0: hardware concurrency
};

struct CorpusReport {
  std::vector<CheckOutcome> outcomes;  // in registration order
  std::size_t failed() const;
};

CorpusReport verify_corpus(const CorpusOptions& options = {});

}  // namespace jplus
