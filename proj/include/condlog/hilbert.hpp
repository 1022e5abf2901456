#pragma once

#include <optional>
#include <string>
#include <vector>

#include "condlog/formula.hpp"
#include "condlog/kernel.hpp"

namespace condlog {

// A line of an axiomatic derivation. `by` names an axiom (Lambda-AX, C0..C6,
// F1..F5) or a rule (MP, Gen, R1, R2); `from` cites earlier lines, 1-based.
struct HilbertLine {
  Formula formula;
  std::string by;
  std::vector<int> from;
  std::optional<Term> term;  // F1: the substituted term, inferred when absent
};

struct HilbertProof {
  Theory theory;
  std::vector<HilbertLine> lines;
  Vocabulary vocabulary;
};

// Step ids in the report are line numbers. Failures carry the name of the
// violated condition in the message, e.g. "F1-substitutability: ...".
CheckReport check_hilbert_proof(const HilbertProof& proof, const CheckPolicy& policy = {});

}  // namespace condlog
