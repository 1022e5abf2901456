#pragma once

#include <string>

#include <json.hpp>

#include "condlog/hilbert.hpp"
#include "condlog/kernel.hpp"
#include "condlog/model_io.hpp"

namespace condlog {

// {"predicates":{"P":1}, "functions":{"f":1}, "constants":["c"]}
Vocabulary vocabulary_from_json(const nlohmann::json& j);
nlohmann::json vocabulary_to_json(const Vocabulary& v);

// Proof script:
// {"theory":[..], "premises":{"cond":[..],"fo":[..]},
//  "steps":[{"id":1, "rule":"AND", "from":[..], "conclusion":"..",
//            "params":{"term":"..", "var":"x", "vars":["y1",..]},
//            "premises":{"cond":[..],"fo":[..]}}],
//  "goal":3, "vocabulary":{..}}
// "premises" on a step is optional and defaults to the root premises. With a
// "vocabulary" every symbol must be declared; without one, symbols are
// declared as they are read. Throws FormatError (parse errors included).
ProofScript script_from_json(const nlohmann::json& j);
nlohmann::json script_to_json(const ProofScript& s);
ProofScript read_script_file(const std::string& path);

// {"theory":[..], "lines":[{"formula":"..", "by":"MP", "params":{"term":".."}, "from":[1,2]}]}
HilbertProof hilbert_from_json(const nlohmann::json& j);
nlohmann::json hilbert_to_json(const HilbertProof& p);
HilbertProof read_hilbert_file(const std::string& path);

nlohmann::json premises_to_json(const PremiseSet& p);

}  // namespace condlog
