#pragma once

#include <string>

#include "entorder/states.hpp"

namespace entorder::cli {

// Parses a state document: a JSON object with "format": 1 and exactly one of
//   "rho":    4x4 nested array of [re, im] pairs
//   "family": family name, with "params": {name: value}
// Throws ParseError on malformed documents, ValidationError when a literal
// matrix fails the density-operator invariants, and ParamOutOfRange for
// unknown families or bad parameters.
DensityMatrix parse_state_document(const std::string& text);

// Reads the document from a file, or from standard input when path is "-".
DensityMatrix load_state_file(const std::string& path);

}  // namespace entorder::cli
