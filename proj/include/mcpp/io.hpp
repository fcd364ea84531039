#pragma once

#include "mcpp/instance.hpp"
#include "mcpp/solver.hpp"

#include <string>
#include <vector>

namespace mcpp {

// Interchange formats are JSON with rationals as exact "p/q" strings (plain
// integers also accepted on input). Indices are 1-based. Unknown keys are
// rejected so typos fail loudly. Parse errors throw ValidationError.

Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

// A labelled inequality a.x <= delta in one of the three coordinate spaces:
// the closed family ("JH"), its reduced companion ("JHleq"), or the block
// space ("MP").
struct InequalityFile {
  std::vector<Mono> labels;
  std::vector<Rat> a;
  Rat delta;
  std::string space;
};

InequalityFile parse_inequality_json(const std::string& text);
std::string inequality_to_json(const InequalityFile& f);

std::string report_to_json(const SolveReport& r);
SolveReport report_from_json(const std::string& text);
std::string report_to_text(const SolveReport& r);

}  // namespace mcpp
