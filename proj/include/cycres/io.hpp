#pragma once

#include <string>

#include <json.hpp>

#include "cycres/cyc.hpp"
#include "cycres/verify.hpp"

namespace cycres {

using Json = nlohmann::ordered_json;

// {"n", "matrix", "nu", "ranks", "shifts", "bases", "diffs"}; diffs[k][j] lists
// the terms of d_k(e_{k,j}) as {"basis": 1-based index, "poly": text}.
Json export_json(const CycComplex& c);
// Inverse of export_json. The differentials are taken as given, so a tampered
// file yields a complex that fails verification rather than a silent rebuild.
CycComplex import_complex(const Json& doc);

Json report_json(const VerificationReport& r, bool timings);
std::string report_text(const VerificationReport& r, bool timings);

}  // namespace cycres
