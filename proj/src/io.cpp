#include "cycres/io.hpp"

#include <cstdio>

#include "cycres/errors.hpp"

namespace cycres {

Json export_json(const CycComplex& c) {
  Json doc;
  doc["n"] = c.n();
  doc["matrix"] = c.matrix().rows();
  Json nu = Json::array();
  for (std::int64_t v : c.context().nu()) nu.push_back(v);
  doc["nu"] = nu;
  Json ranks = Json::array(), shifts = Json::array(), bases = Json::array(), diffs = Json::array();
  for (std::size_t k = 0; k < c.length(); ++k) {
    ranks.push_back(c.rank(k));
    shifts.push_back(c.shifts(k));
    Json b = Json::array();
    for (const auto& p : c.basis(k)) b.push_back(to_string(p, c.n()));
    bases.push_back(b);
    Json level = Json::array();
    if (k > 0)
      for (const auto& f : c.diff(k)) {
        Json col = Json::array();
        for (const auto& [basis, poly] : f.components()) col.push_back(Json{{"basis", basis + 1}, {"poly", to_string(poly)}});
        level.push_back(col);
      }
    diffs.push_back(level);
  }
  doc["ranks"] = ranks;
  doc["shifts"] = shifts;
  doc["bases"] = bases;
  doc["diffs"] = diffs;
  return doc;
}

CycComplex import_complex(const Json& doc) {
  try {
    const auto rows = doc.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
    if (rows.size() < 3) throw TooSmallError("need at least 3 vertices, got " + std::to_string(rows.size()));
    const CBMatrix L = cb_matrix(rows);
    if (!L.irreducible()) throw NotIrreducibleError("matrix is reducible (class CB)");
    const std::size_t n = L.n();
    const auto& diffs = doc.at("diffs");
    if (diffs.size() != n) throw DimensionError("expected " + std::to_string(n) + " levels in diffs");
    // The orders are only known after assembly, so each polynomial is parsed
    // at level 0 and moved onto its basis element.
    const auto ring = TermOrder::weighted_revlex(GradedContext::from_integers(grading_vector(adjugate_row(L.to_int_matrix()))));
    std::vector<std::vector<std::vector<Term>>> raw(n);
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& col : diffs.at(k)) {
        std::vector<Term> terms;
        for (const auto& entry : col) {
          const auto basis = entry.at("basis").get<std::int64_t>();
          if (basis < 1) throw ValidationError("basis index must be positive");
          const ModuleElement poly = parse_element(entry.at("poly").get<std::string>(), ring);
          for (Term t : poly.terms()) {
            t.basis = static_cast<std::size_t>(basis - 1);
            terms.push_back(std::move(t));
          }
        }
        raw[k].push_back(std::move(terms));
      }
    for (std::size_t k = 1; k < n; ++k) {
      const std::size_t r = expected_rank(n, k - 1);
      for (const auto& col : raw[k])
        for (const Term& t : col)
          if (t.basis >= r) throw ValidationError("basis index " + std::to_string(t.basis + 1) + " out of range at level " + std::to_string(k));
    }
    return assemble_complex(L, std::move(raw));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad complex document: ") + e.what());
  }
}

namespace {

std::string millis_str(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f ms", ms);
  return buf;
}

}  // namespace

Json report_json(const VerificationReport& r, bool timings) {
  Json doc;
  doc["instance"] = r.instance;
  doc["passed"] = r.passed();
  doc["minimal"] = r.minimal;
  doc["max_degree"] = r.max_degree;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.status.ok ? "pass" : "fail";
    j["count"] = c.status.count;
    if (!c.status.ok) j["witness"] = c.status.witness;
    if (timings) j["millis"] = c.millis;
    checks.push_back(j);
  }
  doc["checks"] = checks;
  return doc;
}

std::string report_text(const VerificationReport& r, bool timings) {
  std::string s;
  if (!r.instance.empty()) s += "instance: " + r.instance + "\n";
  for (const auto& c : r.checks) {
    s += (c.status.ok ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.status.count) + " items";
    if (timings) s += ", " + millis_str(c.millis);
    s += ")\n";
    if (!c.status.ok) s += "  witness: " + c.status.witness + "\n";
  }
  s += "minimal: " + std::string(r.minimal ? "yes" : "no") + "\n";
  s += "homology checked up to degree " + std::to_string(r.max_degree) + "\n";
  s += r.passed() ? "result: PASS\n" : "result: FAIL\n";
  return s;
}

}  // namespace cycres
