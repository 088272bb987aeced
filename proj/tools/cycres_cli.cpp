#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cycres/errors.hpp"
#include "cycres/io.hpp"

namespace {

using namespace cycres;

enum Exit { kPass = 0, kVerifyFail = 1, kInvalid = 2, kNotIrreducible = 3 };

struct Options {
  std::string input;
  std::size_t omega = 0;  // 1-based; 0 means n
  std::int64_t max_degree = kDefaultMaxDegreeCap;
  std::string format = "text";
  std::uint64_t seed = 1;
  bool require_minimal = false;
  bool no_timings = false;
  std::string out;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ValidationError("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::size_t omega_of(const Options& o, std::size_t n) {
  if (o.omega == 0) return n - 1;
  if (o.omega > n) throw ValidationError("--omega must lie in 1.." + std::to_string(n));
  return o.omega - 1;
}

std::string vec_str(const std::vector<std::size_t>& v, std::size_t offset = 0) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + offset);
  return s + ")";
}

std::string matrix_str(const CBMatrix& L) {
  std::string s;
  for (const auto& row : L.rows()) {
    s += " ";
    for (auto v : row) {
      std::string x = std::to_string(v);
      s += std::string(x.size() < 4 ? 4 - x.size() : 1, ' ') + x;
    }
    s += "\n";
  }
  return s;
}

// Builds the complex of the input digraph, relabelled so that omega is last.
CycComplex complex_of(const Options& o, const WeightedDigraph& g) {
  if (classify(laplacian(g)) == MatrixClass::CB) throw NotIrreducibleError("digraph is not strongly connected (class CB)");
  return build_complex(echelon_laplacian(g, omega_of(o, g.n())));
}

CycComplex load_complex(const Options& o) {
  const std::string text = read_input(o.input);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object() && doc.contains("diffs")) return import_complex(doc);
  return complex_of(o, parse_digraph(text));
}

int run_classify(const Options& o) {
  const WeightedDigraph g = parse_digraph(read_input(o.input));
  const CBMatrix L = laplacian(g);
  const MatrixClass cls = L.matrix_class();
  Json j;
  j["n"] = g.n();
  j["arcs"] = g.arcs().size();
  j["class"] = to_string(cls);
  j["strongly_complete"] = is_strongly_complete(g);
  j["components"] = strongly_connected_components(g);
  std::string text = "n: " + std::to_string(g.n()) + "\nclass: " + to_string(cls) + (cls == MatrixClass::CB ? " (reducible)" : "") +
                     "\nstrongly connected components: " +
                     std::to_string(strongly_connected_components(g)) + "\n";
  if (cls != MatrixClass::CB) {
    const std::size_t omega = omega_of(o, g.n());
    const auto mu = adjugate_row(L.to_int_matrix());
    const auto nu = grading_vector(mu);
    const auto order = omega_delta_enumeration(g, omega);
    const auto dist = unweighted_distance(g, omega);
    const CBMatrix E = laplacian(relabel(g, order));
    j["mu"] = Json::array();
    j["nu"] = Json::array();
    for (std::size_t i = 0; i < mu.size(); ++i) {
      j["mu"].push_back(mu[i].get_str());
      j["nu"].push_back(nu[i].get_str());
    }
    j["omega"] = omega + 1;
    j["distance"] = dist;
    std::vector<std::size_t> order1;
    for (auto v : order) order1.push_back(v + 1);
    j["enumeration"] = order1;
    j["echelon_matrix"] = E.rows();
    j["delta"] = E.echelon()->delta;
    j["q"] = E.echelon()->q;
    text += "mu: " + to_string(mu) + "\nnu: " + to_string(nu) + "\nstrongly complete: " + (is_strongly_complete(g) ? "yes" : "no") +
            "\nomega: " + std::to_string(omega + 1) + "\ndistance to omega: " + vec_str(dist) + "\nenumeration (new -> old): " +
            vec_str(order, 1) + "\nblocks: delta=" + std::to_string(E.echelon()->delta) + " q=" + vec_str(E.echelon()->q) +
            "\nechelon matrix:\n" + matrix_str(E);
  }
  emit(o, o.format == "json" ? dump(j) : text);
  return kPass;
}

int run_resolve(const Options& o) {
  const CycComplex c = load_complex(o);
  if (!o.out.empty()) {
    // The file always receives the export; stdout gets a summary.
    emit(o, dump(export_json(c)));
    const bool minimal = minimality_check(c).minimal;
    if (o.format == "json") {
      Json j{{"out", o.out}, {"ranks", Json::array()}, {"minimal", minimal}};
      for (std::size_t k = 0; k < c.length(); ++k) j["ranks"].push_back(c.rank(k));
      std::cout << dump(j);
    } else {
      std::cout << "ranks: (";
      for (std::size_t k = 0; k < c.length(); ++k) std::cout << (k ? "," : "") << c.rank(k);
      std::cout << ")\nminimal: " << (minimal ? "yes" : "no") << "\nwritten: " << o.out << "\n";
    }
    return kPass;
  }
  if (o.format == "json") {
    emit(o, dump(export_json(c)));
    return kPass;
  }
  std::string s = "matrix:\n" + matrix_str(c.matrix()) + "nu: (";
  for (std::size_t i = 0; i < c.n(); ++i) s += (i ? "," : "") + std::to_string(c.context().nu()[i]);
  s += ")\nranks: (";
  for (std::size_t k = 0; k < c.length(); ++k) s += (k ? "," : "") + std::to_string(c.rank(k));
  s += ")\n";
  for (std::size_t k = 0; k < c.length(); ++k) {
    s += "C_" + std::to_string(k) + ": rank " + std::to_string(c.rank(k)) + "\n";
    for (std::size_t j = 0; j < c.rank(k); ++j) {
      s += "  e[" + std::to_string(k) + "," + std::to_string(j + 1) + "] = (" + to_string(c.basis(k)[j], c.n()) + ") shift " +
           std::to_string(c.shifts(k)[j]);
      if (k > 0) s += "  ->  " + to_string(c.diff(k)[j]);
      s += "\n";
    }
  }
  s += std::string("minimal: ") + (minimality_check(c).minimal ? "yes" : "no") + "\n";
  emit(o, s);
  return kPass;
}

int run_verify(const Options& o) {
  const CycComplex c = load_complex(o);
  VerifyOptions vo;
  vo.max_degree_cap = o.max_degree;
  vo.seed = o.seed;
  vo.require_minimal = o.require_minimal;
  // Content-derived instance id, so a digraph and its exported complex give
  // identical reports.
  const VerificationReport r = full_verify(c, vo, "L=" + Json(c.matrix().rows()).dump());
  emit(o, o.format == "json" ? dump(report_json(r, !o.no_timings)) : report_text(r, !o.no_timings));
  return r.passed() ? kPass : kVerifyFail;
}

int run_gb(const Options& o) {
  const CycComplex c = load_complex(o);
  const Status st = verify_degree0_gb(c);
  Json j;
  j["generators"] = Json::array();
  std::string s;
  for (std::size_t i = 0; i < c.rank(1); ++i) {
    const auto& f = c.diff(1)[i];
    const std::string poly = to_string(f.components().begin()->second);
    j["generators"].push_back(Json{{"subset", to_string(c.basis(1)[i], c.n())}, {"poly", poly}, {"degree", c.shifts(1)[i]}});
    s += "(" + to_string(c.basis(1)[i], c.n()) + ")  " + poly + "\n";
  }
  j["groebner_basis"] = st.ok;
  j["s_pairs"] = st.count;
  s += std::string("Groebner basis: ") + (st.ok ? "yes" : "no") + " (" + std::to_string(st.count) + " S-pairs)\n";
  if (!st.ok) {
    j["witness"] = st.witness;
    s += "witness: " + st.witness + "\n";
  }
  emit(o, o.format == "json" ? dump(j) : s);
  return st.ok ? kPass : kVerifyFail;
}

int run_homology(const Options& o) {
  const CycComplex c = load_complex(o);
  const std::int64_t d = default_max_degree(c, o.max_degree);
  const Status st = graded_homology_oracle(c, d);
  Json j{{"max_degree", d}, {"exact", st.ok}};
  std::string s = "graded pieces checked: degrees 0.." + std::to_string(d) + "\nexact: " + (st.ok ? "yes" : "no") + "\n";
  if (!st.ok) {
    j["witness"] = st.witness;
    s += "witness: " + st.witness + "\n";
  }
  emit(o, o.format == "json" ? dump(j) : s);
  return st.ok ? kPass : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyc resolutions of lattice ideals of weighted digraphs"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool complex_input) {
    sub->add_option("input", o.input, complex_input ? "digraph JSON or exported complex ('-' for stdin)" : "digraph JSON ('-' for stdin)")
        ->required();
    sub->add_option("--omega", o.omega, "vertex placed last (1-based, default n)");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write output to a file");
  };
  auto* classify_cmd = app.add_subcommand("classify", "classify the Laplacian and show the echelon relabelling");
  common(classify_cmd, false);
  auto* resolve_cmd = app.add_subcommand("resolve", "build the Cyc complex");
  common(resolve_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "run every structural check on the complex");
  common(verify_cmd, true);
  verify_cmd->add_option("--max-degree", o.max_degree, "cap on the degrees checked by the homology oracle")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", o.seed, "seed for the randomised colon test");
  verify_cmd->add_flag("--require-minimal", o.require_minimal, "fail when the resolution is not minimal");
  verify_cmd->add_flag("--no-timings", o.no_timings, "omit timings for byte-stable reports");
  auto* gb_cmd = app.add_subcommand("gb", "degree-0 images and the Buchberger check");
  common(gb_cmd, true);
  auto* hom_cmd = app.add_subcommand("homology", "exactness of graded pieces by exact ranks");
  common(hom_cmd, true);
  hom_cmd->add_option("--max-degree", o.max_degree, "cap on the degrees checked")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }
  try {
    if (*classify_cmd) return run_classify(o);
    if (*resolve_cmd) return run_resolve(o);
    if (*verify_cmd) return run_verify(o);
    if (*gb_cmd) return run_gb(o);
    if (*hom_cmd) return run_homology(o);
  } catch (const NotIrreducibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotIrreducible;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
