#include "convexa/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "convexa/decision.hpp"
#include "convexa/enumerate.hpp"
#include "convexa/error.hpp"
#include "convexa/io.hpp"
#include "convexa/text_format.hpp"
#include "convexa/topology.hpp"

namespace convexa::app {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json certificate_1d(const Realization1D& r) {
  json witnesses = json::object();
  for (const auto& [w, x] : witnesses_1d(r)) witnesses[to_string(w, r.n)] = json::array({to_string(x)});
  return {{"code", to_json(realized_code_1d(r))}, {"witnesses", witnesses}};
}

// The interval realization available for a Convex verdict, if any.
std::optional<Realization1D> interval_realization(const NeuralCode& code, const Verdict& v) {
  if (v.plan->strategy == Strategy::PathCase && v.plan->extras.empty()) return realize_plan_1d(code, *v.plan);
  return v.interval_witness;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::OutOfRange, "cannot write " + path);
  out << text;
}

}  // namespace

int refine_budget_from_env() {
  if (const char* s = std::getenv("CONVEXA_REFINE_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v <= 1000) return static_cast<int>(v);
  }
  return 32;
}

NeuralCode load_code(const InputOptions& in) {
  const std::string text = slurp(in.path);
  if (in.json) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(Errc::Parse, e.what());
    }
    NeuralCode code = code_from_json(j);
    return in.neurons ? code.with_n(*in.neurons) : code;
  }
  return parse_code_text(text, in.neurons);
}

json analysis_document(const NeuralCode& code, bool with_realization, const RefineOptions& refine) {
  const unsigned n = code.n();
  const SimplicialComplex cpx = closure(code);
  json doc = {{"schema", kSchema}, {"n", n}, {"code", to_json(code)}};
  doc["facets"] = codewords_json(cpx.facets(), n);
  doc["facet_intersections"] = codewords_json(facet_intersections(cpx), n);
  doc["path_of_facets"] = nullptr;
  if (cpx.facet_count() == 3 && !cpx.is_void_plus_empty()) {
    if (auto w = path_of_facets(cpx)) {
      const auto& f = cpx.facets();
      doc["path_of_facets"] = {{"a", to_string(f[w->a], n)}, {"b", to_string(f[w->b], n)}, {"c", to_string(f[w->c], n)}};
    }
  }
  doc["minimal_code"] = cpx.facet_count() <= 3 ? to_json(minimal_code(cpx)) : json(nullptr);
  json reports = json::array();
  for (const auto& r : local_obstructions(code)) reports.push_back(to_json(r, n));
  doc["obstructions"] = reports;

  const Verdict v = decide(code);
  doc["verdict"] = to_string(v.outcome);
  doc["dim"] = v.dim ? json(to_string(*v.dim)) : json(nullptr);
  doc["plan"] = v.plan ? to_json(*v.plan, n) : json(nullptr);
  if (with_realization && v.outcome == Outcome::Convex) {
    if (auto r1 = interval_realization(code, v); r1 && v.dim == DimReport::Exactly1) {
      doc["realization"] = to_json(*r1);
      doc["certificate"] = certificate_1d(*r1);
    } else {
      const auto r2 = realize_plan_2d(code, *v.plan, refine);
      doc["realization"] = to_json(r2);
      doc["certificate"] = to_json(certify(r2));
    }
  }
  return doc;
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  NeuralCode code;
  try {
    code = load_code(opts.input);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  const json doc = analysis_document(code, opts.with_realization, opts.refine);
  out << doc.dump(2) << "\n";
  const std::string verdict = doc["verdict"];
  if (verdict == "Convex") return kOk;
  if (verdict == "NotConvex") return kNotConvex;
  return kUnsupported;
}

int cmd_realize(const RealizeOptions& opts, std::ostream& out, std::ostream& err) {
  NeuralCode code;
  try {
    code = load_code(opts.input);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (opts.dim != "auto" && opts.dim != "1" && opts.dim != "2") {
    err << "error: --dim must be auto, 1 or 2\n";
    return kParseError;
  }
  const Verdict v = decide(code);
  if (v.outcome == Outcome::Unsupported) {
    err << "unsupported: " << maximal_codewords(code).size() << " maximal codewords (at most 3 are supported)\n";
    return kUnsupported;
  }
  if (v.outcome == Outcome::NotConvex) {
    err << "not convex: local obstruction at";
    for (const auto& r : v.obstructions) err << " " << to_string(r.sigma, code.n());
    err << "\n";
    return kNotConvex;
  }

  const auto r1 = interval_realization(code, v);
  const bool use_1d = opts.dim == "1" || (opts.dim == "auto" && r1 && v.dim == DimReport::Exactly1);
  json doc;
  std::string svg;
  if (use_1d) {
    if (!r1) {
      std::vector<Codeword> missing;
      for (const Extra& e : v.plan->extras) missing.push_back(e.tau);
      err << "no interval realization: the interval layout realizes " << to_string(v.plan->base_code);
      if (!missing.empty()) err << " and lacks " << codewords_json(missing, code.n()).dump();
      if (code.n() > kOracleMaxNeurons) err << "; exhaustive interval search is limited to n <= 4";
      err << "\n";
      return kDimInfeasible;
    }
    doc = to_json(*r1);
    doc["certificate"] = certificate_1d(*r1);
    if (!(realized_code_1d(*r1) == code)) {
      err << "internal error: interval certificate differs from the input code\n";
      return kFailure;
    }
    if (!opts.svg_path.empty()) svg = render_svg(*r1);
  } else {
    Realization2D r2;
    try {
      r2 = realize_plan_2d(code, *v.plan, opts.refine);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kFailure;
    }
    const WitnessedCode cert = certify(r2);
    if (!(cert.code == code)) {
      err << "internal error: certificate differs from the input code\n";
      return kFailure;
    }
    doc = to_json(r2);
    doc["certificate"] = to_json(cert);
    if (!opts.svg_path.empty()) svg = render_svg(r2, cert);
  }
  doc["dim_report"] = to_string(*v.dim);
  if (!opts.svg_path.empty()) write_text(opts.svg_path, svg);
  if (opts.out_path.empty()) out << doc.dump(2) << "\n";
  else write_text(opts.out_path, doc.dump(2) + "\n");
  return kOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  Realization real;
  NeuralCode target;
  try {
    json j;
    try {
      j = json::parse(slurp(opts.realization_path));
    } catch (const json::exception& e) {
      throw Error(Errc::Parse, e.what());
    }
    real = realization_from_json(j);
    target = load_code(opts.code);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  NeuralCode realized;
  std::map<Codeword, json> witness;
  unsigned n = 0;
  if (const auto* r1 = std::get_if<Realization1D>(&real)) {
    n = r1->n;
    realized = realized_code_1d(*r1);
    for (const auto& [w, x] : witnesses_1d(*r1)) witness[w] = json::array({to_string(x)});
  } else {
    const auto& r2 = std::get<Realization2D>(real);
    n = r2.n;
    const auto cert = certify(r2);
    realized = cert.code;
    for (const auto& [w, p] : cert.witnesses) witness[w] = to_json(p);
  }
  n = std::max(n, target.n());
  json missing = json::array(), extra = json::array();
  for (Codeword w : target.words()) {
    if (!realized.contains(w)) missing.push_back(to_string(w, n));
  }
  for (Codeword w : realized.words()) {
    if (!target.contains(w)) extra.push_back({{"codeword", to_string(w, n)}, {"witness", witness[w]}});
  }
  const bool equal = missing.empty() && extra.empty();
  json report = {{"schema", kSchema},
                 {"equal", equal},
                 {"realized", codewords_json(realized.words(), n)},
                 {"target", codewords_json(target.words(), n)},
                 {"missing", missing},
                 {"extra", extra}};
  out << report.dump(2) << "\n";
  return equal ? kOk : kNotConvex;
}

int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.neurons < 1 || opts.neurons > 6 || opts.facets < 1 || opts.facets > 3) {
    err << "error: enumeration needs 1 <= neurons <= 6 and 1 <= facets <= 3\n";
    return kParseError;
  }
  EnumerationOptions eo;
  eo.neurons = opts.neurons;
  eo.facets = opts.facets;
  eo.seed = opts.seed;
  eo.samples = opts.samples;
  eo.certify = opts.certify;
  const auto summaries = run_enumeration(eo);

  std::ostringstream csv;
  csv << "hash,facets,path_of_facets,minimal_code,codes,convex,not_convex,containing_minimal,exhaustive,certified\n";
  if (!opts.out_dir.empty()) std::filesystem::create_directories(opts.out_dir);
  for (const auto& s : summaries) {
    const unsigned n = s.complex.n();
    std::string facets, minimal;
    for (Codeword f : s.complex.facets()) facets += (facets.empty() ? "" : " ") + to_string(f, n);
    for (Codeword w : s.minimal.words()) minimal += (minimal.empty() ? "" : " ") + to_string(w, n);
    csv << s.hash << "," << facets << "," << (s.path_of_facets ? 1 : 0) << "," << minimal << "," << s.codes << ","
        << s.convex << "," << s.not_convex << "," << s.containing_minimal << "," << (s.exhaustive ? 1 : 0) << ","
        << s.certified << "\n";
    if (!opts.out_dir.empty()) {
      json j = {{"schema", kSchema},
                {"n", n},
                {"hash", s.hash},
                {"facets", codewords_json(s.complex.facets(), n)},
                {"path_of_facets", s.path_of_facets},
                {"minimal_code", to_json(s.minimal)},
                {"codes", s.codes},
                {"convex", s.convex},
                {"not_convex", s.not_convex},
                {"containing_minimal", s.containing_minimal},
                {"exhaustive", s.exhaustive},
                {"certified", s.certified}};
      write_text(opts.out_dir + "/complex_" + s.hash + ".json", j.dump(2) + "\n");
    }
  }
  if (!opts.out_dir.empty()) write_text(opts.out_dir + "/summary.csv", csv.str());
  out << csv.str();
  return kOk;
}

}  // namespace convexa::app
