#include "zjones/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "zjones/acceptance.hpp"
#include "zjones/borel.hpp"
#include "zjones/chord.hpp"
#include "zjones/error.hpp"
#include "zjones/lorentz.hpp"
#include "zjones/parallel.hpp"
#include "zjones/torus.hpp"

namespace zj {

namespace {

const char* const kVersion = "0.1.0";
const std::set<std::string> kCommands = {"series", "weight", "resum", "diagnose", "lorentz", "oracle", "selftest"};

struct Settings {
  int order = 12;
  int precision = 15;
  double tol = 1e-9;
  int nodes = 0;
  int quad_order = 20;
  int threads = 0;
  std::string format;
  std::string config_file;
};

struct Args {
  std::string knot, colour = "s", diagram, torus = "2,3", h = "0.2", rep, pd, only;
  double theta = 0, R = 0;
  bool normalized = false, mm = false, branches = false, quadrature = false, g_expansion = false, negative_control = false;
  std::string verma;
};

double round_digits(double x, int digits) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

void round_floats(json& j, int digits) {
  if (j.is_number_float()) {
    j = round_digits(j.get<double>(), digits);
  } else if (j.is_structured()) {
    for (auto& v : j) round_floats(v, digits);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string fmt(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

json config_json(const Settings& s, const std::string& format) {
  return {{"order", s.order},  {"precision", s.precision}, {"tol", s.tol},
          {"nodes", s.nodes},  {"quad_order", s.quad_order},
          {"threads", thread_count()}, {"format", format},
          {"config_file", s.config_file.empty() ? json(nullptr) : json(s.config_file)}};
}

TorusParams parse_torus(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "torus expects 'm,p', got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    int m = std::stoi(text.substr(0, comma), &a), p = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument(text);
    return TorusParams(m, p);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "torus expects 'm,p', got '" + text + "'");
  }
}

MPoly parse_colour(const std::string& text) {
  if (text == "s") return colour_s();
  return MPoly::constant(colour_s().ring(), parse_rational(text));
}

PlanarDiagram parse_pd(const std::string& text) {
  if (text == "trefoil") return PlanarDiagram::trefoil();
  if (text == "fig8" || text == "figure-eight") return PlanarDiagram::figure_eight();
  if (text == "unknot") return PlanarDiagram::unknot();
  std::ifstream in(text);
  if (!in) throw Error(ErrorKind::Parse, "no such planar diagram or file: " + text);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad planar diagram json: ") + e.what());
  }
  return PlanarDiagram::from_json(j);
}

struct Output {
  json body;
  std::string csv;   // used when format is csv
  std::string text;  // used when format is text
  int status = kExitOk;
};

std::string series_csv(const HSeries& f) {
  std::string out = "n,coefficient\n";
  for (int n = 0; n <= f.trunc(); ++n) out += std::to_string(n) + "," + csv_field(f[n].str()) + "\n";
  return out;
}

Output cmd_series(const Args& a, const Settings& s) {
  const KnotSpec k = KnotSpec::parse(a.knot);
  const MPoly colour = parse_colour(a.colour);
  JonesSeries j = jones_series(k, s.order, colour);
  if (a.normalized) j = normalize_by_unknot(j, colour);
  Output o;
  json warnings = json::array();
  for (const auto& w : j.warnings) warnings.push_back(w);
  o.body = {{"knot", j.knot.str()}, {"colour", a.colour}, {"normalized", j.normalized}, {"exact", true},
            {"series", to_json(j.series)}, {"warnings", warnings}};
  if (a.mm) {
    if (a.colour != "s") throw Error(ErrorKind::Parse, "--mm needs the symbolic colour s");
    o.body["melvin_morton"] = mm_report(j).to_json();
  }
  o.csv = series_csv(j.series);
  return o;
}

Output cmd_weight(const Args& a, const Settings&) {
  const ChordDiagram d = ChordDiagram::parse(a.diagram);
  const MPoly c = cv_weight(d);
  const MPoly w = weight_character(d);
  Output o;
  o.body = {{"diagram", d.str()}, {"chords", d.chords()}, {"exact", true}, {"casimir_poly", c.str()},
            {"character", w.str()}, {"casimir_json", to_json(c)}, {"character_json", to_json(w)}};
  o.csv = "diagram,casimir_poly,character\n" + csv_field(d.str()) + "," + csv_field(c.str()) + "," +
          csv_field(w.str()) + "\n";
  return o;
}

Output cmd_resum(const Args& a, const Settings& s) {
  const TorusParams tp = parse_torus(a.torus);
  const std::complex<double> s0 = parse_complex(a.colour == "s" ? "0.5" : a.colour);
  const std::complex<double> h = parse_complex(a.h);
  ResumConfig cfg;
  cfg.theta = a.theta;
  cfg.R = a.R;
  cfg.nodes = s.nodes;
  cfg.tol = s.tol;
  std::vector<ResumResult> rs = a.branches ? branch_scan(tp, s0, h, cfg) : std::vector<ResumResult>{resum(tp, s0, h, cfg)};
  Output o;
  json arr = json::array();
  o.csv = "branch,theta,re,im,err,R,tail_bound,nodes\n";
  for (const auto& r : rs) {
    arr.push_back(r.to_json());
    o.csv += std::to_string(r.branch_id) + "," + fmt(r.theta, s.precision) + "," + fmt(r.value.real(), s.precision) +
             "," + fmt(r.value.imag(), s.precision) + "," + fmt(r.error_estimate, 3) + "," + fmt(r.R, s.precision) +
             "," + fmt(r.tail_bound, 3) + "," + std::to_string(r.nodes) + "\n";
  }
  o.body = {{"torus", {tp.m, tp.p}}, {"framing", torus_native_framing(tp.m, tp.p)}, {"colour", complex_json(s0)},
            {"h", complex_json(h)}, {"results", arr}};
  if (a.quadrature) {
    QuadConfig qc;
    qc.order = s.quad_order;
    const QuadResult q = kashaev_quadrature(tp, s0, h, qc);
    o.body["quadrature"] = {{"value", complex_json(q.value)}, {"err", round15(q.error)}, {"converged", q.converged},
                            {"panels", q.panels}};
  }
  return o;
}

Output cmd_diagnose(const Args& a, const Settings& s) {
  const KnotSpec k = KnotSpec::parse(a.knot);
  const Rational s0 = parse_rational(a.colour == "s" ? "1/2" : a.colour);
  const HSeries f = jones_series(k, s.order, MPoly::constant(colour_s().ring(), s0)).series;
  const std::vector<double> c = coefficients_at(f, s0);
  const GevreyReport g = gevrey_diagnose(c);
  Output o;
  o.body = {{"knot", k.str()}, {"colour", rational_str(s0)}, {"gevrey", g.to_json()}};
  json exact = json::array();
  for (int n = 0; n <= f.trunc(); ++n) exact.push_back(rational_str(f[n].constant_term()));
  o.body["coefficients"] = exact;
  o.csv = "n,coefficient,float_value,borel_coefficient,root_test\n";
  for (const auto& row : g.rows)
    o.csv += std::to_string(row.n) + "," + csv_field(rational_str(f[row.n].constant_term())) + "," +
             fmt(row.a, s.precision) + "," + fmt(row.b, s.precision) + "," + fmt(row.root, s.precision) + "\n";
  return o;
}

Output cmd_lorentz(const Args& a, const Settings& s) {
  Output o;
  if (!a.rep.empty()) {
    const RepLabel r = RepLabel::parse(a.rep);
    const ColourAssignment c = rep_to_color(r);
    o.body = {{"rep", r.str()}, {"colours", c.to_json()}};
    o.csv = "index,re,im\n";
    for (std::size_t i = 0; i < c.values.size(); ++i)
      o.csv += std::to_string(i) + "," + fmt(c.values[i].real(), s.precision) + "," + fmt(c.values[i].imag(), s.precision) + "\n";
    return o;
  }
  if (a.g_expansion) {
    const TorusParams tp = parse_torus(a.torus);
    const GExpansion g = g_expansion(tp, s.order);
    json P = json::array();
    for (const auto& p : g.P_over_pi) P.push_back(p.str());
    o.body = {{"torus", {tp.m, tp.p}}, {"framing", torus_native_framing(tp.m, tp.p)}, {"exact", true},
              {"P_over_pi", P}, {"factorial_series", to_json(g.factorial_series)}};
    o.csv = series_csv(g.factorial_series);
    return o;
  }
  const KnotSpec k = KnotSpec::parse(a.knot);
  const LorentzSeries l = lorentz_series(k, s.order);
  o.body = {{"knot", l.knot.str()}, {"exact", true}, {"series", to_json(l.series)}};
  o.csv = series_csv(l.series);
  return o;
}

Output cmd_oracle(const Args& a, const Settings& s) {
  Output o;
  if (!a.verma.empty()) {
    const ChordDiagram d = ChordDiagram::parse(a.verma);
    const MPoly v = verma_oracle(d);
    const MPoly w = casimir_to_colour(cv_weight(d));
    o.body = {{"diagram", d.str()}, {"exact", true}, {"verma", v.str()}, {"cv_weight", w.str()}, {"agree", v == w}};
    o.csv = "diagram,verma,cv_weight,agree\n" + csv_field(d.str()) + "," + csv_field(v.str()) + "," + csv_field(w.str()) +
            "," + (v == w ? "true" : "false") + "\n";
    return o;
  }
  const PlanarDiagram pd = parse_pd(a.pd);
  const HSeries f = kauffman_jones_oracle(pd, s.order, a.normalized);
  json bracket = json::object();
  for (const auto& [e, c] : kauffman_bracket(pd)) bracket[std::to_string(e)] = c.get_str();
  o.body = {{"pd", a.pd}, {"exact", true}, {"normalized", a.normalized}, {"bracket", bracket}, {"series", to_json(f)}};
  o.csv = series_csv(f);
  return o;
}

Output cmd_selftest(const Args& a, const Settings&, std::ostream& err) {
  AcceptanceOptions opts;
  std::stringstream ss(a.only);
  for (std::string id; std::getline(ss, id, ',');)
    if (!id.empty()) opts.only.insert(id);
  for (const auto& id : opts.only) {
    bool known = false;
    for (const auto& k : criterion_ids()) known = known || k == id;
    if (!known) throw Error(ErrorKind::Parse, "unknown criterion " + id);
  }
  opts.negative_control = a.negative_control;
  opts.on_result = [&err](const CriterionResult& r) { err << r.id << " " << fmt(r.seconds, 3) << " s\n"; };
  const std::vector<CriterionResult> results = run_acceptance(opts);
  Output o;
  o.body = acceptance_json(results);
  o.text = acceptance_text(results);
  o.csv = "id,pass,title,detail\n";
  for (const auto& r : results)
    o.csv += r.id + "," + (r.pass ? "true" : "false") + "," + csv_field(r.title) + "," + csv_field(r.detail) + "\n";
  o.status = all_passed(results) ? kExitOk : kExitTolerance;
  return o;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::MalformedDiagram:
    case ErrorKind::InvalidPositions:
    case ErrorKind::InvalidTorus:
    case ErrorKind::InvalidOrder:
    case ErrorKind::DirectionOutsideDomain:
      return kExitInvalidArguments;
    case ErrorKind::TailBound:
    case ErrorKind::Tolerance:
      return kExitTolerance;
    default:
      return kExitComputation;
  }
}

void print_error(std::ostream& out, const std::string& kind, const std::string& message) {
  out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (argc < 2) {
    print_error(out, "usage", "expected a command: series, weight, resum, diagnose, lorentz, oracle, selftest");
    return kExitUnknownCommand;
  }
  const std::string first = argv[1];
  if (first != "--help" && first != "--version" && !kCommands.count(first)) {
    print_error(out, "unknown-command", "unknown command '" + first + "'");
    return kExitUnknownCommand;
  }

  Settings s;
  Args a;
  CLI::App app{"Power-series invariants of knots in the colour variable"};
  app.set_help_flag("--help", "print help");
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "key=value file with defaults; flags override it")->check(CLI::ExistingFile);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--order", s.order, "truncation order in h")->check(CLI::Range(0, 400));
  app.add_option("--precision", s.precision, "significant digits of printed floats")->check(CLI::Range(1, 17));
  app.add_option("--tol", s.tol, "target tolerance for resummation")->check(CLI::PositiveNumber);
  app.add_option("--nodes", s.nodes, "resummation table size (0 = adaptive)")->check(CLI::Range(0, 4096));
  app.add_option("--quad-order,--quad_order", s.quad_order, "Gauss-Legendre points per panel")->check(CLI::Range(4, 64));
  app.add_option("--threads", s.threads, "worker threads (default: ZJONES_THREADS or all cores)")->check(CLI::Range(0, 1024));
  app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* series = app.add_subcommand("series", "exact h-series of a knot");
  series->add_option("--knot", a.knot, "knot, e.g. trefoil@0, fig8, torus(2,5)@-3, mirror(trefoil)")->required();
  series->add_option("--colour,--color", a.colour, "colour s = 2z+1: 's' (symbolic) or a rational");
  series->add_flag("--normalized", a.normalized, "divide by the unknot");
  series->add_flag("--mm", a.mm, "append the Melvin-Morton report");

  auto* weight = app.add_subcommand("weight", "sl2 weight of a chord diagram");
  weight->add_option("--diagram", a.diagram, "circular word, e.g. \"1 2 1 2\"")->required();

  auto* resum_cmd = app.add_subcommand("resum", "Borel resummation of a torus knot series");
  resum_cmd->add_option("--torus", a.torus, "m,p");
  resum_cmd->add_option("--colour,--color", a.colour, "complex colour s0 (default 0.5)");
  resum_cmd->add_option("--h", a.h, "complex h, 0 < |h| < pi");
  resum_cmd->add_option("--theta", a.theta, "ray direction");
  resum_cmd->add_option("--R", a.R, "ray length (0 = from the tail bound)");
  resum_cmd->add_flag("--branches", a.branches, "resum along every component of the direction domain");
  resum_cmd->add_flag("--quadrature", a.quadrature, "add the Gaussian-integral value for comparison");

  auto* diagnose = app.add_subcommand("diagnose", "Gevrey and Borel-radius diagnostics");
  diagnose->add_option("--knot", a.knot, "knot")->required();
  diagnose->add_option("--colour,--color", a.colour, "rational colour (default 1/2)");

  auto* lorentz = app.add_subcommand("lorentz", "two-colour series, G-expansion, representation labels");
  lorentz->add_option("--knot", a.knot, "knot for the two-colour series");
  lorentz->add_option("--rep", a.rep, "representation label, e.g. sl2c:principal:m=1:rho=0.5");
  lorentz->add_flag("--g-expansion", a.g_expansion, "factorial series of a torus knot");
  lorentz->add_option("--torus", a.torus, "m,p for --g-expansion");

  auto* oracle = app.add_subcommand("oracle", "independent oracles");
  oracle->add_option("--verma", a.verma, "chord diagram for the highest-weight oracle");
  oracle->add_option("--pd", a.pd, "trefoil, fig8, unknot or a planar-diagram json file");
  oracle->add_flag("--normalized", a.normalized, "divide by the unknot");

  auto* selftest = app.add_subcommand("selftest", "acceptance suite");
  selftest->add_option("--only", a.only, "comma-separated criteria, e.g. A3,A9");
  selftest->add_flag("--negative-control", a.negative_control, "flip the kappa sign; A6 and A8 must fail");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(out, "invalid-arguments", e.what());
    return kExitInvalidArguments;
  }
  if (auto* cfg = app.get_config_ptr(); cfg && cfg->count()) s.config_file = cfg->as<std::string>();

  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "lorentz" && a.rep.empty() && !a.g_expansion && a.knot.empty()) {
    print_error(out, "invalid-arguments", "lorentz needs --knot, --rep or --g-expansion");
    return kExitInvalidArguments;
  }
  if (cmd == "oracle" && a.verma.empty() == a.pd.empty()) {
    print_error(out, "invalid-arguments", "oracle needs exactly one of --verma, --pd");
    return kExitInvalidArguments;
  }
  std::string format = s.format.empty() ? (cmd == "selftest" ? "text" : "json") : s.format;
  if (format == "text" && cmd != "selftest") format = "json";
  if (s.threads > 0) setenv("ZJONES_THREADS", std::to_string(s.threads).c_str(), 1);

  Output o;
  try {
    if (cmd == "series") o = cmd_series(a, s);
    else if (cmd == "weight") o = cmd_weight(a, s);
    else if (cmd == "resum") o = cmd_resum(a, s);
    else if (cmd == "diagnose") o = cmd_diagnose(a, s);
    else if (cmd == "lorentz") o = cmd_lorentz(a, s);
    else if (cmd == "oracle") o = cmd_oracle(a, s);
    else o = cmd_selftest(a, s, err);
  } catch (const Error& e) {
    print_error(out, kind_name(e.kind()), e.what());
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    print_error(out, "internal", e.what());
    return kExitComputation;
  }

  if (format == "csv") {
    out << o.csv;
  } else if (format == "text") {
    out << o.text;
  } else {
    json doc = {{"command", cmd}, {"version", kVersion}, {"config", config_json(s, format)}};
    for (auto& [k, v] : o.body.items()) doc[k] = v;
    round_floats(doc, s.precision);
    out << doc.dump(2) << "\n";
  }
  return o.status;
}

}  // namespace zj
