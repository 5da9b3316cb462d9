#include "tetraposet/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "tetraposet/bijections.hpp"
#include "tetraposet/formulas.hpp"
#include "tetraposet/ideal.hpp"
#include "tetraposet/poset.hpp"
#include "tetraposet/serialize.hpp"
#include "tetraposet/verify.hpp"

namespace tetraposet {

namespace {

// Exit 2: the request itself is malformed (flags, payloads, color letters).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit 1: a well-formed request whose answer is "no" (failed verification,
// refused route, class without a formula).
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

enum class OutFormat { Text, Json, Csv };

OutFormat parse_format(const std::string& f) {
  if (f == "text") return OutFormat::Text;
  if (f == "json") return OutFormat::Json;
  if (f == "csv") return OutFormat::Csv;
  throw UsageError("unknown format: " + f);
}

ColorSet parse_colors(const std::string& letters) {
  try {
    return ColorSet::from_string(letters);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void require_admissible(const ColorSet& s, const std::string& command) {
  if (is_admissible(s)) return;
  throw UsageError(command + " needs an admissible color set; \"" +
                   s.to_string() + "\" is not (its admissible closure is \"" +
                   admissible_closure(s).to_string() + "\")");
}

ColoredPoset build_from_flags(int n, ColorSet s, int trap_k) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (trap_k < 0 || trap_k > n - 1)
    throw UsageError("--trapezoid must lie in [0, n-1]");
  ColoredPoset p = build_tetra(n);
  if (trap_k > 0) p = truncate_trapezoid(p, trap_k);
  return restrict(p, s);
}

std::string csv_quote(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string quoted = "\"";
  for (char c : v) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string coeff_list(const QPolynomial& p) {
  std::string s;
  for (size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) s += ' ';
    s += p.coeffs()[i].str();
  }
  return s;
}

struct CountConfig {
  int n = 0;
  std::string colors;
  int trapezoid = 0;
  bool want_q = false;
  std::string format = "text";
  std::string out_path;
};

struct EnumerateConfig {
  int n = 0;
  std::string colors;
  int trapezoid = 0;
  std::string emit = "ideals";
  std::string format = "text";
  std::string out_path;
};

struct RankGfConfig {
  int n = 0;
  std::string colors;
  int trapezoid = 0;
  std::string format = "text";
  std::string out_path;
};

struct FormulasConfig {
  int n = 0;
  std::string colors;
  bool want_q = false;
  std::string format = "text";
  std::string out_path;
};

struct BijectConfig {
  std::string from;
  std::string to;
  int n = 0;  // 0 = not given
  std::string in_path;
  std::string out_path;
};

struct VerifyConfig {
  std::string suite;
  int n_max = 4;
  std::string format = "text";
  std::string out_path;
};

std::string run_count(const CountConfig& cfg, const Stopwatch& sw) {
  OutFormat fmt = parse_format(cfg.format);
  ColorSet s = parse_colors(cfg.colors);
  ColoredPoset p = build_from_flags(cfg.n, s, cfg.trapezoid);
  Int count = count_ideals_fast(p);
  QPolynomial gf;
  if (cfg.want_q) gf = rank_gf(p);
  switch (fmt) {
    case OutFormat::Text: {
      std::string text = count.str() + "\n";
      if (cfg.want_q) text += "rank-gf: " + gf.to_string() + "\n";
      return text;
    }
    case OutFormat::Csv: {
      std::string text = "n,colors,trapezoid_k,count";
      if (cfg.want_q) text += ",rank_gf";
      text += "\n" + std::to_string(cfg.n) + "," + s.to_string() + "," +
              std::to_string(cfg.trapezoid) + "," + count.str();
      if (cfg.want_q) text += "," + csv_quote(coeff_list(gf));
      return text + "\n";
    }
    case OutFormat::Json: {
      Json cert;
      cert["command"] = "count";
      cert["inputs"] = {{"n", cfg.n},
                        {"colors", s.to_string()},
                        {"trapezoid_k", cfg.trapezoid}};
      cert["count"] = count.str();
      if (cfg.want_q) cert["rank_gf"] = qpoly_to_json(gf);
      cert["wall_time_ms"] = sw.ms();
      return json_to_string(cert);
    }
  }
  return {};
}

std::string run_enumerate(const EnumerateConfig& cfg) {
  OutFormat fmt = parse_format(cfg.format);
  ColorSet s = parse_colors(cfg.colors);
  ColoredPoset p = build_from_flags(cfg.n, s, cfg.trapezoid);
  if (cfg.emit == "poset") return json_to_string(poset_to_json(p));
  if (cfg.emit != "ideals") throw UsageError("unknown --emit: " + cfg.emit);
  std::string text;
  if (fmt == OutFormat::Csv) {
    text = "hex,size\n";
    enumerate_ideals(p, [&](const OrderIdeal& ideal) {
      text += ideal.bits.to_hex() + "," + std::to_string(ideal.size) + "\n";
    });
  } else {
    // JSON-lines in both text and json formats: one ideal per line,
    // lexicographic by bit vector.
    enumerate_ideals(p, [&](const OrderIdeal& ideal) {
      text += ideal_to_json(ideal).dump() + "\n";
    });
  }
  return text;
}

std::string run_rankgf(const RankGfConfig& cfg, const Stopwatch& sw) {
  OutFormat fmt = parse_format(cfg.format);
  ColorSet s = parse_colors(cfg.colors);
  require_admissible(s, "rankgf");
  ColoredPoset p = build_from_flags(cfg.n, s, cfg.trapezoid);
  QPolynomial gf = rank_gf(p);
  switch (fmt) {
    case OutFormat::Text:
      return gf.to_string() + "\n";
    case OutFormat::Csv: {
      std::string text = "degree,coeff\n";
      for (size_t d = 0; d < gf.coeffs().size(); ++d)
        text += std::to_string(d) + "," + gf.coeffs()[d].str() + "\n";
      return text;
    }
    case OutFormat::Json: {
      Json cert;
      cert["command"] = "rankgf";
      cert["inputs"] = {{"n", cfg.n},
                        {"colors", s.to_string()},
                        {"trapezoid_k", cfg.trapezoid}};
      cert["rank_gf"] = qpoly_to_json(gf);
      cert["degree"] = gf.degree();
      cert["value_at_1"] = gf.eval_at_one().str();
      cert["wall_time_ms"] = sw.ms();
      return json_to_string(cert);
    }
  }
  return {};
}

std::string run_formulas(const FormulasConfig& cfg, const Stopwatch& sw) {
  OutFormat fmt = parse_format(cfg.format);
  ColorSet s = parse_colors(cfg.colors);
  require_admissible(s, "formulas");
  TheoremClass cls = classify(s);
  std::string cls_name = theorem_class_name(cls);
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  Int count;
  try {
    count = count_formula(s, cfg.n);
  } catch (const NoFormulaError& e) {
    throw MismatchError(e.what());
  }
  QPolynomial gf;
  if (cfg.want_q) {
    try {
      gf = rank_gf_formula(s, cfg.n);
    } catch (const NoFormulaError& e) {
      throw MismatchError(e.what());
    }
  }
  switch (fmt) {
    case OutFormat::Text: {
      std::string text = "class: " + cls_name + "\ncount: " + count.str() + "\n";
      if (cfg.want_q) text += "rank-gf: " + gf.to_string() + "\n";
      return text;
    }
    case OutFormat::Csv: {
      std::string text = "n,colors,class,count";
      if (cfg.want_q) text += ",rank_gf";
      text += "\n" + std::to_string(cfg.n) + "," + s.to_string() + "," +
              cls_name + "," + count.str();
      if (cfg.want_q) text += "," + csv_quote(coeff_list(gf));
      return text + "\n";
    }
    case OutFormat::Json: {
      Json cert;
      cert["command"] = "formulas";
      cert["inputs"] = {{"n", cfg.n}, {"colors", s.to_string()}};
      cert["class"] = cls_name;
      cert["count"] = count.str();
      if (cfg.want_q) cert["rank_gf"] = qpoly_to_json(gf);
      cert["wall_time_ms"] = sw.ms();
      return json_to_string(cert);
    }
  }
  return {};
}

std::string read_payload(const std::string& in_path) {
  if (in_path.empty() || in_path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(in_path);
  if (!in) throw UsageError("cannot open input file: " + in_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_payload_json(const std::string& payload) {
  try {
    return Json::parse(payload);
  } catch (const std::exception& e) {
    throw UsageError(std::string("payload is not valid JSON: ") + e.what());
  }
}

StaircaseArray parse_yplus(const Json& j, ColorSet klass, const char* route) {
  StaircaseArray a = array_from_json(j);
  if (a.variant != ArrayVariant::Yplus)
    throw UsageError(std::string(route) + " expects a Yplus array");
  std::string why;
  if (!validate_array(a, klass, &why))
    throw UsageError(std::string(route) + ": payload is not a valid \"" +
                     klass.to_string() + "\" array (" + why + ")");
  return a;
}

DyckPath parse_dyck(const std::string& payload) {
  std::string trimmed = payload;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  size_t first = 0;
  while (first < trimmed.size() &&
         std::isspace(static_cast<unsigned char>(trimmed[first])))
    ++first;
  trimmed.erase(0, first);
  if (!trimmed.empty() && trimmed.front() == '"')
    return dyck_from_json(parse_payload_json(trimmed));
  DyckPath d{trimmed};
  std::string why;
  if (!is_dyck(d, &why)) throw UsageError("dyck path: " + why);
  return d;
}

int require_n(const BijectConfig& cfg, const char* why) {
  if (cfg.n >= 1) return cfg.n;
  throw UsageError(std::string("--n is required for ") + why);
}

std::string run_biject(const BijectConfig& cfg) {
  const std::string route = cfg.from + " -> " + cfg.to;
  if ((cfg.from == "asm" && cfg.to == "tsscpp") ||
      (cfg.from == "tsscpp" && cfg.to == "asm"))
    throw MismatchError(
        "refusing " + route +
        ": no explicit bijection between ASMs and TSSCPPs is known"
        " (open problem); route through yplus arrays to compare statistics");

  const std::string payload = read_payload(cfg.in_path);
  Json out;
  try {
    if (cfg.from == "asm" && cfg.to == "triangle") {
      out = triangle_to_json(asm_to_monotone(asm_from_json(parse_payload_json(payload))));
    } else if (cfg.from == "triangle" && cfg.to == "asm") {
      out = asm_to_json(monotone_to_asm(triangle_from_json(parse_payload_json(payload))));
    } else if (cfg.from == "asm" && cfg.to == "yplus") {
      out = array_to_json(asm_to_yplus(asm_from_json(parse_payload_json(payload))));
    } else if (cfg.from == "yplus" && cfg.to == "asm") {
      StaircaseArray a =
          parse_yplus(parse_payload_json(payload), ColorSet::from_string("bgoy"), "yplus -> asm");
      out = asm_to_json(yplus_to_asm(a));
    } else if (cfg.from == "triangle" && cfg.to == "yplus") {
      out = array_to_json(
          monotone_to_yplus(triangle_from_json(parse_payload_json(payload))));
    } else if (cfg.from == "yplus" && cfg.to == "triangle") {
      StaircaseArray a = parse_yplus(parse_payload_json(payload),
                                     ColorSet::from_string("bgoy"), "yplus -> triangle");
      out = triangle_to_json(yplus_to_monotone(a));
    } else if (cfg.from == "tsscpp" && cfg.to == "yplus") {
      PlanePartition pp = pp_from_json(parse_payload_json(payload));
      int rows = static_cast<int>(pp.heights.size());
      if (rows % 2 != 0) throw UsageError("tsscpp heights must be 2n x 2n");
      int n = rows / 2;
      std::string why;
      if (!is_tsscpp(pp, n, &why)) throw UsageError("tsscpp: " + why);
      out = array_to_json(tsscpp_to_yplus(pp, n));
    } else if (cfg.from == "yplus" && cfg.to == "tsscpp") {
      StaircaseArray a = parse_yplus(parse_payload_json(payload),
                                     ColorSet::from_string("rgoy"), "yplus -> tsscpp");
      out = pp_to_json(yplus_to_tsscpp(a));
    } else if (cfg.from == "tspp" && cfg.to == "ideal") {
      PlanePartition pp = pp_from_json(parse_payload_json(payload));
      int n = static_cast<int>(pp.heights.size()) + 1;
      std::string why;
      if (!is_tspp(pp, n, &why)) throw UsageError("tspp: " + why);
      out = ideal_to_json(tspp_to_ideal(pp, n));
    } else if (cfg.from == "ideal" && cfg.to == "tspp") {
      int n = require_n(cfg, "ideal -> tspp (the tetrahedron size)");
      ColoredPoset p = build_tetra(n);
      OrderIdeal ideal = ideal_from_json(parse_payload_json(payload), p.size());
      out = pp_to_json(ideal_to_tspp(ideal, n));
    } else if (cfg.from == "dyck" && cfg.to == "ideal") {
      DyckPath d = parse_dyck(payload);
      int n = static_cast<int>(d.steps.size()) / 2;
      if (cfg.n >= 1 && cfg.n != n)
        throw UsageError("--n disagrees with the path length (semilength " +
                         std::to_string(n) + ")");
      out = ideal_to_json(dyck_to_ideal(d, n));
    } else if (cfg.from == "ideal" && cfg.to == "dyck") {
      int n = require_n(cfg, "ideal -> dyck (the pyramid size)");
      int nbits = n * (n - 1) / 2;
      OrderIdeal ideal = ideal_from_json(parse_payload_json(payload), nbits);
      out = dyck_to_json(ideal_to_dyck(ideal, n));
    } else if (cfg.from == "tournament" && cfg.to == "yplus") {
      int n = require_n(cfg, "tournament -> yplus (the number of players)");
      Tournament t = tournament_from_json(parse_payload_json(payload), n);
      out = array_to_json(tournament_to_yplus(t));
    } else if (cfg.from == "yplus" && cfg.to == "tournament") {
      StaircaseArray a = parse_yplus(parse_payload_json(payload),
                                     ColorSet::from_string("rbg"), "yplus -> tournament");
      out = tournament_to_json(yplus_to_tournament(a));
    } else if (cfg.from == "ssyt" && cfg.to == "tournament-tableau") {
      StaircaseArray t = array_from_json(parse_payload_json(payload));
      if (t.variant != ArrayVariant::Y)
        throw UsageError("ssyt -> tournament-tableau expects a Y array");
      std::string why;
      if (!is_ssyt(t, &why)) throw UsageError("ssyt: " + why);
      out = tableau_to_json(sundquist(t));
    } else {
      throw UsageError(
          "unsupported route: " + route +
          "; supported: asm<->triangle<->yplus, tsscpp<->yplus, tspp<->ideal,"
          " dyck<->ideal, tournament<->yplus, ssyt->tournament-tableau");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return json_to_string(out);
}

std::string run_verify(const VerifyConfig& cfg, const Stopwatch& sw, int* exit_code) {
  OutFormat fmt = parse_format(cfg.format);
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  SuiteResult r;
  try {
    r = run_suite(cfg.suite, cfg.n_max);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  *exit_code = r.all_pass() ? 0 : 1;
  switch (fmt) {
    case OutFormat::Text: {
      std::string text;
      for (const CheckResult& c : r.checks) {
        std::string loc = c.name + " n=" + std::to_string(c.n);
        if (c.informational) {
          text += "[info] " + loc + ": " + (c.pass ? "agree" : "differ") + "\n";
        } else if (c.pass) {
          text += "[pass] " + loc + "\n";
        } else {
          text += "[FAIL] " + loc + "\n  computed: " + c.computed +
                  "\n  oracle:   " + c.oracle + "\n";
        }
      }
      text += r.suite + ": " + std::to_string(r.checks.size()) + " checks, " +
              std::to_string(r.failures()) + " failures (n-max " +
              std::to_string(r.n_max) + ")\n";
      if (const CheckResult* f = r.first_failure())
        text += "first failure: " + f->name + " n=" + std::to_string(f->n) + "\n";
      return text;
    }
    case OutFormat::Csv: {
      std::string text = "name,n,status,computed,oracle\n";
      for (const CheckResult& c : r.checks) {
        std::string status = c.informational ? (c.pass ? "info-agree" : "info-differ")
                                             : (c.pass ? "pass" : "fail");
        text += csv_quote(c.name) + "," + std::to_string(c.n) + "," + status +
                "," + csv_quote(c.computed) + "," + csv_quote(c.oracle) + "\n";
      }
      return text;
    }
    case OutFormat::Json: {
      Json cert;
      cert["command"] = "verify";
      cert["inputs"] = {{"suite", r.suite}, {"n_max", cfg.n_max},
                        {"n_max_effective", r.n_max}};
      Json checks = Json::array();
      for (const CheckResult& c : r.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["n"] = c.n;
        jc["computed"] = c.computed;
        jc["oracle"] = c.oracle;
        jc["pass"] = c.pass;
        if (c.informational) jc["informational"] = true;
        checks.push_back(std::move(jc));
      }
      cert["checks"] = std::move(checks);
      cert["checks_run"] = r.checks.size();
      cert["failures"] = r.failures();
      cert["pass"] = r.all_pass();
      if (const CheckResult* f = r.first_failure())
        cert["first_failure"] = {{"name", f->name}, {"n", f->n}};
      cert["wall_time_ms"] = sw.ms();
      return json_to_string(cert);
    }
  }
  return {};
}

void deliver(const std::string& text, const std::string& out_path,
             std::string* stdout_text) {
  if (out_path.empty()) {
    *stdout_text = text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + out_path);
  out << text;
  if (!out) throw UsageError("failed writing output file: " + out_path);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Stopwatch sw;
  CLI::App app{"Exact enumeration over the tetrahedral poset T_n:"
               " counts, rank generating functions, bijections, and"
               " machine-checked identities."};
  app.require_subcommand(1);

  CountConfig count_cfg;
  CLI::App* count_cmd = app.add_subcommand(
      "count", "Count the order ideals of T_n(S), exactly");
  count_cmd->add_option("--n", count_cfg.n, "poset size parameter")->required();
  count_cmd->add_option("--colors", count_cfg.colors,
                        "edge colors kept, letters from rbgoys")
      ->required();
  count_cmd->add_option("--trapezoid", count_cfg.trapezoid,
                        "cut the last K southwest-northeast diagonals");
  count_cmd->add_flag("--q", count_cfg.want_q, "also print the rank generating function");
  count_cmd->add_option("--format", count_cfg.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  count_cmd->add_option("--out", count_cfg.out_path, "write output to a file");

  EnumerateConfig enum_cfg;
  CLI::App* enum_cmd = app.add_subcommand(
      "enumerate", "List the order ideals of T_n(S) in lexicographic order");
  enum_cmd->add_option("--n", enum_cfg.n, "poset size parameter")->required();
  enum_cmd->add_option("--colors", enum_cfg.colors,
                       "edge colors kept, letters from rbgoys")
      ->required();
  enum_cmd->add_option("--trapezoid", enum_cfg.trapezoid,
                       "cut the last K southwest-northeast diagonals");
  enum_cmd->add_option("--emit", enum_cfg.emit, "ideals (JSON-lines) or poset")
      ->check(CLI::IsMember({"ideals", "poset"}));
  enum_cmd->add_option("--format", enum_cfg.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  enum_cmd->add_option("--out", enum_cfg.out_path, "write output to a file");

  RankGfConfig rank_cfg;
  CLI::App* rank_cmd = app.add_subcommand(
      "rankgf", "Rank generating function of J(T_n(S)) by enumeration");
  rank_cmd->add_option("--n", rank_cfg.n, "poset size parameter")->required();
  rank_cmd->add_option("--colors", rank_cfg.colors,
                       "admissible color set, letters from rbgoys")
      ->required();
  rank_cmd->add_option("--trapezoid", rank_cfg.trapezoid,
                       "cut the last K southwest-northeast diagonals");
  rank_cmd->add_option("--format", rank_cfg.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  rank_cmd->add_option("--out", rank_cfg.out_path, "write output to a file");

  FormulasConfig form_cfg;
  CLI::App* form_cmd = app.add_subcommand(
      "formulas", "Evaluate the closed product formula for a color class");
  form_cmd->add_option("--n", form_cfg.n, "poset size parameter")->required();
  form_cmd->add_option("--colors", form_cfg.colors,
                       "admissible color set, letters from rbgoys")
      ->required();
  form_cmd->add_flag("--q", form_cfg.want_q,
                     "also print the rank generating function formula");
  form_cmd->add_option("--format", form_cfg.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  form_cmd->add_option("--out", form_cfg.out_path, "write output to a file");

  BijectConfig bij_cfg;
  CLI::App* bij_cmd = app.add_subcommand(
      "biject", "Convert one combinatorial object into another");
  bij_cmd->add_option("--from", bij_cfg.from,
                      "asm, triangle, yplus, tsscpp, tspp, ideal, dyck,"
                      " tournament, or ssyt")
      ->required();
  bij_cmd->add_option("--to", bij_cfg.to,
                      "asm, triangle, yplus, tsscpp, tspp, ideal, dyck,"
                      " tournament, or tournament-tableau")
      ->required();
  bij_cmd->add_option("--n", bij_cfg.n,
                      "size parameter, required when the payload cannot carry it");
  bij_cmd->add_option("--in", bij_cfg.in_path, "payload file (default: stdin)");
  bij_cmd->add_option("--out", bij_cfg.out_path, "write output to a file");

  VerifyConfig ver_cfg;
  CLI::App* ver_cmd = app.add_subcommand(
      "verify", "Re-prove a family of identities by exhaustive comparison");
  ver_cmd->add_option("--suite", ver_cfg.suite,
                      "formulas, bijections, expansions, or trapezoid")
      ->required()
      ->check(CLI::IsMember({"formulas", "bijections", "expansions", "trapezoid"}));
  ver_cmd->add_option("--n-max", ver_cfg.n_max, "largest n checked (default 4)");
  ver_cmd->add_option("--format", ver_cfg.format, "text, json, or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  ver_cmd->add_option("--out", ver_cfg.out_path, "write output to a file");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tetraposet");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }

  CliResult result;
  try {
    std::string text;
    std::string out_path;
    if (count_cmd->parsed()) {
      text = run_count(count_cfg, sw);
      out_path = count_cfg.out_path;
    } else if (enum_cmd->parsed()) {
      text = run_enumerate(enum_cfg);
      out_path = enum_cfg.out_path;
    } else if (rank_cmd->parsed()) {
      text = run_rankgf(rank_cfg, sw);
      out_path = rank_cfg.out_path;
    } else if (form_cmd->parsed()) {
      text = run_formulas(form_cfg, sw);
      out_path = form_cfg.out_path;
    } else if (bij_cmd->parsed()) {
      text = run_biject(bij_cfg);
      out_path = bij_cfg.out_path;
    } else if (ver_cmd->parsed()) {
      text = run_verify(ver_cfg, sw, &result.exit_code);
      out_path = ver_cfg.out_path;
    }
    deliver(text, out_path, &result.out);
  } catch (const UsageError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const MismatchError& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace tetraposet
