#include "carlitz_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "carlitz/element_io.hpp"
#include "carlitz/errors.hpp"
#include "carlitz/gkdim.hpp"
#include "carlitz/place.hpp"
#include "carlitz/special.hpp"
#include "carlitz_cli/sweeps.hpp"

namespace carlitz::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

nlohmann::json field_json(const Field& f) { return {{"p", f.p()}, {"nu", f.nu()}, {"q", f.q()}}; }

struct ComputeArgs {
  std::string what;
  std::uint32_t i = 0, k = 0, m = 0, T = 4, cap = 0;
  std::vector<std::uint32_t> a, b;
};

int cmd_compute(const CliConfig& cfg, const ComputeArgs& args, const CLI::App& sub, std::ostream& out) {
  const Field& f = Field::get(cfg.p, cfg.nu);
  auto need = [&](const char* opt) {
    if (sub.count(opt) == 0) throw UsageError(std::string("compute ") + args.what + " requires " + opt);
  };
  nlohmann::json jargs = nlohmann::json::object();
  nlohmann::json value;
  std::string text;
  const std::string& w = args.what;
  if (w == "factorial" || w == "lfac" || w == "bracket") {
    need("--i");
    jargs["i"] = args.i;
    const PerfectRational r = w == "factorial" ? dfac(f, args.i) : w == "lfac" ? lfac(f, args.i) : bracket(f, args.i);
    value = to_json(r);
    text = to_text(r);
  } else if (w == "binomK") {
    need("--k");
    need("--m");
    jargs["k"] = args.k;
    jargs["m"] = args.m;
    const PerfectRational r = binomK(f, args.k, args.m);
    value = to_json(r);
    text = to_text(r);
  } else if (w == "carlitz") {
    LinFun g(f, 0);
    if (sub.count("--k") > 0) {
      jargs["k"] = args.k;
      g = carlitz_f(f, args.k);
    } else {
      jargs["T"] = args.T;
      g = carlitz_module_trunc(f, args.T).body;
    }
    value = to_json(g);
    text = to_text(g);
  } else {
    jargs["a"] = args.a;
    jargs["b"] = args.b;
    std::optional<std::uint32_t> cap;
    if (sub.count("--cap") > 0) {
      cap = args.cap;
      jargs["cap"] = args.cap;
    }
    const LinFun g = thakur_hyp(f, args.a, args.b, cap);
    value = to_json(g);
    text = to_text(g);
  }

  if (cfg.format == "json") {
    nlohmann::json j = field_json(f);
    j["what"] = w;
    j["args"] = jargs;
    j["value"] = value;
    j["text"] = text;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::vector<std::string> kv;
    for (const auto& [key, v] : jargs.items()) kv.push_back(key + "=" + v.dump());
    out << "what,q,args,value\n"
        << w << "," << f.q() << "," << csv_field(join(kv, ";")) << "," << csv_field(text) << "\n";
  } else {
    out << text << "\n";
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string which;
  std::uint32_t k_max = 0, d_max = 3, T = 8, pairs = 20, degree = 3, p_max = 4, elements = 1000, probes = 100;
  bool perturb = false;
};

int cmd_verify(const CliConfig& cfg, VerifyArgs args, const CLI::App& sub, std::ostream& out) {
  const Field& f = Field::get(cfg.p, cfg.nu);
  const std::string& w = args.which;
  if (sub.count("--kmax") == 0) args.k_max = w == "vandermonde" ? 6 : w == "kbinom" ? 5 : 8;
  SweepResult r;
  if (w == "pascal") {
    r = sweep_pascal(f, args.k_max, args.perturb, cfg.jobs);
  } else if (w == "vandermonde") {
    r = sweep_vandermonde(f, args.k_max, args.perturb, cfg.jobs);
  } else if (w == "kbinom") {
    r = sweep_kbinom(f, args.k_max, args.pairs, args.degree, cfg.seed, args.perturb, cfg.jobs);
  } else if (w == "pde") {
    if (args.T < 2) throw UsageError("verify pde requires --T >= 2");
    r = sweep_pde(f, args.T, args.perturb);
  } else if (w == "contiguous") {
    r = sweep_contiguous(f, args.p_max, args.perturb, cfg.jobs);
  } else if (w == "places") {
    r = sweep_places(f, args.k_max, args.d_max, args.perturb, cfg.jobs);
  } else {
    RingSweepOptions ro;
    ro.elements = args.elements;
    ro.probes = args.probes;
    ro.max_degree = args.degree;
    ro.probe_bound = args.degree + 1;
    ro.seed = cfg.seed;
    r = sweep_ring(f, ro, args.perturb, cfg.jobs);
  }

  if (cfg.format == "json") {
    nlohmann::json j = to_json(r);
    j.update(field_json(f));
    j["perturb"] = args.perturb;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "check,q,checks,pass,failures\n"
        << r.name << "," << r.q << "," << r.checks << "," << (r.ok() ? "true" : "false") << ","
        << csv_field(join(r.failures, ";")) << "\n";
  } else {
    out << r.name << " q=" << r.q << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
        << r.failures.size() << " failures)\n";
    for (const auto& s : r.failures) out << "  " << s << "\n";
  }
  return r.ok() ? kExitPass : kExitVerifyFailed;
}

struct GkArgs {
  std::string function;
  std::string spec;
  std::uint32_t T = 10, j_max = 5;
};

int cmd_gkdim(const CliConfig& cfg, const GkArgs& args, std::ostream& out) {
  if (args.j_max + 2 > args.T) throw UsageError("gkdim requires --jmax <= T - 2");
  const Field& f = Field::get(cfg.p, cfg.nu);
  const GkFunction g = gk_function(f, args.function, args.T, args.spec);
  GkOptions opts;
  opts.rank.mode = cfg.rank_mode;
  opts.rank.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  opts.annihilators = g.annihilators;
  FiltrationReport rep = gk_report(g.series, args.j_max, opts);
  if (args.function == "sum")
    rep.warnings.push_back("non-sparseness of the sum is not confirmed at finite truncation");

  if (cfg.format == "json") {
    nlohmann::json j = to_json(rep);
    j.update(field_json(f));
    j["function"] = args.function;
    j["jmax"] = args.j_max;
    if (args.function == "poly") j["spec"] = args.spec.empty() ? "s^q" : args.spec;
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "j,dim,generators,coordinates,saturated,method,certified\n";
    for (const auto& lv : rep.levels)
      out << lv.j << "," << lv.dim << "," << lv.generators << "," << lv.coordinates << ","
          << (lv.saturated ? "true" : "false") << "," << lv.rank.method << ","
          << (lv.rank.certified ? "true" : "false") << "\n";
  } else {
    out << "function " << args.function << " q=" << f.q() << " n=" << rep.n << " T=" << rep.truncation << "\n";
    for (const auto& lv : rep.levels)
      out << "  j=" << lv.j << " dim=" << lv.dim << (lv.saturated ? " (saturated)" : "") << " [" << lv.rank.method
          << "]\n";
    out << "classification " << rep.classification;
    if (rep.degree) out << " degree " << *rep.degree << " multiplicity " << *rep.multiplicity;
    out << "\n";
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
  }
  return rep.classification == "unstable" ? kExitUnstable : kExitPass;
}

struct TableArgs {
  std::string what;
  std::uint32_t k_max = 8, d_max = 3;
};

int cmd_table(const CliConfig& cfg, const TableArgs& args, std::ostream& out) {
  const Field& f = Field::get(cfg.p, cfg.nu);
  std::vector<Place> places;
  for (std::uint32_t d = 1; d <= args.d_max; ++d)
    for (auto& pl : irreducibles(f, d)) places.push_back(std::move(pl));

  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::vector<std::string>> flat;
  for (std::uint32_t k = 0; k <= args.k_max; ++k) {
    for (std::uint32_t m = 0; m <= k; ++m) {
      const PerfectRational value = binomK(f, k, m);
      nlohmann::json vals = nlohmann::json::array();
      std::vector<std::string> vtext;
      for (const auto& pl : places) {
        const std::optional<QExp> v = valuation(value, pl);
        nlohmann::json vj = !v ? nlohmann::json(nullptr)
                            : v->is_integer() ? nlohmann::json(v->num())
                                              : nlohmann::json(v->to_string());
        vtext.push_back(pl.to_string() + ":" + (vj.is_string() ? vj.get<std::string>() : vj.dump()));
        vals.push_back({pl.to_string(), vj});
      }
      rows.push_back({{"k", k}, {"m", m}, {"value", to_json(value)}, {"valuations", vals}});
      flat.push_back({std::to_string(k), std::to_string(m), to_text(value), join(vtext, ";")});
    }
  }

  if (cfg.format == "json") {
    out << rows.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "k,m,value,valuations\n";
    for (const auto& r : flat) out << r[0] << "," << r[1] << "," << csv_field(r[2]) << "," << csv_field(r[3]) << "\n";
  } else {
    for (const auto& r : flat) out << r[0] << " " << r[1] << " " << r[2] << " | " << r[3] << "\n";
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Carlitz ring over F_q(x)", "carlitz"};
  app.require_subcommand(1, 1);

  CliConfig cfg;
  std::string rank_mode = "exact";
  app.add_option("--p", cfg.p, "Field characteristic (prime)")->check(CLI::Range(2u, 251u));
  app.add_option("--nu", cfg.nu, "Extension degree, q = p^nu")->check(CLI::Range(1u, 8u));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "Write the report to this file");
  app.add_option("--seed", cfg.seed, "Seed for randomized sweeps and rank evaluation");
  app.add_option("--rank-mode", rank_mode, "Rank certification")->check(CLI::IsMember({"exact", "probabilistic"}));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Print a special value or polynomial");
  compute->add_option("what", ca.what)
      ->required()
      ->check(CLI::IsMember({"factorial", "lfac", "bracket", "binomK", "carlitz", "hyp"}));
  compute->add_option("--i", ca.i, "Index for factorial, lfac, bracket")->check(CLI::Range(0u, 64u));
  compute->add_option("--k", ca.k, "k for binomK; index of f_k for carlitz")->check(CLI::Range(0u, 64u));
  compute->add_option("--m", ca.m, "m for binomK")->check(CLI::Range(0u, 64u));
  compute->add_option("--T", ca.T, "Truncation of the Carlitz module series")->check(CLI::Range(0u, 24u));
  compute->add_option("--a", ca.a, "Upper parameters of hyp")->delimiter(',');
  compute->add_option("--b", ca.b, "Lower parameters of hyp")->delimiter(',');
  compute->add_option("--cap", ca.cap, "Largest m for hyp");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter range");
  verify->add_option("which", va.which)
      ->required()
      ->check(CLI::IsMember({"pascal", "vandermonde", "kbinom", "pde", "contiguous", "places", "ring"}));
  verify->add_option("--kmax", va.k_max, "Largest k (default 8; 6 for vandermonde, 5 for kbinom)")
      ->check(CLI::Range(1u, 16u));
  verify->add_option("--dmax", va.d_max, "Largest place degree")->check(CLI::Range(1u, 6u));
  verify->add_option("--T", va.T, "Series truncation for pde")->check(CLI::Range(2u, 16u));
  verify->add_option("--pairs", va.pairs, "Random (s, t) pairs for kbinom")->check(CLI::Range(1u, 1000u));
  verify->add_option("--degree", va.degree, "Degree bound of random inputs")->check(CLI::Range(1u, 6u));
  verify->add_option("--pmax", va.p_max, "Largest hypergeometric parameter")->check(CLI::Range(1u, 8u));
  verify->add_option("--elements", va.elements, "Random ring elements")->check(CLI::Range(1u, 100000u));
  verify->add_option("--probes", va.probes, "Random nonzero elements to probe")->check(CLI::Range(0u, 100000u));
  verify->add_flag("--perturb", va.perturb, "Negative control: perturb every check so it must fail");

  GkArgs ga;
  auto* gkdim = app.add_subcommand("gkdim", "Filtration dimensions and Hilbert fit of A f");
  gkdim->add_option("--function", ga.function, "Function")
      ->required()
      ->check(CLI::IsMember({"carlitz", "binom", "hyp", "diag", "sum", "poly"}));
  gkdim->add_option("--spec", ga.spec, "F_q-linear polynomial in s for poly (default s^q)");
  gkdim->add_option("--T", ga.T, "Truncation order")->check(CLI::Range(2u, 24u));
  gkdim->add_option("--jmax", ga.j_max, "Largest filtration level")->check(CLI::Range(1u, 8u));

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Emit K-binomial coefficients with their valuations");
  table->add_option("what", ta.what)->required()->check(CLI::IsMember({"binomK"}));
  table->add_option("--kmax", ta.k_max, "Largest k")->check(CLI::Range(1u, 16u));
  table->add_option("--dmax", ta.d_max, "Largest place degree")->check(CLI::Range(1u, 6u));

  for (auto* sub : {compute, verify, gkdim, table}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  cfg.rank_mode = rank_mode == "exact" ? RankMode::kExact : RankMode::kProbabilistic;

  std::ostringstream report;
  int code = kExitPass;
  try {
    if (compute->parsed()) {
      code = cmd_compute(cfg, ca, *compute, report);
    } else if (verify->parsed()) {
      code = cmd_verify(cfg, va, *verify, report);
    } else if (gkdim->parsed()) {
      code = cmd_gkdim(cfg, ga, report);
    } else {
      code = cmd_table(cfg, ta, report);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (cfg.out.empty()) {
    out << report.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file || !(file << report.str())) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace carlitz::cli
