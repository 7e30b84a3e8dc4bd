// selzeta: evaluate the Selberg/Dirichlet gamma-factor zoo, run the
// verification suites, and emit divisor catalogs and scattering censuses.
//
//   selzeta eval gamma2 --s 4,0
//   selzeta verify --suite all
//   selzeta catalog --which higher --l 1 --group g0:1 --range -12..1
//   selzeta scattering --family g0 --N 6
//   selzeta zeros --count 100 --out zeros.txt

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "selzeta/verify.hpp"

using namespace selzeta;
using nlohmann::json;

namespace {

struct EvalFlags {
  std::string s = "0,0";
  std::string r = "0,0";
  double u = 0.0;
  double a = 1.0;
  long l = 1;
  std::string group;
  std::string chi;
  std::optional<long> kappa0;
  std::string spectral;  // spectral/zero list path for theta
  long prec = 192;
  bool as_json = false;
};

Cplx parse_cplx(const std::string& txt, mpfr_prec_t wp) {
  auto comma = txt.find(',');
  if (comma == std::string::npos)
    return Cplx(Real::from_string(txt.c_str(), wp), Real(wp));
  return Cplx(Real::from_string(txt.substr(0, comma).c_str(), wp),
              Real::from_string(txt.substr(comma + 1).c_str(), wp));
}

GroupFamily parse_family(const std::string& f) {
  if (f == "g0" || f == "gamma0") return GroupFamily::Gamma0;
  if (f == "g1" || f == "gamma1") return GroupFamily::Gamma1;
  if (f == "gf" || f == "gamma" || f == "full") return GroupFamily::GammaFull;
  throw CLI::ValidationError("family must be one of g0, g1, gf");
}

GroupData parse_group(const std::string& spec_txt, std::optional<long> kappa0,
                      const PrecisionContext& ctx) {
  auto colon = spec_txt.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--group expects family:N, e.g. g0:1");
  GroupFamily fam = parse_family(spec_txt.substr(0, colon));
  long N = std::stol(spec_txt.substr(colon + 1));
  return group_data(fam, N, kappa0, ctx);
}

DirichletCharacter parse_chi(const std::string& txt) {
  if (txt.empty()) return DirichletCharacter(1);
  auto colon = txt.find(':');
  long q = std::stol(colon == std::string::npos ? txt : txt.substr(0, colon));
  long idx = colon == std::string::npos ? 0 : std::stol(txt.substr(colon + 1));
  auto chars = enumerate_characters(q);
  if (idx < 0 || idx >= static_cast<long>(chars.size()))
    throw CLI::ValidationError("--chi index out of range (phi(q) = " +
                               std::to_string(chars.size()) + ")");
  return chars[static_cast<size_t>(idx)];
}

Rat parse_rat(const std::string& txt) {
  auto slash = txt.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(txt));
  return Rat(std::stoll(txt.substr(0, slash)), std::stoll(txt.substr(slash + 1)));
}

size_t out_digits(long prec_bits) {
  return static_cast<size_t>(static_cast<double>(prec_bits) * 0.30103);
}

void print_value(const Cplx& v, long prec_bits, bool as_json, double tail_log2 = 0,
                 bool has_tail = false) {
  size_t d = out_digits(prec_bits);
  if (as_json) {
    json j;
    j["re"] = v.re.str(d);
    j["im"] = v.im.str(d);
    j["prec_bits"] = prec_bits;
    j["tail_bounds"] = json::object();
    if (has_tail) j["tail_bounds"]["log2"] = tail_log2;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << v.str(d) << "\n";
  }
}

int cmd_eval(const std::string& fn, const EvalFlags& f) {
  PrecisionContext ctx(f.prec);
  mpfr_prec_t wp = ctx.wprec();
  Cplx s = parse_cplx(f.s, wp);
  Cplx r = parse_cplx(f.r, wp);

  auto group = [&] { return parse_group(f.group, f.kappa0, ctx); };

  Cplx v(wp);
  bool has_tail = false;
  double tail = 0;
  if (fn == "gamma") v = gamma_fn(s, wp);
  else if (fn == "loggamma") v = log_gamma(s, wp);
  else if (fn == "gamma2") v = gamma2_fn(s, wp);
  else if (fn == "gamma3") v = gamma3_fn(s, wp);
  else if (fn == "digamma") v = digamma(s, wp);
  else if (fn == "zeta") v = riemann_zeta(s, wp);
  else if (fn == "hurwitz") v = hurwitz_zeta(s, Real::of(f.a, wp), wp);
  else if (fn == "lfun") v = dirichlet_l(s, parse_chi(f.chi), wp);
  else if (fn == "xi") v = xi_complete(s, parse_chi(f.chi), wp);
  else if (fn == "root-number") v = root_number(parse_chi(f.chi), wp);
  else if (fn == "scattering-det") v = scattering_det(s, group(), ctx);
  else if (fn == "xi-i") v = xi_I(s, group(), ctx);
  else if (fn == "xi-ell") v = xi_ell(s, group(), ctx);
  else if (fn == "xi-par") v = xi_par(s, group(), ctx);
  else if (fn == "factor-f") v = higher_factor(HigherFactorKind::F, s, f.l, ctx);
  else if (fn == "factor-g") v = higher_factor(HigherFactorKind::G, s, f.l, ctx);
  else if (fn == "factor-h") v = higher_factor(HigherFactorKind::H, s, f.l, ctx);
  else if (fn == "factor-i") v = higher_factor(HigherFactorKind::I, s, f.l, ctx);
  else if (fn == "j") v = j_l(s, f.l, wp);
  else if (fn == "phi-s") v = phi_s(s, r, f.l, wp);
  else if (fn == "testfun-g") v = test_g(Real::of(f.u, wp), s, f.l, wp);
  else if (fn == "l-linf") v = l_linf(s, parse_chi(f.chi), f.l, wp);
  else if (fn == "xi-linf") v = xi_linf_L(s, parse_chi(f.chi), f.l, wp);
  else if (fn == "xi-linf-i" || fn == "xi-linf-ell" || fn == "xi-linf-par") {
    XiPart part = fn == "xi-linf-i"     ? XiPart::I
                  : fn == "xi-linf-ell" ? XiPart::Ell
                                        : XiPart::Par;
    v = xi_linf_factor(part, s, f.l, group(), ctx);
  } else if (fn == "theta") {
    SpectralList spec;
    if (!f.spectral.empty()) spec = load_spectral_list(f.spectral, wp);
    auto tv = theta_linf(s, f.l, spec, ctx);
    v = tv.value;
    has_tail = true;
    tail = tv.log2_tail;
  } else if (fn == "theta-l") {
    VerifyOptions vo;
    ZeroList zl = load_zero_list(
        f.spectral.empty() ? vo.data_dir + "/zeta_zeros_100.txt" : f.spectral, wp);
    auto tv = theta_linf_L(s, zl, f.l, ctx);
    v = tv.value;
    has_tail = true;
    tail = tv.log2_tail;
  } else {
    std::cerr << "unknown function: " << fn << "\n";
    return 2;
  }
  print_value(v, f.prec, f.as_json, tail, has_tail);
  return 0;
}

json report_json(const Report& rep) {
  json j;
  j["suite"] = rep.suite;
  j["exit_code"] = rep.exit_code();
  j["cases"] = json::array();
  for (const auto& c : rep.cases) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    if (!c.note.empty()) cj["note"] = c.note;
    j["cases"].push_back(cj);
  }
  return j;
}

}  // namespace

namespace {

// Flat key=value config support: --config FILE loads defaults for the
// invoked subcommand; flags given on the command line win. Expanded before
// CLI11 sees the arguments, so every subcommand option is configurable.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw selzeta::DomainError("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      size_t e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) { given = true; break; }
    if (given) continue;
    args.push_back(flag);
    if (!val.empty()) args.push_back(val);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"higher Selberg / Dirichlet gamma-factor numerics"};
  app.require_subcommand(1);

  // ---- eval ----
  EvalFlags ef;
  std::string eval_fn;
  auto* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("function", eval_fn,
                   "gamma|gamma2|gamma3|digamma|zeta|hurwitz|lfun|xi|root-number|"
                   "scattering-det|xi-i|xi-ell|xi-par|factor-f|factor-g|factor-h|"
                   "factor-i|j|phi-s|testfun-g|l-linf|xi-linf|xi-linf-i|xi-linf-ell|"
                   "xi-linf-par|theta|theta-l")
      ->required();
  eval->add_option("--s", ef.s, "complex argument re,im");
  eval->add_option("--r", ef.r, "second complex argument re,im");
  eval->add_option("--u", ef.u, "real argument for testfun-g");
  eval->add_option("--a", ef.a, "Hurwitz shift a > 0");
  eval->add_option("--l", ef.l, "ladder step l >= 1");
  eval->add_option("--group", ef.group, "family:N, e.g. g0:1");
  eval->add_option("--chi", ef.chi, "character q:index");
  long eval_kappa0 = 0;
  auto* k0opt = eval->add_option("--kappa0", eval_kappa0, "kappa0 override");
  eval->add_option("--spectral", ef.spectral, "spectral/zero list path for theta");
  eval->add_option("--prec", ef.prec, "precision in bits (default 192)");
  eval->add_flag("--json", ef.as_json, "JSON output");
  std::string cfg_sink;
  eval->add_option("--config", cfg_sink, "flat key=value defaults; flags override");

  // ---- verify ----
  std::string suite;
  long verify_l = 0;
  VerifyOptions vopt;
  long verify_prec = 192;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--l", verify_l, "restrict reflection suite to one l");
  verify->add_option("--seed", vopt.seed, "sample seed");
  verify->add_option("--prec", verify_prec, "precision in bits");
  verify->add_option("--data", vopt.data_dir, "data directory");
  verify->add_option("--prime-cut", vopt.weil_prime_cut, "prime-power bound for weil");
  verify->add_flag("--json", verify_json, "JSON report");
  verify->add_option("--config", cfg_sink, "flat key=value defaults; flags override");

  // ---- catalog ----
  std::string which = "selberg", cat_group = "g0:1", range = "-40..1";
  long cat_l = 1;
  std::optional<long> cat_kappa0;
  long cat_k0_val = 0;
  bool cat_json = false;
  long cat_prec = 192;
  auto* catalog = app.add_subcommand("catalog", "emit a divisor catalog");
  catalog->add_option("--which", which, "selberg|higher");
  catalog->add_option("--l", cat_l, "ladder step for higher");
  catalog->add_option("--group", cat_group, "family:N");
  auto* ck0 = catalog->add_option("--kappa0", cat_k0_val, "kappa0 override");
  catalog->add_option("--range", range, "a..b (rationals allowed, e.g. -40..1)");
  catalog->add_flag("--json", cat_json, "JSON output");
  catalog->add_option("--prec", cat_prec, "precision in bits");
  catalog->add_option("--config", cfg_sink, "flat key=value defaults; flags override");

  // ---- scattering ----
  std::string sc_family = "g0";
  long sc_N = 1;
  bool sc_json = false;
  auto* scattering = app.add_subcommand("scattering", "scattering census for a group");
  scattering->add_option("--family", sc_family, "g0|g1|gf");
  scattering->add_option("--N", sc_N, "level")->required();
  scattering->add_flag("--json", sc_json, "JSON output");
  scattering->add_option("--config", cfg_sink, "flat key=value defaults; flags override");

  // ---- zeros ----
  int z_count = 100;
  double z_tmax = 260.0;
  std::string z_out;
  auto* zeros = app.add_subcommand("zeros", "regenerate zeta zero ordinates");
  zeros->add_option("--count", z_count, "number of zeros");
  zeros->add_option("--tmax", z_tmax, "scan ceiling");
  zeros->add_option("--out", z_out, "output file (stdout if omitted)");

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 vector parse order
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const MathError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      if (k0opt->count()) ef.kappa0 = eval_kappa0;
      return cmd_eval(eval_fn, ef);
    }
    if (*verify) {
      auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      vopt.ctx = PrecisionContext(verify_prec);
      Report rep = (suite == "reflection" && verify_l)
                       ? verify_reflection(vopt, verify_l)
                       : run_suite(suite, vopt);
      if (verify_json)
        std::cout << report_json(rep).dump(2) << "\n";
      else
        std::cout << rep.text();
      return rep.exit_code();
    }
    if (*catalog) {
      PrecisionContext ctx(cat_prec);
      if (ck0->count()) cat_kappa0 = cat_k0_val;
      auto dots = range.find("..");
      if (dots == std::string::npos)
        throw CLI::ValidationError("--range expects a..b");
      Rat lo = parse_rat(range.substr(0, dots));
      Rat hi = parse_rat(range.substr(dots + 2));
      GroupData g = parse_group(cat_group, cat_kappa0, ctx);
      std::vector<DivisorEntry> cat = which == "selberg"
                                          ? catalog_selberg(g, lo, hi)
                                          : catalog_higher(g, cat_l, lo, hi);
      if (cat_json) {
        json j = json::array();
        for (const auto& e : cat)
          j.push_back({{"location", e.location_str()},
                       {"order", e.order},
                       {"breakdown", e.breakdown}});
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "location,order,breakdown\n";
        for (const auto& e : cat)
          std::cout << e.location_str() << "," << e.order << ",\"" << e.breakdown
                    << "\"\n";
      }
      return 0;
    }
    if (*scattering) {
      PrecisionContext ctx;
      GroupFamily fam = parse_family(sc_family);
      auto pairs = enumerate_pairs(fam, sc_N);
      auto g = group_data(fam, sc_N, std::nullopt, ctx);
      if (sc_json) {
        json j;
        j["pairs"] = json::array();
        for (const auto& p : pairs)
          j["pairs"].push_back({{"q1", p.q1},
                                {"q2", p.q2},
                                {"m1", p.m1},
                                {"m2", p.m2},
                                {"conductor", p.combined.conductor()}});
        j["kappa"] = g.kappa;
        if (g.kappa0)
          j["kappa0"] = *g.kappa0;
        else
          j["kappa0"] = "unknown";
        j["A"] = g.a_exact.get_str();
        j["A_decimal"] = g.a_const.str(20);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "q1,q2,m1,m2,conductor\n";
        for (const auto& p : pairs)
          std::cout << p.q1 << "," << p.q2 << "," << p.m1 << "," << p.m2 << ","
                    << p.combined.conductor() << "\n";
        std::cout << "kappa=" << g.kappa << "\n";
        std::cout << "kappa0=" << (g.kappa0 ? std::to_string(*g.kappa0) : "unknown")
                  << "\n";
        std::cout << "A=" << g.a_exact.get_str() << " (" << g.a_const.str(20) << ")\n";
      }
      return 0;
    }
    if (*zeros) {
      auto zs = zeta_zero_ordinates(z_count, z_tmax);
      FILE* out = z_out.empty() ? stdout : std::fopen(z_out.c_str(), "w");
      if (!out) throw DomainError("cannot open " + z_out);
      std::fprintf(out, "# ordinates t_n of the first %d nontrivial zeros of zeta\n",
                   z_count);
      std::fprintf(out, "# rho_n = 1/2 + i t_n, 12 decimal digits\n");
      for (auto& t : zs) {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.12Rf", t.raw());
        std::fprintf(out, "%s\n", s);
        mpfr_free_str(s);
      }
      if (out != stdout) std::fclose(out);
      return 0;
    }
  } catch (const PoleError& e) {
    std::cerr << "PoleError order " << e.order << ": " << e.what() << "\n";
    return 3;
  } catch (const PoleAtOne& e) {
    std::cerr << "PoleAtOne: " << e.what() << "\n";
    return 3;
  } catch (const MissingKappa0& e) {
    std::cerr << "MissingKappa0: " << e.what() << " (pass --kappa0)\n";
    return 3;
  } catch (const MathError& e) {
    std::cerr << "MathError: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
