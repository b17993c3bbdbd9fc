// qonsager: batch verification driver.
//
//   qonsager verify identities [--max-index N] [--mode symbolic|numeric --q Q]
//   qonsager onsager lusztig --expr FILE [--direction fwd|inv]
//   qonsager onsager higher-dg [--r R] [--method rewrite|certified|both]
//   qonsager onsager homcheck [--w1 W --w2 W]
//   qonsager current verify [--kmax K]
//   qonsager repn ssum|conjugation|higher-dg|d1|import|twist ...
//
// Exit codes: 0 pass, 1 fail, 2 inconclusive only, 64 usage, 74 I/O.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qons/currentalg.hpp"
#include "qons/identities.hpp"
#include "qons/onsager.hpp"
#include "qons/repn.hpp"

using namespace qons;

namespace {

constexpr int kUsage = 64;
constexpr int kIo = 74;

struct Options {
  std::string mode;
  std::string q = "2", a = "3", b = "5";
  int d = 2, r = 3, kmax = 3, max_index = 3, trials = 20;
  unsigned seed = 1;
  unsigned threads = 0;
  std::string out, expr, direction = "fwd", method = "both", w1, w2, in;
  bool json = false;
};

Rational rat(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error(Errc::InvalidParams, flag + ": " + e.what());
  }
}

Direction parse_direction(const std::string& s) {
  if (s == "fwd" || s == "forward") return Direction::Forward;
  if (s == "inv" || s == "inverse") return Direction::Inverse;
  throw Error(Errc::InvalidParams, "--direction must be fwd or inv");
}

CoefficientMode coefficient_mode(const Options& o, const std::string& fallback) {
  std::string m = o.mode.empty() ? fallback : o.mode;
  if (m == "symbolic") return SymbolicQ{};
  if (m == "numeric") return NumericQ(rat("--q", o.q));
  throw Error(Errc::InvalidParams, "--mode must be symbolic or numeric");
}

void positive(const char* flag, int v, int lo = 1) {
  if (v < lo) throw Error(Errc::InvalidParams, std::string(flag) + " must be >= " + std::to_string(lo));
}

// Writes JSON to --out and/or stdout; text otherwise.
int emit(const Options& o, const Json& j, const std::string& text, int code) {
  std::string dumped = j.dump(2) + "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f || !(f << dumped)) {
      std::cerr << "qonsager: cannot write " << o.out << "\n";
      return kIo;
    }
  }
  std::cout << (o.json ? dumped : text);
  return code;
}

int emit(const Options& o, const Report& rep) { return emit(o, rep.to_json(), rep.to_text(), rep.exit_code()); }

Json mode_json(const CoefficientMode& m) {
  return std::visit(
      [](const auto& f) -> Json {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, NumericQ>) return Json{{"mode", "numeric"}, {"q", to_string(f.q0())}};
        else return Json{{"mode", "symbolic"}};
      },
      m);
}

// ---- verify ----

int verify_identities(const Options& o) {
  positive("--max-index", o.max_index, 0);
  auto mode = coefficient_mode(o, "symbolic");
  Report rep;
  rep.suite = "verify identities";
  rep.config = mode_json(mode);
  rep.config["maxIndex"] = o.max_index;
  rep.add(run_identity_suite(o.max_index, mode, o.threads));
  return emit(o, rep);
}

// ---- onsager ----

SymPoly read_expression(const std::string& path, const OnsagerContext& cx) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
  SymPoly p = sympoly_from_json(j);
  for (const auto& n : p.alphabet()->names())
    if (n != "A" && n != "B") throw Error(Errc::ParseError, path + ": generator " + n + " is not A or B");
  return substitute(p, {{"A", cx.A()}, {"B", cx.B()}});
}

int onsager_lusztig(const Options& o) {
  if (o.expr.empty()) throw Error(Errc::InvalidParams, "--expr is required");
  Direction dir = parse_direction(o.direction);
  OnsagerContext cx;
  SymPoly x = read_expression(o.expr, cx);
  int bound = cx.standard_bound(x);
  SymPoly raw = cx.lusztig_raw(x, dir, bound);
  SymPoly nf = cx.normal_form(raw);
  Json j{{"engine", kEngineVersion},
         {"command", "onsager lusztig"},
         {"direction", direction_name(dir)},
         {"input", to_json(x)},
         {"bound", bound},
         {"image", to_json(raw)},
         {"normalForm", to_json(nf)}};
  std::string text = std::string(dir == Direction::Forward ? "L" : "L^-1") + "(" + x.to_string() + ") = " +
                     raw.to_string() + "\nnormal form: " + nf.to_string() + "\n";
  return emit(o, j, text, 0);
}

int onsager_higher_dg(const Options& o) {
  positive("--r", o.r);
  std::vector<HigherDgMode> modes;
  if (o.method == "rewrite" || o.method == "both") modes.push_back(HigherDgMode::Rewrite);
  if (o.method == "certified" || o.method == "both") modes.push_back(HigherDgMode::Certified);
  if (modes.empty()) throw Error(Errc::InvalidParams, "--method must be rewrite, certified or both");
  OnsagerContext cx;
  Report rep;
  rep.suite = "onsager higher-dg";
  rep.config = {{"r", o.r}, {"method", o.method}};
  for (int r = 1; r <= o.r; ++r)
    for (auto m : modes) rep.add(cx.higher_dg_check(r, m));
  return emit(o, rep);
}

int onsager_homcheck(const Options& o) {
  OnsagerContext cx;
  Report rep;
  rep.suite = "onsager homcheck";
  std::vector<std::pair<std::string, std::string>> pairs{{"A", "B"}, {"B", "A"}, {"B", "B"}};
  if (!o.w1.empty() || !o.w2.empty()) pairs = {{o.w1, o.w2}};
  rep.config = {{"pairs", pairs}};

  VerificationReport inv;
  inv.name = "onsager.inverse";
  inv.statement = "L^-1(L(B)) = B";
  auto z = cx.zero_check(cx.lusztig(cx.lusztig(cx.B(), Direction::Forward), Direction::Inverse) - cx.B());
  inv.status = z.status;
  inv.detail = "evidence: " + z.evidence;
  rep.add(inv);

  for (const auto& [a, b] : pairs) {
    Word x, y;
    try {
      x = parse_word(*cx.alphabet(), a);
      y = parse_word(*cx.alphabet(), b);
    } catch (const Error& e) {
      throw Error(Errc::InvalidParams, std::string("--w1/--w2: ") + e.what());
    }
    rep.add(cx.homomorphism_spotcheck(x, y));
  }
  return emit(o, rep);
}

// ---- current ----

int current_verify(const Options& o) {
  AqContext cx(o.kmax);
  Report rep;
  rep.suite = "current verify";
  rep.config = {{"kmax", o.kmax}, {"rules", cx.system().rules().size()}, {"relations", cx.relations().size()}};
  rep.add(cx.verify_all(o.threads));
  return emit(o, rep);
}

// ---- repn ----

template <class Fn>
int with_spectral(const Options& o, const char* suite, Fn fn) {
  positive("--d", o.d);
  auto mode = coefficient_mode(o, "numeric");
  Rational a = rat("--a", o.a);
  Report rep;
  rep.suite = suite;
  rep.config = mode_json(mode);
  rep.config["d"] = o.d;
  rep.config["a"] = to_string(a);
  std::visit([&](const auto& f) { fn(rep, spectral_data(f, o.d, a)); }, mode);
  return emit(o, rep);
}

int repn_ssum(const Options& o) {
  return with_spectral(o, "repn ssum", [](Report& rep, const auto& sd) { rep.add(verify_scalar_sums(sd)); });
}

int repn_conjugation(const Options& o) {
  positive("--trials", o.trials);
  return with_spectral(o, "repn conjugation", [&](Report& rep, const auto& sd) {
    rep.config["trials"] = o.trials;
    rep.config["seed"] = o.seed;
    rep.add(verify_conjugation(sd, o.trials, o.seed));
  });
}

int repn_higher_dg(const Options& o) {
  positive("--r", o.r);
  return with_spectral(o, "repn higher-dg", [&](Report& rep, const auto& sd) {
    rep.config["r"] = o.r;
    rep.config["seed"] = o.seed;
    for (int r = 1; r <= o.r; ++r) rep.add(higher_dg_matrix(r, sd, o.seed + static_cast<unsigned>(r)));
  });
}

VerificationReport pair_report(const std::string& name, const TDPair& tp) {
  VerificationReport v;
  v.name = name;
  v.statement = "q-Dolan/Grady relations, tridiagonal shape and irreducibility";
  v.mode = "numeric";
  v.params = {{"d", tp.d}, {"a", to_string(tp.a)}, {"b", to_string(tp.b)}, {"q", to_string(tp.q0)}};
  auto bad = td_pair_violations(tp.A, tp.B, tp.a, tp.b, tp.q0, tp.d);
  auto spectral = check_dg_spectral(tp.A, tp.B, NumericQ(tp.q0));
  v.status = bad.empty() && spectral.passed() ? Status::Pass : Status::Fail;
  v.witness = {{"pair", to_json(tp)}, {"violations", bad}, {"spectral", to_json(spectral)}};
  return v;
}

TDPair d1_pair(const Options& o) { return td_pair_d1(rat("--a", o.a), rat("--b", o.b), rat("--q", o.q)); }

int repn_d1(const Options& o) {
  Report rep;
  rep.suite = "repn d1";
  rep.config = {{"a", o.a}, {"b", o.b}, {"q", o.q}};
  rep.add(pair_report("repn.d1", d1_pair(o)));
  return emit(o, rep);
}

int repn_import(const Options& o) {
  if (o.in.empty()) throw Error(Errc::InvalidParams, "a pair file is required");
  Report rep;
  rep.suite = "repn import";
  rep.config = {{"file", o.in}};
  try {
    rep.add(pair_report("repn.import", import_td_pair(o.in)));
  } catch (const Error& e) {
    if (e.code() != Errc::InvariantViolation) throw;
    VerificationReport v;
    v.name = "repn.import";
    v.mode = "numeric";
    v.status = Status::Fail;
    v.detail = e.what();
    rep.add(v);
  }
  return emit(o, rep);
}

int repn_twist(const Options& o) {
  TDPair tp = o.in.empty() ? d1_pair(o) : import_td_pair(o.in);
  Report rep;
  rep.suite = "repn twist";
  rep.config = o.in.empty() ? Json{{"a", o.a}, {"b", o.b}, {"q", o.q}} : Json{{"file", o.in}};
  TDPair tw = twist_module(tp, tp.spectral_a);
  rep.add(pair_report("repn.twist", tw));
  VerificationReport back;
  back.name = "repn.untwist";
  back.statement = "Psi^-1 (Psi B Psi^-1) Psi = B";
  back.mode = "numeric";
  back.status = untwist_module(tw, tp.spectral_a).B == tp.B ? Status::Pass : Status::Fail;
  rep.add(back);
  return emit(o, rep);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case Errc::IoError: return kIo;
    case Errc::InvalidQ:
    case Errc::InvalidParams:
    case Errc::InvalidCutoff:
    case Errc::IndexOutOfRange:
    case Errc::DegenerateEigenvalues:
    case Errc::ParseError:
    case Errc::AlphabetMismatch:
    case Errc::MissingImage:
      return kUsage;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact verification of the Lusztig automorphism of the q-Onsager algebra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);

  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "print the JSON report");
    c->add_option("--out", o.out, "also write the JSON report here");
    c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };
  auto spectral = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "symbolic or numeric (default numeric)");
    c->add_option("--q", o.q, "q as a rational");
    c->add_option("--a", o.a, "eigenvalue parameter a");
    c->add_option("--d", o.d, "diameter");
  };

  int rc = 0;
  auto* verify = app.add_subcommand("verify", "identity catalogue")->require_subcommand(1);
  auto* vi = verify->add_subcommand("identities", "every catalogue identity at all indices up to --max-index");
  vi->add_option("--max-index", o.max_index);
  vi->add_option("--mode", o.mode, "symbolic or numeric (default symbolic)");
  vi->add_option("--q", o.q, "q for numeric mode");
  common(vi);
  vi->callback([&] { rc = verify_identities(o); });

  auto* ons = app.add_subcommand("onsager", "q-Onsager algebra")->require_subcommand(1);
  auto* ol = ons->add_subcommand("lusztig", "L or L^-1 of an expression");
  ol->add_option("--expr", o.expr, "expression JSON file")->required();
  ol->add_option("--direction", o.direction, "fwd or inv");
  common(ol);
  ol->callback([&] { rc = onsager_lusztig(o); });
  auto* oh = ons->add_subcommand("higher-dg", "(bad A)_{r+1}(B^r) = 0 for r = 1..R");
  oh->add_option("--r", o.r);
  oh->add_option("--method", o.method, "rewrite, certified or both");
  common(oh);
  oh->callback([&] { rc = onsager_higher_dg(o); });
  auto* oc = ons->add_subcommand("homcheck", "L is multiplicative and inverted by L^-1");
  oc->add_option("--w1", o.w1, "first word over {A, B}");
  oc->add_option("--w2", o.w2, "second word");
  common(oc);
  oc->callback([&] { rc = onsager_homcheck(o); });

  auto* cur = app.add_subcommand("current", "current algebra")->require_subcommand(1);
  auto* cv = cur->add_subcommand("verify", "generator classes, S images and derivation replay");
  cv->add_option("--kmax", o.kmax, "index cutoff K");
  common(cv);
  cv->callback([&] { rc = current_verify(o); });

  auto* rp = app.add_subcommand("repn", "matrix representations")->require_subcommand(1);
  auto* rs = rp->add_subcommand("ssum", "spectral sum identity for all (i, j)");
  spectral(rs);
  common(rs);
  rs->callback([&] { rc = repn_ssum(o); });
  auto* rc_ = rp->add_subcommand("conjugation", "matrix L against Psi-conjugation");
  spectral(rc_);
  rc_->add_option("--trials", o.trials);
  rc_->add_option("--seed", o.seed);
  common(rc_);
  rc_->callback([&] { rc = repn_conjugation(o); });
  auto* rh = rp->add_subcommand("higher-dg", "(bad A)_{r+1}(X^r) = 0 on random A-standard matrices");
  spectral(rh);
  rh->add_option("--r", o.r);
  rh->add_option("--seed", o.seed);
  common(rh);
  rh->callback([&] { rc = repn_higher_dg(o); });
  auto* rd = rp->add_subcommand("d1", "the 2x2 tridiagonal pair");
  rd->add_option("--a", o.a);
  rd->add_option("--b", o.b);
  rd->add_option("--q", o.q);
  common(rd);
  rd->callback([&] { rc = repn_d1(o); });
  auto* ri = rp->add_subcommand("import", "validate a tridiagonal pair from JSON");
  ri->add_option("file", o.in, "pair JSON")->required();
  common(ri);
  ri->callback([&] { rc = repn_import(o); });
  auto* rt = rp->add_subcommand("twist", "twist B by Psi and undo it");
  rt->add_option("file", o.in, "pair JSON (default: the d = 1 pair from --a --b --q)");
  rt->add_option("--a", o.a);
  rt->add_option("--b", o.b);
  rt->add_option("--q", o.q);
  common(rt);
  rt->callback([&] { rc = repn_twist(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "qonsager: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "qonsager: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
