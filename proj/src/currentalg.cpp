#include "qons/currentalg.hpp"

#include "qons/parallel.hpp"

namespace qons {

const char* aq_generator_name(AqGenerator g) {
  switch (g) {
    case AqGenerator::Wminus: return "Wminus";
    case AqGenerator::Wplus: return "Wplus";
    case AqGenerator::G: return "G";
    case AqGenerator::Gt: return "Gt";
  }
  return "?";
}

std::optional<AqGenerator> parse_aq_generator(std::string_view s) {
  for (auto g : {AqGenerator::Wminus, AqGenerator::Wplus, AqGenerator::G, AqGenerator::Gt})
    if (s == aq_generator_name(g)) return g;
  return std::nullopt;
}

namespace {

std::string wname(int n) { return "W(" + std::to_string(n) + ")"; }
std::string gname(int n) { return "G(" + std::to_string(n) + ")"; }
std::string gtname(int n) { return "Gt(" + std::to_string(n) + ")"; }

AlphabetPtr make_alphabet(int K) {
  if (K < 1) throw Error(Errc::InvalidCutoff, "the index cutoff K must be >= 1");
  std::vector<std::string> names, prec;
  for (int n = -K; n <= K + 1; ++n) names.push_back(wname(n));
  for (int n = 1; n <= K + 1; ++n) names.push_back(gname(n));
  for (int n = 1; n <= K + 1; ++n) names.push_back(gtname(n));
  // W(0) must beat every W and G it gets pushed past, and lose to Gt.
  for (int n = K + 1; n >= 1; --n) prec.push_back(gtname(n));
  prec.push_back(wname(0));
  for (int n = K + 1; n >= 1; --n) prec.push_back(wname(n));
  for (int n = -1; n >= -K; --n) prec.push_back(wname(n));
  for (int n = K + 1; n >= 1; --n) prec.push_back(gname(n));
  return Alphabet::make(names, prec);
}

RationalFunctionQ make_rho(const SymbolicQ& f) {
  RationalFunctionQ d = qdiff(f, 2);
  return -(d * d);
}

SymPoly br(const SymPoly& x, const SymPoly& y) { return x * y - y * x; }

Json check_json(const std::string& what, const ZeroTest<RationalFunctionQ>& z) {
  Json j{{"check", what}, {"zero", z.zero()}};
  if (!z.zero()) j["residue"] = to_json(z.residue);
  return j;
}

}  // namespace

SymPoly AqContext::gen(const std::string& name) const { return SymPoly::generator(alphabet_, name); }

SymPoly AqContext::W(int n) const {
  if (n < -K_ || n > K_ + 1) throw Error(Errc::IndexOutOfRange, wname(n) + " is not instantiated");
  return gen(wname(n));
}

SymPoly AqContext::G(int n) const {
  if (n < 1 || n > K_ + 1) throw Error(Errc::IndexOutOfRange, gname(n) + " is not instantiated");
  return gen(gname(n));
}

SymPoly AqContext::Gt(int n) const {
  if (n < 1 || n > K_ + 1) throw Error(Errc::IndexOutOfRange, gtname(n) + " is not instantiated");
  return gen(gtname(n));
}

SymPoly AqContext::generator(AqGenerator g, int k) const {
  if (k < 0) throw Error(Errc::IndexOutOfRange, "negative index");
  switch (g) {
    case AqGenerator::Wminus: return W(-k);
    case AqGenerator::Wplus: return W(k + 1);
    case AqGenerator::G: return G(k + 1);
    case AqGenerator::Gt: return Gt(k + 1);
  }
  throw Error(Errc::InvalidParams, "unknown generator");
}

void AqContext::check_k(int k) const {
  if (k < 0 || k > K_ - 1)
    throw Error(Errc::IndexOutOfRange, "k = " + std::to_string(k) + " outside 0.." + std::to_string(K_ - 1));
}

void AqContext::add_relation(const std::string& family, int k, int l, SymPoly poly) {
  if (poly.is_zero()) return;  // e.g. the k = l instance of a symmetric family
  relations_.push_back({family, k, l, std::move(poly), false, {}});
}

void AqContext::orient(const std::string& family, int k, int l, SymPoly poly, const SymPoly& lead) {
  Word w = lead.terms().begin()->first;
  system_.add_relation(poly, w, family);
  relations_.push_back({family, k, l, std::move(poly), true, w});
}

AqContext::AqContext(int K)
    : K_(K), alphabet_(make_alphabet(K)), rho_(make_rho(f_)), system_(alphabet_) {
  const RationalFunctionQ q = f_.q_pow(1), qi = f_.q_pow(-1);
  const RationalFunctionQ c = inverse(RationalFunctionQ(q + qi));
  auto qbr = [&](const SymPoly& x, const SymPoly& y) { return q * (x * y) - qi * (y * x); };
  const SymPoly W0 = W(0);

  // Oriented part: pushes W(0) to the right.
  for (int k = 0; k <= K; ++k)
    orient("w-bracket", k, 0, br(W0, W(k + 1)) - c * (Gt(k + 1) - G(k + 1)), W0 * W(k + 1));
  for (int k = 0; k <= K - 1; ++k) {
    SymPoly rhs = rho_ * (W(-k - 1) - W(k + 1));
    orient("w0-g-qbracket", k, 0, qbr(W0, G(k + 1)) - rhs, W0 * G(k + 1));
    orient("w0-g-qbracket", k, 0, qbr(Gt(k + 1), W0) - rhs, Gt(k + 1) * W0);
  }
  for (int k = 0; k <= K; ++k)
    for (int l = k + 1; l <= K; ++l) {
      for (auto [x, y] : {std::pair{W(-k), W(-l)}, {W(k + 1), W(l + 1)}}) {
        SymPoly e = br(x, y);
        orient("w-commute", k, l, e, SymPoly::monomial(alphabet_, e.terms().rbegin()->first));
      }
    }
  for (int k = 0; k <= K; ++k)
    for (int l = k + 1; l <= K; ++l)
      for (auto [x, y] : {std::pair{G(k + 1), G(l + 1)}, {Gt(k + 1), Gt(l + 1)}}) {
        SymPoly e = br(x, y);
        orient("g-commute", k, l, e, SymPoly::monomial(alphabet_, e.terms().rbegin()->first));
      }

  // Stored for membership checks.
  for (int k = 0; k <= K; ++k)
    if (k > 0) add_relation("w-bracket", k, 0, br(W(-k), W(1)) - c * (Gt(k + 1) - G(k + 1)));
  for (int k = 0; k <= K - 1; ++k) {
    SymPoly rhs = rho_ * (W(k + 2) - W(-k));
    add_relation("g-w1-qbracket", k, 0, qbr(G(k + 1), W(1)) - rhs);
    add_relation("g-w1-qbracket", k, 0, qbr(W(1), Gt(k + 1)) - rhs);
  }
  for (int k = 0; k <= K; ++k)
    for (int l = 0; l <= K; ++l) {
      if (l > k) add_relation("w-mixed", k, l, br(W(-k), W(l + 1)) + br(W(k + 1), W(-l)));
      add_relation("wminus-g", k, l, br(W(-k), G(l + 1)) + br(G(k + 1), W(-l)));
      add_relation("wminus-gt", k, l, br(W(-k), Gt(l + 1)) + br(Gt(k + 1), W(-l)));
      add_relation("wplus-g", k, l, br(W(k + 1), G(l + 1)) + br(G(k + 1), W(l + 1)));
      add_relation("wplus-gt", k, l, br(W(k + 1), Gt(l + 1)) + br(Gt(k + 1), W(l + 1)));
      if (l > k) add_relation("g-gt-mixed", k, l, br(Gt(k + 1), G(l + 1)) + br(G(k + 1), Gt(l + 1)));
    }
}

SymPoly AqContext::nested_bracket(const SymPoly& X) const {
  const SymPoly W0 = W(0);
  return apply_ad(f_, -1, W0, apply_ad(f_, 1, W0, apply_ad(f_, 0, W0, X)));
}

RewriteSystem<RationalFunctionQ> AqContext::family_system(const std::string& family) const {
  RewriteSystem<RationalFunctionQ> sys(alphabet_);
  for (const auto& r : relations_)
    if (r.oriented && r.family == family) sys.add_relation(r.poly, r.orientation, family);
  return sys;
}

VerificationReport AqContext::verify_generator_class(AqGenerator g, int k) const {
  check_k(k);
  VerificationReport rep;
  rep.name = std::string("current.generator-class.") + aq_generator_name(g);
  rep.params = {{"generator", aq_generator_name(g)}, {"k", k}, {"K", K_}};
  const SymPoly W0 = W(0), X = generator(g, k);
  Json steps = Json::array();
  bool ok = true;
  if (g == AqGenerator::Wminus) {
    rep.statement = "W(0) W(-k) - W(-k) W(0) = 0";
    auto z = system_.is_zero_mod(br(W0, X));
    steps.push_back(check_json("[W0, X]", z));
    ok = z.zero();
  } else {
    rep.statement = "[W0, [W0, [W0, X]]_q]_{q^-1} = rho [W0, X] and (bad W0)_2(X) = 0";
    auto a = system_.is_zero_mod(nested_bracket(X) - rho_ * br(W0, X));
    auto b = system_.is_zero_mod(apply_badprod(f_, 2, W0, X));
    steps.push_back(check_json("nested bracket - rho [W0, X]", a));
    steps.push_back(check_json("(bad W0)_2(X)", b));
    ok = a.zero() && b.zero();
  }
  rep.status = ok ? Status::Pass : Status::Inconclusive;
  if (!ok) rep.detail = "nonzero normal form; the oriented fragment may not be confluent";
  rep.witness = steps;
  return rep;
}

VerificationReport AqContext::verify_S_images(int k) const {
  check_k(k);
  VerificationReport rep;
  rep.name = "current.s-images";
  rep.statement = "S(G) = Gt, S'(Gt) = G, S(W(-k)) = W(-k), S(W(k+1)) closed form";
  rep.params = {{"k", k}, {"K", K_}};
  const SymPoly W0 = W(0), Wm = W(-k), Wp = W(k + 1), Gk = G(k + 1), Gtk = Gt(k + 1);
  Json steps = Json::array();
  bool ok = true;
  auto zero = [&](const std::string& what, const SymPoly& p) {
    auto z = system_.is_zero_mod(p);
    steps.push_back(check_json(what, z));
    ok = ok && z.zero();
  };
  auto exact = [&](const std::string& what, const SymPoly& x, const SymPoly& y) {
    bool eq = x == y;
    steps.push_back({{"check", what}, {"identical", eq}});
    ok = ok && eq;
  };
  zero("S(G) - Gt", a1_image(f_, W0, Gk, Direction::Forward) - Gtk);
  zero("S'(Gt) - G", a1_image(f_, W0, Gtk, Direction::Inverse) - Gk);
  exact("S(W(-k)) = W(-k) at bound 0", truncated_sum(f_, W0, Wm, 0, Direction::Forward), Wm);
  zero("closed form S(W(-k)) - W(-k)", a1_image(f_, W0, Wm, Direction::Forward) - Wm);
  zero("closed form S'(W(-k)) - W(-k)", a1_image(f_, W0, Wm, Direction::Inverse) - Wm);
  for (auto dir : {Direction::Forward, Direction::Inverse})
    exact(std::string("S_0 + S_1 at W(k+1) = closed form, ") + direction_name(dir),
          truncated_sum(f_, W0, Wp, 1, dir), a1_image(f_, W0, Wp, dir));
  rep.status = ok ? Status::Pass : Status::Inconclusive;
  rep.witness = steps;
  return rep;
}

std::vector<ProofLine> AqContext::proof_lines(AqGenerator g, int k) const {
  check_k(k);
  const SymPoly W0 = W(0), Wp = W(k + 1), Wm = W(-k - 1), Gk = G(k + 1), Gtk = Gt(k + 1);
  const RationalFunctionQ q = f_.q_pow(1), qi = f_.q_pow(-1);
  const RationalFunctionQ c = inverse(RationalFunctionQ(q + qi));
  auto ad = [&](int r, const SymPoly& x) { return apply_ad(f_, r, W0, x); };
  auto qbr = [&](const SymPoly& x, const SymPoly& y) { return q * (x * y) - qi * (y * x); };
  const RationalFunctionQ& rho = rho_;
  std::vector<ProofLine> out;
  auto line = [&](const char* why, SymPoly e) { out.push_back({why, std::move(e)}); };
  switch (g) {
    case AqGenerator::Wplus:
      line("start", nested_bracket(Wp));
      line("w-bracket", c * ad(-1, ad(1, Gtk - Gk)));
      line("w0-g-qbracket", -c * (ad(1, ad(1, Gk)) + ad(-1, ad(1, Gk))));
      line("linear", -ad(0, ad(1, Gk)));
      line("w0-g-qbracket", rho * ad(0, Wp - Wm));
      line("w-commute", rho * ad(0, Wp));
      break;
    case AqGenerator::G:
      line("start", nested_bracket(Gk));
      line("linear", ad(-1, ad(0, ad(1, Gk))));
      line("w0-g-qbracket", rho * ad(-1, ad(0, Wm - Wp)));
      line("w-commute", -rho * ad(-1, ad(0, Wp)));
      line("w-bracket", rho * c * ad(-1, Gk - Gtk));
      line("linear", rho * c * qbr(Gtk - Gk, W0));
      line("w0-g-qbracket", rho * ad(0, Gk));
      break;
    case AqGenerator::Gt:
      line("start", nested_bracket(Gtk));
      line("linear", ad(1, ad(0, ad(-1, Gtk))));
      line("linear", -ad(1, ad(0, qbr(Gtk, W0))));
      line("w0-g-qbracket", rho * ad(1, ad(0, Wp - Wm)));
      line("w-commute", rho * ad(1, ad(0, Wp)));
      line("w-bracket", rho * c * ad(1, Gtk - Gk));
      line("w0-g-qbracket", rho * ad(0, Gtk));
      break;
    case AqGenerator::Wminus:
      throw Error(Errc::InvalidParams, "no derivation for W(-k); it commutes with W(0)");
  }
  return out;
}

VerificationReport AqContext::replay_proof(AqGenerator g, int k) const {
  auto lines = proof_lines(g, k);
  VerificationReport rep;
  rep.name = std::string("current.proof-replay.") + aq_generator_name(g);
  rep.statement = "each line follows from the previous by the cited relations";
  rep.params = {{"generator", aq_generator_name(g)}, {"k", k}, {"K", K_}};
  const SymPoly X = generator(g, k);
  Json steps = Json::array();
  bool ok = lines.front().expr == nested_bracket(X);
  steps.push_back({{"line", 0}, {"by", "start"}, {"ok", ok}});
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& why = lines[i].justification;
    SymPoly diff = lines[i - 1].expr - lines[i].expr;
    bool step = why == "linear" ? diff.is_zero() : family_system(why).normal_form(diff).is_zero();
    steps.push_back({{"line", i}, {"by", why}, {"ok", step}});
    ok = ok && step;
  }
  bool last = lines.back().expr == rho_ * br(W(0), X);
  steps.push_back({{"check", "last line = rho [W0, X]"}, {"ok", last}});
  rep.status = ok && last ? Status::Pass : Status::Fail;
  rep.witness = steps;
  return rep;
}

std::vector<VerificationReport> AqContext::verify_all(unsigned threads) const {
  enum class What { Class, Images, Replay };
  struct Job {
    What what;
    AqGenerator g;
    int k;
  };
  std::vector<Job> jobs;
  for (int k = 0; k <= K_ - 1; ++k) {
    for (auto g : {AqGenerator::Wminus, AqGenerator::Wplus, AqGenerator::G, AqGenerator::Gt})
      jobs.push_back({What::Class, g, k});
    jobs.push_back({What::Images, AqGenerator::Wminus, k});
    for (auto g : {AqGenerator::Wplus, AqGenerator::G, AqGenerator::Gt}) jobs.push_back({What::Replay, g, k});
  }
  return run_queue<VerificationReport>(
      jobs, [] { return 0; },
      [this](int&, const Job& j) {
        switch (j.what) {
          case What::Class: return verify_generator_class(j.g, j.k);
          case What::Images: return verify_S_images(j.k);
          case What::Replay: break;
        }
        return replay_proof(j.g, j.k);
      },
      threads);
}

}  // namespace qons
