#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "addcomb/analyzer.hpp"
#include "addcomb/bohr_gap.hpp"
#include "addcomb/covering.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/freiman.hpp"
#include "addcomb/sumsets.hpp"
#include "addcomb/torus_lab.hpp"
#include "json.hpp"

namespace {

using addcomb::Int;
using addcomb::IntSet;
using addcomb::Rat;
using nlohmann::json;

constexpr int kSchemaVersion = 1;

// One integer per line; '#' starts a comment; an optional "base=10" or
// "base=16" header switches the radix. Duplicates are deduplicated.
IntSet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw addcomb::StructuralError(path + ": cannot open");
  std::vector<Int> xs;
  int base = 10;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto l = line.find_first_not_of(" \t\r");
    if (l == std::string::npos) continue;
    auto r = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(l, r - l + 1);
    if (tok.rfind("base=", 0) == 0) {
      std::string b = tok.substr(5);
      if (b == "10")
        base = 10;
      else if (b == "16")
        base = 16;
      else
        throw addcomb::StructuralError(path + ":" + std::to_string(lineno) +
                                       ": base must be 10 or 16");
      continue;
    }
    Int v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), base) != 0)
      throw addcomb::StructuralError(path + ":" + std::to_string(lineno) +
                                     ": not an integer: " + tok);
    xs.push_back(v);
  }
  if (xs.empty())
    throw addcomb::StructuralError(path + ": no elements");
  return IntSet::from_vector(std::move(xs));
}

json rat_json(const Rat& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rat rat_from_json(const json& j) {
  Rat q(Int(j.at("num").get<std::string>()),
        Int(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

json prog_json(const addcomb::AnyProgression& p) {
  if (const auto* ap = std::get_if<addcomb::Progression1D>(&p))
    return json{{"type", "ap"},
                {"a0", ap->a0.get_str()},
                {"v", ap->v.get_str()},
                {"L", ap->L}};
  const auto& q = std::get<addcomb::GAP2>(p);
  return json{{"type", "gap2"}, {"a0", q.a0.get_str()},
              {"a1", q.a1.get_str()}, {"a2", q.a2.get_str()},
              {"L1", q.L1},           {"L2", q.L2}};
}

addcomb::AnyProgression prog_from_json(const json& j) {
  if (j.at("type") == "ap")
    return addcomb::Progression1D{Int(j.at("a0").get<std::string>()),
                                  Int(j.at("v").get<std::string>()),
                                  j.at("L").get<long>()};
  return addcomb::GAP2{Int(j.at("a0").get<std::string>()),
                       Int(j.at("a1").get<std::string>()),
                       Int(j.at("a2").get<std::string>()),
                       j.at("L1").get<long>(), j.at("L2").get<long>()};
}

// Reads a GAP2 description {a0, a1, a2, L1, L2}; values may be numbers or
// strings (for magnitudes beyond double precision).
addcomb::GAP2 load_gap2_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw addcomb::StructuralError(path + ": cannot open");
  json j = json::parse(in);
  auto big = [&](const char* key) {
    const json& v = j.at(key);
    return v.is_string() ? Int(v.get<std::string>())
                         : Int(static_cast<long>(v.get<long long>()));
  };
  return addcomb::GAP2{big("a0"), big("a1"), big("a2"), j.at("L1").get<long>(),
                       j.at("L2").get<long>()};
}

std::string branch_name(addcomb::Branch b) {
  switch (b) {
    case addcomb::Branch::kExpansion: return "expansion";
    case addcomb::Branch::kApDense: return "ap_dense";
    case addcomb::Branch::kGapDense: return "gap_dense";
    default: return "inconclusive";
  }
}

std::vector<Int> parse_cf(const std::string& s) {
  std::vector<Int> terms;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      throw addcomb::StructuralError("bad continued-fraction term: " + tok);
    terms.push_back(v);
  }
  if (terms.empty())
    throw addcomb::StructuralError("empty continued fraction");
  return terms;
}

addcomb::BohrSpec make_spec(const std::string& alpha, const std::string& cf,
                            const std::string& sigma, long n) {
  Rat s = addcomb::parse_rational(sigma);
  if (!cf.empty()) return addcomb::BohrSpec::from_cf(parse_cf(cf), s, n);
  if (!alpha.empty())
    return addcomb::BohrSpec::from_rational(addcomb::parse_rational(alpha), s,
                                            n);
  throw addcomb::StructuralError("one of --alpha or --cf is required");
}

int cmd_sumset(const std::string& in, const std::string& bpath, bool minus,
               long iterate, const std::string& signed_lm) {
  IntSet a = load_set_file(in);
  IntSet result;
  if (!signed_lm.empty()) {
    auto comma = signed_lm.find(',');
    if (comma == std::string::npos)
      throw addcomb::StructuralError("--signed expects l,m");
    unsigned l = std::stoul(signed_lm.substr(0, comma));
    unsigned m = std::stoul(signed_lm.substr(comma + 1));
    result = addcomb::signed_combination(a, l, m);
  } else if (iterate > 0) {
    result = addcomb::iterated_sumset(a, static_cast<unsigned>(iterate));
  } else {
    IntSet b = bpath.empty() ? a : load_set_file(bpath);
    result = minus ? addcomb::difference_set(a, b) : addcomb::sumset(a, b);
  }
  for (const Int& e : result) std::cout << e.get_str() << "\n";
  return 0;
}

int cmd_cover(const std::string& lemma, const std::string& in,
              const std::string& qpath, bool no_precheck) {
  IntSet x = load_set_file(in);
  auto mode = no_precheck ? addcomb::PrecheckMode::kAdvisory
                          : addcomb::PrecheckMode::kStrict;
  if (lemma == "lev") {
    auto rep = addcomb::lev_verify(x);
    std::cout << "l=" << rep.params.l << " |X|=" << rep.params.card_x
              << " k=" << rep.params.k << " r=" << rep.params.r
              << " even=" << (rep.contains_even ? "ok" : "FAIL")
              << " odd=" << (rep.contains_odd ? "ok" : "FAIL") << "\n";
    return rep.contains_even && rep.contains_odd ? 0 : 1;
  }
  addcomb::CoverResult res;
  if (lemma == "5x4") {
    // Default ambient progression: the interval [1, max X].
    if (x.min() < 1)
      throw addcomb::StructuralError("5x4 needs positive elements");
    long len = static_cast<long>(Int(x.max()).get_si());
    addcomb::Progression1D p{Int(0), Int(1), len};
    res = addcomb::cover_5_4(x, p, mode);
  } else if (lemma == "9x8") {
    res = addcomb::cover_9_8(x, mode);
  } else if (lemma == "41x40") {
    if (qpath.empty())
      throw addcomb::StructuralError("--q Q.json required for 41x40");
    res = addcomb::cover_41_40(x, load_gap2_json(qpath), mode);
  } else {
    throw addcomb::StructuralError("unknown lemma: " + lemma);
  }
  if (res.holds) {
    std::cout << "covered\n";
    return 0;
  }
  std::cout << "not covered, witness " << res.witness->get_str() << "\n";
  return 1;
}

int cmd_bohr(bool extract, const addcomb::BohrSpec& spec, bool as_json) {
  if (!extract) {
    IntSet b = addcomb::bohr_set(spec);
    for (const Int& e : b) std::cout << e.get_str() << "\n";
    return 0;
  }
  auto res = addcomb::extract_gap(spec);
  if (as_json) {
    json j{{"schema_version", kSchemaVersion},
           {"command", "bohr_extract"},
           {"sigma", rat_json(spec.sigma)},
           {"n", spec.N},
           {"prog", prog_json(res.prog)},
           {"cert",
            {{"all_members", res.cert.all_members},
             {"proper", res.cert.proper},
             {"size", res.cert.size},
             {"size_floor", rat_json(res.cert.size_floor)},
             {"size_ok", res.cert.size_ok}}},
           {"used_cf", res.used_cf_construction}};
    if (spec.has_cf()) {
      json cf = json::array();
      for (const Int& t : spec.cf) cf.push_back(t.get_str());
      j["cf"] = cf;
    } else {
      j["alpha"] = rat_json(spec.alpha);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "progression " << prog_json(res.prog).dump()
              << " size=" << res.cert.size
              << " certified=" << (res.cert.all_members && res.cert.proper &&
                                           res.cert.size_ok
                                       ? "yes"
                                       : "no")
              << "\n";
  }
  return 0;
}

int cmd_norms(const std::string& in, const std::string& which) {
  std::ifstream f(in);
  if (!f) throw addcomb::StructuralError(in + ": cannot open");
  std::vector<double> vals;
  double v;
  while (f >> v) vals.push_back(v);
  addcomb::GridFunction g{static_cast<long>(vals.size()), std::move(vals)};
  double out;
  if (which == "l2")
    out = addcomb::l2_norm(g);
  else if (which == "u2")
    out = addcomb::u2_norm_direct(g);
  else if (which == "u2fft")
    out = addcomb::u2_norm_fourier(g);
  else
    throw addcomb::StructuralError("--which must be l2, u2, or u2fft");
  std::cout.precision(17);
  std::cout << out << "\n";
  return 0;
}

addcomb::TorusGrid random_grid(int d, long m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  if (unif(rng) < 0.5) {
    // Bernoulli set with a random density well inside (0, 1).
    double p = 0.3 + 0.4 * unif(rng);
    auto g = addcomb::TorusGrid::constant(d, m, 0.0);
    for (double& x : g.values) x = unif(rng) < p ? 1.0 : 0.0;
    return g;
  }
  // An arc (d = 1) or a product of arcs (d = 2): the extremal shape.
  auto arc1 = [&]() {
    long c = static_cast<long>(unif(rng) * static_cast<double>(m));
    long h = 2 + static_cast<long>(unif(rng) * static_cast<double>(m) / 3.0);
    return addcomb::TorusGrid::arc(m, Rat(c, m), Rat(h, m));
  };
  if (d == 1) return arc1();
  auto a = arc1(), b = arc1();
  auto g = addcomb::TorusGrid::constant(2, m, 0.0);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      g.values[static_cast<std::size_t>(i * m + j)] = a.at(i) * b.at(j);
  return g;
}

int cmd_torus_kneser(long m, int d, long trials, double lambda,
                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  double bound = 3.0 * std::sqrt(lambda) + 2.0 * d / static_cast<double>(m);
  long violations = 0;
  for (long t = 0; t < trials; ++t) {
    auto s1 = random_grid(d, m, rng);
    auto s2 = random_grid(d, m, rng);
    double m1 = s1.measure().get_d(), m2 = s2.measure().get_d();
    if (!(lambda < m1 * m1 && lambda < m2 * m2)) {
      --t;  // resample; the precondition needs non-tiny sets
      continue;
    }
    auto rep = addcomb::kneser_deficiency(s1, s2, lambda);
    worst = std::min(worst, rep.deficiency);
    if (rep.deficiency < -bound) ++violations;
  }
  json j{{"schema_version", kSchemaVersion}, {"command", "torus_kneser"},
         {"m", m},          {"d", d},
         {"trials", trials},          {"lambda", lambda},
         {"seed", seed},              {"worst_deficiency", worst},
         {"bound", bound},            {"violations", violations}};
  std::cout << j.dump(2) << "\n";
  return violations == 0 ? 0 : 1;
}

int cmd_torus_sandwich(const std::string& center, const std::string& halfwidth,
                       const std::string& tau, long m) {
  auto res = addcomb::lipschitz_sandwich(
      addcomb::parse_rational(center), addcomb::parse_rational(halfwidth),
      addcomb::parse_rational(tau), m);
  const auto& r = res.report;
  json j{{"schema_version", kSchemaVersion},
         {"command", "torus_sandwich"},
         {"sandwich_ok", r.sandwich_ok},
         {"gap_integral", rat_json(r.gap_integral)},
         {"gap_bound", rat_json(r.gap_bound)},
         {"gap_ok", r.gap_integral <= r.gap_bound},
         {"lipschitz", rat_json(r.lipschitz)},
         {"lipschitz_bound", rat_json(r.lipschitz_bound)},
         {"lipschitz_ok", r.lipschitz <= r.lipschitz_bound}};
  std::cout << j.dump(2) << "\n";
  return r.sandwich_ok && r.gap_integral <= r.gap_bound &&
                 r.lipschitz <= r.lipschitz_bound
             ? 0
             : 1;
}

json analyze_report(const IntSet& a, const addcomb::StructureReport& rep) {
  json j{{"schema_version", kSchemaVersion},
         {"command", "analyze"},
         {"branch", branch_name(rep.branch)},
         {"sigma", rat_json(rep.sigma)},
         {"set_size", a.size()},
         {"params",
          {{"delta", rat_json(rep.delta)},
           {"eps", rat_json(rep.eps)},
           {"min_frac", rat_json(rep.min_frac)}}}};
  if (rep.witness) j["witness"] = prog_json(*rep.witness);
  if (rep.density) j["density"] = rat_json(*rep.density);
  return j;
}

int cmd_analyze(const std::string& in, const std::string& delta,
                const std::string& eps, const std::string& min_frac,
                bool as_json) {
  IntSet a = load_set_file(in);
  auto rep = addcomb::dichotomy_check(a, addcomb::parse_rational(delta),
                                      addcomb::parse_rational(eps),
                                      addcomb::parse_rational(min_frac));
  if (as_json) {
    std::cout << analyze_report(a, rep).dump(2) << "\n";
  } else {
    std::cout << "branch=" << branch_name(rep.branch)
              << " sigma=" << rep.sigma.get_str();
    if (rep.witness) std::cout << " witness=" << prog_json(*rep.witness).dump();
    if (rep.density) std::cout << " density=" << rep.density->get_str();
    std::cout << "\n";
  }
  return 0;
}

// Re-derives every claim in a report from the raw inputs; trusts nothing in
// the JSON beyond the witness identity.
int cmd_verify(const std::string& report_path, const std::string& in) {
  std::ifstream f(report_path);
  if (!f) throw addcomb::StructuralError(report_path + ": cannot open");
  json j = json::parse(f);
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw addcomb::StructuralError("unsupported schema_version");
  const std::string cmd = j.at("command").get<std::string>();

  if (cmd == "analyze") {
    IntSet a = load_set_file(in);
    Rat sigma = addcomb::doubling(a, addcomb::DoublingMode::kPlus);
    if (sigma != rat_from_json(j.at("sigma"))) {
      std::cerr << "sigma mismatch\n";
      return 1;
    }
    std::string branch = j.at("branch").get<std::string>();
    Rat delta = rat_from_json(j.at("params").at("delta"));
    Rat eps = rat_from_json(j.at("params").at("eps"));
    Rat min_frac = rat_from_json(j.at("params").at("min_frac"));
    if (branch == "expansion") {
      if (!(sigma > 4 + delta)) {
        std::cerr << "expansion claimed but sigma <= 4 + delta\n";
        return 1;
      }
      std::cout << "verified\n";
      return 0;
    }
    if (branch == "inconclusive") {
      std::cout << "verified (no claim)\n";
      return 0;
    }
    auto w = prog_from_json(j.at("witness"));
    Rat density = addcomb::density_on(a, w);
    if (density != rat_from_json(j.at("density"))) {
      std::cerr << "density mismatch\n";
      return 1;
    }
    Rat size_floor = min_frac * static_cast<unsigned long>(a.size());
    long wsize = static_cast<long>(addcomb::elements_of(w).size());
    bool ok;
    if (branch == "ap_dense") {
      ok = std::holds_alternative<addcomb::Progression1D>(w) &&
           density >= Rat(1, 2) - eps && Rat(wsize) >= size_floor;
    } else if (branch == "gap_dense") {
      const auto* q = std::get_if<addcomb::GAP2>(&w);
      ok = q != nullptr && addcomb::is_proper(*q).proper &&
           density >= 1 - eps && Rat(wsize) >= size_floor;
    } else {
      std::cerr << "unknown branch\n";
      return 1;
    }
    std::cout << (ok ? "verified\n" : "branch invariant failed\n");
    return ok ? 0 : 1;
  }

  if (cmd == "bohr_extract") {
    Rat sigma = rat_from_json(j.at("sigma"));
    long n = j.at("n").get<long>();
    addcomb::BohrSpec spec =
        j.contains("cf")
            ? addcomb::BohrSpec::from_cf(
                  [&] {
                    std::vector<Int> terms;
                    for (const auto& t : j.at("cf"))
                      terms.emplace_back(t.get<std::string>());
                    return terms;
                  }(),
                  sigma, n)
            : addcomb::BohrSpec::from_rational(rat_from_json(j.at("alpha")),
                                               sigma, n);
    auto w = prog_from_json(j.at("prog"));
    IntSet elems = addcomb::elements_of(w);
    for (const Int& e : elems) {
      if (!spec.contains(e)) {
        std::cerr << "element " << e.get_str() << " outside the Bohr set\n";
        return 1;
      }
    }
    if (const auto* q = std::get_if<addcomb::GAP2>(&w)) {
      if (!addcomb::is_proper(*q).proper) {
        std::cerr << "witness not proper\n";
        return 1;
      }
    }
    if (Rat(static_cast<unsigned long>(elems.size())) <
        sigma * static_cast<unsigned long>(n) / 400) {
      std::cerr << "witness below the size floor\n";
      return 1;
    }
    std::cout << "verified\n";
    return 0;
  }

  throw addcomb::StructuralError("verify: unsupported report command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact additive-combinatorics toolkit"};
  app.require_subcommand(1);

  // sumset
  std::string in, bpath, signed_lm;
  bool minus = false;
  long iterate = 0;
  auto* sum = app.add_subcommand("sumset", "A+B, A-B, hA, or lA-mA");
  sum->add_option("--in", in)->required();
  sum->add_option("--b", bpath);
  sum->add_flag("--minus", minus);
  sum->add_option("--iterate", iterate);
  sum->add_option("--signed", signed_lm);

  // doubling
  std::string din;
  bool dminus = false;
  auto* dbl = app.add_subcommand("doubling", "|A+A|/|A| as an exact rational");
  dbl->add_option("--in", din)->required();
  dbl->add_flag("--minus", dminus);

  // energy
  std::string ein;
  auto* energy = app.add_subcommand("energy", "additive energy E(A)");
  energy->add_option("--in", ein)->required();

  // cover
  std::string lemma, cin_path, qpath;
  bool no_precheck = false;
  auto* cover = app.add_subcommand("cover", "covering lemma verdicts");
  cover->add_option("--lemma", lemma)->required()
      ->check(CLI::IsMember({"lev", "5x4", "9x8", "41x40"}));
  cover->add_option("--in", cin_path)->required();
  cover->add_option("--q", qpath);
  cover->add_flag("--no-precheck", no_precheck);

  // freiman verify
  std::string fa, fb, fmap;
  unsigned fk = 2;
  auto* freiman = app.add_subcommand("freiman", "Freiman isomorphism checks");
  auto* fverify = freiman->add_subcommand("verify", "check an index map");
  fverify->add_option("--a", fa)->required();
  fverify->add_option("--b", fb)->required();
  fverify->add_option("--map", fmap)->required();
  fverify->add_option("--k", fk)->required();

  // bohr set|extract
  std::string balpha, bcf, bsigma;
  long bn = 0;
  bool bjson = false;
  auto* bohr = app.add_subcommand("bohr", "Bohr sets and extracted GAPs");
  auto* bset = bohr->add_subcommand("set", "enumerate the Bohr set");
  auto* bext = bohr->add_subcommand("extract", "proper GAP inside the set");
  for (auto* sub : {bset, bext}) {
    sub->add_option("--alpha", balpha);
    sub->add_option("--cf", bcf);
    sub->add_option("--sigma", bsigma)->required();
    sub->add_option("--n", bn)->required();
    sub->add_flag("--json", bjson);
  }

  // norms
  std::string nin, nwhich;
  auto* norms = app.add_subcommand("norms", "l2 and U^2 norms");
  norms->add_option("--in", nin)->required();
  norms->add_option("--which", nwhich)->required()
      ->check(CLI::IsMember({"l2", "u2", "u2fft"}));

  // torus kneser|sandwich
  long tm = 64, ttrials = 100;
  int td = 1;
  double tlambda = 0.01;
  std::uint64_t tseed = 0;
  std::string scenter, shalf, stau;
  bool seed_given = false;
  auto* torus = app.add_subcommand("torus", "discretized-torus suites");
  auto* kneser = torus->add_subcommand("kneser", "convolution deficiency");
  kneser->add_option("--m", tm)->required();
  kneser->add_option("--d", td)->required();
  kneser->add_option("--trials", ttrials)->required();
  kneser->add_option("--lambda", tlambda)->required();
  kneser->add_option("--seed", tseed)->required()
      ->each([&](const std::string&) { seed_given = true; });
  auto* sandwich = torus->add_subcommand("sandwich", "mollified indicators");
  sandwich->add_option("--center", scenter)->required();
  sandwich->add_option("--halfwidth", shalf)->required();
  sandwich->add_option("--tau", stau)->required();
  sandwich->add_option("--m", tm)->required();

  // analyze
  std::string ain, adelta, aeps, afrac;
  bool ajson = false;
  auto* analyze = app.add_subcommand("analyze", "trichotomy oracle");
  analyze->add_option("--in", ain)->required();
  analyze->add_option("--delta", adelta)->required();
  analyze->add_option("--eps", aeps)->required();
  analyze->add_option("--min-frac", afrac)->required();
  analyze->add_flag("--json", ajson);

  // verify
  std::string vreport, vin;
  auto* verify = app.add_subcommand("verify", "re-check a JSON report");
  verify->add_option("--report", vreport)->required();
  verify->add_option("--in", vin);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sum->parsed())
      return cmd_sumset(in, bpath, minus, iterate, signed_lm);
    if (dbl->parsed()) {
      auto mode = dminus ? addcomb::DoublingMode::kMinus
                         : addcomb::DoublingMode::kPlus;
      Rat q = addcomb::doubling(load_set_file(din), mode);
      std::cout << q.get_num().get_str() << "/" << q.get_den().get_str()
                << "\n";
      return 0;
    }
    if (energy->parsed()) {
      std::cout << addcomb::additive_energy(load_set_file(ein)).get_str()
                << "\n";
      return 0;
    }
    if (cover->parsed()) return cmd_cover(lemma, cin_path, qpath, no_precheck);
    if (fverify->parsed()) {
      IntSet a = load_set_file(fa), b = load_set_file(fb);
      IntSet midx = load_set_file(fmap);
      std::vector<std::size_t> phi;
      for (const Int& e : midx) phi.push_back(e.get_ui());
      // The map file lists phi(i) on line i; dedup-by-load would scramble
      // it, so re-read positionally.
      phi.clear();
      {
        std::ifstream mf(fmap);
        std::string line;
        while (std::getline(mf, line)) {
          if (line.empty() || line[0] == '#') continue;
          phi.push_back(std::stoul(line));
        }
      }
      auto res = addcomb::verify_freiman_isomorphism(a, b, phi, fk);
      std::cout << (res.holds ? "isomorphism" : "not an isomorphism") << "\n";
      return res.holds ? 0 : 1;
    }
    if (bset->parsed() || bext->parsed())
      return cmd_bohr(bext->parsed(), make_spec(balpha, bcf, bsigma, bn),
                      bjson);
    if (norms->parsed()) return cmd_norms(nin, nwhich);
    if (kneser->parsed()) {
      (void)seed_given;
      return cmd_torus_kneser(tm, td, ttrials, tlambda, tseed);
    }
    if (sandwich->parsed())
      return cmd_torus_sandwich(scenter, shalf, stau, tm);
    if (analyze->parsed())
      return cmd_analyze(ain, adelta, aeps, afrac, ajson);
    if (verify->parsed()) return cmd_verify(vreport, vin);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const addcomb::ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return 3;
  } catch (const addcomb::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const addcomb::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 3;
  }
}
