#include "app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "locnil/classify.hpp"
#include "locnil/oracle.hpp"
#include "locnil/props.hpp"
#include "report.hpp"

namespace locnil::cli {

unsigned default_threads() {
  if (const char* env = std::getenv("LOCNILP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool parse_args(int argc, const char* const* argv, RunConfig& config, int& exit_code, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Maximal locally nilpotent linear groups of prime degree"};
  app.require_subcommand(1);
  config.threads = default_threads();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", config.q, "prime degree")->required();
    sub->add_option("--field", config.field, "gf:p, gf:p^k or q")->required();
    sub->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", config.output, "output path, - for standard output");
    sub->add_option("--seed", config.seed, "seed for randomized checks");
    sub->add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--timing", config.timing, "include elapsed time in the report");
  };
  auto group_params = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "H, G or singer")->check(CLI::IsMember({"H", "G", "singer"}));
    sub->add_option("--alpha", config.alpha, "alpha as a field element");
    sub->add_option("--b", config.b, "coefficients c0,c1,... of b in powers of I_alpha");
    sub->add_option("--maximality-cap", config.maximality_cap, "largest |GL(q,F)| for the adjunction oracle");
  };

  auto* classify = app.add_subcommand("classify", "list the conjugacy classes");
  common(classify);
  classify->add_option("--limit", config.limit, "representatives per infinite family");
  classify->add_option("--maximality-cap", config.maximality_cap, "largest |GL(q,F)| for the adjunction oracle");
  bool no_verify = false;
  classify->add_flag("--no-verify", no_verify, "skip the property checks");

  auto* verify = app.add_subcommand("verify", "check one group against criteria and oracles");
  common(verify);
  group_params(verify);

  auto* conj = app.add_subcommand("conj", "decide conjugacy by the determinant criteria");
  common(conj);
  conj->add_option("--kind", config.kind, "Ia, H, db or G")->check(CLI::IsMember({"Ia", "H", "db", "G"}));
  conj->add_option("--alpha", config.alpha, "alpha for the db and G kinds");
  conj->add_option("--a", config.a, "first operand");
  conj->add_option("--b", config.b, "second operand");

  auto* oracle = app.add_subcommand("oracle", "run a brute-force oracle");
  common(oracle);
  group_params(oracle);
  oracle->add_option("--mode", config.mode, "maximality, exhaustive or conjugator")
      ->check(CLI::IsMember({"maximality", "exhaustive", "conjugator"}));
  oracle->add_option("--kind", config.kind, "Ia, H, db or G")->check(CLI::IsMember({"Ia", "H", "db", "G"}));
  oracle->add_option("--a", config.a, "first operand (conjugator mode)");
  bool no_certificates = false;
  oracle->add_flag("--no-certificates", no_certificates, "decide every adjunction by closure");

  auto* props = app.add_subcommand("props", "report structural properties of one group");
  common(props);
  group_params(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = kExitOk;
    return false;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    exit_code = kExitUsage;
    return false;
  }
  config.verify = !no_verify;
  config.certificates = !no_certificates;
  if (classify->parsed()) config.command = Command::classify;
  if (verify->parsed()) config.command = Command::verify;
  if (conj->parsed()) config.command = Command::conj;
  if (oracle->parsed()) config.command = Command::oracle;
  if (props->parsed()) config.command = Command::props;
  return true;
}

namespace {

struct Discrepancy : Error {
  using Error::Error;
};

std::vector<FieldElem> parse_list(const Field& f, const std::string& text) {
  std::vector<FieldElem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("empty entry in '" + text + "'");
    out.push_back(f.parse(item));
  }
  if (out.empty()) throw ParseError("expected a comma-separated list");
  return out;
}

void check_q(unsigned q) {
  if (!is_prime_u64(q)) throw DomainError("q = " + std::to_string(q) + " is not prime");
  if (q > 13) throw DomainError("q must be at most 13");
}

struct Target {
  ClassTag tag = ClassTag::MonomialH;
  std::string label;
  MatGroup group;
  std::optional<FieldElem> alpha;
  std::vector<FieldElem> b;
  std::optional<MonomialData> monomial;
  std::optional<PrimitiveData> primitive;
  std::optional<Poly> polynomial;
};

// A primitive fourth root of unity lies in F exactly when -1 is a square.
bool epsilon_in(const Field& f) { return qth_root(f.from_int(-1), 2).has_value(); }
bool square(const FieldElem& x) { return qth_root(x, 2).has_value(); }

Target build_target(const RunConfig& c, const Field& f) {
  Target t;
  if (c.family == "H") {
    t.tag = ClassTag::MonomialH;
    t.alpha = c.alpha.empty() ? f.one() : f.parse(c.alpha);
    t.monomial = make_H_alpha(c.q, f, *t.alpha);
    t.group = t.monomial->group;
    t.label = "H_" + t.alpha->to_string();
  } else if (c.family == "G") {
    t.tag = ClassTag::PrimitiveG;
    t.alpha = c.alpha.empty() ? f.from_int(-1) : f.parse(c.alpha);
    t.b = c.b.empty() ? std::vector<FieldElem>{f.one()} : parse_list(f, c.b);
    t.primitive = make_G_alpha_b(c.q, f, *t.alpha, t.b);
    t.b = t.primitive->b_coeffs;
    t.group = t.primitive->group;
    std::string bs;
    for (const auto& x : t.b) bs += (bs.empty() ? "" : ",") + x.to_string();
    t.label = "G(" + t.alpha->to_string() + "; " + bs + ")";
  } else {
    t.tag = ClassTag::AbelianSinger;
    t.polynomial = singer_polynomial(c.q, f);
    t.group = make_singer(c.q, f);
    t.label = "Singer " + t.polynomial->to_string();
  }
  return t;
}

// Whether the target belongs to the classification list (finite fields).
std::optional<bool> predicted_maximal(const Target& t, unsigned q, const Field& f) {
  if (!f.is_finite()) return std::nullopt;
  const bool eps = epsilon_in(f);
  switch (t.tag) {
    case ClassTag::MonomialH:
      if (!PowerClass::of(*t.alpha, q, PowerMode::mod_S).is_trivial()) return std::nullopt;
      return !(q == 2 && !eps);
    case ClassTag::PrimitiveG: {
      const auto& d = *t.primitive;
      if (!primitivity_criterion(q, *t.alpha, t.b)) return false;
      if (d.case_star) return true;
      const FieldElem det = d.b.det();
      return !(q == 2 && !eps && (square(-det) || square(det / *t.alpha)));
    }
    case ClassTag::AbelianSinger: {
      if (!has_order_q_element(f, q)) return true;
      const std::uint64_t s = f.size() + 1;
      return !(q == 2 && !eps && (s & (s - 1)) == 0);
    }
  }
  return std::nullopt;
}

std::uint64_t q_part_pgl(unsigned q, const Field& f) {
  auto o = gl_order(q, f);
  if (!o) throw DomainError("|GL(q,F)| overflows");
  return prime_part(*o / f.unit_order(), q);
}

OracleCheck make_check(std::string name, bool passed, std::string verdict, std::string witness = "") {
  return OracleCheck{std::move(name), passed, std::move(verdict), std::move(witness)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json maximality_json(const MaximalityResult& r) {
  Json j;
  j["maximal"] = r.maximal;
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["overgroup_projective_order"] = r.overgroup_projective_order;
  j["candidates"] = r.candidates;
  j["certified_by_coprime_parts"] = r.certified_by_parts;
  j["closures"] = r.closures;
  j["budget_overruns"] = r.budget_overruns;
  return j;
}

std::vector<OracleCheck> verify_target(const RunConfig& c, const Field& f, const Target& t, Json& extra) {
  std::vector<OracleCheck> checks;
  const MatGroup& g = t.group;
  const unsigned q = c.q;

  const IrreducibilityReport irr = irreducibility(g);
  std::string sub;
  for (const auto& v : irr.invariant_subspace) sub += vec_to_string(v) + " ";
  checks.push_back(make_check("irreducible", irr.irreducible, irr.method, sub));
  const unsigned env = enveloping_dim(g);
  const bool abs_irr = env == q * q;
  checks.push_back(make_check("burnside_consistency", !abs_irr || irr.irreducible,
                              "enveloping dimension " + std::to_string(env)));

  const auto lcs = lower_central_series(g);
  const bool nilpotent = lcs.nilpotency_class.has_value();
  checks.push_back(make_check("nilpotent", nilpotent,
                              nilpotent ? "class " + std::to_string(*lcs.nilpotency_class) : "series does not reach 1"));
  if (f.is_finite() && nilpotent) {
    auto ucs = upper_central_class(g);
    checks.push_back(make_check("lower_vs_upper_central_series", ucs == lcs.nilpotency_class,
                                "upper series class " + (ucs ? std::to_string(*ucs) : std::string("none"))));
    const SplitReport split = splittable_check(g);
    checks.push_back(make_check("unipotent_semisimple_split", split.passed(),
                                split.applicable ? "G = G_u x G_d" : split.reason));
  }

  if (t.tag == ClassTag::MonomialH) {
    const Mat& I = t.monomial->I_alpha;
    checks.push_back(make_check("I_alpha^q = alpha", I.pow(q) == Mat::scalar(*t.alpha, q), I.pow(q).to_string()));
    const PrimitivityReport prim = primitivity(g);
    std::string lines;
    for (const auto& v : prim.block_lines) lines += vec_to_string(v) + " ";
    checks.push_back(make_check("monomial", !prim.primitive, prim.method, lines));
    if (f.is_finite()) {
      const MatGroup d(f, q, t.monomial->D_gens, true);
      const std::uint64_t expect = d.projective_order() * q;
      checks.push_back(make_check("projective_order = |D/F^x| q", g.projective_order() == expect,
                                  std::to_string(g.projective_order()) + " vs " + std::to_string(expect)));
      if (nilpotent) {
        const unsigned formula = h_class_formula(q, f);
        checks.push_back(make_check("class_formula", *lcs.nilpotency_class == formula,
                                    "measured " + std::to_string(*lcs.nilpotency_class) + ", formula " +
                                        std::to_string(formula)));
      }
    } else {
      std::mt19937_64 rng(c.seed);
      std::uniform_int_distribution<long long> dist(-50, 50);
      bool ok = true;
      std::string bad;
      for (int i = 0; i < 20; ++i) {
        long long v = 0;
        while (v == 0) v = dist(rng);
        const FieldElem tq = f.from_int(v).pow(q);
        if (!monomial_conjugate(q, *t.alpha, *t.alpha * tq)) {
          ok = false;
          bad = std::to_string(v);
        }
      }
      checks.push_back(make_check("alpha_vs_alpha_t^q", ok, "20 random t", bad));
    }
  }

  if (t.tag == ClassTag::PrimitiveG) {
    const auto& d = *t.primitive;
    const bool crit = primitivity_criterion(q, *t.alpha, t.b);
    const PrimitivityReport prim = primitivity(g);
    std::string lines;
    for (const auto& v : prim.block_lines) lines += vec_to_string(v) + " ";
    checks.push_back(make_check("primitivity_criterion_vs_search", crit == prim.primitive,
                                "criterion " + yes_no(crit) + ", search " + yes_no(prim.primitive), lines));
    if (!d.case_star && f.is_finite()) {
      checks.push_back(make_check("projective_order = q^2", g.projective_order() == std::uint64_t{q} * q,
                                  std::to_string(g.projective_order())));
    }
    if (d.case_star && f.is_finite() && nilpotent) {
      auto r = g_class_formula(f);
      checks.push_back(make_check("class_formula_readings", true,
                                  "measured " + std::to_string(*lcs.nilpotency_class) + "; product reading " +
                                      r.product_reading + "; Sylow-of-product reading " + r.sylow_reading));
    }
    if (f.is_finite() && prim.primitive && abs_irr && nilpotent) {
      const KonyukhSeries k = konyukh_check(g);
      checks.push_back(make_check("commutator_subgroup_structure", k.passed(),
                                  k.applicable ? "|K| = " + std::to_string(k.k_order) + ", dim Sigma = " +
                                                     std::to_string(k.sigma_dim) + ", |G:C_G(K)| = " +
                                                     std::to_string(k.galois_order)
                                               : k.reason));
      auto an = irreducible_abelian_normal_subgroup(g);
      checks.push_back(make_check("irreducible_abelian_normal_subgroup", an.has_value(),
                                  an ? "order " + an->order().to_string() : "none found"));
    }
    if (f.is_finite()) {
      // Element conjugacy d b1 ~ d b2 against the determinant rule, on random b.
      std::mt19937_64 rng(c.seed);
      std::uniform_int_distribution<std::uint64_t> dist(0, f.size() - 1);
      const Mat& I = d.I_alpha;
      bool ok = true;
      std::string bad;
      for (int i = 0; i < 12; ++i) {
        std::vector<FieldElem> b1, b2;
        for (unsigned k = 0; k < q; ++k) {
          b1.emplace_back(f, dist(rng));
          b2.emplace_back(f, dist(rng));
        }
        if (i % 2 == 1) {
          b2 = b1;
          for (auto& x : b2) x = -x;
        }
        const Mat m1 = delta_element(I, b1), m2 = delta_element(I, b2);
        if (m1.det().is_zero() || m2.det().is_zero()) continue;
        const bool crit_db = db_conjugate(q, *t.alpha, b1, b2);
        const bool found = element_conjugator(d.d * m1, d.d * m2).has_value();
        if (crit_db != found) {
          ok = false;
          bad = m1.to_string() + " / " + m2.to_string();
        }
      }
      checks.push_back(make_check("db_criterion_vs_search", ok, "random pairs", bad));
    }
  }

  if (t.tag == ClassTag::AbelianSinger) {
    bool abelian = true;
    for (const auto& x : g.generators()) {
      for (const auto& y : g.generators()) abelian = abelian && x * y == y * x;
    }
    checks.push_back(make_check("abelian", abelian, ""));
    checks.push_back(make_check("irreducible_polynomial", is_irreducible(*t.polynomial), t.polynomial->to_string()));
  }

  const auto predicted = predicted_maximal(t, q, f);
  if (predicted && abs_irr && nilpotent) {
    const bool sylow = g.projective_order() == q_part_pgl(q, f);
    checks.push_back(make_check("sylow_of_pgl_iff_listed", sylow == *predicted,
                                "|G/F^x| = " + std::to_string(g.projective_order()) + ", q-part of |PGL| = " +
                                    std::to_string(q_part_pgl(q, f)) + ", listed " + yes_no(*predicted)));
  }
  if (predicted && nilpotent) {
    auto amb = gl_order(q, f);
    if (amb && *amb <= c.maximality_cap) {
      MaximalityOptions mo;
      mo.threads = c.threads;
      mo.certificates = c.certificates;
      const MaximalityResult r = maximality_check(g, mo);
      extra["maximality"] = maximality_json(r);
      checks.push_back(make_check("maximality_vs_classification", r.maximal == *predicted,
                                  "oracle " + yes_no(r.maximal) + ", listed " + yes_no(*predicted),
                                  r.witness ? r.witness->to_string() : ""));
    } else {
      extra["maximality"] = "skipped: |GL(q,F)| above the oracle cap";
    }
  }
  return checks;
}

Json classify_json(const Classification& cl) {
  Json j;
  j["count"] = to_json(cl.count);
  Json reps = Json::array();
  for (const auto& r : cl.reps) reps.push_back(to_json(r));
  j["classes"] = reps;
  j["suppressed"] = cl.suppressed;
  j["notes"] = cl.notes;
  return j;
}

void classify_csv(const Classification& cl, std::ostream& os) {
  os << "tag,alpha,b,polynomial,order,projective_order,nilpotency_class,irreducible,primitive,maximal,certificate\n";
  auto ob = [](const std::optional<bool>& b) { return b ? yes_no(*b) : std::string(); };
  for (const auto& r : cl.reps) {
    std::string b, cert;
    for (const auto& x : r.b) b += (b.empty() ? "" : ",") + x.to_string();
    for (const auto& [k, v] : r.certificate) cert += (cert.empty() ? "" : "; ") + k + "=" + v;
    const auto& v = r.verified;
    os << tag_name(r.tag) << "," << csv_field(r.alpha ? r.alpha->to_string() : "") << "," << csv_field(b) << ","
       << csv_field(r.polynomial ? r.polynomial->to_string() : "") << "," << v.order.to_string() << ","
       << (v.projective_order ? std::to_string(*v.projective_order) : "") << ","
       << (v.nilpotency_class ? std::to_string(*v.nilpotency_class) : "") << "," << ob(v.irreducible) << ","
       << ob(v.primitive) << "," << ob(v.maximal) << "," << csv_field(cert) << "\n";
  }
}

void checks_csv(const std::vector<OracleCheck>& checks, std::ostream& os) {
  os << "check,passed,verdict,witness\n";
  for (const auto& c : checks) {
    os << csv_field(c.name) << "," << yes_no(c.passed) << "," << csv_field(c.verdict) << "," << csv_field(c.witness)
       << "\n";
  }
}

struct ConjOutcome {
  std::optional<bool> criterion;
  std::string criterion_method;
  std::optional<Mat> criterion_conjugator;
  std::optional<bool> oracle;
  std::optional<Mat> oracle_conjugator;
  std::string oracle_note;
};

ConjOutcome conj_outcome(const RunConfig& c, const Field& f, bool run_criterion, bool run_oracle) {
  ConjOutcome o;
  const unsigned q = c.q;
  if (c.a.empty() || c.b.empty()) throw ParseError("--a and --b are required");
  if (c.kind == "Ia") {
    const auto a = parse_list(f, c.a), b = parse_list(f, c.b);
    if (a.size() != q || b.size() != q) throw ParseError("--a and --b need q diagonal entries");
    const Mat da = Mat::diag(a), db = Mat::diag(b);
    const Mat I = make_I_alpha(q, f.one());
    if (run_criterion) {
      const DiagConjugacy r = ia_conjugate(da, db);
      o.criterion = r.conjugate;
      o.criterion_method = "det a = det b";
      o.criterion_conjugator = r.conjugator;
      if (r.conjugator && conjugate(*r.conjugator, I * da) != I * db) o.criterion_method += " (conjugator fails)";
    }
    if (run_oracle && f.is_finite()) {
      o.oracle_conjugator = element_conjugator(I * da, I * db);
      o.oracle = o.oracle_conjugator.has_value();
    }
  } else if (c.kind == "H") {
    const FieldElem a1 = f.parse(c.a), a2 = f.parse(c.b);
    if (run_criterion) {
      o.criterion = monomial_conjugate(q, a1, a2);
      o.criterion_method = "<alpha S> subgroups of F^x/S";
    }
    if (run_oracle && f.is_finite()) {
      o.oracle_conjugator = conjugator_search(make_H_alpha(q, f, a1).group, make_H_alpha(q, f, a2).group);
      o.oracle = o.oracle_conjugator.has_value();
    }
  } else {
    const FieldElem alpha = c.alpha.empty() ? f.from_int(-1) : f.parse(c.alpha);
    const auto b1 = parse_list(f, c.a), b2 = parse_list(f, c.b);
    if (c.kind == "db") {
      if (run_criterion) {
        o.criterion = db_conjugate(q, alpha, b1, b2);
        o.criterion_method = "det b1 = det b2";
      }
      if (run_oracle && f.is_finite()) {
        const Mat I = make_I_alpha(q, alpha);
        const Mat d = make_d(q, f);
        o.oracle_conjugator = element_conjugator(d * delta_element(I, b1), d * delta_element(I, b2));
        o.oracle = o.oracle_conjugator.has_value();
      }
    } else {
      if (run_criterion) {
        const PrimitiveConjugacy r = primitive_conjugate(q, alpha, b1, b2);
        if (r.decision != Decision::undecided) o.criterion = r.decision == Decision::conjugate;
        o.criterion_method = r.method;
        o.criterion_conjugator = r.conjugator;
      }
      if (run_oracle && f.is_finite()) {
        o.oracle_conjugator =
            conjugator_search(make_G_alpha_b(q, f, alpha, b1).group, make_G_alpha_b(q, f, alpha, b2).group);
        o.oracle = o.oracle_conjugator.has_value();
      }
    }
  }
  if (run_oracle && !f.is_finite()) o.oracle_note = "brute force needs a finite field";
  return o;
}

Json conj_json(const ConjOutcome& o) {
  Json j;
  if (o.criterion) {
    j["conjugate"] = *o.criterion;
  } else if (!o.criterion_method.empty()) {
    j["conjugate"] = "undecided by paper criteria";
  }
  if (!o.criterion_method.empty()) j["criterion"] = o.criterion_method;
  if (o.criterion_conjugator) j["conjugator"] = to_json(*o.criterion_conjugator);
  if (o.oracle) {
    j["oracle"] = Json{{"conjugate", *o.oracle},
                       {"conjugator", o.oracle_conjugator ? to_json(*o.oracle_conjugator) : Json(nullptr)}};
  } else if (!o.oracle_note.empty()) {
    j["oracle"] = o.oracle_note;
  }
  return j;
}

Json props_json(const RunConfig& c, const Field& f, const Target& t) {
  const MatGroup& g = t.group;
  const unsigned q = c.q;
  Json j;
  j["generators"] = to_json(g.generators());
  j["order"] = g.order().to_string();
  j["projective_order"] = g.projective_order();
  const ModuleDecomposition m = decompose(g);
  Json mod;
  mod["enveloping_dim"] = m.enveloping_dim;
  mod["absolutely_irreducible"] = m.enveloping_dim == q * q;
  mod["invariant_subspace"] = m.invariant_subspace.empty() ? Json("none") : Json::array();
  for (const auto& v : m.invariant_subspace) mod["invariant_subspace"].push_back(to_json(v));
  mod["block_system"] = m.block_system.empty() ? Json("none") : Json::array();
  for (const auto& v : m.block_system) mod["block_system"].push_back(to_json(v));
  j["module"] = mod;
  j["Ddet"] = det_group(g).to_string();
  const auto lcs = lower_central_series(g);
  j["lower_central_series_orders"] = lcs.sizes;
  j["nilpotency_class"] = optional_json(lcs.nilpotency_class);
  if (f.is_finite()) {
    j["upper_central_class"] = optional_json(upper_central_class(g));
    const SplitReport s = splittable_check(g);
    Json sp;
    sp["applicable"] = s.applicable;
    if (!s.reason.empty()) sp["reason"] = s.reason;
    sp["unipotent_parts"] = s.unipotent_parts;
    sp["semisimple_parts"] = s.semisimple_parts;
    sp["passed"] = s.passed();
    j["unipotent_semisimple_split"] = sp;
    const KonyukhSeries k = konyukh_check(g);
    Json kj;
    kj["applicable"] = k.applicable;
    if (!k.reason.empty()) kj["reason"] = k.reason;
    if (k.applicable) {
      kj["K_order"] = k.k_order;
      kj["K_abelian"] = k.k_abelian;
      kj["K_q_group"] = k.k_q_group;
      kj["sigma_dim"] = k.sigma_dim;
      kj["sigma_is_field"] = k.sigma_is_field;
      kj["G_mod_C_G(K)"] = k.galois_order;
      kj["C_G(K)_commutators_scalar"] = k.hh_scalar;
      kj["passed"] = k.passed();
    }
    j["commutator_subgroup_structure"] = kj;
  }
  if (t.tag == ClassTag::PrimitiveG) {
    j["primitivity_criterion"] = primitivity_criterion(q, *t.alpha, t.b);
    j["Ddet_A"] = det_group(t.primitive->A_alpha).to_string();
    if (auto an = irreducible_abelian_normal_subgroup(g)) {
      j["irreducible_abelian_normal_subgroup"] = Json{{"generators", to_json(an->generators())},
                                                      {"projective_order", an->projective_order()}};
    }
  }
  if (q == 2 && f.characteristic() != 2 && !epsilon_in(f)) {
    const Syl2Structure s = syl2_quotient_structure(f);
    j["syl2_quotient"] = Json{{"case", s.syl2_case},         {"m", s.m},
                              {"predicted_order", s.predicted_order}, {"enumerated_order", s.enumerated_order},
                              {"cyclic", s.cyclic},           {"generator", s.generator},
                              {"note", s.note}};
  }
  if (t.tag != ClassTag::AbelianSinger && t.alpha && binomial_irreducible(q, *t.alpha) &&
      !is_case_star(q, *t.alpha) && has_order_q_element(f, q)) {
    const SylqQuotient s = sylq_quotient_generator(q, *t.alpha);
    j["sylq_quotient"] = Json{{"generator", to_json(s.generator)},
                              {"generator_order", s.generator_order},
                              {"sylow_order", s.sylow_order},
                              {"enumerated", s.enumerated},
                              {"note", s.note}};
  }
  return j;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::classify:
      return "classify";
    case Command::verify:
      return "verify";
    case Command::conj:
      return "conj";
    case Command::oracle:
      return "oracle";
    case Command::props:
      return "props";
  }
  return "?";
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["schema"] = 1;
  report["command"] = command_name(c.command);
  report["q"] = c.q;
  report["field"] = c.field;
  std::string csv;
  int code = kExitOk;
  try {
    check_q(c.q);
    FieldPtr fp = make_field(c.field);
    const Field& f = *fp;
    std::ostringstream csv_out;
    switch (c.command) {
      case Command::classify: {
        ClassifyOptions o;
        o.limit = c.limit;
        o.verify = c.verify;
        o.threads = c.threads;
        o.maximality_ambient_cap = c.maximality_cap;
        const Classification cl = classify(c.q, f, o);
        const Json part1 = classify_json(cl);
        for (const auto& [k, v] : part1.items()) report[k] = v;
        classify_csv(cl, csv_out);
        for (const auto& r : cl.reps) {
          const auto& v = r.verified;
          const bool bad = (v.irreducible && !*v.irreducible) || (v.nilpotent && !*v.nilpotent) ||
                           (v.maximal && !*v.maximal);
          if (bad) code = kExitDiscrepancy;
        }
        break;
      }
      case Command::verify: {
        const Target t = build_target(c, f);
        report["target"] = t.label;
        Json extra = Json::object();
        const auto checks = verify_target(c, f, t, extra);
        report["seed"] = c.seed;
        Json arr = Json::array();
        for (const auto& ch : checks) {
          arr.push_back(to_json(ch));
          if (!ch.passed) code = kExitDiscrepancy;
        }
        report["checks"] = arr;
        for (const auto& [k, v] : extra.items()) report[k] = v;
        report["passed"] = code == kExitOk;
        checks_csv(checks, csv_out);
        break;
      }
      case Command::conj: {
        report["kind"] = c.kind;
        const ConjOutcome o = conj_outcome(c, f, true, true);
        const Json part2 = conj_json(o);
        for (const auto& [k, v] : part2.items()) report[k] = v;
        if (o.criterion && o.oracle && *o.criterion != *o.oracle) code = kExitDiscrepancy;
        csv_out << "kind,conjugate,oracle\n"
                << c.kind << "," << (o.criterion ? yes_no(*o.criterion) : "undecided") << ","
                << (o.oracle ? yes_no(*o.oracle) : "") << "\n";
        break;
      }
      case Command::oracle: {
        report["mode"] = c.mode;
        report["ambient"] = ambient_name(c.q, f);
        if (c.mode == "maximality") {
          const Target t = build_target(c, f);
          report["target"] = t.label;
          MaximalityOptions mo;
          mo.threads = c.threads;
          mo.certificates = c.certificates;
          const MaximalityResult r = maximality_check(t.group, mo);
          report["result"] = maximality_json(r);
          const auto predicted = predicted_maximal(t, c.q, f);
          report["listed"] = optional_json(predicted);
          if (predicted && *predicted != r.maximal) code = kExitDiscrepancy;
          csv_out << "target,maximal,listed,candidates\n"
                  << csv_field(t.label) << "," << yes_no(r.maximal) << ","
                  << (predicted ? yes_no(*predicted) : "") << "," << r.candidates << "\n";
        } else if (c.mode == "exhaustive") {
          const auto classes = exhaustive_classification(c.q, f);
          ClassifyOptions o;
          o.verify = false;
          const Classification cl = classify(c.q, f, o);
          Json arr = Json::array();
          csv_out << "order,class_size,nilpotency_class,matches\n";
          std::vector<bool> matched(cl.reps.size(), false);
          bool all_found = true;
          for (const auto& sc : classes) {
            const MatGroup g = MatGroup::from_elements(f, c.q, [&] {
              ElementSet s(false);
              for (const auto& m : sc.elements) s.insert(m);
              return s;
            }(), false);
            std::optional<std::size_t> match;
            std::optional<Mat> t;
            for (std::size_t i = 0; i < cl.reps.size() && !match; ++i) {
              const MatGroup full = MatGroup::from_elements(f, c.q, cl.reps[i].group.elements(), false);
              if (full.order() != g.order()) continue;
              t = conjugator_search(full, g);
              if (t) match = i;
            }
            if (match) matched[*match] = true;
            else all_found = false;
            Json e;
            e["order"] = sc.order;
            e["class_size"] = sc.class_size;
            e["nilpotency_class"] = optional_json(sc.nilpotency_class);
            e["generators"] = to_json(g.generators());
            e["matches"] = match ? Json(tag_name(cl.reps[*match].tag)) : Json(nullptr);
            e["conjugator"] = t ? to_json(*t) : Json(nullptr);
            arr.push_back(e);
            csv_out << sc.order << "," << sc.class_size << ","
                    << (sc.nilpotency_class ? std::to_string(*sc.nilpotency_class) : "") << ","
                    << (match ? tag_name(cl.reps[*match].tag) : "") << "\n";
          }
          const bool agree = all_found && std::all_of(matched.begin(), matched.end(), [](bool b) { return b; });
          report["classes"] = arr;
          report["classify_count"] = cl.reps.size();
          report["agrees_with_classify"] = agree;
          if (!agree) code = kExitDiscrepancy;
        } else {
          report["kind"] = c.kind;
          const ConjOutcome o = conj_outcome(c, f, false, true);
          const Json part3 = conj_json(o);
          for (const auto& [k, v] : part3.items()) report[k] = v;
          csv_out << "kind,oracle\n" << c.kind << "," << (o.oracle ? yes_no(*o.oracle) : "") << "\n";
        }
        break;
      }
      case Command::props: {
        const Target t = build_target(c, f);
        report["target"] = t.label;
        const Json part4 = props_json(c, f, t);
        for (const auto& [k, v] : part4.items()) report[k] = v;
        csv_out << "property,value\n";
        for (const auto& [k, v] : report.items()) {
          if (v.is_primitive()) csv_out << csv_field(k) << "," << csv_field(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
        break;
      }
    }
    csv = csv_out.str();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FactorizationExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ClosureBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report["exit_code"] = code;
  if (c.timing) {
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  const std::string text = c.format == "csv" ? csv : report.dump(2) + "\n";
  if (c.output == "-") {
    out << text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << c.output << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace locnil::cli
