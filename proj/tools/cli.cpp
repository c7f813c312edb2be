#include "eiskron/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "eiskron/io.hpp"
#include "eiskron/symh.hpp"

namespace eiskron::cli {

namespace {

using arith::CycRat;
using arith::PadicCyc;
using io::Json;
using level::GL2ModN;
using level::LevelFunction;

struct PhiSource {
  std::string name;
  LevelFunction<mpq_class> phi;
};

struct Outcome {
  Json doc;
  bool pass = true;
};

class Job {
 public:
  explicit Job(const JobConfig& c) : c_(c) {
    if (c.N < 3) throw ParameterError("level N must be >= 3");
    if (c.q_prec < 1) throw ParameterError("q-precision must be >= 1");
    if (c.p_prec < 1) throw ParameterError("p-adic precision must be >= 1");
    g_ = io::parse_gl2(c.g, c.N);
  }

  Outcome dispatch() {
    const std::string& cmd = c_.command;
    if (cmd == "fourier") return fourier();
    if (cmd == "lvalue") return lvalue();
    if (cmd == "horospherical") return horospherical();
    if (cmd == "eis") return eis();
    if (cmd == "eis-p") return eis_p();
    if (cmd == "measure-moments") return measure_moments();
    if (cmd == "measure-integrality") return measure_integrality();
    if (cmd == "measure-support") return measure_support();
    if (cmd == "alpha") return alpha();
    if (cmd == "verify-main-theorem") return verify_main_theorem();
    if (cmd == "verify-suite") return verify_suite();
    throw ParameterError("unknown command '" + cmd + "'");
  }

 private:
  Json meta(std::optional<long long> r) const {
    Json m;
    m["command"] = c_.command;
    m["p"] = c_.p;
    m["N"] = c_.N;
    m["k"] = c_.k;
    m["r"] = r ? Json(*r) : Json(nullptr);
    m["q_prec"] = c_.q_prec;
    m["p_prec"] = c_.p_prec;
    m["g"] = level::to_string(g_);
    return m;
  }

  LevelFunction<mpq_class> phi() const {
    if (!c_.phi_path) throw ParameterError(c_.command + " needs --phi FILE");
    return io::read_phi_file(*c_.phi_path, c_.N);
  }

  std::vector<PhiSource> phi_sources() const {
    if (c_.phi_path) return {{*c_.phi_path, phi()}};
    std::vector<PhiSource> out;
    for (int a = 0; a < c_.N; ++a)
      for (int b = 0; b < c_.N; ++b)
        out.push_back({"delta(" + std::to_string(a) + "," + std::to_string(b) + ")",
                       LevelFunction<mpq_class>::delta(c_.N, {}, a, b)});
    return out;
  }

  LevelFunction<PadicCyc> padic_datum(const LevelFunction<mpq_class>& f) const {
    return level::embed(level::katz_datum(f, g_), c_.p, c_.p_prec);
  }

  Outcome fourier() {
    const auto f = phi();
    LevelFunction<CycRat> t(c_.N, arith::CyclotomicField::get(c_.N));
    if (c_.transform == "p1")
      t = level::p1(f);
    else if (c_.transform == "p2")
      t = level::p2(f);
    else if (c_.transform == "hat")
      t = level::symplectic_hat(f);
    else if (c_.transform == "transpose")
      t = level::lift(level::transpose(f));
    else
      throw ParameterError("--transform must be p1, p2, hat or transpose");
    Outcome o{{{"meta", meta(std::nullopt)}}};
    o.doc["meta"]["transform"] = c_.transform;
    Json rows = Json::array();
    for (int a = 0; a < c_.N; ++a)
      for (int b = 0; b < c_.N; ++b) rows.push_back({{"a", a}, {"b", b}, {"c", io::to_json(t(a, b))}});
    o.doc["rows"] = rows;
    return o;
  }

  Outcome lvalue() {
    if (c_.k < 0) throw ParameterError("lvalue needs k >= 0");
    const auto f = lfunc::second_coordinate(phi());
    Outcome o{{{"meta", meta(std::nullopt)}}};
    o.doc["rows"] = Json::array({{{"s", -c_.k}, {"value", io::to_string(lfunc::l_value_neg(f, c_.k))}}});
    return o;
  }

  Outcome horospherical() {
    if (c_.k < 0) throw ParameterError("horospherical needs k >= 0");
    const auto f = phi();
    const mpq_class bern = lfunc::horospherical_bernoulli(f, c_.k, g_);
    const mpq_class lval = lfunc::horospherical_lvalue(f, c_.k, g_);
    Outcome o{{{"meta", meta(std::nullopt)}}, bern == lval};
    o.doc["rows"] = Json::array({{{"bernoulli", io::to_string(bern)},
                                  {"lvalue", io::to_string(lval)},
                                  {"agree", bern == lval},
                                  {"residue_de_rham", io::to_string(lfunc::residue_de_rham(f, c_.k, g_))}}});
    return o;
  }

  Outcome eis() {
    const auto E = eisenstein::eis_classical(c_.k, phi(), g_, c_.q_prec);
    return {{{"meta", meta(0)}, {"coeffs", io::series_to_json(E)}}};
  }

  Outcome eis_p() {
    const long long r = c_.r.value_or(0);
    const auto E = padic_eis::eis_p({c_.k, r, phi(), g_, c_.p, c_.q_prec, c_.p_prec});
    return {{{"meta", meta(r)}, {"coeffs", io::series_to_json(E)}}};
  }

  measure::EisensteinMeasure measure() const {
    return measure::EisensteinMeasure(c_.p, c_.N, c_.k, c_.q_prec, c_.p_prec);
  }

  Outcome measure_moments() {
    const long long r = c_.r.value_or(0);
    if (r < 0) throw ParameterError("measure-moments needs --moment >= 0");
    const auto mu = measure();
    const auto m = mu.moment(static_cast<int>(r), level::embed(phi(), c_.p, c_.p_prec));
    return {{{"meta", meta(r)}, {"coeffs", io::series_to_json(m)}}};
  }

  static Json integrality_rows(const std::vector<measure::IntegralityRecord>& recs, bool& pass) {
    Json rows = Json::array();
    for (const auto& rec : recs) {
      pass = pass && rec.pass;
      rows.push_back({{"r", rec.r},
                      {"pass", rec.pass},
                      {"min_valuation", rec.min_valuation},
                      {"first_failing_q_power", rec.first_failing_q_power
                                                    ? Json(*rec.first_failing_q_power)
                                                    : Json(nullptr)}});
    }
    return rows;
  }

  Outcome measure_integrality() {
    const long long r_max = c_.r.value_or(6);
    if (r_max < 0) throw ParameterError("measure-integrality needs --moment >= 0");
    const auto mu = measure();
    const auto recs = mu.integrality_check(static_cast<int>(r_max),
                                           level::embed(phi(), c_.p, c_.p_prec));
    Outcome o{{{"meta", meta(r_max)}}};
    o.doc["rows"] = integrality_rows(recs, o.pass);
    return o;
  }

  Outcome measure_support() {
    const auto mu = measure();
    const auto f = level::embed(phi(), c_.p, c_.p_prec);
    const auto unit = arith::RingTraits<PadicCyc>::from_int(f.context(), 1);
    const auto s = mu.integrate(mu.indicator_pZp(unit), f);
    Outcome o{{{"meta", meta(std::nullopt)}}, s.is_zero()};
    o.doc["vanishes"] = o.pass;
    o.doc["coeffs"] = io::series_to_json(s);
    return o;
  }

  Outcome alpha() {
    const auto a = symh::alpha_eis(c_.k, phi(), g_, c_.p, c_.q_prec, c_.p_prec);
    Json slots = Json::array();
    for (const auto& s : a.coeffs) slots.push_back(io::series_to_json(s));
    return {{{"meta", meta(std::nullopt)}, {"slots", slots}}};
  }

  symh::VerificationReport main_theorem(const LevelFunction<mpq_class>& f) const {
    const auto a = symh::alpha_eis(c_.k, f, g_, c_.p, c_.q_prec, c_.p_prec);
    const auto xi = symh::eis_dr_oneform(c_.k, f, g_, c_.q_prec);
    return symh::verify_syntomic_pair(a, xi, c_.p);
  }

  static Json residuals(const symh::VerificationReport& rep) {
    Json out = Json::array();
    for (const auto& r : rep.residuals)
      out.push_back({{"slot", r.slot}, {"q_power", r.q_power}, {"valuation", r.valuation}});
    return out;
  }

  Outcome verify_main_theorem() {
    Outcome o{{{"meta", meta(std::nullopt)}}};
    Json rows = Json::array();
    for (const auto& src : phi_sources()) {
      const auto rep = main_theorem(src.phi);
      o.pass = o.pass && rep.pass;
      rows.push_back({{"phi", src.name},
                      {"pass", rep.pass},
                      {"p_prec", rep.p_prec},
                      {"q_prec", rep.q_prec},
                      {"residuals", residuals(rep)}});
    }
    o.doc["pass"] = o.pass;
    o.doc["rows"] = rows;
    return o;
  }

  Outcome verify_suite() {
    Outcome o{{{"meta", meta(c_.r)}}};
    Json rows = Json::array();
    const auto add = [&](const std::string& phi_name, const std::string& check,
                         std::optional<bool> pass, const std::string& detail) {
      if (pass) o.pass = o.pass && *pass;
      rows.push_back({{"phi", phi_name},
                      {"check", check},
                      {"status", pass ? (*pass ? "pass" : "fail") : "skipped"},
                      {"detail", detail}});
    };
    const auto mu = measure();
    for (const auto& src : phi_sources()) {
      const auto rep = main_theorem(src.phi);
      add(src.name, "main-theorem", rep.pass,
          std::to_string(rep.residuals.size()) + " nonzero residuals");

      if (c_.p > static_cast<unsigned long long>(c_.k + 3)) {
        const long long r = c_.r.value_or(0);
        const auto sh = padic_eis::check_theta_shift({c_.k, r, src.phi, g_, c_.p, c_.q_prec, c_.p_prec});
        add(src.name, "theta-shift", sh.holds,
            sh.first_mismatch ? "first mismatch at q^" + std::to_string(*sh.first_mismatch) : "r=" + std::to_string(r));
      } else {
        add(src.name, "theta-shift", std::nullopt, "needs p > k+3");
      }

      const auto om = padic_eis::check_one_minus_phistar(c_.k, src.phi, g_, c_.p, c_.q_prec, c_.p_prec);
      add(src.name, "one-minus-phi-star", om.holds(),
          om.first_mismatch ? "first mismatch at q^" + std::to_string(*om.first_mismatch)
                            : (om.sigma_shift_match ? "" : "sigma shift fails"));

      const auto datum = padic_datum(src.phi);
      const auto unit = arith::RingTraits<PadicCyc>::from_int(datum.context(), 1);
      add(src.name, "measure-support", mu.integrate(mu.indicator_pZp(unit), datum).is_zero(), "");

      bool integral = true;
      const auto recs = mu.integrality_check(4, datum);
      integrality_rows(recs, integral);
      add(src.name, "integrality", integral, "r <= 4");

      const mpq_class bern = lfunc::horospherical_bernoulli(src.phi, c_.k, g_);
      const mpq_class lval = lfunc::horospherical_lvalue(src.phi, c_.k, g_);
      add(src.name, "horospherical", bern == lval, io::to_string(bern));
    }
    o.doc["pass"] = o.pass;
    o.doc["rows"] = rows;
    return o;
  }

  const JobConfig& c_;
  GL2ModN g_;
};

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  Outcome o;
  try {
    o = Job(config).dispatch();
  } catch (const std::exception& e) {
    err << "eiskron: " << e.what() << '\n';
    return 2;
  }
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.out_path) {
    file.open(*config.out_path);
    if (!file) {
      err << "eiskron: cannot write '" << *config.out_path << "'\n";
      return 2;
    }
    sink = &file;
  }
  if (config.format == Format::Json)
    *sink << o.doc.dump(2) << '\n';
  else
    io::write_csv(*sink, o.doc);
  return o.pass ? 0 : 1;
}

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein-Kronecker series and the p-adic Eisenstein class"};
  app.fallthrough();
  app.require_subcommand(1);

  JobConfig cfg;
  std::string format = "json";
  std::string phi_path, out_path;
  long long moment = 0;
  app.add_option("--p", cfg.p, "odd prime p")->check(CLI::PositiveNumber);
  app.add_option("--level", cfg.N, "level N >= 3");
  app.add_option("--weight", cfg.k, "weight parameter k");
  auto* moment_opt = app.add_option("--moment", moment, "moment r");
  app.add_option("--q-prec", cfg.q_prec, "q-adic precision Q");
  app.add_option("--p-prec", cfg.p_prec, "p-adic precision M");
  app.add_option("--g", cfg.g, "matrix \"a,b;c,d\" in GL2(Z/N)");
  app.add_option("--phi", phi_path, "phi table file");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "output file");
  app.add_option("--transform", cfg.transform, "fourier: p1, p2, hat or transpose")
      ->check(CLI::IsMember({"p1", "p2", "hat", "transpose"}));

  const std::pair<const char*, const char*> commands[] = {
      {"fourier", "apply P1, P2, the symplectic transform or the transpose to phi"},
      {"lvalue", "L(phi, -k) for the second-coordinate restriction of phi"},
      {"horospherical", "horospherical value, both closed forms"},
      {"eis", "q-expansion of the classical Eisenstein series E_k(phi, g)"},
      {"eis-p", "q-expansion of the p-adic series E^(p) mod p^M"},
      {"measure-moments", "moments r = 0..--moment of the Eisenstein measure"},
      {"measure-integrality", "integrality of the binomial moments"},
      {"measure-support", "check that the measure is supported on units"},
      {"alpha", "components of the p-adic section alpha"},
      {"verify-main-theorem", "check nabla(alpha) = (1 - Frobenius) xi"},
      {"verify-suite", "main theorem plus the auxiliary identities"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (*moment_opt) cfg.r = moment;
  if (!phi_path.empty()) cfg.phi_path = phi_path;
  if (!out_path.empty()) cfg.out_path = out_path;
  cfg.format = format == "csv" ? Format::Csv : Format::Json;
  return run(cfg, std::cout, std::cerr);
}

}  // namespace eiskron::cli
