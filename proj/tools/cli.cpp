#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "degenkit/abelian.hpp"
#include "degenkit/blowup.hpp"
#include "degenkit/catalog.hpp"
#include "degenkit/error.hpp"
#include "degenkit/kulikov.hpp"
#include "degenkit/matrix_io.hpp"
#include "degenkit/model_io.hpp"
#include "degenkit/mukai.hpp"

namespace degenkit::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxInputBytes = 64u << 20;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  std::string text;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
    text.append(buffer, static_cast<std::size_t>(in.gcount()));
    if (text.size() > kMaxInputBytes) throw Error(Errc::Io, "'" + path + "' exceeds 64 MiB");
  }
  if (in.bad()) throw Error(Errc::Io, "read error on '" + path + "'");
  return text;
}

struct Options {
  std::string catalog_path;
  std::string report = "text";
  std::string model;
  std::string class_text;
  std::string center;
  std::string new_id;
  std::string in;
  std::string rho = "sgt";
  std::string matrix;
  std::string lattice = "auto";
  std::string period_x;
  std::string period_y;
  std::string hom;
  std::string orbits;
};

struct Report {
  std::string verb;
  Json inputs = Json::object();
  Json result;
  std::string text;  // canonical standard output
  std::vector<std::string> warnings;
  int code = kOk;
};

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {}

  const Catalog& catalog() {
    if (!catalog_) {
      std::string path = opt_.catalog_path;
      if (path.empty()) {
        if (const char* env = std::getenv("DEGENKIT_CATALOG"); env != nullptr && *env != '\0') path = env;
      }
      if (path.empty()) {
        catalog_ = Catalog::builtin();
      } else {
        catalog_ = Catalog::parse(read_file(path));
      }
    }
    return *catalog_;
  }

  struct LoadedModel {
    SncModel model;
    bool k3 = false;
    ModelKind kind = ModelKind::Snc;
  };

  /// Reads an snc-model file or builds the model described by a Kulikov file.
  LoadedModel load_model(const std::string& path, Report& report) {
    const kv::Document doc = kv::Document::parse(read_file(path));
    const ModelKind kind = model_kind(doc);
    switch (kind) {
      case ModelKind::Snc: {
        ModelFile file = parse_model(doc);
        return {std::move(file.model), file.k3_family, kind};
      }
      case ModelKind::KulikovII:
        return {build_type_ii(parse_type_ii(doc), catalog()), true, kind};
      case ModelKind::KulikovIII: {
        TypeIIIModel built = build_type_iii(parse_type_iii(doc));
        for (auto& w : built.warnings) report.warnings.push_back(std::move(w));
        return {std::move(built.model), true, kind};
      }
    }
    throw Error(Errc::Parse, "unsupported model kind");
  }

  /// Violations make the class computations meaningless; report them as a
  /// domain error before computing anything.
  void require_valid(const SncModel& model) {
    const auto violations = validate(model, catalog());
    if (violations.empty()) return;
    std::string text;
    for (const auto& v : violations) text += v.to_string() + "\n";
    throw Error(Errc::InvalidModel, "model fails validation\n" + text);
  }

 private:
  const Options& opt_;
  std::optional<Catalog> catalog_;
};

void add_k3_warnings(const SgtElement& rho, bool k3, Report& report) {
  if (!k3) return;
  for (auto& w : k3_euler_warnings(rho)) report.warnings.push_back(std::move(w));
}

IntegerLattice pick_lattice(const std::string& name, std::size_t rank) {
  if (name == "mukai" || (name == "auto" && rank == mukai_basis::kRank)) return mukai_lattice();
  if (name == "k3" || (name == "auto" && rank == mukai_basis::kH2Rank)) return k3_lattice();
  throw Error(Errc::DimensionMismatch, "no lattice of rank " + std::to_string(rank) + " (expected 22 or 24)");
}

PeriodPoint load_period(const std::string& path) {
  const RatMatrix m = parse_rational_matrix(read_file(path));
  if (m.rows() != 2) throw Error(Errc::Parse, "period file '" + path + "' must hold a 2 x n matrix (rows re, im)");
  PeriodPoint p;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    p.re.push_back(m(0, c));
    p.im.push_back(m(1, c));
  }
  return p;
}

void set_bool_result(Report& r, const std::string& name, bool value) {
  r.text = name + ": " + (value ? "true" : "false") + "\n";
  r.result = value;
  r.code = value ? kOk : kDomainError;
}

void run_verb(const std::string& verb, const Options& opt, Session& session, Report& r) {
  r.verb = verb;
  if (verb == "validate") {
    r.inputs["model"] = opt.model;
    const auto loaded = session.load_model(opt.model, r);
    const auto violations = validate(loaded.model, session.catalog());
    Json list = Json::array();
    for (const auto& v : violations) {
      r.text += v.to_string() + "\n";
      list.push_back(v.to_string());
    }
    if (violations.empty()) r.text = "valid\n";
    r.result = violations.empty() ? Json("valid") : list;
    r.code = violations.empty() ? kOk : kDomainError;
  } else if (verb == "rho-var" || verb == "rho-sgt" || verb == "fiber-class") {
    r.inputs["model"] = opt.model;
    const auto loaded = session.load_model(opt.model, r);
    session.require_valid(loaded.model);
    std::string value;
    if (verb == "rho-var") {
      value = rho_var(loaded.model).to_string();
    } else if (verb == "fiber-class") {
      value = special_fiber_class(loaded.model).to_string();
    } else {
      const SgtElement rho = rho_sgt(loaded.model, session.catalog());
      add_k3_warnings(rho, loaded.k3, r);
      value = rho.to_string();
    }
    r.text = value + "\n";
    r.result = value;
  } else if (verb == "euler") {
    Integer e;
    if (!opt.model.empty()) {
      r.inputs["model"] = opt.model;
      const auto loaded = session.load_model(opt.model, r);
      session.require_valid(loaded.model);
      e = euler(special_fiber_class(loaded.model), session.catalog());
    } else {
      r.inputs["class"] = opt.class_text;
      e = euler(VarElement::parse(opt.class_text), session.catalog());
    }
    r.text = e.get_str() + "\n";
    r.result = e.get_str();
  } else if (verb == "blowup") {
    r.inputs["model"] = opt.model;
    r.inputs["center"] = opt.center;
    r.inputs["new_id"] = opt.new_id;
    const auto loaded = session.load_model(opt.model, r);
    session.require_valid(loaded.model);
    if (!is_valid_component_id(opt.new_id)) throw Error(Errc::IdCollision, "invalid component id '" + opt.new_id + "'");
    const SncModel blown = blow_up_stratum(loaded.model, BlowupMove{parse_face(opt.center), ComponentId(opt.new_id)});
    r.text = write_model(blown, loaded.k3);
    r.result = r.text;
  } else if (verb == "identity-check") {
    r.inputs["model"] = opt.model;
    const auto loaded = session.load_model(opt.model, r);
    session.require_valid(loaded.model);
    const VarElement var = rho_var(loaded.model);
    const VarElement bundles = rho_var_via_bundles(loaded.model);
    const SgtElement pushed = mu(var, session.catalog());
    const SgtElement sgt = rho_sgt(loaded.model, session.catalog());
    const bool ok = var == bundles && pushed == sgt;
    r.text = "rho_var = " + var.to_string() + "\n" + "rho_var_via_bundles = " + bundles.to_string() + "\n" +
             "mu(rho_var) = " + pushed.to_string() + "\n" + "rho_sgt = " + sgt.to_string() + "\n" +
             "identities: " + (ok ? "hold" : "FAIL") + "\n";
    r.result = Json{{"rho_var", var.to_string()},
                    {"rho_var_via_bundles", bundles.to_string()},
                    {"mu_rho_var", pushed.to_string()},
                    {"rho_sgt", sgt.to_string()},
                    {"holds", ok}};
    r.code = ok ? kOk : kDomainError;
  } else if (verb == "kulikov") {
    r.inputs["in"] = opt.in;
    r.inputs["rho"] = opt.rho;
    const auto loaded = session.load_model(opt.in, r);
    if (loaded.kind == ModelKind::Snc) throw Error(Errc::Parse, "'" + opt.in + "' is not a kulikov-ii or kulikov-iii file");
    session.require_valid(loaded.model);
    std::string value;
    if (opt.rho == "var") {
      value = rho_var(loaded.model).to_string();
    } else {
      const SgtElement rho = rho_sgt(loaded.model, session.catalog());
      add_k3_warnings(rho, true, r);
      value = rho.to_string();
    }
    r.text = value + "\n";
    r.result = value;
  } else if (verb == "classify-monodromy") {
    r.inputs["matrix"] = opt.matrix;
    const std::string type(to_string(classify_monodromy(parse_int_matrix(read_file(opt.matrix)))));
    r.text = type + "\n";
    r.result = type;
  } else if (verb == "check-isometry") {
    r.inputs["matrix"] = opt.matrix;
    r.inputs["lattice"] = opt.lattice;
    const IntMatrix m = parse_int_matrix(read_file(opt.matrix));
    set_bool_result(r, "isometry", is_isometry(m, pick_lattice(opt.lattice, m.rows())));
  } else if (verb == "check-hodge-isometry") {
    r.inputs["matrix"] = opt.matrix;
    r.inputs["period_x"] = opt.period_x;
    r.inputs["period_y"] = opt.period_y;
    const IntMatrix m = parse_int_matrix(read_file(opt.matrix));
    const PeriodPoint x = load_period(opt.period_x);
    const PeriodPoint y = load_period(opt.period_y);
    set_bool_result(r, "hodge-isometry", is_hodge_isometry(m, x, y, mukai_lattice()));
  } else if (verb == "check-symplectic") {
    r.inputs["hom"] = opt.hom;
    set_bool_result(r, "symplectic", is_symplectic(parse_block_hom(read_file(opt.hom))));
  } else if (verb == "kunnemann") {
    r.inputs["orbits"] = opt.orbits;
    const KunnemannOrbitData data = parse_orbit_data(read_file(opt.orbits));
    const KunnemannClass k = kunnemann_rho(data, session.catalog());
    if (!data.good_reduction && !k.sgt.is_zero()) {
      r.warnings.push_back("mu(V) is " + k.sgt.to_string() + ", expected 0 for a degenerating abelian variety");
    }
    r.text = "V = " + k.var.to_string() + "\n" + "mu(V) = " + k.sgt.to_string() + "\n" +
             "V mod (L-1) = " + k.reduced.to_string() + "\n";
    r.result = Json{{"V", k.var.to_string()}, {"mu_V", k.sgt.to_string()}, {"V_mod_L_minus_1", k.reduced.to_string()}};
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Specialization maps of Grothendieck classes from snc degeneration data"};
  app.name("degenkit");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--catalog", opt.catalog_path, "Catalog file (default: $DEGENKIT_CATALOG, then the built-in catalog)");
  app.add_option("--report", opt.report, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto model_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--model", opt.model, "Model or Kulikov data file")->required();
    return sub;
  };
  model_cmd("validate", "Check every model invariant");
  model_cmd("rho-var", "Specialization in K0(Var)");
  model_cmd("rho-sgt", "Specialization in K0(sGT)");
  model_cmd("fiber-class", "Class of the reduced special fiber");
  model_cmd("identity-check", "Compare rho_var with its bundle form and mu(rho_var) with rho_sgt");
  CLI::App* euler_cmd = app.add_subcommand("euler", "Euler number of a class or of a model's special fiber");
  auto* model_opt = euler_cmd->add_option("--model", opt.model, "Model file");
  auto* class_opt = euler_cmd->add_option("--class", opt.class_text, "Class in the canonical term grammar");
  model_opt->excludes(class_opt);
  euler_cmd->require_option(1);
  CLI::App* blowup_cmd = model_cmd("blowup", "Blow up a closed stratum and print the new model");
  blowup_cmd->add_option("--center", opt.center, "Comma-separated component ids")->required();
  blowup_cmd->add_option("--new-id", opt.new_id, "Id of the exceptional component")->required();
  CLI::App* kulikov_cmd = app.add_subcommand("kulikov", "Build a Kulikov model and compute rho");
  kulikov_cmd->add_option("--in", opt.in, "kulikov-ii or kulikov-iii file")->required();
  kulikov_cmd->add_option("--rho", opt.rho, "Which specialization")->check(CLI::IsMember({"sgt", "var"}));
  CLI::App* classify_cmd = app.add_subcommand("classify-monodromy", "Kulikov type from a monodromy operator");
  classify_cmd->add_option("--matrix", opt.matrix, "Integer matrix file")->required();
  CLI::App* iso_cmd = app.add_subcommand("check-isometry", "Is the matrix an isometry of the K3 or Mukai lattice");
  iso_cmd->add_option("--matrix", opt.matrix, "Integer matrix file")->required();
  iso_cmd->add_option("--lattice", opt.lattice, "Lattice (auto picks by rank)")
      ->check(CLI::IsMember({"auto", "k3", "mukai"}));
  CLI::App* hodge_cmd = app.add_subcommand("check-hodge-isometry", "Does the isometry carry one period to the other");
  hodge_cmd->add_option("--matrix", opt.matrix, "24 x 24 integer matrix file")->required();
  hodge_cmd->add_option("--period-x", opt.period_x, "2 x 24 rational matrix (re; im)")->required();
  hodge_cmd->add_option("--period-y", opt.period_y, "2 x 24 rational matrix (re; im)")->required();
  CLI::App* symp_cmd = app.add_subcommand("check-symplectic", "Is f~ the inverse of f");
  symp_cmd->add_option("--hom", opt.hom, "ALPHA/BETA/GAMMA/DELTA block file")->required();
  CLI::App* kun_cmd = app.add_subcommand("kunnemann", "Special fiber class of a Kunnemann model");
  kun_cmd->add_option("--orbits", opt.orbits, "Orbit data file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  const bool json = opt.report == "json";
  Report report;
  const std::string verb = app.get_subcommands().front()->get_name();
  std::string error;
  Session session(opt);
  try {
    run_verb(verb, opt, session, report);
  } catch (const Error& e) {
    report.code = is_input_error(e.code()) ? kInputError : kDomainError;
    error = e.what();
  } catch (const std::exception& e) {
    report.code = kInputError;
    error = std::string("input rejected: ") + e.what();
  }
  report.verb = verb;

  if (json) {
    Json doc;
    doc["verb"] = report.verb;
    doc["inputs"] = report.inputs;
    doc["result"] = error.empty() ? report.result : Json(nullptr);
    doc["warnings"] = report.warnings;
    doc["exit_code"] = report.code;
    if (!error.empty()) doc["error"] = error;
    out << doc.dump(2, ' ', false, Json::error_handler_t::replace) << "\n";
  } else {
    out << report.text;
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    if (!error.empty()) err << "error: " << error << "\n";
  }
  return report.code;
}

}  // namespace degenkit::cli
