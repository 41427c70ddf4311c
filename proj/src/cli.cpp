#include "fedosov/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "fedosov/chart_examples.hpp"
#include "fedosov/errors.hpp"
#include "fedosov/serialization.hpp"

namespace fedosov {

namespace {

struct Outcome {
  VerificationReport report;
  Json artifacts = Json::object();
  std::vector<std::string> notes;
};

AmbientSpace parse_space(const std::string& text) {
  if (text == "cotorsion") return AmbientSpace::Cotorsion;
  if (text == "torsion") return AmbientSpace::Torsion;
  throw SchemaError("space must be 'cotorsion' or 'torsion'");
}

/// Loads a (0,3) tensor, lowering (1,2) input with the given convention.
PointTensor load_lowered(const std::string& path, std::size_t declared_n, const std::string& convention) {
  PointTensor t = tensor_from_json(read_json_file(path));
  if (declared_n != 0 && t.dim() != 2 * declared_n) {
    throw SchemaError("tensor has n = " + std::to_string(t.dim() / 2) + " but --n " + std::to_string(declared_n) +
                      " was given");
  }
  const SymplecticSpace v(t.dim() / 2);
  if (t.slots() == covariant_slots(3)) {
    if (!convention.empty()) throw SchemaError("--convention only applies to (1,2) tensors");
    return t;
  }
  if (t.slots() == endomorphism_valued_slots(2)) {
    if (convention == "cotorsion") return cotorsion_lower(v, t);
    if (convention == "torsion") return torsion_lower(v, t);
    throw SchemaError("a (1,2) tensor needs --convention cotorsion or --convention torsion");
  }
  throw SchemaError("expected a (0,3) or (1,2) tensor, got valence " + valence_string(t.slots()));
}

Chart load_chart(const std::string& ref) {
  const std::string prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) return load_builtin(ref.substr(prefix.size()));
  return chart_from_json(read_json_file(ref));
}

Point parse_point(const Chart& c, const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw SchemaError("point entries must look like name=value");
    const std::string name = part.substr(0, eq);
    c.coordinate_index(name);
    p[name] = Rational::parse(part.substr(eq + 1));
  }
  for (const auto& name : c.coords) {
    if (!p.count(name)) throw SchemaError("point has no value for coordinate '" + name + "'");
  }
  return p;
}

Json type_set_json(const std::set<SubmoduleLabel>& set) {
  Json out = Json::array();
  for (auto l : set) out.push_back(to_string(l));
  return out;
}

void print_human(std::ostream& out, const std::string& command, const Outcome& o) {
  out << command << "\n";
  for (const auto& c : o.report.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.witness) out << ": " << *c.witness;
    out << "\n";
  }
  for (const auto& [key, value] : o.artifacts.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& n : o.notes) out << "note: " << n << "\n";
}

Outcome cmd_dims(std::size_t n_max) {
  Outcome o;
  const auto rows = dimension_table(n_max);
  Json table = Json::array();
  for (const auto& row : rows) {
    Json entry;
    entry["n"] = row.n;
    for (const auto& [label, dim] : row.computed) {
      entry[to_string(label)] = {{"computed", dim}, {"closed_form", row.closed_form.at(label)}};
      const bool valid = !(row.n == 1 && (label == SubmoduleLabel::T3 || label == SubmoduleLabel::T4));
      if (valid) {
        o.report.add("n=" + std::to_string(row.n) + " " + to_string(label) + " dimension matches closed form",
                     static_cast<long>(dim) == row.closed_form.at(label),
                     "computed " + std::to_string(dim) + ", closed form " + std::to_string(row.closed_form.at(label)));
      } else if (static_cast<long>(dim) != row.closed_form.at(label)) {
        o.notes.push_back("n=1: " + to_string(label) + " closed form gives " +
                          std::to_string(row.closed_form.at(label)) + ", computed dimension is " +
                          std::to_string(dim) + "; T1 already fills the torsion space");
      }
    }
    entry["cotorsion_ambient"] = row.cotorsion_ambient;
    entry["cotorsion_rank"] = row.cotorsion_rank;
    entry["torsion_ambient"] = row.torsion_ambient;
    entry["torsion_rank"] = row.torsion_rank;
    table.push_back(entry);
    o.report.add("n=" + std::to_string(row.n) + " cotorsion classes span the ambient space",
                 row.cotorsion_rank == row.cotorsion_ambient);
    if (auto d = n2_torsion_discrepancy(row)) {
      o.notes.push_back(*d);
    } else if (row.n != 2) {
      o.report.add("n=" + std::to_string(row.n) + " torsion classes span the ambient space",
                   row.torsion_rank == row.torsion_ambient);
    }
  }
  o.artifacts["table"] = table;
  return o;
}

void print_dims_table(std::ostream& out, const Json& table) {
  const std::vector<std::string> labels{"S1", "S2", "S3", "T1", "T2", "T3", "T4"};
  out << std::left << std::setw(4) << "n";
  for (const auto& l : labels) out << std::setw(12) << l;
  out << "S-sum/amb   T-sum/amb\n";
  for (const auto& row : table) {
    out << std::setw(4) << row["n"].get<std::size_t>();
    for (const auto& l : labels) {
      const auto computed = row[l]["computed"].get<std::size_t>();
      const auto closed = row[l]["closed_form"].get<long>();
      std::string cell = std::to_string(computed);
      if (static_cast<long>(computed) != closed) cell += " (" + std::to_string(closed) + ")";
      out << std::setw(12) << cell;
    }
    out << std::setw(12)
        << (std::to_string(row["cotorsion_rank"].get<std::size_t>()) + "/" +
            std::to_string(row["cotorsion_ambient"].get<std::size_t>()))
        << (std::to_string(row["torsion_rank"].get<std::size_t>()) + "/" +
            std::to_string(row["torsion_ambient"].get<std::size_t>()))
        << "\n";
  }
}

Outcome cmd_decompose(const std::string& path, AmbientSpace space, std::size_t n, const std::string& convention,
                      bool parts) {
  const PointTensor t = load_lowered(path, n, convention);
  const std::size_t half = t.dim() / 2;
  const auto result = decompose(space, t, half);
  Outcome o;
  o.artifacts["type_set"] = type_set_json(result.type_set);
  if (parts) {
    PointTensor sum(t.dim(), covariant_slots(3));
    Json js = Json::object();
    for (const auto& [label, part] : result.parts) {
      js[to_string(label)] = tensor_to_json(part);
      sum += part;
      o.report.add("part " + to_string(label) + " lies in its class", satisfies_class_predicate(label, part, half));
    }
    o.report.add_zero("parts sum to the input", nonzero_witness(sum - t));
    o.artifacts["parts"] = js;
  }
  return o;
}

Outcome cmd_symplectify(const std::string& path, std::size_t n, const std::string& convention) {
  const PointTensor t = load_lowered(path, n, convention);
  const std::size_t half = t.dim() / 2;
  Outcome o;
  try {
    const PointTensor s = symplectify_torsion(t, half);
    o.report.add_zero("A2(-S) reproduces the torsion", nonzero_witness(map_A2(-s) - t));
    o.artifacts["S"] = tensor_to_json(s);
    o.artifacts["S_endomorphism_form"] = tensor_to_json(cotorsion_raise(SymplecticSpace(half), s));
  } catch (const NoSolutionError& e) {
    o.report.add("torsion lies in T1 + T2", false, std::string(e.what()));
  }
  return o;
}

Outcome cmd_check_model(const std::string& path) {
  Outcome o;
  o.report = check_model_axioms(model_from_json(read_json_file(path)));
  return o;
}

Outcome cmd_nomizu(const std::string& path) {
  const InfinitesimalModel m = model_from_json(read_json_file(path));
  Outcome o;
  o.report = check_model_axioms(m);
  if (!o.report.all_pass()) return o;
  const auto g = nomizu_algebra(m);
  const auto jac = g.algebra.jacobi_failure();
  o.report.add("Jacobi identity", !jac.has_value(),
               jac ? std::optional<std::string>("basis triple " + format_index(*jac)) : std::nullopt);
  o.artifacts["h0_dimension"] = g.h.size();
  Json h = Json::array();
  for (const auto& a : g.h) h.push_back(matrix_to_json(a));
  o.artifacts["h0"] = h;
  o.artifacts["algebra"] = lie_algebra_to_json(g.algebra);
  return o;
}

Json bianchi_json(const BianchiType& b) {
  Json out;
  out["type"] = b.type;
  Json params = Json::array();
  for (const auto& p : b.parameters) params.push_back(p.to_string());
  out["parameters"] = params;
  if (b.invariant) out["invariant"] = b.invariant->to_string();
  out["derived_dimension"] = b.derived_dimension;
  return out;
}

Outcome cmd_transvection(const std::string& path) {
  const InfinitesimalModel m = model_from_json(read_json_file(path));
  Outcome o;
  o.report = check_model_axioms(m);
  if (!o.report.all_pass()) return o;
  const auto tv = transvection_algebra(m);
  const auto jac = tv.algebra.jacobi_failure();
  o.report.add("Jacobi identity", !jac.has_value(),
               jac ? std::optional<std::string>("basis triple " + format_index(*jac)) : std::nullopt);
  o.report.add("transvection algebra contained in h0", tv.contained_in_h0);
  o.artifacts["dimension"] = tv.h.size();
  o.artifacts["algebra"] = lie_algebra_to_json(tv.algebra);
  if (tv.algebra.dim() == 3 && !jac) {
    o.artifacts["bianchi"] = bianchi_json(bianchi_classify(tv.algebra));
  }
  return o;
}

Outcome cmd_bianchi(const std::string& path) {
  const auto g = lie_algebra_from_json(read_json_file(path));
  Outcome o;
  const auto anti = g.antisymmetry_failure();
  o.report.add("antisymmetry", !anti.has_value(),
               anti ? std::optional<std::string>("structure constant " + format_index(*anti)) : std::nullopt);
  const auto jac = g.jacobi_failure();
  o.report.add("Jacobi identity", !jac.has_value(),
               jac ? std::optional<std::string>("basis triple " + format_index(*jac)) : std::nullopt);
  if (o.report.all_pass()) {
    const auto b = bianchi_classify(g);
    o.artifacts = bianchi_json(b);
  }
  return o;
}

Outcome cmd_verify_chart(const std::string& ref, const std::string& suite_text) {
  Suite suite = Suite::All;
  if (suite_text == "as") {
    suite = Suite::AS;
  } else if (suite_text == "linear-type") {
    suite = Suite::LinearType;
  } else if (suite_text != "all") {
    throw SchemaError("--suite must be as, linear-type or all");
  }
  Outcome o;
  o.report = verify_chart(load_chart(ref), suite);
  return o;
}

Outcome cmd_linear_type(const std::string& ref, std::string xi_name) {
  const Chart c = load_chart(ref);
  if (xi_name.empty()) {
    if (c.structure.kind != StructureSpec::Kind::LinearType) throw SchemaError("give --xi or a linear-type chart");
    xi_name = c.structure.field;
  }
  const FieldTensor& xi = c.field(xi_name);
  Outcome o;
  o.report = verify_linear_type_suite(c, xi);
  const FieldTensor s = linear_type_structure(c, xi);
  Json comps = Json::object();
  for (std::size_t f = 0; f < s.size(); ++f) {
    if (s.data()[f].is_zero()) continue;
    const auto idx = s.multi_index(f);
    comps["S_" + c.coords[idx[0]] + " d" + c.coords[idx[1]] + " -> d" + c.coords[idx[2]]] = s.data()[f].to_string();
  }
  o.artifacts["S"] = comps;
  o.artifacts["xi_perp"] = Json::array();
  const FieldTensor perp = auto_xi_perp(c, xi);
  for (std::size_t i = 0; i < c.dim(); ++i) o.artifacts["xi_perp"].push_back(perp(i).to_string());
  const auto h = hamiltonian_oneform(c, xi);
  Json alpha = Json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) alpha.push_back(h.alpha(i).to_string());
  o.artifacts["i_xi_omega"] = alpha;
  return o;
}

Outcome cmd_obstruction(const std::string& ref, const std::string& at, const std::string& convention) {
  PointTensor s;
  PointTensor omega;
  const Json j = ref.rfind("builtin:", 0) == 0 ? Json() : read_json_file(ref);
  if (ref.rfind("builtin:", 0) == 0 || j.contains("coords")) {
    if (at.empty()) throw SchemaError("a chart input needs --at");
    const Chart c = ref.rfind("builtin:", 0) == 0 ? load_chart(ref) : chart_from_json(j);
    const Point p = parse_point(c, at);
    s = evaluate(structure_tensor(c), p);
    omega = evaluate(c.omega, p);
  } else {
    s = tensor_from_json(j);
    if (s.slots() != endomorphism_valued_slots(2)) throw SchemaError("obstruction needs a (1,2) structure tensor");
    if (!convention.empty() && convention != "cotorsion") throw SchemaError("structure tensors use --convention cotorsion");
    omega = SymplecticSpace(s.dim() / 2).omega_tensor();
  }
  const auto verdict = metric_obstruction(s, omega);
  Outcome o;
  o.artifacts["verdict"] = verdict.degenerate ? "degenerate" : (verdict.obstructed ? "obstructed" : "not obstructed");
  Json xi = Json::array();
  for (const auto& v : verdict.xi) xi.push_back(v.to_string());
  o.artifacts["xi"] = xi;
  o.artifacts["solution_dimension"] = verdict.solution_dimension;
  o.artifacts["determinant"] = verdict.determinant.to_string();
  o.notes.push_back(verdict.summary);
  return o;
}

Outcome cmd_model_at_point(const std::string& ref, const std::string& at) {
  const Chart c = load_chart(ref);
  if (at.empty()) throw SchemaError("model-at-point needs --at");
  const auto pm = model_at_point(c, structure_tensor(c), parse_point(c, at));
  Outcome o;
  o.report = check_model_axioms(pm.model);
  o.artifacts["change_of_basis"] = matrix_to_json(pm.change_of_basis);
  o.artifacts["model"] = model_to_json(pm.model);
  return o;
}

Outcome cmd_examples(const std::string& dir) {
  Outcome o;
  Json search = Json::array();
  for (const auto& p : example1_sign_search()) {
    search.push_back({{"signs", p.signs}, {"torsion_free", p.torsion_free}, {"parallel_omega", p.parallel_omega}});
  }
  o.artifacts["builtin"] = {"builtin:example1", "builtin:example1-emended", "builtin:example2", "builtin:flat"};
  o.artifacts["example1_sign_search"] = search;
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    const std::vector<std::pair<std::string, Chart>> charts{{"fedosov_example1.json", load_example(1)},
                                                            {"fedosov_example1_emended.json", load_example1_emended()},
                                                            {"fedosov_example2.json", load_example(2)}};
    Json written = Json::array();
    for (const auto& [name, chart] : charts) {
      const auto path = std::filesystem::path(dir) / name;
      std::ofstream f(path);
      if (!f) throw SchemaError("cannot write '" + path.string() + "'");
      f << chart_to_json(chart).dump(2) << "\n";
      written.push_back(path.string());
    }
    o.artifacts["written"] = written;
  }
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact symplectic tensor decompositions, homogeneous models and chart verification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable report");

  std::size_t n_max = 3;
  auto* dims = app.add_subcommand("dims", "dimension table of the submodules");
  dims->add_option("--n-max", n_max, "largest n")->check(CLI::Range(1, 6));

  std::string input, space_text = "cotorsion", convention, suite = "all", at, xi_name, dir;
  std::size_t n = 0;
  auto tensor_options = [&](CLI::App* sub) {
    sub->add_option("input", input, "tensor JSON file")->required();
    sub->add_option("--n", n, "declared n");
    sub->add_option("--convention", convention, "lowering for (1,2) input: cotorsion or torsion");
  };
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose into submodule parts");
  tensor_options(decompose_cmd);
  decompose_cmd->add_option("--space", space_text, "cotorsion or torsion");
  auto* classify_cmd = app.add_subcommand("classify", "type set of a tensor");
  tensor_options(classify_cmd);
  classify_cmd->add_option("--space", space_text, "cotorsion or torsion");
  auto* symplectify_cmd = app.add_subcommand("symplectify", "S with A2(-S) equal to a torsion tensor");
  tensor_options(symplectify_cmd);

  auto* check_model_cmd = app.add_subcommand("check-model", "infinitesimal model axioms");
  auto* nomizu_cmd = app.add_subcommand("nomizu", "Nomizu construction");
  auto* transvection_cmd = app.add_subcommand("transvection", "transvection algebra");
  auto* bianchi_cmd = app.add_subcommand("bianchi", "Bianchi type of a 3-dimensional Lie algebra");
  for (auto* sub : {check_model_cmd, nomizu_cmd, transvection_cmd, bianchi_cmd}) {
    sub->add_option("input", input, "JSON file")->required();
  }

  auto* verify_cmd = app.add_subcommand("verify-chart", "verify a coordinate chart");
  verify_cmd->add_option("chart", input, "chart JSON file or builtin:NAME")->required();
  verify_cmd->add_option("--suite", suite, "as, linear-type or all");
  auto* linear_cmd = app.add_subcommand("linear-type", "linear-type identities for a vector field");
  linear_cmd->add_option("chart", input, "chart JSON file or builtin:NAME")->required();
  linear_cmd->add_option("--xi", xi_name, "name of the vector field");
  auto* obstruction_cmd = app.add_subcommand("obstruction", "metric obstruction at a point");
  obstruction_cmd->add_option("input", input, "chart, builtin:NAME or (1,2) tensor JSON")->required();
  obstruction_cmd->add_option("--at", at, "point, e.g. x=1,y=0");
  obstruction_cmd->add_option("--convention", convention, "tensor input convention (cotorsion)");
  auto* point_cmd = app.add_subcommand("model-at-point", "infinitesimal model of a chart at a point");
  point_cmd->add_option("chart", input, "chart JSON file or builtin:NAME")->required();
  point_cmd->add_option("--at", at, "point, e.g. x=1,y=0")->required();
  auto* examples_cmd = app.add_subcommand("examples", "built-in example charts");
  examples_cmd->add_option("--write", dir, "directory for fixture files");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Outcome o;
    if (command == "dims") {
      o = cmd_dims(n_max);
    } else if (command == "decompose") {
      o = cmd_decompose(input, parse_space(space_text), n, convention, true);
    } else if (command == "classify") {
      o = cmd_decompose(input, parse_space(space_text), n, convention, false);
    } else if (command == "symplectify") {
      o = cmd_symplectify(input, n, convention);
    } else if (command == "check-model") {
      o = cmd_check_model(input);
    } else if (command == "nomizu") {
      o = cmd_nomizu(input);
    } else if (command == "transvection") {
      o = cmd_transvection(input);
    } else if (command == "bianchi") {
      o = cmd_bianchi(input);
    } else if (command == "verify-chart") {
      o = cmd_verify_chart(input, suite);
    } else if (command == "linear-type") {
      o = cmd_linear_type(input, xi_name);
    } else if (command == "obstruction") {
      o = cmd_obstruction(input, at, convention);
    } else if (command == "model-at-point") {
      o = cmd_model_at_point(input, at);
    } else {
      o = cmd_examples(dir);
    }

    if (json) {
      Json report = report_to_json(command, o.report, o.artifacts);
      if (!o.notes.empty()) report["notes"] = o.notes;
      out << report.dump(2) << "\n";
    } else if (command == "dims") {
      print_dims_table(out, o.artifacts["table"]);
      Outcome rest = o;
      rest.artifacts = Json::object();
      print_human(out, command, rest);
    } else {
      print_human(out, command, o);
    }
    return o.report.all_pass() ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace fedosov
