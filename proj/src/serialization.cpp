#include "fedosov/serialization.hpp"

#include <fstream>
#include <sstream>

#include "fedosov/errors.hpp"

namespace fedosov {

namespace {

std::vector<std::size_t> parse_key(const std::string& key, std::size_t arity, std::size_t dim) {
  std::vector<std::size_t> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(part, &pos);
    } catch (const std::exception&) {
      throw SchemaError("bad component index '" + key + "'");
    }
    if (pos != part.size()) throw SchemaError("bad component index '" + key + "'");
    if (value < 1 || static_cast<std::size_t>(value) > dim) {
      throw SchemaError("component index '" + key + "' out of range 1.." + std::to_string(dim));
    }
    out.push_back(static_cast<std::size_t>(value - 1));
  }
  if (out.size() != arity) {
    throw SchemaError("component index '" + key + "' needs " + std::to_string(arity) + " entries");
  }
  return out;
}

std::string make_key(const std::vector<std::size_t>& index) {
  std::string out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(index[i] + 1);
  }
  return out;
}

Rational rational_value(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw SchemaError("component values must be strings \"p/q\" or integers");
}

std::string text_value(const Json& v) {
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (v.is_string()) return v.get<std::string>();
  throw SchemaError("expected rational-function text");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t half_dim_of(const Json& j) {
  const Json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<long>() < 1) throw SchemaError("'n' must be a positive integer");
  return static_cast<std::size_t>(n.get<long>());
}

Json field_components(const FieldTensor& t) {
  Json out = Json::object();
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (!t.data()[f].is_zero()) out[make_key(t.multi_index(f))] = t.data()[f].to_string();
  }
  return out;
}

FieldTensor field_from_components(const Chart& c, const Json& components, std::vector<Slot> slots) {
  FieldTensor t(c.dim(), std::move(slots));
  if (!components.is_object()) throw SchemaError("components must be an object");
  for (const auto& [key, value] : components.items()) {
    t.at(parse_key(key, t.order(), c.dim())) = c.parse(text_value(value));
  }
  return t;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string valence_string(const std::vector<Slot>& slots) {
  std::size_t up = 0;
  for (auto s : slots) up += s == Slot::Contravariant ? 1 : 0;
  return "(" + std::to_string(up) + "," + std::to_string(slots.size() - up) + ")";
}

std::vector<Slot> parse_valence(const std::string& text) {
  unsigned up = 0, down = 0;
  char open = 0, comma = 0, close = 0;
  std::istringstream in(text);
  if (!(in >> open >> up >> comma >> down >> close) || open != '(' || comma != ',' || close != ')') {
    throw SchemaError("valence must look like \"(p,q)\", got '" + text + "'");
  }
  std::vector<Slot> slots(down, Slot::Covariant);
  slots.insert(slots.end(), up, Slot::Contravariant);
  return slots;
}

Json components_to_json(const PointTensor& t) {
  Json out = Json::object();
  for (std::size_t f = 0; f < t.size(); ++f) {
    if (!t.data()[f].is_zero()) out[make_key(t.multi_index(f))] = t.data()[f].to_string();
  }
  return out;
}

void components_from_json(const Json& j, PointTensor& t) {
  if (!j.is_object()) throw SchemaError("components must be an object");
  for (const auto& [key, value] : j.items()) t.at(parse_key(key, t.order(), t.dim())) = rational_value(value);
}

Json tensor_to_json(const PointTensor& t) {
  Json out;
  out["n"] = t.dim() / 2;
  out["valence"] = valence_string(t.slots());
  out["components"] = components_to_json(t);
  return out;
}

PointTensor tensor_from_json(const Json& j) {
  const std::size_t n = half_dim_of(j);
  PointTensor t(2 * n, parse_valence(text_value(require(j, "valence"))));
  components_from_json(require(j, "components"), t);
  return t;
}

Json lie_algebra_to_json(const LieAlgebraPresentation& g) {
  Json out;
  out["basis"] = g.labels();
  Json brackets = Json::object();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      Json value = Json::object();
      for (std::size_t m = 0; m < g.dim(); ++m) {
        if (!g.c(i, k, m).is_zero()) value[g.labels()[m]] = g.c(i, k, m).to_string();
      }
      if (!value.empty()) brackets[g.labels()[i] + "," + g.labels()[k]] = value;
    }
  }
  out["brackets"] = brackets;
  if (!g.subspaces().empty()) {
    Json subspaces = Json::object();
    for (const auto& [name, indices] : g.subspaces()) {
      Json labels = Json::array();
      for (auto i : indices) labels.push_back(g.labels()[i]);
      subspaces[name] = labels;
    }
    out["subspaces"] = subspaces;
  }
  return out;
}

LieAlgebraPresentation lie_algebra_from_json(const Json& j) {
  const Json& basis = require(j, "basis");
  if (!basis.is_array() || basis.empty()) throw SchemaError("'basis' must be a non-empty array of labels");
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(text_value(b));
  LieAlgebraPresentation g(labels);
  auto index_of = [&](const std::string& label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw SchemaError("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  if (j.contains("brackets")) {
    for (const auto& [key, value] : j.at("brackets").items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw SchemaError("bracket key '" + key + "' must be \"a,b\"");
      const std::size_t a = index_of(key.substr(0, comma));
      const std::size_t b = index_of(key.substr(comma + 1));
      std::vector<Rational> vec(labels.size());
      if (!value.is_object()) throw SchemaError("bracket value must map labels to coefficients");
      for (const auto& [label, coeff] : value.items()) vec[index_of(label)] = rational_value(coeff);
      g.set_bracket(a, b, vec);
    }
  }
  if (j.contains("subspaces")) {
    for (const auto& [name, members] : j.at("subspaces").items()) {
      std::vector<std::size_t> idx;
      for (const auto& m : members) idx.push_back(index_of(text_value(m)));
      g.subspaces()[name] = idx;
    }
  }
  return g;
}

Json model_to_json(const InfinitesimalModel& m) {
  Json out;
  out["n"] = m.space.half_dim();
  out["curvature"] = components_to_json(m.curvature);
  out["torsion"] = components_to_json(m.torsion);
  Json aux = Json::array();
  for (std::size_t i = 1; i < m.aux.size(); ++i) {
    aux.push_back({{"name", m.aux[i].name},
                   {"valence", valence_string(m.aux[i].value.slots())},
                   {"components", components_to_json(m.aux[i].value)}});
  }
  out["aux"] = aux;
  return out;
}

InfinitesimalModel model_from_json(const Json& j) {
  const std::size_t n = half_dim_of(j);
  const SymplecticSpace space(n);
  PointTensor r = zero_curvature(space.dim());
  PointTensor t = zero_torsion(space.dim());
  if (j.contains("curvature")) components_from_json(j.at("curvature"), r);
  if (j.contains("torsion")) components_from_json(j.at("torsion"), t);
  std::vector<AuxTensor> aux;
  if (j.contains("aux")) {
    for (const auto& a : j.at("aux")) {
      PointTensor value(space.dim(), parse_valence(text_value(require(a, "valence"))));
      components_from_json(require(a, "components"), value);
      aux.push_back({text_value(require(a, "name")), value});
    }
  }
  return InfinitesimalModel::make(space, r, t, aux);
}

Json chart_to_json(const Chart& c) {
  Json out;
  out["coords"] = c.coords;
  Json omega = Json::object();
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t k = i + 1; k < c.dim(); ++k) {
      if (!c.omega(i, k).is_zero()) omega[make_key({i, k})] = c.omega(i, k).to_string();
    }
  out["omega"] = omega;
  Json gamma = Json::object();
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (std::size_t i = 0; i < c.dim(); ++i)
      for (std::size_t jj = 0; jj < c.dim(); ++jj) {
        if (!c.christoffel(i, jj, k).is_zero()) gamma[make_key({k, i, jj})] = c.christoffel(i, jj, k).to_string();
      }
  out["christoffel"] = gamma;
  Json fields = Json::object();
  for (const auto& [name, f] : c.fields) {
    if (f.slots() == std::vector<Slot>{Slot::Contravariant}) {
      Json comps = Json::array();
      for (std::size_t i = 0; i < c.dim(); ++i) comps.push_back(f(i).to_string());
      fields[name] = comps;
    } else {
      fields[name] = {{"valence", valence_string(f.slots())}, {"components", field_components(f)}};
    }
  }
  out["fields"] = fields;
  if (c.structure.kind == StructureSpec::Kind::LinearType) out["structure"] = {{"linear_type", c.structure.field}};
  if (c.structure.kind == StructureSpec::Kind::Explicit) out["structure"] = {{"tensor", c.structure.field}};
  if (!c.excluded_locus.empty()) out["excluded_locus"] = c.excluded_locus;
  return out;
}

Chart chart_from_json(const Json& j) {
  const Json& coords = require(j, "coords");
  if (!coords.is_array() || coords.empty()) throw SchemaError("'coords' must be a non-empty array");
  std::vector<std::string> names;
  for (const auto& c : coords) names.push_back(text_value(c));
  Chart c(names);

  const Json& omega = require(j, "omega");
  if (!omega.is_object()) throw SchemaError("'omega' must be an object");
  std::vector<std::vector<bool>> given(c.dim(), std::vector<bool>(c.dim(), false));
  for (const auto& [key, value] : omega.items()) {
    const auto idx = parse_key(key, 2, c.dim());
    c.omega(idx[0], idx[1]) = c.parse(text_value(value));
    given[idx[0]][idx[1]] = true;
  }
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < c.dim(); ++b) {
      if (given[a][b] && !given[b][a]) c.omega(b, a) = -c.omega(a, b);
    }

  if (j.contains("christoffel")) {
    for (const auto& [key, value] : j.at("christoffel").items()) {
      const auto idx = parse_key(key, 3, c.dim());
      c.christoffel(idx[1], idx[2], idx[0]) = c.parse(text_value(value));
    }
  }
  if (j.contains("fields")) {
    for (const auto& [name, value] : j.at("fields").items()) {
      if (value.is_array()) {
        std::vector<RationalFunction> comps;
        for (const auto& v : value) comps.push_back(c.parse(text_value(v)));
        c.fields[name] = vector_field(c, comps);
      } else {
        c.fields[name] = field_from_components(c, require(value, "components"),
                                               parse_valence(text_value(require(value, "valence"))));
      }
    }
  }
  if (j.contains("structure")) {
    const Json& s = j.at("structure");
    if (s.contains("linear_type")) {
      c.structure = {StructureSpec::Kind::LinearType, text_value(s.at("linear_type"))};
    } else if (s.contains("tensor")) {
      c.structure = {StructureSpec::Kind::Explicit, text_value(s.at("tensor"))};
    } else {
      throw SchemaError("'structure' needs 'linear_type' or 'tensor'");
    }
    c.field(c.structure.field);
  }
  if (j.contains("excluded_locus")) c.excluded_locus = text_value(j.at("excluded_locus"));
  return c;
}

Json report_to_json(const std::string& command, const VerificationReport& r, const Json& artifacts) {
  Json out;
  out["command"] = command;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    checks.push_back(entry);
  }
  out["checks"] = checks;
  out["artifacts"] = artifacts.is_null() ? Json::object() : artifacts;
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fedosov
