#include "softhybrid/workspace.hpp"

#include <cmath>

#include <json.hpp>

#include "softhybrid/error.hpp"

namespace softhybrid {

using json = nlohmann::ordered_json;

void Workspace::add(std::string name, SoftHybridSet set) {
  if (find(name) != nullptr) {
    throw Error(ErrorKind::DuplicateName, "set '" + name + "' already defined");
  }
  if (!(*set.universe_ptr() == *universe_) || !(*set.pspace_ptr() == *pspace_)) {
    throw Error(ErrorKind::MixedSpaces,
                "set '" + name + "' does not live over the workspace spaces");
  }
  sets_.emplace_back(std::move(name), std::move(set));
}

const SoftHybridSet* Workspace::find(std::string_view name) const {
  for (const auto& [n, s] : sets_) {
    if (n == name) return &s;
  }
  return nullptr;
}

const SoftHybridSet& Workspace::at(std::string_view name) const {
  const SoftHybridSet* s = find(name);
  if (!s) {
    throw Error(ErrorKind::UnknownLabel, "no set named '" + std::string(name) + "'");
  }
  return *s;
}

bool operator==(const Workspace& a, const Workspace& b) {
  return *a.universe_ == *b.universe_ && *a.pspace_ == *b.pspace_ &&
         a.sets_ == b.sets_;
}

namespace {

[[noreturn]] void syntax_error(const json::parse_error& e, std::string_view text) {
  std::size_t line = 1, col = 1;
  std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw Error(ErrorKind::SyntaxError,
              "malformed JSON at line " + std::to_string(line) + ", column " +
                  std::to_string(col));
}

void forbid_extra_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) ok = true;
    }
    if (!ok) {
      throw Error(ErrorKind::SchemaError,
                  "unexpected field '" + key + "' in " + where);
    }
  }
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorKind::SchemaError,
                "missing field '" + std::string(key) + "' in " + where);
  }
  return *it;
}

std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorKind::SchemaError, where + " must be a nonempty array of strings");
  }
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) {
      throw Error(ErrorKind::SchemaError, where + " must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

double number_grade(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw Error(ErrorKind::SchemaError, "grade at " + where + " must be a number");
  }
  return j.get<double>();
}

bool is_one_tol(double g) { return std::abs(g - 1.0) <= kTol; }

Variant infer_strictest(const SoftHybridSet& s) {
  bool params_crisp = true;
  for (const auto& [e, g] : s.param_grades()) params_crisp &= is_one_tol(g);
  bool values_crisp = true;
  for (const auto& [e, row] : s.value_grades()) {
    for (const auto& [x, g] : row) values_crisp &= is_one_tol(g);
  }
  if (params_crisp && values_crisp) return Variant::soft;
  if (params_crisp) return Variant::fuzzy_soft;
  if (values_crisp) return Variant::fp_soft;
  return Variant::fpfs;
}

}  // namespace

Workspace parse_workspace(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax_error(e, text);
  }
  if (!root.is_object()) {
    throw Error(ErrorKind::SchemaError, "top level must be an object");
  }
  forbid_extra_keys(root, {"format", "universe", "parameters", "sets"}, "workspace");
  if (auto it = root.find("format"); it != root.end() && !it->is_string()) {
    throw Error(ErrorKind::SchemaError, "'format' must be a string");
  }

  auto universe = std::make_shared<const Universe>(
      string_array(require_field(root, "universe", "workspace"), "'universe'"));
  auto pspace = std::make_shared<const ParameterSpace>(
      string_array(require_field(root, "parameters", "workspace"), "'parameters'"));

  const json& sets = require_field(root, "sets", "workspace");
  if (!sets.is_array()) {
    throw Error(ErrorKind::SchemaError, "'sets' must be an array");
  }

  Workspace ws(universe, pspace);
  for (const json& entry : sets) {
    if (!entry.is_object()) {
      throw Error(ErrorKind::SchemaError, "each set must be an object");
    }
    const json& jname = require_field(entry, "name", "set");
    if (!jname.is_string()) {
      throw Error(ErrorKind::SchemaError, "set name must be a string");
    }
    std::string name = jname.get<std::string>();
    const std::string where = "set '" + name + "'";
    forbid_extra_keys(entry, {"name", "variant", "params", "values"}, where);

    const json& jvariant = require_field(entry, "variant", where);
    const json& jparams = require_field(entry, "params", where);
    const json& jvalues = require_field(entry, "values", where);
    if (!jparams.is_object() || !jvalues.is_object()) {
      throw Error(ErrorKind::SchemaError,
                  where + ": 'params' and 'values' must be objects");
    }

    std::map<std::string, double> params;
    for (const auto& [label, g] : jparams.items()) {
      params[label] = number_grade(g, where + ", parameter '" + label + "'");
    }
    std::map<std::string, std::map<std::string, double>> values;
    for (const auto& [plabel, row] : jvalues.items()) {
      if (!row.is_object()) {
        throw Error(ErrorKind::SchemaError,
                    where + ": value set of '" + plabel + "' must be an object");
      }
      auto& out = values[plabel];
      for (const auto& [xlabel, g] : row.items()) {
        out[xlabel] = number_grade(
            g, where + ", value (" + plabel + ", " + xlabel + ")");
      }
    }

    try {
      if (jvariant.is_null()) {
        SoftHybridSet probe =
            make_set(Variant::fpfs, params, values, universe, pspace);
        SoftHybridSet typed(unchecked, infer_strictest(probe),
                            probe.param_grades(), probe.value_grades(),
                            universe, pspace);
        ws.add(std::move(name), std::move(typed));
      } else if (jvariant.is_string()) {
        Variant v = variant_from_string(jvariant.get<std::string>());
        ws.add(std::move(name), make_set(v, params, values, universe, pspace));
      } else {
        throw Error(ErrorKind::SchemaError, "variant must be a string or null");
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DuplicateName) throw;
      throw Error(e.kind(), where + ": " + e.detail());
    }
  }
  return ws;
}

std::string serialize_workspace(const Workspace& ws) {
  json root = json::object();
  root["universe"] = ws.universe()->items();
  root["parameters"] = ws.pspace()->params();
  json jsets = json::array();
  for (const auto& [name, set] : ws.sets()) {
    json jset = json::object();
    jset["name"] = name;
    jset["variant"] = to_string(set.variant());
    json jparams = json::object();
    for (const auto& [e, g] : set.param_grades()) {
      jparams[ws.pspace()->param(e)] = g;
    }
    jset["params"] = std::move(jparams);
    json jvalues = json::object();
    for (const auto& [e, row] : set.value_grades()) {
      json jrow = json::object();
      for (const auto& [x, g] : row) {
        jrow[ws.universe()->item(x)] = g;
      }
      jvalues[ws.pspace()->param(e)] = std::move(jrow);
    }
    jset["values"] = std::move(jvalues);
    jsets.push_back(std::move(jset));
  }
  root["sets"] = std::move(jsets);
  return root.dump(2) + "\n";
}

}  // namespace softhybrid
