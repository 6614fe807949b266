#pragma once

#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "axial/algebra.hpp"
#include "axial/catalog.hpp"
#include "axial/error.hpp"
#include "axial/field.hpp"
#include "axial/fusion.hpp"

namespace axial {

using Json = nlohmann::json;

namespace io_detail {

inline std::pair<std::string, std::string> split_pair(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
    throw Error(ErrorKind::ParseError, "expected a key of the form \"x,y\", got \"" + key + "\"");
  }
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(' ');
    const auto e = s.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

inline std::string as_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(ErrorKind::ParseError, what + " must be a string or an integer");
}

inline Scalar parse_coeff(const Json& j, const std::string& what) {
  try {
    return parse_scalar(as_string(j, what));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, what + ": " + e.what());
  }
}

inline std::vector<std::string> param_names(std::uint32_t support) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kMaxParams; ++i) {
    if (support & (1U << i)) out.push_back(ParamRegistry::instance().name(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace io_detail

/// A vector as {basis name: coefficient}, zero coordinates omitted.
inline Json vect_to_json(const Algebra<Scalar>& alg, const Vect<Scalar>& v) {
  Json out = Json::object();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) out[alg.name(k)] = v[k].to_string();
  }
  return out;
}

inline Vect<Scalar> vect_from_json(const Algebra<Scalar>& alg, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "a vector must be an object of coefficients");
  Vect<Scalar> v = zero_vect<Scalar>(alg.dim());
  for (const auto& [name, c] : j.items()) {
    const auto k = alg.index_of(name);
    if (!k) throw Error(ErrorKind::ParseError, "unknown basis element \"" + name + "\"");
    v[*k] = io_detail::parse_coeff(c, "coefficient of " + name);
  }
  return v;
}

/// {"dim", "basis", "products": {"x,y": {name: coeff}}, "params"}; only
/// nonzero products are written, each once with x before y in basis order.
inline Json algebra_to_json(const Algebra<Scalar>& alg) {
  Json products = Json::object();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = i; j < alg.dim(); ++j) {
      const auto& p = alg.basis_product(i, j);
      if (!is_zero(p)) products[alg.name(i) + "," + alg.name(j)] = vect_to_json(alg, p);
    }
  }
  return Json{{"dim", alg.dim()},
              {"basis", alg.names()},
              {"products", products},
              {"params", io_detail::param_names(alg.support())}};
}

/// Missing products are zero; "y,x" fills in for "x,y", and giving both with
/// different values is an error.  Coefficients may only use the declared
/// parameters when "params" is present.
inline Algebra<Scalar> algebra_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "algebra must be a JSON object");
  if (!j.contains("basis") || !j["basis"].is_array()) throw Error(ErrorKind::ParseError, "missing \"basis\" array");
  std::vector<std::string> names;
  for (const auto& n : j["basis"]) {
    if (!n.is_string()) throw Error(ErrorKind::ParseError, "basis names must be strings");
    names.push_back(n.get<std::string>());
  }
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) throw Error(ErrorKind::ParseError, "repeated basis name");
  if (j.contains("dim") && (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() != names.size())) {
    throw Error(ErrorKind::ParseError, "\"dim\" does not match the basis");
  }
  Algebra<Scalar> alg(names);
  std::vector<std::vector<bool>> seen(names.size(), std::vector<bool>(names.size(), false));
  if (j.contains("products")) {
    if (!j["products"].is_object()) throw Error(ErrorKind::ParseError, "\"products\" must be an object");
    for (const auto& [key, value] : j["products"].items()) {
      const auto [x, y] = io_detail::split_pair(key);
      const auto i = alg.index_of(x);
      const auto k = alg.index_of(y);
      if (!i || !k) throw Error(ErrorKind::ParseError, "product key \"" + key + "\" names an unknown basis element");
      const Vect<Scalar> v = vect_from_json(alg, value);
      if (seen[*i][*k] && alg.basis_product(*i, *k) != v) {
        throw Error(ErrorKind::ParseError, "products \"" + key + "\" and its mirror disagree");
      }
      seen[*i][*k] = seen[*k][*i] = true;
      alg.set_product(std::min(*i, *k), std::max(*i, *k), v);
    }
  }
  if (j.contains("params")) {
    if (!j["params"].is_array()) throw Error(ErrorKind::ParseError, "\"params\" must be an array");
    std::uint32_t declared = 0;
    for (const auto& p : j["params"]) {
      if (!p.is_string()) throw Error(ErrorKind::ParseError, "parameter names must be strings");
      declared |= 1U << ParamRegistry::instance().index_of(p.get<std::string>());
    }
    if (alg.support() & ~declared) {
      throw Error(ErrorKind::ParseError, "coefficients use undeclared parameters " +
                                             Json(io_detail::param_names(alg.support() & ~declared)).dump());
    }
  }
  return alg;
}

/// {"labels": [...], "table": {"x,y": [...]}} with every ordered pair whose
/// entry differs from its mirror written separately.
inline Json law_to_json(const FusionLaw& law) {
  std::vector<std::string> labels;
  for (const auto& l : law.labels()) labels.push_back(l.to_string());
  Json table = Json::object();
  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t k = 0; k < law.size(); ++k) {
      if (k < i && law(i, k) == law(k, i)) continue;
      std::vector<std::string> zs;
      for (auto z : law(i, k)) zs.push_back(law.label(z).to_string());
      table[labels[i] + "," + labels[k]] = zs;
    }
  }
  return Json{{"labels", labels}, {"table", table}};
}

/// Pairs given in one order only are completed symmetrically; pairs not
/// given at all map to the empty set.
inline FusionLaw law_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    throw Error(ErrorKind::ParseError, "law must be an object with a \"labels\" array");
  }
  std::vector<Scalar> labels;
  for (const auto& l : j["labels"]) labels.push_back(io_detail::parse_coeff(l, "label"));
  std::map<std::pair<std::string, std::string>, std::vector<Scalar>> given;
  if (j.contains("table")) {
    if (!j["table"].is_object()) throw Error(ErrorKind::ParseError, "\"table\" must be an object");
    for (const auto& [key, value] : j["table"].items()) {
      if (!value.is_array()) throw Error(ErrorKind::ParseError, "table entry \"" + key + "\" must be an array");
      const auto [x, y] = io_detail::split_pair(key);
      std::vector<Scalar> zs;
      for (const auto& z : value) zs.push_back(io_detail::parse_coeff(z, "table entry " + key));
      given[{parse_scalar(x).to_string(), parse_scalar(y).to_string()}] = zs;
    }
  }
  std::vector<std::tuple<Scalar, Scalar, std::vector<Scalar>>> entries;
  for (const auto& [pair, zs] : given) {
    entries.emplace_back(parse_scalar(pair.first), parse_scalar(pair.second), zs);
    if (!given.count({pair.second, pair.first})) {
      entries.emplace_back(parse_scalar(pair.second), parse_scalar(pair.first), zs);
    }
  }
  try {
    return FusionLaw(labels, entries, false);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DuplicateEigenvalue) throw;
    throw Error(ErrorKind::ParseError, std::string("law table: ") + e.what());
  }
}

/// An algebra file extended with "name", marked "axes", the declared "law"
/// and the "preconditions" polynomials that must not vanish.
inline Json entry_to_json(const CatalogEntry& e) {
  Json j = algebra_to_json(e.algebra);
  j["name"] = e.name;
  Json axes = Json::array();
  for (const auto& a : e.axes) axes.push_back(vect_to_json(e.algebra, a));
  j["axes"] = axes;
  j["law"] = law_to_json(e.law);
  std::vector<std::string> pre;
  for (const auto& p : e.preconditions) pre.push_back(p.to_string());
  j["preconditions"] = pre;
  return j;
}

/// Loaded entries keep the catalog kind unset (1A) and no parameter values;
/// the fields that matter for checking are the algebra, axes and law.
inline CatalogEntry entry_from_json(const Json& j) {
  CatalogEntry e;
  e.algebra = algebra_from_json(j);
  e.name = j.value("name", std::string("unnamed"));
  if (j.contains("axes")) {
    if (!j["axes"].is_array()) throw Error(ErrorKind::ParseError, "\"axes\" must be an array");
    for (const auto& a : j["axes"]) e.axes.push_back(vect_from_json(e.algebra, a));
  }
  if (j.contains("law")) e.law = law_from_json(j["law"]);
  if (j.contains("preconditions")) {
    if (!j["preconditions"].is_array()) throw Error(ErrorKind::ParseError, "\"preconditions\" must be an array");
    for (const auto& p : j["preconditions"]) {
      try {
        add_condition(e.preconditions, parse_poly(io_detail::as_string(p, "precondition")));
      } catch (const Error& err) {
        throw Error(ErrorKind::ParseError, std::string("precondition: ") + err.what());
      }
    }
  }
  return e;
}

/// The entry at a rational point.  Refuses points where a precondition,
/// a listed certificate polynomial or a denominator of the structure
/// constants, axes or labels vanishes, naming the polynomial.
inline CatalogEntry specialize_entry(const CatalogEntry& e, const ParamAssignment& at,
                                     const Certificate& certificate = {}) {
  const auto refuse_if_zero = [&](const Poly& p, const std::string& what) {
    if (p.specialize(at).is_zero()) {
      throw Error(ErrorKind::BadParameter, what + " " + p.to_string() + " vanishes at this point");
    }
  };
  for (const auto& p : e.preconditions) refuse_if_zero(p, "precondition");
  for (const auto& p : certificate) refuse_if_zero(p, "certificate polynomial");
  const auto check_denominators = [&](const Vect<Scalar>& v) {
    for (const auto& c : v) refuse_if_zero(c.denominator(), "denominator");
  };
  for (std::size_t i = 0; i < e.algebra.dim(); ++i) {
    for (std::size_t j = i; j < e.algebra.dim(); ++j) check_denominators(e.algebra.basis_product(i, j));
  }
  for (const auto& a : e.axes) check_denominators(a);
  check_denominators(e.law.labels());
  CatalogEntry out = e;
  out.algebra = e.algebra.specialize(at);
  for (auto& a : out.axes) {
    for (auto& c : a) c = c.specialize(at);
  }
  if (e.law.size() > 0) out.law = e.law.specialize(at);
  out.preconditions.clear();
  for (const auto& p : e.preconditions) add_condition(out.preconditions, p.specialize(at));
  return out;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

/// "valid when a ∉ {0, 1}, b^2 + a ≠ 0": linear conditions in one parameter
/// are listed as excluded values, the rest as nonvanishing polynomials.
inline std::string describe_certificate(const Certificate& cert) {
  std::map<std::string, std::vector<Rational>> excluded;
  std::vector<std::string> other;
  for (const auto& p : cert) {
    const auto sup = p.support();
    if (sup && !(sup & (sup - 1))) {
      const auto var = static_cast<std::size_t>(std::countr_zero(sup));
      if (p.degree_in(var) == 1) {
        const auto u = detail::split(p, var);
        excluded[ParamRegistry::instance().name(var)].push_back(-u[0].constant_value() / u[1].constant_value());
        continue;
      }
    }
    other.push_back(p.to_string() + " ≠ 0");
  }
  if (excluded.empty() && other.empty()) return "valid everywhere";
  std::string s = "valid when ";
  bool first = true;
  for (auto& [name, roots] : excluded) {
    std::sort(roots.begin(), roots.end());
    s += (first ? "" : ", ") + name + " ∉ {";
    for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + roots[i].get_str();
    s += "}";
    first = false;
  }
  for (const auto& o : other) {
    s += (first ? "" : ", ") + o;
    first = false;
  }
  return s;
}

inline Json certificate_to_json(const Certificate& cert) {
  Json out = Json::array();
  for (const auto& p : cert) out.push_back(p.to_string());
  return out;
}

/// "a=1/4, b=-2" as a parameter assignment.
inline ParamAssignment parse_assignment(const std::string& text) {
  ParamAssignment at;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.find_first_not_of(' ') == std::string::npos) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected name=value in \"" + part + "\"");
    std::string name = part.substr(0, eq);
    name.erase(std::remove(name.begin(), name.end(), ' '), name.end());
    if (!is_valid_param_name(name)) throw Error(ErrorKind::ParseError, "invalid parameter name \"" + name + "\"");
    if (at.count(name)) throw Error(ErrorKind::ParseError, "parameter " + name + " assigned twice");
    at[name] = parse_rational(part.substr(eq + 1));
  }
  return at;
}

}  // namespace axial
