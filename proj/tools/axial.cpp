#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/catalog.hpp"
#include "axial/fusion.hpp"
#include "axial/io.hpp"
#include "axial/relators.hpp"
#include "axial/verify.hpp"

using namespace axial;

namespace {

// Exit codes: 0 success, 1 a check failed, 2 bad input.
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Options {
  std::string format = "text";
  std::string params;
  std::uint64_t seed = 1;
  std::size_t max_len = 4;
};

bool json_out(const Options& o) { return o.format == "json"; }

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Certificate certificate_from(const Json& j) {
  Certificate cert;
  if (!j.contains("certificate")) return cert;
  if (!j["certificate"].is_array()) throw Error(ErrorKind::ParseError, "\"certificate\" must be an array");
  for (const auto& p : j["certificate"]) {
    if (!p.is_string()) throw Error(ErrorKind::ParseError, "certificate entries must be strings");
    add_condition(cert, parse_poly(p.get<std::string>()));
  }
  return cert;
}

/// An entry file, specialized at --params when given.
CatalogEntry load_entry(const std::string& path, const Options& o) {
  const Json j = read_json_file(path);
  CatalogEntry e = entry_from_json(j);
  if (!o.params.empty()) e = specialize_entry(e, parse_assignment(o.params), certificate_from(j));
  return e;
}

FusionLaw load_law(const std::string& path, const Options& o) {
  FusionLaw law = law_from_json(read_json_file(path));
  if (!o.params.empty()) law = law.specialize(parse_assignment(o.params));
  return law;
}

const Vect<Scalar>& pick_axis(const CatalogEntry& e, std::size_t axis) {
  if (axis >= e.axes.size()) {
    throw Error(ErrorKind::ParseError, "axis " + std::to_string(axis) + " requested but the file marks " +
                                           std::to_string(e.axes.size()));
  }
  return e.axes[axis];
}

const FusionLaw& require_law(const CatalogEntry& e, const std::optional<FusionLaw>& given) {
  if (given) return *given;
  if (e.law.size() == 0) throw Error(ErrorKind::ParseError, "no law given and the file has none");
  return e.law;
}

/// A generator is a basis name or a JSON object of coefficients.
Vect<Scalar> parse_generator(const Algebra<Scalar>& alg, const std::string& text) {
  if (const auto k = alg.index_of(text)) return alg.basis(*k);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw Error(ErrorKind::ParseError, "\"" + text + "\" is neither a basis name nor a JSON vector");
  }
  return vect_from_json(alg, j);
}

int cmd_verify(const Options& o, const std::vector<std::string>& overrides) {
  VerifyOptions vo;
  vo.max_len = o.max_len;
  vo.seed = o.seed;
  for (const auto& path : overrides) vo.overrides.push_back(entry_from_json(read_json_file(path)));
  const auto rep = verify_catalog(vo);
  if (json_out(o)) {
    print(rep.to_json());
  } else {
    std::cout << rep.to_text();
  }
  return rep.exit_code();
}

int cmd_check_axis(const Options& o, const std::string& file, std::size_t axis, const std::string& law_file,
                   bool primitive) {
  const auto e = load_entry(file, o);
  std::optional<FusionLaw> given;
  if (!law_file.empty()) given = load_law(law_file, o);
  const auto& law = require_law(e, given);
  const auto r = check_axis(e.algebra, pick_axis(e, axis), law, primitive);
  if (json_out(o)) {
    Json viol = Json::array();
    for (const auto& v : r.violations) {
      viol.push_back({{"lambda", v.lambda.to_string()},
                      {"mu", v.mu.to_string()},
                      {"nu", v.nu.to_string()},
                      {"component", vect_to_json(e.algebra, v.component)}});
    }
    print({{"ok", r.ok()},
           {"idempotent", r.idempotent},
           {"complete", r.complete},
           {"primitive", r.primitive},
           {"violations", viol},
           {"certificate", certificate_to_json(r.certificate)},
           {"validity", describe_certificate(r.certificate)}});
  } else {
    std::cout << (r.ok() ? "pass" : "fail") << ": axis " << axis << " of " << e.name << "\n";
    if (!r.idempotent) std::cout << "  not idempotent\n";
    if (!r.complete) std::cout << "  eigenvectors do not span\n";
    if (primitive && !r.primitive) std::cout << "  not primitive\n";
    for (const auto& v : r.violations) {
      std::cout << "  " << v.lambda << " * " << v.mu << " has a " << v.nu
                << "-component: " << e.algebra.format(v.component) << "\n";
    }
    std::cout << "  " << describe_certificate(r.certificate) << "\n";
  }
  return r.ok() ? 0 : kFailed;
}

int cmd_minimal_law(const Options& o, const std::string& file, std::size_t axis, const std::string& eigenvalues) {
  const auto e = load_entry(file, o);
  std::vector<Scalar> labels;
  if (!eigenvalues.empty()) {
    std::stringstream ss(eigenvalues);
    std::string part;
    while (std::getline(ss, part, ',')) labels.push_back(parse_scalar(part));
  } else {
    labels = require_law(e, std::nullopt).labels();
  }
  const auto law = minimal_fusion_law(e.algebra, pick_axis(e, axis), labels);
  const auto g = grading_group(law);
  if (json_out(o)) {
    print({{"law", law_to_json(law)}, {"grading", g.describe()}});
  } else {
    std::cout << law.to_string() << "grading: " << g.describe() << "\n";
  }
  return 0;
}

int cmd_grading(const Options& o, const std::string& file) {
  const auto g = grading_group(load_law(file, o));
  if (json_out(o)) {
    print({{"grading", g.describe()}, {"divisors", g.divisors}, {"free_rank", g.free_rank}});
  } else {
    std::cout << g.describe() << "\n";
  }
  return 0;
}

/// Ideals generated by subsets of the axes and of eigenvectors of the
/// first axis, without repeats.
int cmd_ideals(const Options& o, const std::string& file) {
  const auto e = load_entry(file, o);
  const auto& alg = e.algebra;
  std::vector<std::pair<std::string, Vect<Scalar>>> cands;
  for (std::size_t i = 0; i < e.axes.size(); ++i) cands.push_back({"a" + std::to_string(i), e.axes[i]});
  if (!e.axes.empty() && e.law.size() > 0) {
    const auto d = eigendecompose(alg, e.axes[0], e.law.labels());
    for (std::size_t k = 0; k < d.spaces.size(); ++k) {
      if (d.eigenvalues[k] == Scalar(1)) continue;
      for (std::size_t t = 0; t < d.spaces[k].dim(); ++t) {
        std::string name = "v_" + d.eigenvalues[k].to_string();
        if (d.spaces[k].dim() > 1) name += "[" + std::to_string(t) + "]";
        cands.push_back({name, d.spaces[k].basis()[t]});
      }
    }
  }
  if (cands.size() > 12) throw Error(ErrorKind::DimMismatch, "too many candidate generators");
  std::vector<Subspace<Scalar>> found;
  Json list = Json::array();
  for (std::size_t mask = 1; mask < (std::size_t{1} << cands.size()); ++mask) {
    std::vector<Vect<Scalar>> gens;
    std::string label;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (!(mask & (std::size_t{1} << k))) continue;
      gens.push_back(cands[k].second);
      label += (label.empty() ? "" : ", ") + cands[k].first;
    }
    const auto ideal = ideal_closure(alg, gens);
    if (ideal.dim() == 0 || ideal.dim() == alg.dim()) continue;
    const bool seen = std::any_of(found.begin(), found.end(), [&](const Subspace<Scalar>& s) {
      return s.dim() == ideal.dim() && s.contains(ideal);
    });
    if (seen) continue;
    found.push_back(ideal);
    Json basis = Json::array();
    for (const auto& b : ideal.basis()) basis.push_back(vect_to_json(alg, b));
    list.push_back({{"generators", "<" + label + ">"},
                    {"dim", ideal.dim()},
                    {"basis", basis},
                    {"validity", describe_certificate(ideal.certificate())}});
  }
  if (json_out(o)) {
    print({{"ideals", list}});
  } else {
    if (list.empty()) std::cout << "no proper nonzero ideals among the candidates\n";
    for (const auto& i : list) {
      std::cout << i["generators"].get<std::string>() << ": dimension " << i["dim"].get<std::size_t>() << ", "
                << i["validity"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_quotient(const Options& o, const std::string& file, const std::vector<std::string>& gen_texts) {
  const auto e = load_entry(file, o);
  std::vector<Vect<Scalar>> gens;
  for (const auto& t : gen_texts) gens.push_back(parse_generator(e.algebra, t));
  const auto ideal = ideal_closure(e.algebra, gens);
  const auto q = quotient(e.algebra, ideal);
  CatalogEntry out;
  out.name = e.name + " / ideal";
  out.algebra = q.algebra;
  for (const auto& a : e.axes) out.axes.push_back(q.projection(a));
  out.law = e.law;
  Json j = entry_to_json(out);
  j["ideal_dim"] = ideal.dim();
  j["validity"] = describe_certificate(ideal.certificate());
  if (json_out(o)) {
    print(j);
  } else {
    std::cout << "ideal of dimension " << ideal.dim() << ", quotient of dimension " << q.algebra.dim() << "\n";
    for (std::size_t i = 0; i < q.algebra.dim(); ++i) {
      for (std::size_t k = i; k < q.algebra.dim(); ++k) {
        std::cout << "  " << q.algebra.name(i) << " * " << q.algebra.name(k) << " = "
                  << q.algebra.format(q.algebra.basis_product(i, k)) << "\n";
      }
    }
    for (std::size_t i = 0; i < out.axes.size(); ++i) {
      std::cout << "  image of axis " << i << ": " << q.algebra.format(out.axes[i]) << "\n";
    }
    std::cout << "  " << j["validity"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_relators(const Options& o, const std::string& file, const std::string& law_file) {
  const auto e = load_entry(file, o);
  std::optional<FusionLaw> given;
  if (!law_file.empty()) given = load_law(law_file, o);
  const auto r = check_all(e.algebra, e.axes, require_law(e, given), o.max_len);
  if (json_out(o)) {
    Json fails = Json::array();
    for (const auto& f : r.failures) fails.push_back({{"relator", f.instance.to_string()}, {"value", f.value}});
    print({{"total", r.total}, {"failed", r.failed}, {"words", r.words}, {"failures", fails}, {"errors", r.errors}});
  } else {
    std::cout << r.total << " relator instances over " << r.words << " words, " << r.failed << " failed\n";
    for (const auto& f : r.failures) std::cout << "  " << f.instance.to_string() << ": " << f.value << "\n";
    for (const auto& err : r.errors) std::cout << "  " << err << "\n";
  }
  return r.ok() ? 0 : kFailed;
}

int cmd_specialize(const Options& o, const std::string& file) {
  if (o.params.empty()) throw Error(ErrorKind::ParseError, "specialize needs --params");
  // The JSON entry is always stated: it is the input format of the other
  // commands.
  print(entry_to_json(load_entry(file, o)));
  return 0;
}

int cmd_export(const Options& o, const std::string& name, bool list) {
  const auto entries = catalog_entries();
  if (list) {
    for (const auto& e : entries) std::cout << e.name << "\n";
    return 0;
  }
  for (const auto& e : entries) {
    if (e.name == name) {
      print(entry_to_json(o.params.empty() ? e : specialize_entry(e, parse_assignment(o.params))));
      return 0;
    }
  }
  throw Error(ErrorKind::ParseError, "no catalog entry named \"" + name + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for 2-generated primitive axial algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--params", o.params, "Parameter values, e.g. \"a=1/4, b=-2\"");
  app.add_option("--seed", o.seed, "Seed for random specializations");
  app.add_option("--max-len", o.max_len, "Longest word in relator checks")->check(CLI::Range(1, 8));

  std::string file;
  std::string law_file;
  std::size_t axis = 0;

  auto* verify = app.add_subcommand("verify", "Run every catalog check");
  std::vector<std::string> overrides;
  verify->add_option("--override", overrides, "Entry file replacing the catalog entry of the same name");

  auto* check = app.add_subcommand("check-axis", "Check one axis against a fusion law");
  check->add_option("file", file, "Entry file")->required();
  check->add_option("--axis", axis, "Axis index");
  check->add_option("--law", law_file, "Law file; defaults to the entry's law");
  bool no_primitive = false;
  check->add_flag("--no-primitive", no_primitive, "Do not require a 1-dimensional 1-eigenspace");

  auto* minimal = app.add_subcommand("minimal-law", "Smallest law an axis satisfies");
  std::string eigenvalues;
  minimal->add_option("file", file, "Entry file")->required();
  minimal->add_option("--axis", axis, "Axis index");
  minimal->add_option("--eigenvalues", eigenvalues, "Comma-separated eigenvalues; defaults to the law labels");

  auto* grading = app.add_subcommand("grading", "Universal grading group of a law");
  grading->add_option("file", file, "Law file")->required();

  auto* ideals = app.add_subcommand("ideals", "Proper ideals generated by axes and eigenvectors");
  ideals->add_option("file", file, "Entry file")->required();

  auto* quot = app.add_subcommand("quotient", "Quotient by the ideal generated by the given vectors");
  std::vector<std::string> gens;
  quot->add_option("file", file, "Entry file")->required();
  quot->add_option("--gen", gens, "Basis name or JSON vector; repeatable")->required();

  auto* rel = app.add_subcommand("relators", "Evaluate relators over words up to --max-len");
  rel->add_option("file", file, "Entry file")->required();
  rel->add_option("--law", law_file, "Law file; defaults to the entry's law");

  auto* spec = app.add_subcommand("specialize", "Entry file at the point given by --params");
  spec->add_option("file", file, "Entry file")->required();

  auto* exp = app.add_subcommand("export", "Print a catalog entry as an entry file");
  std::string name;
  bool list = false;
  exp->add_option("name", name, "Entry name");
  exp->add_flag("--list", list, "List entry names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(o, overrides);
    if (check->parsed()) return cmd_check_axis(o, file, axis, law_file, !no_primitive);
    if (minimal->parsed()) return cmd_minimal_law(o, file, axis, eigenvalues);
    if (grading->parsed()) return cmd_grading(o, file);
    if (ideals->parsed()) return cmd_ideals(o, file);
    if (quot->parsed()) return cmd_quotient(o, file, gens);
    if (rel->parsed()) return cmd_relators(o, file, law_file);
    if (spec->parsed()) return cmd_specialize(o, file);
    if (exp->parsed()) return cmd_export(o, name, list);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
