#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacring/catalog.hpp"
#include "jacring/json_io.hpp"
#include "jacring/oracles.hpp"

namespace {

using namespace jacring;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInconsistent = 3;

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
  const std::string text = dump_canonical(j);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
  }
}

const CaseDescriptor& find_case(int genus, const std::string& label) {
  static std::vector<CaseDescriptor> cases;
  cases = catalog_cases(genus);
  for (const CaseDescriptor& c : cases)
    if (c.label == label) return c;
  throw std::invalid_argument("no case (" + label + ") at genus " +
                              std::to_string(genus));
}

nlohmann::json key_to_json(const BasisKey& key) {
  return {{"index", key.index.entries()}, {"m", key.m}};
}

int run_build(int genus, const std::string& label, const std::string& out) {
  const Resolution res = resolve_model(find_case(genus, label));
  emit(model_to_json(res.model), out);
  return kExitOk;
}

int run_products(const std::string& model_path, const std::string& product,
                 bool basis_only, const std::string& out) {
  const Model model = model_from_json(load_json(model_path));
  const bool star = product == "star";
  if (!star && product != "dot")
    throw std::invalid_argument("--product must be star or dot");
  nlohmann::json entries = nlohmann::json::array();
  std::vector<BasisKey> keys = model.basis_keys();
  if (basis_only) {
    std::erase_if(keys, [](const BasisKey& k) {
      return k.m != 0 || k.index.empty();
    });
  }
  for (size_t a = 0; a < keys.size(); ++a)
    for (size_t b = a; b < keys.size(); ++b) {
      const Cycle x = model.basis(keys[a].index, keys[a].m);
      const Cycle y = model.basis(keys[b].index, keys[b].m);
      const Cycle value = star ? pontryagin(model, x, y) : intersect(model, x, y);
      entries.push_back({{"left", key_to_json(keys[a])},
                         {"right", key_to_json(keys[b])},
                         {"value", cycle_to_json(value)}});
    }
  emit({{"genus", model.genus()}, {"product", product}, {"entries", entries}},
       out);
  return kExitOk;
}

int run_fourier(const std::string& model_path, const std::string& cycle_path,
                const std::string& out) {
  const Model model = model_from_json(load_json(model_path));
  const Cycle c = model.normalize(cycle_from_json(load_json(cycle_path)));
  if (c.genus() != model.genus())
    throw std::invalid_argument("cycle and model genus disagree");
  emit(cycle_to_json(fourier(c)), out);
  return kExitOk;
}

int run_enumerate(int genus, bool as_json, const std::string& out) {
  const std::vector<ResolvedCase> cases = enumerate_cases(genus);
  if (as_json) {
    nlohmann::json list = nlohmann::json::array();
    for (const ResolvedCase& rc : cases) {
      nlohmann::json nonzero = nlohmann::json::array();
      for (const MultiIndex& index : rc.descriptor.nonzero)
        nonzero.push_back(index.entries());
      list.push_back({{"label", rc.descriptor.label},
                      {"nonzero", nonzero},
                      {"dimension", rc.computed_dimension},
                      {"model", model_to_json(rc.resolution.model)}});
    }
    emit({{"genus", genus}, {"cases", list}}, out);
  } else {
    std::ostringstream text;
    for (const ResolvedCase& rc : cases) {
      text << "g=" << genus << " (" << rc.descriptor.label << "): dim R(C) = "
           << rc.computed_dimension << "  nonzero:";
      if (rc.descriptor.nonzero.empty()) text << " (theta powers only)";
      for (const MultiIndex& index : rc.descriptor.nonzero)
        text << " " << index.str();
      text << "\n";
    }
    if (out.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream f(out, std::ios::binary);
      f << text.str();
    }
  }
  return kExitOk;
}

int run_xi_pair(int g, int i, int j, const std::string& out) {
  nlohmann::json values = nlohmann::json::object();
  for (int t = 0; t <= i + j; ++t)
    values[std::to_string(t)] = rational_str(xi_pair(g, i, j, t));
  emit({{"genus", g},
        {"i", i},
        {"j", j},
        {"values", values},
        {"closed_form_at_top", rational_str(xi_pair_closed(g, i, j))}},
       out);
  return kExitOk;
}

int run_xi_triple(int g, int h, int i, int j, const std::string& out) {
  const TripleCoefficientTable table = xi_triple(g, h, i, j);
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [key, value] : table.xi)
    pairs.push_back(
        {{"r", key.first}, {"t", key.second}, {"value", rational_str(value)}});
  emit({{"genus", g}, {"h", h}, {"i", i}, {"j", j}, {"pairs", pairs}}, out);
  return kExitOk;
}

int run_verify(const std::vector<std::string>& scopes) {
  const VerifyReport report =
      verify_paper(std::set<std::string>(scopes.begin(), scopes.end()));
  for (const VerifyReport::Item& item : report.items) {
    std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.scope << ": "
              << item.name;
    if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
    std::cout << "\n";
  }
  std::cout << (report.ok() ? "OK" : "FAILED") << " (" << report.items.size()
            << " checks)\n";
  return report.ok() ? kExitOk : kExitVerifyFailure;
}

int run_picture(const std::string& model_path) {
  const Model model = model_from_json(load_json(model_path));
  std::cout << render_picture(model);
  return kExitOk;
}

int run_family_trigonal(int g, int k, const std::string& out) {
  const Model model = build_trigonal_model(g, k);
  emit({{"genus", g},
        {"k", k},
        {"dimension", trigonal_dimension(g, k)},
        {"model", model_to_json(model)}},
       out);
  return kExitOk;
}

int run_family_g14(int g, const std::string& klist, const std::string& out) {
  std::vector<int> ks;
  std::stringstream ss(klist);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    const int value = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad --klist entry: " + item);
    ks.push_back(value);
  }
  const G14Dimensions dims = gonality4_dimension(g, ks);
  emit({{"genus", g},
        {"klist", ks},
        {"paper_value", dims.paper_value},
        {"column_count", dims.column_count},
        {"authoritative", "column_count"}},
       out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jacring: exact models of the tautological ring of a Jacobian"};
  app.require_subcommand(1);

  int genus = 0, opt_i = 0, opt_j = 0, opt_h = 0, opt_k = 0;
  std::string label, model_path, cycle_path, out_path, product = "star";
  std::string klist;
  bool basis_only = false, as_json = false;
  std::vector<std::string> scopes;

  CLI::App* build = app.add_subcommand("build", "Resolve a catalog case to a model");
  build->add_option("--genus", genus)->required();
  build->add_option("--case", label)->required();
  build->add_option("--out", out_path);

  CLI::App* products = app.add_subcommand("products", "Product table of a model");
  products->add_option("--model", model_path)->required();
  products->add_option("--product", product)->check(CLI::IsMember({"star", "dot"}));
  products->add_flag("--basis-only", basis_only);
  products->add_option("--out", out_path);

  CLI::App* fourier_cmd = app.add_subcommand("fourier", "Fourier transform of a cycle");
  fourier_cmd->add_option("--model", model_path)->required();
  fourier_cmd->add_option("--cycle", cycle_path)->required();
  fourier_cmd->add_option("--out", out_path);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List the cases of a genus");
  enumerate->add_option("--genus", genus)->required();
  enumerate->add_flag("--json", as_json);
  enumerate->add_option("--out", out_path);

  CLI::App* oracle = app.add_subcommand("oracle", "Coefficient oracles");
  oracle->require_subcommand(1);
  CLI::App* xi_pair_cmd = oracle->add_subcommand("xi-pair");
  xi_pair_cmd->add_option("--genus", genus)->required();
  xi_pair_cmd->add_option("--i", opt_i)->required();
  xi_pair_cmd->add_option("--j", opt_j)->required();
  xi_pair_cmd->add_option("--out", out_path);
  CLI::App* xi_triple_cmd = oracle->add_subcommand("xi-triple");
  xi_triple_cmd->set_help_flag("--help", "print help");  // frees -h for --h
  xi_triple_cmd->add_option("--genus", genus)->required();
  xi_triple_cmd->add_option("--h", opt_h)->required();
  xi_triple_cmd->add_option("--i", opt_i)->required();
  xi_triple_cmd->add_option("--j", opt_j)->required();
  xi_triple_cmd->add_option("--out", out_path);

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
  verify
      ->add_option("--scope", scopes)
      ->required()
      ->check(CLI::IsMember({"all", "dimensions", "forced-relations", "oracles",
                             "omega", "associativity", "exchange"}));

  CLI::App* picture = app.add_subcommand("picture", "Render a model as a text grid");
  picture->add_option("--model", model_path)->required();

  CLI::App* family = app.add_subcommand("family", "Parametric families");
  family->require_subcommand(1);
  CLI::App* trigonal = family->add_subcommand("trigonal");
  trigonal->add_option("--genus", genus)->required();
  trigonal->add_option("--k", opt_k)->required();
  trigonal->add_option("--out", out_path);
  CLI::App* g14 = family->add_subcommand("g14");
  g14->add_option("--genus", genus)->required();
  g14->add_option("--klist", klist)->required();
  g14->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*build) return run_build(genus, label, out_path);
    if (*products) return run_products(model_path, product, basis_only, out_path);
    if (*fourier_cmd) return run_fourier(model_path, cycle_path, out_path);
    if (*enumerate) return run_enumerate(genus, as_json, out_path);
    if (*xi_pair_cmd) return run_xi_pair(genus, opt_i, opt_j, out_path);
    if (*xi_triple_cmd) return run_xi_triple(genus, opt_h, opt_i, opt_j, out_path);
    if (*verify) return run_verify(scopes);
    if (*picture) return run_picture(model_path);
    if (*trigonal) return run_family_trigonal(genus, opt_k, out_path);
    if (*g14) return run_family_g14(genus, klist, out_path);
  } catch (const SolverInconsistency& e) {
    std::cerr << "solver inconsistency: " << e.what() << "\n";
    for (const std::string& line : e.witness())
      std::cerr << "  " << line << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
