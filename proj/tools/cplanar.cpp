#include <cplanar/cplanar.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cplanar;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void print(const nlohmann::json& doc) { std::cout << doc.dump(2) << '\n'; }

int report(const ClusteredGraph& cg, const Decision& d) {
  print(decision_to_json(cg, d));
  return d.c_planar() ? kYes : kNo;
}

int error(const std::string& reason, const std::string& message) {
  nlohmann::json doc;
  doc["verdict"] = "error";
  if (!reason.empty()) doc["reason"] = reason;
  doc["message"] = message;
  print(doc);
  std::cerr << "error: " << message << '\n';
  return kError;
}

std::string to_dot(const ClusteredGraph& cg) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t k = 0; k < cg.clusters.size(); ++k) {
    out << "  subgraph cluster_" << k << " {\n    label=\"" << cg.clusters[k].name << "\";\n";
    for (VertexId v : cg.clusters[k].vertices) out << "    \"" << cg.name_of(v) << "\";\n";
    out << "  }\n";
  }
  for (const Edge& e : cg.graph.edges()) out << "  \"" << cg.name_of(e.u) << "\" -- \"" << cg.name_of(e.v) << "\";\n";
  out << "}\n";
  return out.str();
}

long oracle_budget(long flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("CPLANAR_ORACLE_BUDGET")) return std::atol(env);
  return kDefaultOracleBudget;
}

int cmd_check(const std::string& path, bool fast, const std::string& dot) {
  auto cg = parse_instance(slurp(path));
  if (!dot.empty()) {
    std::ofstream out(dot);
    out << to_dot(cg);
  }
  if (!is_c_connected(cg)) return error("not-c-connected", "some cluster does not induce a connected subgraph");
  if (fast) {
    auto r = check_two_partition(cg);
    std::cerr << "fast path: " << r.connected_parts.size() << " connected intersection parts, " << r.rechoices
              << " outer face re-choices\n";
    return report(cg, r.decision);
  }
  return report(cg, check_c_planarity(cg));
}

int cmd_oracle(const std::string& path, long budget) {
  auto cg = parse_instance(slurp(path));
  if (!is_c_connected(cg)) return error("not-c-connected", "some cluster does not induce a connected subgraph");
  Decision d;
  if (!is_planar(cg.graph)) {
    d.reason = "nonplanar";
  } else {
    auto r = oracle_c_planar(cg, oracle_budget(budget));
    std::cerr << "oracle: " << r.embeddings << " rotation systems visited\n";
    if (r.c_planar) {
      d.verdict = Verdict::c_planar;
      d.embedding = r.witness;
    } else {
      d.reason = "no-c-planar-embedding";
    }
  }
  return report(cg, d);
}

int cmd_verify(const std::string& instance, const std::string& certificate) {
  auto cg = parse_instance(slurp(instance));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(certificate));
  } catch (const nlohmann::json::exception& ex) {
    return error("", std::string("certificate is not valid JSON: ") + ex.what());
  }
  if (!is_c_connected(cg)) return error("not-c-connected", "some cluster does not induce a connected subgraph");
  if (auto why = certificate_error(cg, doc)) {
    std::cerr << "invalid: " << *why << '\n';
    return kNo;
  }
  std::cerr << "valid\n";
  return kYes;
}

int cmd_c1p(const std::string& path) {
  const BinaryMatrix m = BinaryMatrix::parse(slurp(path));
  auto order = c1p_order(m);
  if (!order) {
    std::cout << "no consecutive-ones ordering\n";
    return kNo;
  }
  for (std::size_t i = 0; i < order->size(); ++i) std::cout << (i ? " " : "") << (*order)[i];
  std::cout << '\n';
  for (const auto& row : m.rows) {
    for (int c : *order) std::cout << static_cast<int>(row[c]);
    std::cout << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-planarity testing for clustered graphs with connected clusters"};
  app.require_subcommand(1);

  std::string input, certificate, dot;
  bool fast = false;
  long budget = 0;
  auto* check = app.add_subcommand("check", "decide c-planarity and print a certificate");
  check->add_option("instance", input, "instance file, - for stdin")->required();
  check->add_flag("--fast", fast, "two-partition fast path");
  check->add_option("--dot", dot, "write a DOT drawing of the instance to this file");

  auto* oracle = app.add_subcommand("oracle", "decide by exhaustive enumeration");
  oracle->add_option("instance", input, "instance file, - for stdin")->required();
  oracle->add_option("--budget", budget, "search node budget");

  auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
  verify->add_option("instance", input)->required();
  verify->add_option("certificate", certificate)->required();

  GeneratorOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "print a random instance");
  gen->add_option("--vertices", gen_opt.vertices)->required()->check(CLI::Range(3, 100000));
  gen->add_option("--clusters", gen_opt.clusters)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_opt.seed)->required();
  gen->add_flag("--two-partitions", gen_opt.two_partitions);
  gen->add_flag("--co-connected", gen_opt.co_connected);

  std::string matrix = "-";
  auto* c1p = app.add_subcommand("c1p", "consecutive-ones ordering of a 0/1 matrix");
  c1p->add_option("matrix", matrix, "one row per line, - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*check) return cmd_check(input, fast, dot);
    if (*oracle) return cmd_oracle(input, budget);
    if (*verify) return cmd_verify(input, certificate);
    if (*gen) {
      print(instance_to_json(generate_instance(gen_opt)));
      return kYes;
    }
    if (*c1p) return cmd_c1p(matrix);
  } catch (const NotCConnected& e) {
    return error("not-c-connected", e.what());
  } catch (const NotCoConnected& e) {
    return error("not-c-co-connected", e.what());
  } catch (const NonplanarInput& e) {
    return error("nonplanar", e.what());
  } catch (const DisconnectedInput& e) {
    return error("disconnected", e.what());
  } catch (const BudgetExceeded& e) {
    return error("budget-exceeded", e.what());
  } catch (const std::exception& e) {
    return error("", e.what());
  }
  return kError;
}
