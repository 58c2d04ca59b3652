// Command-line surface: evaluate DSL terms in either backend, run the law
// suites, sweep naturality checks, translate circuits to corelations, and
// enumerate the port-generated corelations.
//
// Exit codes: 0 success, 1 law/naturality failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "bondsem/dsl.hpp"
#include "bondsem/enumerate.hpp"
#include "bondsem/eval.hpp"
#include "bondsem/json_io.hpp"
#include "bondsem/laws.hpp"
#include "bondsem/sweep.hpp"

namespace {

using namespace bondsem;

int cmd_eval(const std::string& term_text, const std::string& sig_name,
             const std::string& backend) {
  const Signature& sig = Signature::by_name(sig_name);
  Term t = parse_dsl(term_text, sig);
  typecheck(t, sig);
  nlohmann::json out;
  if (backend == "corel") {
    out = to_json(eval_corel(t, sig));
  } else if (backend == "lagrel-effortflow") {
    if (sig.name != "bond")
      throw CLI::ValidationError("--backend",
                                 "lagrel-effortflow applies to the bond signature only");
    out = to_json(eval_lagrel(t, sig));
  } else if (backend == "lagrel-potentialcurrent") {
    out = to_json(black_box(eval_corel(t, sig)));
  } else {
    throw CLI::ValidationError("--backend", "unknown backend " + backend);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_laws(const std::string& suite, const std::string& backend, bool as_json, bool dump,
             int threads) {
  if (dump) {
    std::cout << dump_suite(suite);
    return 0;
  }
  std::vector<Verdict> verdicts = run_suite(suite, backend_by_name(backend), threads);
  int failures = 0;
  for (const Verdict& v : verdicts) {
    if (!v.holds) ++failures;
    if (as_json) {
      nlohmann::json line{{"equation", v.equation}, {"backend", v.backend}, {"holds", v.holds}};
      if (v.counterexample) {
        line["lhs"] = nlohmann::json::parse(v.counterexample->first);
        line["rhs"] = nlohmann::json::parse(v.counterexample->second);
      }
      std::cout << line.dump() << "\n";
    } else {
      std::cout << (v.holds ? "ok   " : "FAIL ") << v.equation << "\n";
    }
  }
  std::cerr << suite << " [" << backend << "]: " << (verdicts.size() - failures) << "/"
            << verdicts.size() << " equations hold\n";
  return failures == 0 ? 0 : 1;
}

int cmd_nat(int count, int max_size, std::uint64_t seed, bool as_json, int threads) {
  auto reports = sweep_map(
      count,
      [&](int i) {
        std::mt19937_64 mix(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
        int size = 1 + static_cast<int>(mix() % static_cast<std::uint64_t>(max_size));
        return check_naturality(random_term(size, mix(), Signature::bond()));
      },
      threads);
  int failures = 0;
  for (const NaturalityReport& r : reports) {
    if (!r.equal) ++failures;
    if (as_json) {
      nlohmann::json line{{"term", to_sexpr(r.term)},
                          {"ports", {r.dom, r.cod}},
                          {"dims", {r.lhs.dim(), r.rhs.dim()}},
                          {"equal", r.equal}};
      if (!r.equal) {
        line["lhs"] = to_json(r.lhs);
        line["rhs"] = to_json(r.rhs);
      }
      std::cout << line.dump() << "\n";
    } else {
      std::cout << (r.equal ? "ok   " : "FAIL ") << r.dom << "->" << r.cod << " dim "
                << r.lhs.dim() << " " << to_sexpr(r.term) << "\n";
    }
  }
  std::cerr << "naturality: " << (count - failures) << "/" << count << " squares commute\n";
  return failures == 0 ? 0 : 1;
}

int cmd_enum(int ports_in, int ports_out, int max_size) {
  std::vector<Corelation> values = enumerate_port_corelations(ports_in, ports_out, max_size);
  nlohmann::json out = nlohmann::json::array();
  for (const Corelation& c : values) out.push_back(to_json(c));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_circuit(const std::string& path, const std::string& dot_path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("file", "cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  Circuit c = circuit_from_json(j);
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw CLI::ValidationError("--dot", "cannot write " + dot_path);
    dot << c.to_dot();
  }
  std::cout << to_json(c.underlying_corelation()).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional semantics for wire circuits and bond graphs"};
  app.require_subcommand(1);

  std::string term_text, sig_name = "bond", backend = "corel";
  auto* eval = app.add_subcommand("eval", "evaluate a term in a chosen backend");
  eval->add_option("term", term_text, "term in the diagram DSL, e.g. \"(M + I) ; M\"")
      ->required();
  eval->add_option("--sig", sig_name, "signature: bond, corel-wire or corel-port")
      ->check(CLI::IsMember({"bond", "corel-wire", "corel-port"}));
  eval->add_option("--backend", backend,
                   "backend: corel, lagrel-effortflow or lagrel-potentialcurrent")
      ->check(CLI::IsMember({"corel", "lagrel-effortflow", "lagrel-potentialcurrent"}));

  std::string suite, law_backend = "corel";
  bool as_json = false, dump = false;
  int threads = 1;
  auto* laws = app.add_subcommand("laws", "run a law suite and report verdicts");
  laws->add_option("suite", suite, "one of the registered suites")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  laws->add_option("--backend", law_backend, "corel or lagrel")
      ->check(CLI::IsMember({"corel", "lagrel"}));
  laws->add_flag("--json", as_json, "emit one JSON verdict per line");
  laws->add_flag("--dump", dump, "print the suite as an S-expression fixture and exit");
  laws->add_option("--threads", threads, "fan checks out over this many threads");

  int count = 200, max_size = 12;
  std::uint64_t seed = 7;
  auto* nat = app.add_subcommand("nat", "naturality sweep over random bond terms");
  nat->add_option("--count", count, "number of random terms");
  nat->add_option("--max-size", max_size, "maximum leaves per term");
  nat->add_option("--seed", seed, "random seed");
  nat->add_flag("--json", as_json, "emit one JSON report per line");
  nat->add_option("--threads", threads, "fan checks out over this many threads");

  int ports_in = 1, ports_out = 1, enum_size = 3;
  auto* enumc = app.add_subcommand(
      "enum", "enumerate port-generated corelations reachable within a term-size bound");
  enumc->add_option("in", ports_in, "input ports")->required();
  enumc->add_option("out", ports_out, "output ports")->required();
  enumc->add_option("--max-size", enum_size, "maximum term leaves");

  std::string circuit_path, dot_path;
  auto* circ = app.add_subcommand("circuit", "underlying corelation of a circuit JSON file");
  circ->add_option("file", circuit_path, "circuit JSON file")->required();
  circ->add_option("--dot", dot_path, "also write a DOT rendering here");

  try {
    app.parse(argc, argv);
    if (*eval) return cmd_eval(term_text, sig_name, backend);
    if (*laws) return cmd_laws(suite, law_backend, as_json, dump, threads);
    if (*nat) return cmd_nat(count, max_size, seed, as_json, threads);
    if (*enumc) return cmd_enum(ports_in, ports_out, enum_size);
    if (*circ) return cmd_circuit(circuit_path, dot_path);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const bondsem::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
