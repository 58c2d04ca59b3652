#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bondsem/term.hpp"

namespace bondsem {

enum class Backend { corel, lagrel };

std::string_view backend_name(Backend b);
Backend backend_by_name(std::string_view name);

struct Equation {
  std::string name;
  Term lhs, rhs;
  std::string signature;  // "bond", "corel-wire" or "corel-port"
  std::string note;       // which law this is
};

struct Verdict {
  std::string equation;
  std::string backend;
  bool holds = false;
  // JSON dumps of the two evaluated sides, present when the equation fails.
  std::optional<std::pair<std::string, std::string>> counterexample;
};

const std::vector<std::string>& suite_names();

/// Named equation catalogs: wire-frobenius, series, parallel, weak-bimonoid,
/// lagrel-frobenius, lagrel-bimonoid, lagrel-inverse, bondgraph-presentation.
std::vector<Equation> law_registry(std::string_view suite);

/// Evaluates both sides in the backend and compares exactly.
Verdict check_equation(const Equation& eq, Backend backend);

/// threads <= 1 runs serially; larger values fan the checks out with OpenMP.
std::vector<Verdict> run_suite(std::string_view suite, Backend backend, int threads = 1);

/// Fixture serialization: S-expression term pairs with notes.
std::string dump_suite(std::string_view suite);
std::vector<Equation> parse_suite_fixture(std::string_view text);

}  // namespace bondsem
