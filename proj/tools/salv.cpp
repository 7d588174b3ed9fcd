// Copyright 2026 The salv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// salv: command-line front end over the C API.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "salv/salv.h"

namespace {

int exit_code(salv_status status) {
  switch (status) {
    case SALV_OK: return 0;
    case SALV_ERR_VALIDATION:
    case SALV_ERR_ARGUMENT: return 1;
    case SALV_ERR_INFEASIBLE: return 2;
    default: return 3;
  }
}

int report(salv_status status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    std::fflush(stdout);
    salv_string_free(out);
  }
  if (status != SALV_OK) std::fprintf(stderr, "salv: %s\n", salv_last_error());
  return exit_code(status);
}

struct Options {
  std::string spec;
  std::string format = "text";
  long max_length = -1;
  std::string space = "complement";
  std::string suite = "all";
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

salv_format format_of(const std::string& name) {
  if (name == "json") return SALV_FORMAT_JSON;
  if (name == "dot") return SALV_FORMAT_DOT;
  return SALV_FORMAT_TEXT;
}

using Runner = std::function<salv_status(const salv_arrangement*, const Options&, char**)>;

int run_on_spec(const Options& opt, const Runner& run) {
  salv_arrangement* handle = nullptr;
  const salv_status loaded = salv_load(opt.spec.c_str(), &handle);
  if (loaded != SALV_OK) return report(loaded, nullptr);
  char* out = nullptr;
  const salv_status status = run(handle, opt, &out);
  salv_free(handle);
  return report(status, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Salvetti complexes of reflection arrangements on manifolds"};
  app.set_version_flag("--version", std::string(salv_version()));
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> formats{"text", "json", "dot"};

  std::map<std::string, Runner> runners{
      {"validate", [](auto* h, const Options& o, char** out) { return salv_validate(h, format_of(o.format), out); }},
      {"faces", [](auto* h, const Options& o, char** out) { return salv_faces(h, format_of(o.format), o.max_length, out); }},
      {"salvetti", [](auto* h, const Options& o, char** out) { return salv_salvetti(h, format_of(o.format), out); }},
      {"quotient", [](auto* h, const Options& o, char** out) { return salv_quotient(h, format_of(o.format), out); }},
      {"homology",
       [](auto* h, const Options& o, char** out) {
         return salv_homology(h, o.space.c_str(), format_of(o.format), o.max_length, out);
       }},
      {"pi1", [](auto* h, const Options& o, char** out) { return salv_pi1(h, format_of(o.format), out); }},
      {"euler", [](auto* h, const Options& o, char** out) { return salv_euler(h, format_of(o.format), out); }},
  };
  const std::map<std::string, std::string> descriptions{
      {"validate", "Check a spec file and describe the group and chamber"},
      {"faces", "List the face poset of the arrangement"},
      {"salvetti", "List the cells of the Salvetti complex"},
      {"quotient", "Build the orbit complex of the Salvetti complex"},
      {"homology", "Integral homology of one of the associated spaces"},
      {"pi1", "Presentation of the fundamental group of the orbit space"},
      {"euler", "Euler characteristic of the complement"},
  };

  int code = 0;
  for (const auto& [name, runner] : runners) {
    CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
    sub->add_option("spec", opt.spec, "Arrangement spec file")->required();
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
    if (name == "faces" || name == "homology") {
      sub->add_option("--max-length", opt.max_length, "Bound on element length for infinite groups")
          ->check(CLI::NonNegativeNumber);
    }
    if (name == "homology") {
      sub->add_option("--space", opt.space, "Which space")
          ->check(CLI::IsMember({"complement", "quotient", "manifold", "walls"}));
    }
    sub->callback([&code, &opt, r = runner] { code = run_on_spec(opt, r); });
  }

  CLI::App* check = app.add_subcommand("check", "Run the bundled verification suites");
  check->add_option("suite", opt.suite, "Suite to run")
      ->check(CLI::IsMember({"coxeter", "chamber", "arrangement", "salvetti", "homology", "cli", "all"}));
  check->add_option("--seed", opt.seed, "Seed for sampled checks");
  check->add_option("--threads", opt.threads, "Worker threads (default: SALV_THREADS or all cores)");
  check->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  check->callback([&code, &opt] {
    char* out = nullptr;
    const salv_status status = salv_check(opt.suite.c_str(), opt.seed, opt.threads, format_of(opt.format), &out);
    code = report(status, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return code;
}
