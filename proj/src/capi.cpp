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

#include "salv/salv.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "salv/check.hpp"
#include "salv/commands.hpp"

struct salv_arrangement {
  std::unique_ptr<salv::Session> session;
};

namespace {

thread_local std::string last_error;

salv_status status_of(salv::ErrorClass c) {
  switch (c) {
    case salv::ErrorClass::Validation: return SALV_ERR_VALIDATION;
    case salv::ErrorClass::Infeasible: return SALV_ERR_INFEASIBLE;
    case salv::ErrorClass::Internal: return SALV_ERR_INTERNAL;
  }
  return SALV_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

salv::Format to_format(salv_format f) {
  switch (f) {
    case SALV_FORMAT_JSON: return salv::Format::Json;
    case SALV_FORMAT_DOT: return salv::Format::Dot;
    default: return salv::Format::Text;
  }
}

std::optional<std::size_t> to_bound(long max_length) {
  if (max_length < 0) return std::nullopt;
  return static_cast<std::size_t>(max_length);
}

salv_status argument_error(const char* what) {
  last_error = std::string("cli: ") + what;
  return SALV_ERR_ARGUMENT;
}

// Option names are arguments of the call, not spec contents.
template <typename T, typename Parse>
std::optional<T> option(const char* name, Parse&& parse) {
  try {
    return parse(name);
  } catch (const salv::Error&) {
    return std::nullopt;
  }
}

std::optional<salv::Space> space_option(const char* name) {
  return option<salv::Space>(name, [](const char* n) { return salv::space_from_string(n); });
}

// Runs fn, translating exceptions into a status and the thread's last error.
template <typename Fn>
salv_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const salv::Error& e) {
    last_error = e.what();
    return status_of(e.error_class());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SALV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SALV_ERR_INTERNAL;
  }
}

template <typename Fn>
salv_status command(const salv_arrangement* h, char** out, Fn&& fn) {
  if (!h || !out) return argument_error("null argument");
  *out = nullptr;
  return guarded([&] {
    *out = copy_string(fn(*h->session));
    return *out ? SALV_OK : SALV_ERR_INTERNAL;
  });
}

salv_status load(salv::ArrangementSpec spec, salv_arrangement** out) {
  auto handle = std::make_unique<salv_arrangement>();
  handle->session = std::make_unique<salv::Session>(std::move(spec));
  *out = handle.release();
  return SALV_OK;
}

}  // namespace

extern "C" {

const char* salv_last_error(void) { return last_error.c_str(); }

const char* salv_version(void) { return "1.0.0"; }

salv_status salv_load(const char* path, salv_arrangement** out) {
  if (!path || !out) return argument_error("null argument");
  *out = nullptr;
  return guarded([&] { return load(salv::parse_spec(path), out); });
}

salv_status salv_parse(const char* text, salv_arrangement** out) {
  if (!text || !out) return argument_error("null argument");
  *out = nullptr;
  return guarded([&] { return load(salv::parse_spec_text(text), out); });
}

void salv_free(salv_arrangement* handle) { delete handle; }

salv_status salv_validate(const salv_arrangement* h, salv_format format, char** out) {
  return command(h, out, [&](const salv::Session& s) { return salv::cmd_validate(s, to_format(format)); });
}

salv_status salv_faces(const salv_arrangement* h, salv_format format, long max_length, char** out) {
  return command(h, out, [&](const salv::Session& s) {
    return salv::cmd_faces(s, to_format(format), to_bound(max_length));
  });
}

salv_status salv_salvetti(const salv_arrangement* h, salv_format format, char** out) {
  return command(h, out, [&](const salv::Session& s) { return salv::cmd_salvetti(s, to_format(format)); });
}

salv_status salv_quotient(const salv_arrangement* h, salv_format format, char** out) {
  return command(h, out, [&](const salv::Session& s) { return salv::cmd_quotient(s, to_format(format)); });
}

salv_status salv_homology(const salv_arrangement* h, const char* space, salv_format format, long max_length,
                          char** out) {
  if (!space) return argument_error("null argument");
  const auto parsed = space_option(space);
  if (!parsed) return argument_error("unknown space");
  return command(h, out, [&](const salv::Session& s) {
    return salv::cmd_homology(s, *parsed, to_format(format), to_bound(max_length));
  });
}

salv_status salv_pi1(const salv_arrangement* h, salv_format format, char** out) {
  return command(h, out, [&](const salv::Session& s) { return salv::cmd_pi1(s, to_format(format)); });
}

salv_status salv_euler(const salv_arrangement* h, salv_format format, char** out) {
  return command(h, out, [&](const salv::Session& s) { return salv::cmd_euler(s, to_format(format)); });
}

salv_status salv_serialize(const salv_arrangement* h, char** out) {
  return command(h, out, [&](const salv::Session& s) { return salv::serialize_spec(s.spec()); });
}

salv_status salv_check(const char* suite, uint64_t seed, unsigned threads, salv_format format, char** out) {
  if (!suite || !out) return argument_error("null argument");
  *out = nullptr;
  const auto parsed = option<salv::Suite>(suite, [](const char* n) { return salv::suite_from_string(n); });
  if (!parsed) return argument_error("unknown suite");
  return guarded([&] {
    const auto report = salv::run_checks(*parsed, seed,
                                         threads ? threads : salv::threads_from_env());
    *out = copy_string(salv::format_report(report, to_format(format)));
    if (!*out) return SALV_ERR_INTERNAL;
    if (!report.passed()) {
      last_error = "cli: CheckFailed: " + std::to_string(report.failures()) + " check(s) failed";
      return SALV_ERR_INTERNAL;
    }
    return SALV_OK;
  });
}

void salv_string_free(char* s) { std::free(s); }

int salv_rank(const salv_arrangement* h) { return h ? h->session->system().rank() : 0; }

salv_status salv_group_order(const salv_arrangement* h, uint64_t* order) {
  if (!h || !order) return argument_error("null argument");
  return guarded([&] {
    const auto& sys = h->session->system();
    const auto value = sys.parabolic_order(sys.generators());
    if (!value) {
      last_error = "coxeter: WouldNotTerminate: the group is infinite";
      return SALV_ERR_INFEASIBLE;
    }
    *order = *value;
    return SALV_OK;
  });
}

salv_status salv_betti(const salv_arrangement* h, const char* space, size_t* betti, size_t capacity,
                       size_t* count) {
  if (!h || !space || !count || (capacity > 0 && !betti)) return argument_error("null argument");
  const auto parsed = space_option(space);
  if (!parsed) return argument_error("unknown space");
  return guarded([&] {
    const auto values = salv::space_homology(*h->session, *parsed).betti();
    *count = values.size();
    for (std::size_t i = 0; i < values.size() && i < capacity; ++i) betti[i] = values[i];
    return SALV_OK;
  });
}

}  // extern "C"
