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

#ifndef SALV_SALV_H
#define SALV_SALV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SALV_API __declspec(dllexport)
#else
#define SALV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct salv_arrangement salv_arrangement;

typedef enum salv_status {
  SALV_OK = 0,
  SALV_ERR_VALIDATION = 1, /* bad input: spec, matrix, chamber family */
  SALV_ERR_INFEASIBLE = 2, /* would not terminate, truncated poset */
  SALV_ERR_INTERNAL = 3,   /* consistency failure or failed check */
  SALV_ERR_ARGUMENT = 4    /* null pointer or unknown option name */
} salv_status;

typedef enum salv_format { SALV_FORMAT_TEXT = 0, SALV_FORMAT_JSON = 1, SALV_FORMAT_DOT = 2 } salv_format;

/* Message of the last failure on the calling thread ("" when none). */
SALV_API const char* salv_last_error(void);
SALV_API const char* salv_version(void);

/* Load a spec file (falling back to path + ".json") or spec text. */
SALV_API salv_status salv_load(const char* path, salv_arrangement** out);
SALV_API salv_status salv_parse(const char* text, salv_arrangement** out);
SALV_API void salv_free(salv_arrangement* handle);

/* Command output. On success *out receives a string to release with
 * salv_string_free. max_length < 0 keeps the bound from the spec file. */
SALV_API salv_status salv_validate(const salv_arrangement* h, salv_format format, char** out);
SALV_API salv_status salv_faces(const salv_arrangement* h, salv_format format, long max_length, char** out);
SALV_API salv_status salv_salvetti(const salv_arrangement* h, salv_format format, char** out);
SALV_API salv_status salv_quotient(const salv_arrangement* h, salv_format format, char** out);
/* space: "complement", "quotient", "manifold" or "walls". */
SALV_API salv_status salv_homology(const salv_arrangement* h, const char* space, salv_format format,
                                   long max_length, char** out);
SALV_API salv_status salv_pi1(const salv_arrangement* h, salv_format format, char** out);
SALV_API salv_status salv_euler(const salv_arrangement* h, salv_format format, char** out);
SALV_API salv_status salv_serialize(const salv_arrangement* h, char** out);

/* Runs a bundled verification suite ("coxeter", ..., "cli", "all").
 * threads == 0 reads SALV_THREADS. The report is returned in *out even
 * when a check fails, in which case the status is SALV_ERR_INTERNAL. */
SALV_API salv_status salv_check(const char* suite, uint64_t seed, unsigned threads, salv_format format, char** out);

SALV_API void salv_string_free(char* s);

/* Numeric accessors. */
SALV_API int salv_rank(const salv_arrangement* h);
/* SALV_ERR_INFEASIBLE when the group is infinite. */
SALV_API salv_status salv_group_order(const salv_arrangement* h, uint64_t* order);
/* Writes up to `capacity` Betti numbers; *count receives the number of degrees. */
SALV_API salv_status salv_betti(const salv_arrangement* h, const char* space, size_t* betti, size_t capacity,
                                size_t* count);

#ifdef __cplusplus
}
#endif

#endif
