/* Copyright 2026 The Universal Machine Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface of the universal machine: a theory graph of OpenMath content
 * dictionaries with native realizations and an exhaustive rewrite engine.
 *
 * Handles are opaque. Every function returning um_status leaves a message
 * retrievable with um_session_last_error() on failure. Strings returned
 * through `char**` are owned by the caller and released with um_free(). */
#ifndef UM_UM_H_
#define UM_UM_H_

#include <stddef.h>

#if defined(UM_BUILDING_LIBRARY)
#define UM_API __attribute__((visibility("default")))
#else
#define UM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum um_status {
  UM_OK = 0,
  UM_ERR_PARSE = 1,     /* malformed text, XML or notation */
  UM_ERR_NOT_FOUND = 2, /* unresolved module, constant or scope */
  UM_ERR_CONFLICT = 3,  /* duplicate module, constant or rule */
  UM_ERR_INVALID = 4,   /* structurally invalid input */
  UM_ERR_IO = 5,        /* file system or network failure */
  UM_ERR_EXHAUSTED = 6, /* fuel ran out; the result holds the partial term */
  UM_ERR_INTERNAL = 7,
  UM_ERR_ARGUMENT = 8   /* null or out-of-range argument */
} um_status;

typedef enum um_format { UM_FORMAT_TEXT = 0, UM_FORMAT_XML = 1 } um_format;

typedef struct um_session um_session;
typedef struct um_result um_result;

UM_API const char* um_version(void);
UM_API const char* um_status_string(um_status status);
UM_API void um_free(char* text);

/* Creates a session holding the built-in meta-theories and, if
 * `load_stdlib` is nonzero, the bundled library. */
UM_API um_status um_session_create(int load_stdlib, um_session** out);
UM_API void um_session_destroy(um_session* session);
/* Message of the last failed call on this session; empty if none. */
UM_API const char* um_session_last_error(const um_session* session);

/* Loads the .mmt and .omdoc files of `<root>/source` as project modules. */
UM_API um_status um_session_load_project(um_session* session, const char* root);
/* Adds modules in surface syntax; `name` labels diagnostics. */
UM_API um_status um_session_add_source(um_session* session, const char* text, const char* name);
/* Adds the theories of an OMDoc document. Embedded code stays inert. */
UM_API um_status um_session_ingest_omdoc(um_session* session, const char* xml, const char* name);
UM_API um_status um_session_set_fuel(um_session* session, size_t fuel);

/* Parses `input`, simplifies it, and renders the result. `scope` names the
 * theory whose notations are used for text input and output; it may be
 * NULL when both formats are XML. `fuel` 0 means the session default. On
 * UM_ERR_EXHAUSTED `*out` holds the partial result. */
UM_API um_status um_simplify(um_session* session, const char* input, um_format in_format, const char* scope,
                             size_t fuel, um_format out_format, um_result** out);
UM_API const char* um_result_text(const um_result* result);
UM_API size_t um_result_steps(const um_result* result);
UM_API int um_result_exhausted(const um_result* result);
UM_API void um_result_destroy(um_result* result);

/* Lint and view-totality diagnostics of the project modules, or of the
 * bundled library when no project is loaded. One line per diagnostic;
 * `*errors` counts those of severity error. */
UM_API um_status um_check(um_session* session, char** report, int* errors);
/* Runs every FMP test of the graph. `*failed` counts failures. */
UM_API um_status um_run_tests(um_session* session, char** report, int* failed);
/* Rule count, unimplemented constants and the test report. */
UM_API um_status um_load_report(um_session* session, char** report, int* failed);

/* Writes stub files under `<root>/generated`; `*files` lists them. */
UM_API um_status um_extract(um_session* session, const char* root, char** files);
/* Merges edited stub regions back into the sources under `<root>/source`;
 * `*files` lists the sources that changed. */
UM_API um_status um_integrate(um_session* session, const char* root, char** files);

/* Serves the HTTP interface until the process ends. `max_fuel` 0 means the
 * default limit. */
UM_API um_status um_serve(um_session* session, const char* host, int port, size_t max_fuel);

#ifdef __cplusplus
}
#endif

#endif /* UM_UM_H_ */
