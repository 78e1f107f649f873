// Copyright 2026 The ainerve Authors.
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

#ifndef AINERVE_AINERVE_H_
#define AINERVE_AINERVE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AINERVE_API __declspec(dllexport)
#else
#define AINERVE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ainerve_status {
  AINERVE_OK = 0,
  AINERVE_CHECK_FAILED = 1, /* the check ran and the property does not hold */
  AINERVE_INVALID_ARGUMENT = 2,
  AINERVE_INVALID_INPUT = 3,
  AINERVE_PRECONDITION = 4,
  AINERVE_CAP_EXCEEDED = 5,
  AINERVE_INTERNAL_ERROR = 6
} ainerve_status;

typedef enum ainerve_direction { AINERVE_CO = 0, AINERVE_CONTRA = 1 } ainerve_direction;

typedef struct ainerve_category ainerve_category;
typedef struct ainerve_sset ainerve_sset;
typedef struct ainerve_diagram ainerve_diagram;
typedef struct ainerve_colimit ainerve_colimit;

/* Message of the last failing call on this thread; empty after success. */
AINERVE_API const char* ainerve_last_error(void);
AINERVE_API const char* ainerve_version(void);
/* Frees strings returned through char** out-parameters. */
AINERVE_API void ainerve_string_free(char* s);

/* Categories. JSON outputs are UTF-8 with a trailing newline. */
AINERVE_API ainerve_status ainerve_category_from_json(const char* json, ainerve_category** out);
AINERVE_API ainerve_status ainerve_category_to_json(const ainerve_category* c, char** out);
AINERVE_API void ainerve_category_free(ainerve_category* c);
AINERVE_API ainerve_status ainerve_category_generate(uint64_t seed, int max_objects, ainerve_category** out);

/* A-infinity relations up to dmax and strict unitality. */
AINERVE_API ainerve_status ainerve_check_ainf(const ainerve_category* c, int dmax, char** report);
/* Nerve truncation; out_json holds the complex and the nerve data of every cell. */
AINERVE_API ainerve_status ainerve_nerve(const ainerve_category* c, int cap, size_t limit, ainerve_sset** out_complex,
                                         char** out_json);
AINERVE_API ainerve_status ainerve_fill_horn(const ainerve_category* c, const char* horn_json, int n, int k,
                                             char** filler_json);
AINERVE_API ainerve_status ainerve_enumerate(const ainerve_category* c, int n, size_t limit, char** out_json);

/* Simplicial sets. ainerve_sset_load accepts a simplicial set, a nerve or
 * colimit file, or a category (whose nerve is taken at cap). */
AINERVE_API ainerve_status ainerve_sset_from_json(const char* json, ainerve_sset** out);
AINERVE_API ainerve_status ainerve_sset_load(const char* json, int cap, ainerve_sset** out);
AINERVE_API ainerve_status ainerve_sset_to_json(const ainerve_sset* x, char** out);
AINERVE_API void ainerve_sset_free(ainerve_sset* x);
AINERVE_API ainerve_status ainerve_check_qcat(const ainerve_sset* x, int cap, char** report);
AINERVE_API ainerve_status ainerve_check_kan(const ainerve_sset* x, int cap, char** report);
AINERVE_API ainerve_status ainerve_tau(const ainerve_sset* x, char** out_json);
AINERVE_API ainerve_status ainerve_tau0(const ainerve_sset* x, char** out_json);
AINERVE_API ainerve_status ainerve_kan_subcomplex(const ainerve_sset* x, ainerve_sset** out);

/* Diagrams and their colimits. */
AINERVE_API ainerve_status ainerve_diagram_from_json(const char* json, ainerve_diagram** out);
AINERVE_API ainerve_status ainerve_diagram_to_json(const ainerve_diagram* d, char** out);
AINERVE_API void ainerve_diagram_free(ainerve_diagram* d);
AINERVE_API ainerve_status ainerve_colimit_build(const ainerve_diagram* d, int cap, size_t limit, ainerve_colimit** out);
AINERVE_API ainerve_status ainerve_colimit_from_json(const char* json, ainerve_colimit** out);
AINERVE_API ainerve_status ainerve_colimit_to_json(const ainerve_colimit* l, char** out);
AINERVE_API void ainerve_colimit_free(ainerve_colimit* l);
/* Inner fibration, co-Cartesian lifts and the equivalence-lift criterion for L -> base. */
AINERVE_API ainerve_status ainerve_check_fibration(const ainerve_colimit* l, int cap, ainerve_direction direction,
                                                   char** report);
/* Same from JSON: a colimit file, or a map {domain, codomain, images}
 * (checked without the equivalence criterion). */
AINERVE_API ainerve_status ainerve_check_fibration_json(const char* json, int cap, ainerve_direction direction,
                                                        char** report);

#ifdef __cplusplus
}
#endif

#endif  // AINERVE_AINERVE_H_
