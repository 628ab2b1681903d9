// Copyright 2026 The dpforms Authors
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

// C interface to dpforms. Every function returns a dpf_status; on failure
// dpf_last_error() describes the problem until the next call on the same
// thread. Strings returned through char** are owned by the caller and must be
// released with dpf_string_free. JSON outputs are UTF-8 and deterministic.

#ifndef DPFORMS_DPFORMS_H_
#define DPFORMS_DPFORMS_H_

#include <stddef.h>

#if defined(_WIN32)
#define DPF_API __declspec(dllexport)
#else
#define DPF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpf_status {
  DPF_OK = 0,
  DPF_ERR_DOMAIN = 1,            // no mathematical answer (e.g. not realizable)
  DPF_ERR_INVALID_ARGUMENT = 2,  // malformed input or null handle
  DPF_ERR_INTERNAL = 3,          // a library self-check failed
} dpf_status;

typedef struct dpf_subgroup dpf_subgroup;
typedef struct dpf_model dpf_model;

DPF_API const char* dpf_version(void);
DPF_API const char* dpf_last_error(void);
DPF_API void dpf_string_free(char* s);

// Subgroups of S_degree from a generator list such as "(1 2 3),(1 2)".
// An empty list or "()" gives the trivial group.
DPF_API dpf_status dpf_subgroup_parse(const char* generators, int degree, dpf_subgroup** out);
DPF_API void dpf_subgroup_free(dpf_subgroup* g);
DPF_API dpf_status dpf_subgroup_order(const dpf_subgroup* g, size_t* out);
// Class label of a subgroup of S5 (degree_context 5) or of the hexagon group
// given on the six hexagon positions (degree_context 6).
DPF_API dpf_status dpf_subgroup_label(const dpf_subgroup* g, int degree_context, char** out);

DPF_API dpf_status dpf_classes_json(int degree_context, char** out);
DPF_API dpf_status dpf_aut_table_json(char** out);
// Graphviz text. orbit_generators may be NULL; otherwise vertices are colored
// by orbit. For degree 5 they are S5 generators, for degree 6 permutations of
// the six hexagon positions.
DPF_API dpf_status dpf_graph_dot(int degree_context, const char* orbit_generators, char** out);

// field is a base field size such as "4" or "2^2".
DPF_API dpf_status dpf_realize(const char* field, int degree, const char* type_label,
                               dpf_model** out);
DPF_API dpf_status dpf_model_from_json(const char* json, dpf_model** out);
DPF_API dpf_status dpf_model_to_json(const dpf_model* m, char** out);
DPF_API void dpf_model_free(dpf_model* m);
// Recomputes every claim of the model. *all_passed is set to 0 or 1.
DPF_API dpf_status dpf_model_verify(const dpf_model* m, int* all_passed, char** report_json);

DPF_API dpf_status dpf_minimal_json(const dpf_subgroup* g, const dpf_subgroup* galois,
                                    char** out);
// vertex is "{i,j}".
DPF_API dpf_status dpf_blowdown_json(const dpf_subgroup* h, const char* vertex, char** out);
// capability is "finite:Q", "number_field" or "custom:[A],[B],...".
DPF_API dpf_status dpf_g_minimal_exists_json(const dpf_subgroup* g, const char* capability,
                                             char** out);
DPF_API dpf_status dpf_check_paper_json(int* all_passed, char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // DPFORMS_DPFORMS_H_
