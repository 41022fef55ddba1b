/* Copyright 2026 The treeshift Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the treeshift library.
 *
 * Objects are opaque handles created by ts_*_new / ts_*_parse functions and
 * released with the matching ts_*_free. Every fallible call returns a
 * ts_status; on a status other than TS_OK or TS_CHECK_FAILED the message is
 * available from ts_last_error() until the next call on the same thread.
 * Report-producing calls set *out on TS_OK and TS_CHECK_FAILED.
 */

#ifndef TREESHIFT_TREESHIFT_H_
#define TREESHIFT_TREESHIFT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TS_API __declspec(dllexport)
#else
#define TS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_CHECK_FAILED = 1,   /* the check ran and its claim is false */
  TS_INPUT_ERROR = 2,    /* malformed input or violated precondition */
  TS_CAP_EXCEEDED = 3,   /* an enumeration hit the cap */
  TS_INCONSISTENT = 4    /* an internal cross-check disagreed */
} ts_status;

typedef struct ts_group ts_group;
typedef struct ts_automaton ts_automaton;
typedef struct ts_report ts_report;

TS_API const char* ts_version(void);
TS_API const char* ts_last_error(void);

/* TREESHIFT_CAP when set to a positive integer, else 1000000. */
TS_API ts_status ts_default_cap(size_t* out);

/* Space-separated preset names. */
TS_API const char* ts_group_preset_names(void);
TS_API const char* ts_automaton_preset_names(void);

TS_API ts_status ts_group_preset(const char* name, ts_group** out);
TS_API ts_status ts_group_parse(const char* json_text, ts_group** out);
TS_API void ts_group_free(ts_group* g);
TS_API size_t ts_group_generator_count(const ts_group* g);
TS_API const char* ts_group_name(const ts_group* g);

/* `signature_from` supplies the signature for presets and for JSON without
 * a "signature" field. `subgroup` lists label indices for example1 (NULL
 * and 0 mean the trivial subgroup). */
TS_API ts_status ts_automaton_preset(const char* name,
                                     const ts_group* signature_from,
                                     const int* subgroup, size_t subgroup_len,
                                     ts_automaton** out);
TS_API ts_status ts_automaton_parse(const char* json_text,
                                    const ts_group* signature_from,
                                    ts_automaton** out);
TS_API void ts_automaton_free(ts_automaton* a);

TS_API ts_status ts_quotient(const ts_group* g, int depth, size_t cap,
                             ts_report** out);
TS_API ts_status ts_branch_check(const ts_group* g, int level, int depth,
                                 size_t cap, ts_report** out);
TS_API ts_status ts_branch_search(const ts_group* g, int max_level, size_t cap,
                                  ts_report** out);
TS_API ts_status ts_sft_roundtrip(const ts_group* g, int pattern_size,
                                  int depth, size_t cap, ts_report** out);
TS_API ts_status ts_automaton_check(const ts_automaton* a,
                                    const ts_group* configs, int depth,
                                    ts_report** out);
TS_API ts_status ts_odometer_demo(int n, size_t cap, ts_report** out);
TS_API ts_status ts_law_check(const ts_group* g, const char* law, int depth,
                              size_t cap, size_t budget, uint64_t seed,
                              ts_report** out);

/* Report contents stay valid until ts_report_free. */
TS_API const char* ts_report_json(const ts_report* r);
TS_API const char* ts_report_text(const ts_report* r);
TS_API int ts_report_passed(const ts_report* r);
TS_API void ts_report_free(ts_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TREESHIFT_TREESHIFT_H_ */
