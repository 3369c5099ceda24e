/*
 * C interface to the dfam library: exhaustive search, classification and
 * verification of cyclic (v,k,1) difference families.
 *
 * Every function returns a dfam_status. On failure a description is kept in
 * thread-local storage and can be read with dfam_last_error_message().
 * Objects returned through out-parameters are owned by the caller and must be
 * released with the matching *_free function.
 */
#ifndef DFAM_DFAM_H_
#define DFAM_DFAM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(DFAM_BUILDING_LIBRARY)
#define DFAM_API __attribute__((visibility("default")))
#else
#define DFAM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dfam_status {
  DFAM_OK = 0,
  DFAM_ERR_INVALID_PARAMETER = 1,
  DFAM_ERR_COLLISION = 2,
  DFAM_ERR_PRECONDITION = 3,
  DFAM_ERR_PARSE = 4,
  DFAM_ERR_RANGE = 5,
  DFAM_ERR_IO = 6,
  DFAM_ERR_CAP_EXCEEDED = 7,
  DFAM_ERR_VERIFICATION = 8,
  DFAM_ERR_WORKER = 9,
  DFAM_ERR_CALLBACK = 10,
  DFAM_ERR_INTERNAL = 11
} dfam_status;

typedef enum dfam_admissibility {
  DFAM_FULL_ONLY = 0,
  DFAM_WITH_SHORT_BLOCK = 1,
  DFAM_INADMISSIBLE = 2
} dfam_admissibility;

typedef enum dfam_dedup_mode { DFAM_DEDUP_MIRROR_ONLY = 0, DFAM_DEDUP_FULL_DELTA = 1 } dfam_dedup_mode;

typedef enum dfam_format { DFAM_FORMAT_JSONL = 0, DFAM_FORMAT_TEXT = 1 } dfam_format;

typedef struct dfam_params {
  int32_t v;
  int32_t k;
  int32_t t;
  dfam_admissibility admissibility;
} dfam_params;

/* A family record: blocks plus provenance. */
typedef struct dfam_family dfam_family;
/* An ordered list of families. */
typedef struct dfam_family_list dfam_family_list;
/* A developed block design. */
typedef struct dfam_design dfam_design;

/* Return nonzero from a callback to abort the search. */
typedef int (*dfam_emit_fn)(void* user, const dfam_family* family);
typedef int (*dfam_progress_fn)(void* user, int32_t b2, uint64_t families, uint64_t nodes);

typedef struct dfam_search_options {
  int32_t threads; /* >= 1 */
  dfam_dedup_mode dedup;
  dfam_emit_fn emit;         /* optional */
  dfam_progress_fn progress; /* optional */
  void* user;
} dfam_search_options;

DFAM_API const char* dfam_last_error_message(void);
DFAM_API const char* dfam_status_name(dfam_status status);
DFAM_API void dfam_string_free(char* s);

DFAM_API dfam_status dfam_classify(int32_t v, int32_t k, dfam_params* out);

/* Families. elements holds block_count * k residues, row major. */
DFAM_API dfam_status dfam_family_new(int32_t v, int32_t k, const int32_t* elements, size_t block_count,
                                     const char* source, dfam_family** out);
DFAM_API dfam_status dfam_family_clone(const dfam_family* f, dfam_family** out);
DFAM_API void dfam_family_free(dfam_family* f);
DFAM_API int32_t dfam_family_v(const dfam_family* f);
DFAM_API int32_t dfam_family_k(const dfam_family* f);
DFAM_API size_t dfam_family_block_count(const dfam_family* f);
/* Pointer to the k elements of block i, valid while f lives. */
DFAM_API const int32_t* dfam_family_block(const dfam_family* f, size_t i);
DFAM_API const char* dfam_family_source(const dfam_family* f);
DFAM_API int dfam_family_normalized(const dfam_family* f);
/* Published automorphism count, or 0 when none is recorded. */
DFAM_API uint64_t dfam_family_recorded_automorphisms(const dfam_family* f);
/* Normalizes each block and sorts the blocks. */
DFAM_API dfam_status dfam_family_normalize(const dfam_family* f, dfam_family** out);
DFAM_API dfam_status dfam_family_render(const dfam_family* f, dfam_format format, char** out);

DFAM_API dfam_family_list* dfam_list_new(void);
DFAM_API void dfam_list_free(dfam_family_list* list);
DFAM_API size_t dfam_list_size(const dfam_family_list* list);
DFAM_API const dfam_family* dfam_list_at(const dfam_family_list* list, size_t i);
DFAM_API dfam_status dfam_list_push(dfam_family_list* list, const dfam_family* f);

/* Block operations. block/out hold k residues. */
DFAM_API dfam_status dfam_normalize_block(int32_t v, const int32_t* block, size_t k, int32_t* out);
DFAM_API dfam_status dfam_mirror_block(int32_t v, const int32_t* block, size_t k, int32_t* out);

/* Search. */
DFAM_API dfam_status dfam_search(int32_t v, int32_t k, const dfam_search_options* options,
                                 dfam_family_list** out);
DFAM_API dfam_status dfam_oracle(int32_t v, int32_t k, int32_t cap, dfam_family_list** out);

/* Classification. */
DFAM_API dfam_status dfam_mirror_expand(const dfam_family* f, dfam_family_list** out);
DFAM_API dfam_status dfam_canonical_form(const dfam_family* f, dfam_family** out);
/* One canonical representative per multiplier class, sorted. */
DFAM_API dfam_status dfam_dedup(const dfam_family_list* in, dfam_family_list** out);
DFAM_API dfam_status dfam_multiplier_automorphisms(const dfam_family* f, uint64_t* out);

/* Verification. Returns DFAM_ERR_VERIFICATION with a report in the error
   message when the family or design is not valid. */
DFAM_API dfam_status dfam_verify_family(const dfam_family* f);
DFAM_API dfam_status dfam_develop(const dfam_family* f, dfam_design** out);
DFAM_API void dfam_design_free(dfam_design* d);
DFAM_API size_t dfam_design_block_count(const dfam_design* d);
DFAM_API const int32_t* dfam_design_block(const dfam_design* d, size_t i);
DFAM_API int32_t dfam_design_k(const dfam_design* d);
DFAM_API dfam_status dfam_verify_design(const dfam_design* d);

/* Catalog and serialization. A NULL path means standard input/output. */
DFAM_API dfam_status dfam_builtin(int32_t v, int32_t k, dfam_family_list** out);
DFAM_API dfam_status dfam_builtin_all(dfam_family_list** out);
DFAM_API dfam_status dfam_parse_text(const char* text, int32_t v, int32_t k, dfam_family** out);
/* Reads one family per non-empty line. */
DFAM_API dfam_status dfam_read(const char* path, dfam_format format, int32_t v, int32_t k,
                               dfam_family_list** out);
DFAM_API dfam_status dfam_write(const char* path, dfam_format format, const dfam_family_list* list);

#ifdef __cplusplus
}
#endif

#endif  // DFAM_DFAM_H_
