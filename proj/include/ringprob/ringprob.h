/* ringprob: exact commuting and zero-product probabilities of finite rings,
 * with audited ideal extraction. C interface. */
#ifndef RINGPROB_RINGPROB_H
#define RINGPROB_RINGPROB_H

#include <stddef.h>
#include <stdint.h>

#if defined(RINGPROB_BUILDING_LIBRARY)
#define RINGPROB_API __attribute__((visibility("default")))
#else
#define RINGPROB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ringprob_ring ringprob_ring;

/* Also the CLI exit codes. */
typedef enum ringprob_status {
  RINGPROB_OK = 0,
  RINGPROB_ERROR = 1,
  RINGPROB_ASSERTION_FAILED = 2,
  RINGPROB_MALFORMED = 3,
  RINGPROB_CAP_EXCEEDED = 4
} ringprob_status;

typedef enum ringprob_mode { RINGPROB_MODE_CP = 0, RINGPROB_MODE_ZP = 1 } ringprob_mode;

typedef enum ringprob_format {
  RINGPROB_FORMAT_JSON = 0,
  RINGPROB_FORMAT_CSV = 1,
  RINGPROB_FORMAT_TEXT = 2
} ringprob_format;

typedef enum ringprob_objective {
  RINGPROB_OBJECTIVE_MAX = 0,
  RINGPROB_OBJECTIVE_SUM = 1,
  RINGPROB_OBJECTIVE_LEX = 2
} ringprob_objective;

typedef struct ringprob_config {
  ringprob_mode mode;
  ringprob_format format;
  uint64_t max_order;   /* 0: default cap */
  unsigned jobs;        /* 0 or 1: single-threaded */
  ringprob_objective objective;
  const char* epsilon;  /* "a/b", or NULL for the ring's own probability */
  uint64_t oracle_max;  /* scan oracle column cutoff, 0: default */
} ringprob_config;

RINGPROB_API void ringprob_config_init(ringprob_config* config);

RINGPROB_API const char* ringprob_version(void);
/* Message of the last failed call on this thread, or "". */
RINGPROB_API const char* ringprob_last_error(void);
RINGPROB_API void ringprob_string_free(char* s);

RINGPROB_API ringprob_status ringprob_ring_load(const char* path, ringprob_ring** out);
RINGPROB_API ringprob_status ringprob_ring_parse(const char* json, ringprob_ring** out);
/* "Z:n", "zero:n", "M2:p", "T2:p", "sum(A,B)" */
RINGPROB_API ringprob_status ringprob_ring_build(const char* family, ringprob_ring** out);
RINGPROB_API void ringprob_ring_free(ringprob_ring* ring);

RINGPROB_API uint64_t ringprob_ring_cardinality(const ringprob_ring* ring);
RINGPROB_API ringprob_status ringprob_ring_to_json(const ringprob_ring* ring, char** out);
RINGPROB_API ringprob_status ringprob_ring_save(const ringprob_ring* ring, const char* path);

/* Exact values as "a/b". */
RINGPROB_API ringprob_status ringprob_cp(const ringprob_ring* ring, char** out);
RINGPROB_API ringprob_status ringprob_zp(const ringprob_ring* ring, char** out);

/* Report commands. *out is set (free with ringprob_string_free) whenever the
 * status is OK or ASSERTION_FAILED. */
RINGPROB_API ringprob_status ringprob_info(const ringprob_ring* ring, const ringprob_config* config,
                                           char** out);
RINGPROB_API ringprob_status ringprob_extract(const ringprob_ring* ring,
                                              const ringprob_config* config, char** out);
/* suite: thm1 thm3 prop21 prop31 lemma32 converse eberhard */
RINGPROB_API ringprob_status ringprob_verify(const ringprob_ring* ring, const char* suite,
                                             const ringprob_config* config, char** out);
RINGPROB_API ringprob_status ringprob_oracle(const ringprob_ring* ring,
                                             const ringprob_config* config, char** out);
RINGPROB_API ringprob_status ringprob_scan(const char* const* grids, size_t count,
                                           const ringprob_config* config, char** out);
/* out_dir may be NULL to skip writing ring files. */
RINGPROB_API ringprob_status ringprob_enumerate(const uint32_t* orders, size_t rank,
                                                const char* out_dir,
                                                const ringprob_config* config, char** out);

#ifdef __cplusplus
}
#endif

#endif
