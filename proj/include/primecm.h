/*
 * primecm: elliptic curves of prescribed prime order by complex multiplication.
 *
 * C interface over the C++ core. All handles are opaque; every function that
 * can fail returns a pcm_status and leaves a message retrievable through
 * pcm_last_error() on the context it was given. Integers cross the boundary
 * as NUL-terminated decimal strings. Strings returned through char** out
 * parameters are owned by the caller and released with pcm_string_free().
 */
#ifndef PRIMECM_H
#define PRIMECM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PRIMECM_BUILDING_SHARED)
#    define PRIMECM_API __declspec(dllexport)
#  else
#    define PRIMECM_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define PRIMECM_API __attribute__((visibility("default")))
#else
#  define PRIMECM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcm_status {
  PCM_OK = 0,
  PCM_ERR_INVALID_ARGUMENT = 1,
  PCM_ERR_DOMAIN = 2,
  PCM_ERR_NO_SQUARE_ROOT = 3,
  PCM_ERR_BAD_MODULUS = 4,
  PCM_ERR_NON_INVERTIBLE = 5,
  PCM_ERR_BAD_WITNESS = 6,
  PCM_ERR_INVARIANT_NOT_APPLICABLE = 7,
  PCM_ERR_NO_ROOT = 8,
  PCM_ERR_SPECIAL_J = 9,
  PCM_ERR_AMBIGUOUS_HASSE = 10,
  PCM_ERR_ORACLE_RANGE = 11,
  PCM_ERR_SEARCH_EXHAUSTED = 12,
  PCM_ERR_INTERNAL = 13
} pcm_status;

typedef enum pcm_invariant {
  PCM_INVARIANT_J = 0,
  PCM_INVARIANT_GAMMA2 = 1
} pcm_invariant;

typedef struct pcm_context pcm_context;
typedef struct pcm_result pcm_result;

typedef struct pcm_search_options {
  uint64_t seed;
  unsigned max_rounds;        /* fixed-order: basis rounds before giving up */
  size_t min_class_number;    /* fixed-order: skip D with smaller h(D) */
  pcm_invariant invariant;    /* GAMMA2 is used only when 3 does not divide D */
  const char* scan_from;      /* fixed-size: sequential scan start; NULL = random */
  size_t max_candidates;      /* fixed-size: prime candidates before giving up */
  unsigned threads;           /* 0 = hardware concurrency */
} pcm_search_options;

PRIMECM_API void pcm_search_options_init(pcm_search_options* options);

PRIMECM_API pcm_status pcm_context_create(pcm_context** out);
PRIMECM_API void pcm_context_destroy(pcm_context* ctx);
/* Message of the last failing call on ctx; empty string if none. */
PRIMECM_API const char* pcm_last_error(const pcm_context* ctx);
PRIMECM_API const char* pcm_status_string(pcm_status status);

/* Curve with exactly n points over a prime field. */
PRIMECM_API pcm_status pcm_fixed_order(pcm_context* ctx, const char* n,
                                       const pcm_search_options* options,
                                       pcm_result** out);

/* k-digit primes p, q and a curve over F_p with CM by O_D and q points. */
PRIMECM_API pcm_status pcm_fixed_size(pcm_context* ctx, unsigned k,
                                      const char* discriminant,
                                      const pcm_search_options* options,
                                      pcm_result** out);

PRIMECM_API pcm_status pcm_result_to_json(pcm_context* ctx,
                                          const pcm_result* result, char** out);
PRIMECM_API pcm_status pcm_result_from_json(pcm_context* ctx, const char* json,
                                            pcm_result** out);
/* *ok = 1 when every stored invariant re-validates; *reason is a static
 * string ("ok" on success). */
PRIMECM_API pcm_status pcm_result_check(pcm_context* ctx,
                                        const pcm_result* result, int* ok,
                                        const char** reason);
PRIMECM_API void pcm_result_destroy(pcm_result* result);

/* Class polynomial record in the cache format. cache_path may be NULL;
 * threads = 0 means hardware concurrency. */
PRIMECM_API pcm_status pcm_class_poly(pcm_context* ctx, const char* discriminant,
                                      pcm_invariant invariant,
                                      const char* cache_path, unsigned threads,
                                      char** out_record);

/* x^2 - D y^2 = 4n for an odd prime n. *found = 0 when no solution exists;
 * x and y are set only when *found = 1. */
PRIMECM_API pcm_status pcm_cornacchia(pcm_context* ctx, const char* discriminant,
                                      const char* n, int* found, char** x,
                                      char** y);

/* Exact #E(F_p) for Y^2 = X^3 + aX + b, p <= 10^6. */
PRIMECM_API pcm_status pcm_point_count(pcm_context* ctx, const char* p,
                                       const char* a, const char* b, char** out);

PRIMECM_API void pcm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PRIMECM_H */
