/*
 * C interface to the transversal and right-loop library.
 *
 * Objects are opaque handles created by nrt_*_create functions and released
 * with the matching nrt_*_free. Functions that can fail return an
 * nrt_status; on failure nrt_last_error() describes the problem for the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with nrt_string_free.
 */
#ifndef NRT_H
#define NRT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef NRT_BUILDING_LIBRARY
#    define NRT_API __declspec(dllexport)
#  else
#    define NRT_API __declspec(dllimport)
#  endif
#else
#  define NRT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nrt_status {
  NRT_OK = 0,
  NRT_ERR_INVALID_ARGUMENT = 1,
  NRT_ERR_PARSE = 2,
  NRT_ERR_NOT_SUBGROUP = 3,
  NRT_ERR_NOT_NORMAL = 4,
  NRT_ERR_ENUMERATION_TOO_LARGE = 5,
  NRT_ERR_NOT_IDENTITY = 6,
  NRT_ERR_COLUMN_NOT_BIJECTIVE = 7,
  NRT_ERR_NOT_LEFT_NONSINGULAR = 8,
  NRT_ERR_ORDER_TOO_LARGE = 9,
  NRT_ERR_NOT_PRIME = 10,
  NRT_ERR_INTERNAL = 11,
  NRT_ERR_OUT_OF_MEMORY = 12
} nrt_status;

typedef enum nrt_format {
  NRT_FORMAT_TABLE = 0,
  NRT_FORMAT_JSON = 1,
  NRT_FORMAT_CSV = 2
} nrt_format;

typedef enum nrt_relation {
  NRT_RELATION_ISOMORPHISM = 0,
  NRT_RELATION_ISOTOPY = 1
} nrt_relation;

typedef enum nrt_dihedral_mode {
  NRT_DIHEDRAL_COUNT = 0,
  NRT_DIHEDRAL_FAMILIES = 1,
  NRT_DIHEDRAL_CENSUS = 2
} nrt_dihedral_mode;

/* Default cap on the number of transversals enumerated (2^20). */
#define NRT_DEFAULT_CAP ((uint64_t)1 << 20)

typedef struct nrt_group nrt_group;
typedef struct nrt_subgroup nrt_subgroup;
typedef struct nrt_loop nrt_loop;
typedef struct nrt_partition nrt_partition;

NRT_API const char* nrt_status_name(nrt_status status);
/* Message for the last failure on this thread; "" if none. */
NRT_API const char* nrt_last_error(void);
/* Element index named by the last failure (NotIdentity,
 * ColumnNotBijective), or -1. */
NRT_API int64_t nrt_last_error_witness(void);
NRT_API void nrt_string_free(char* s);

/* Groups: "cyclic:n", "dihedral:n", "sym:k", "alt:k", "file:path". */
NRT_API nrt_status nrt_group_create(const char* descriptor, nrt_group** out);
NRT_API void nrt_group_free(nrt_group* g);
NRT_API size_t nrt_group_order(const nrt_group* g);
NRT_API nrt_status nrt_group_multiply(const nrt_group* g, uint32_t a, uint32_t b, uint32_t* out);
NRT_API nrt_status nrt_group_element_name(const nrt_group* g, uint32_t a, char** out);
NRT_API nrt_status nrt_group_parse_element(const nrt_group* g, const char* text, uint32_t* out);
NRT_API nrt_status nrt_group_render(const nrt_group* g, nrt_format format, char** out);

/* Subgroup generated by ';'-separated element names ("" for trivial). */
NRT_API nrt_status nrt_subgroup_create(const nrt_group* g, const char* generators,
                                       nrt_subgroup** out);
NRT_API void nrt_subgroup_free(nrt_subgroup* h);
NRT_API size_t nrt_subgroup_order(const nrt_subgroup* h);
NRT_API size_t nrt_subgroup_index(const nrt_subgroup* h);
NRT_API int nrt_subgroup_is_normal(const nrt_subgroup* h);
NRT_API size_t nrt_subgroup_core_order(const nrt_subgroup* h);
NRT_API nrt_status nrt_subgroup_render(const nrt_subgroup* h, nrt_format format, char** out);

/* |H|^([G:H]-1); NRT_ERR_ENUMERATION_TOO_LARGE if it overflows 64 bits. */
NRT_API nrt_status nrt_transversal_count(const nrt_subgroup* h, uint64_t* out);
NRT_API nrt_status nrt_transversals_render(const nrt_subgroup* h, uint64_t cap,
                                           nrt_format format, char** out);

/* Right loops. */
NRT_API nrt_status nrt_loop_from_table(size_t order, const uint32_t* table, nrt_loop** out);
NRT_API nrt_status nrt_loop_parse(const char* text, nrt_loop** out);
/* Z_n^B with B given as "1,3,5" ("" for the empty set). */
NRT_API nrt_status nrt_loop_znb(size_t n, const char* subset, nrt_loop** out);
/* Loop induced by a transversal written as comma-separated element names. */
NRT_API nrt_status nrt_loop_from_transversal(const nrt_subgroup* h, const char* reps,
                                             nrt_loop** out);
NRT_API void nrt_loop_free(nrt_loop* loop);
NRT_API size_t nrt_loop_order(const nrt_loop* loop);
NRT_API nrt_status nrt_loop_op(const nrt_loop* loop, uint32_t x, uint32_t y, uint32_t* out);
NRT_API nrt_status nrt_loop_flags(const nrt_loop* loop, int* is_loop, int* is_group);
/* Writes up to capacity indices; *count receives the full count. */
NRT_API nrt_status nrt_loop_left_nonsingular(const nrt_loop* loop, uint32_t* out,
                                             size_t capacity, size_t* count);
NRT_API nrt_status nrt_loop_torsion_order(const nrt_loop* loop, uint64_t* out);
NRT_API nrt_status nrt_loop_render(const nrt_loop* loop, nrt_format format, char** out);

/* Decisions. Witness arrays may be NULL; otherwise they need order entries
 * and are filled only when *result is 1. */
NRT_API nrt_status nrt_are_isomorphic(const nrt_loop* a, const nrt_loop* b, int* result,
                                      uint32_t* map);
NRT_API nrt_status nrt_are_isotopic(const nrt_loop* a, const nrt_loop* b, int* result,
                                    uint32_t* alpha, uint32_t* beta, uint32_t* gamma);
/* Exhaustive check for order <= 7; NRT_ERR_ORDER_TOO_LARGE above. */
NRT_API nrt_status nrt_isotopy_oracle(const nrt_loop* a, const nrt_loop* b, int* result);
/* Checks alpha(x) o' beta(y) = gamma(x o y) on every pair. */
NRT_API nrt_status nrt_verify_isotopy(const nrt_loop* a, const nrt_loop* b,
                                      const uint32_t* alpha, const uint32_t* beta,
                                      const uint32_t* gamma, int* result);

/* Enumerates T(G,H), induces the right loops and classifies them. */
NRT_API nrt_status nrt_classify(const nrt_subgroup* h, nrt_relation relation, uint64_t cap,
                                unsigned jobs, nrt_partition** out);
NRT_API void nrt_partition_free(nrt_partition* p);
NRT_API size_t nrt_partition_class_count(const nrt_partition* p);
NRT_API size_t nrt_partition_item_count(const nrt_partition* p);
NRT_API nrt_status nrt_partition_render(const nrt_partition* p, nrt_format format, char** out);

/* Dihedral data for D_2n with H = {1,x}. COUNT and FAMILIES need an odd
 * prime; CENSUS takes any n >= 2. For COUNT, *consistent (may be NULL) is
 * 1 when every computed value agrees. */
NRT_API nrt_status nrt_dihedral_render(size_t n, nrt_dihedral_mode mode, nrt_format format,
                                       uint64_t cap, unsigned jobs, char** out,
                                       int* consistent);
NRT_API nrt_status nrt_itp_count_formula(size_t p, uint64_t* out);
/* Cycle index of Aff(1,p); brute force is cross-checked for p <= 31. */
NRT_API nrt_status nrt_cycle_index_render(size_t p, nrt_format format, char** out);

/* Runs the named checks (all when n_checks is 0) on the default catalog or
 * the JSON catalog at catalog_path. p = 0 leaves the dihedral checks on the
 * catalog. *failed is set to 1 when any check fails. */
NRT_API nrt_status nrt_verify(const char* const* checks, size_t n_checks,
                              const char* catalog_path, size_t p, unsigned jobs, uint64_t cap,
                              nrt_format format, char** out, int* failed);
/* Newline-separated "id alias summary" lines. */
NRT_API nrt_status nrt_list_checks(char** out);

#ifdef __cplusplus
}
#endif

#endif /* NRT_H */
