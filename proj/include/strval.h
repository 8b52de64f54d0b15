#ifndef STRVAL_H
#define STRVAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SV_API __declspec(dllexport)
#else
#define SV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sv_status {
  SV_OK = 0,
  SV_ERR_ASSERTION = 1,   /* a checked identity failed; the report is still produced */
  SV_ERR_USAGE = 2,       /* malformed command or configuration */
  SV_ERR_CAPABILITY = 3,  /* unsupported root system or size cap exceeded */
  SV_ERR_DOMAIN = 4,      /* invalid mathematical input */
  SV_ERR_CONSISTENCY = 5, /* a structural guarantee was contradicted */
  SV_ERR_INTERNAL = 6
} sv_status;

typedef struct sv_module sv_module;
typedef struct sv_polytope sv_polytope;

SV_API const char* sv_version(void);
/* Message of the last failing call on this thread; empty string if none. */
SV_API const char* sv_last_error(void);
SV_API const char* sv_status_name(sv_status status);
/* Releases strings returned through char** out-parameters. */
SV_API void sv_free_string(char* s);

/* Runs a command ("roots", "nok string-polytope", "suite", ...) with a JSON config object and returns the
   report rendered in the config's "format". Returns SV_ERR_ASSERTION when the report records a failed check. */
SV_API sv_status sv_run(const char* command, const char* config_json, char** out_report);
/* Newline-separated list of command names. */
SV_API sv_status sv_commands(char** out_list);

/* family is "A" or "C". */
SV_API sv_status sv_module_build(const char* family, int rank, const int* lambda, size_t lambda_len,
                                 sv_module** out);
SV_API int sv_module_dim(const sv_module* m);
/* sigma has sv_module_dim entries given as "p/q" strings; out_params receives word_len entries. */
SV_API sv_status sv_module_string_params(const sv_module* m, const int* word, size_t word_len,
                                         const char* const* sigma, int* out_params);
SV_API sv_status sv_module_verify_main_theorem(const sv_module* m, const int* word, size_t word_len,
                                               int* out_matched, int* out_checked);
SV_API sv_status sv_module_to_json(const sv_module* m, char** out_json);
SV_API void sv_module_free(sv_module* m);

SV_API sv_status sv_string_polytope(const char* family, int rank, const int* word, size_t word_len,
                                    const int* lambda, size_t lambda_len, int level_cap, sv_polytope** out);
SV_API sv_status sv_polytope_from_json(const char* json, sv_polytope** out);
SV_API int sv_polytope_dim(const sv_polytope* p);
SV_API sv_status sv_polytope_lattice_count(const sv_polytope* p, int64_t k, uint64_t* out_count);
/* Volume as a "p/q" string plus the intrinsic dimension. */
SV_API sv_status sv_polytope_volume(const sv_polytope* p, char** out_volume, int* out_intrinsic_dim);
SV_API sv_status sv_polytope_to_json(const sv_polytope* p, char** out_json);
SV_API void sv_polytope_free(sv_polytope* p);

#ifdef __cplusplus
}
#endif

#endif
