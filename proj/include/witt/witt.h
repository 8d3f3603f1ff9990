#ifndef WITT_WITT_H
#define WITT_WITT_H

/* C interface to the witt library. Every call returns a witt_status;
 * on failure witt_last_error() holds a message for the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WITT_API __declspec(dllexport)
#else
#define WITT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WITT_OK = 0,
  WITT_E_USAGE = 1,
  WITT_E_DOMAIN = 2,
  WITT_E_EXTEND_FIELD = 3,
  WITT_E_SIZING = 4,
  WITT_E_INTERNAL = 5
} witt_status;

typedef struct witt_algebra witt_algebra;
typedef struct witt_module witt_module;
typedef struct witt_config witt_config;

WITT_API const char* witt_version(void);
WITT_API const char* witt_last_error(void);
WITT_API const char* witt_status_name(witt_status s);

/* W(m,n,1) over F_p. */
WITT_API witt_status witt_algebra_new(uint32_t p, uint32_t m, uint32_t n, witt_algebra** out);
WITT_API void witt_algebra_free(witt_algebra* W);
WITT_API witt_status witt_algebra_dim(const witt_algebra* W, size_t* out);
/* Copies the label of basis element idx into buf (NUL-terminated, truncated
 * to cap). *needed receives the full length plus one. */
WITT_API witt_status witt_algebra_label(const witt_algebra* W, uint32_t idx, char* buf, size_t cap, size_t* needed);
WITT_API witt_status witt_algebra_parse(const witt_algebra* W, const char* label, uint32_t* out);
/* Bracket of two basis elements as (index, coefficient) pairs. */
WITT_API witt_status witt_algebra_bracket(const witt_algebra* W, uint32_t i, uint32_t j, uint32_t* idx, uint32_t* coef,
                                          size_t cap, size_t* count);
/* lambda holds m+n integers in toral order eta_1..eta_n, eps_1..eps_m. */
WITT_API witt_status witt_is_typical(const witt_algebra* W, const int64_t* lambda, size_t len, int* out);

/* Restricted Kac module K(lambda). */
WITT_API witt_status witt_kac_restricted(const witt_algebra* W, const int64_t* lambda, size_t len, witt_module** out);
WITT_API void witt_module_free(witt_module* M);
WITT_API witt_status witt_module_dim(const witt_module* M, size_t* out);
WITT_API witt_status witt_module_is_simple(const witt_module* M, uint64_t seed, int* out);
/* Dimension of the simple head L(lambda). */
WITT_API witt_status witt_module_head_dim(const witt_module* M, size_t* out);
WITT_API witt_status witt_module_invariants_ok(const witt_module* M, int* out);

/* Report runner used by the command-line tool. Keys: p m n lambda chi
 * gradation seed max-ext max-dim sample corrupt timings threads.
 * "lambda" appends; "chi" takes the character file contents. */
WITT_API witt_status witt_config_new(witt_config** out);
WITT_API void witt_config_free(witt_config* c);
WITT_API witt_status witt_config_set(witt_config* c, const char* key, const char* value);
/* command: info | verify | kac-table | nonres; format: json | csv.
 * *text is owned by the caller (witt_string_free). *exit_code is 0 when
 * every consistency check holds and 1 otherwise. */
WITT_API witt_status witt_run(const witt_config* c, const char* command, const char* format, char** text,
                              int* exit_code);
WITT_API void witt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
