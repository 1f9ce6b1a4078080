#ifndef MAXCONE_H
#define MAXCONE_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(MAXCONE_BUILDING)
#    define MC_API __declspec(dllexport)
#  else
#    define MC_API __declspec(dllimport)
#  endif
#else
#  define MC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes for the command-line tool. */
typedef enum mc_status {
  MC_OK = 0,
  MC_ERR_DOMAIN = 1,          /* mathematical precondition failed (divergent star, not member, ...) */
  MC_ERR_USAGE = 2,           /* bad arguments, parse errors */
  MC_NO_SOLUTION = 3,         /* solve: the system has no nontrivial solution */
  MC_BUDGET_EXCEEDED = 4      /* solve: iteration budget exhausted */
} mc_status;

typedef enum mc_backend { MC_BACKEND_FLOAT = 0, MC_BACKEND_EXACT = 1 } mc_backend;

typedef enum mc_view {
  MC_VIEW_AUTO = -1,          /* use the view declared by the inputs */
  MC_VIEW_MAXTIMES = 0,
  MC_VIEW_MAXPLUS = 1
} mc_view;

typedef enum mc_format { MC_FORMAT_JSON = 0, MC_FORMAT_CSV = 1 } mc_format;

typedef struct mc_context mc_context;
typedef struct mc_matrix mc_matrix;
typedef struct mc_request mc_request;
typedef struct mc_result mc_result;

MC_API const char* mc_version(void);

/* Context: backend, view, tolerance and seed shared by all requests. */
MC_API mc_context* mc_context_new(void);
MC_API void mc_context_free(mc_context* ctx);
MC_API mc_status mc_context_set_backend(mc_context* ctx, mc_backend backend);
MC_API mc_status mc_context_set_view(mc_context* ctx, mc_view view);
MC_API mc_status mc_context_set_tolerance(mc_context* ctx, double tol);
MC_API mc_status mc_context_set_seed(mc_context* ctx, unsigned long long seed);
MC_API double mc_context_tolerance(const mc_context* ctx);
/* Message of the last failed call on this context, or "" if none. */
MC_API const char* mc_context_last_error(const mc_context* ctx);

/* Matrices. Text may be the JSON schema or CSV with a semiring header line.
   A vector is an n x 1 (or 1 x n) matrix. */
MC_API mc_status mc_matrix_parse(mc_context* ctx, const char* text, mc_matrix** out);
MC_API void mc_matrix_free(mc_matrix* m);
MC_API size_t mc_matrix_rows(const mc_matrix* m);
MC_API size_t mc_matrix_cols(const mc_matrix* m);
MC_API mc_view mc_matrix_view(const mc_matrix* m);
/* Serialises in the matrix's own view; the string must be released with mc_string_free. */
MC_API mc_status mc_matrix_print(mc_context* ctx, const mc_matrix* m, mc_format format, char** out);
MC_API void mc_string_free(char* s);

/* Requests: a verb, ordered inputs, an optional start vector and string options. */
MC_API mc_request* mc_request_new(mc_context* ctx, const char* verb);
MC_API void mc_request_free(mc_request* req);
MC_API mc_status mc_request_add_input(mc_request* req, const mc_matrix* m);
MC_API mc_status mc_request_set_y0(mc_request* req, const mc_matrix* m);
MC_API mc_status mc_request_set_option(mc_request* req, const char* key, const char* value);
/* Runs the request. A result document is produced for failures too. */
MC_API mc_status mc_request_run(mc_request* req, mc_result** out);

MC_API mc_status mc_result_status(const mc_result* r);
MC_API const char* mc_result_json(const mc_result* r);
MC_API const char* mc_result_csv(const mc_result* r);
MC_API void mc_result_free(mc_result* r);

#ifdef __cplusplus
}
#endif

#endif
