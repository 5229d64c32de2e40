/*
 * C interface to the fracgen library.
 *
 * Objects are opaque handles created by *_create / *_from_* functions and
 * released with the matching *_free function. Every fallible call returns a
 * fracgen_status; on failure fracgen_last_error() describes the problem for
 * the calling thread. Strings returned through char** are heap allocated
 * and must be released with fracgen_string_free.
 *
 * Rational arguments are text: "num/den", "num", or a decimal literal
 * ("0.5" is read as exactly 1/2).
 */
#ifndef FRACGEN_H
#define FRACGEN_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FRACGEN_BUILDING)
#    define FRACGEN_API __declspec(dllexport)
#  else
#    define FRACGEN_API __declspec(dllimport)
#  endif
#else
#  define FRACGEN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fracgen_status {
  FRACGEN_OK = 0,
  FRACGEN_E_INVALID_ARGUMENT = 1,
  FRACGEN_E_PARSE = 2,
  FRACGEN_E_DOMAIN = 3,
  FRACGEN_E_DEGENERATE = 4,   /* beta_0 == 0 */
  FRACGEN_E_INCONSISTENT = 5, /* sum of beta_j != 0 */
  FRACGEN_E_OFF_GRID = 6,
  FRACGEN_E_INTERNAL = 7
} fracgen_status;

typedef enum fracgen_side { FRACGEN_LEFT = 0, FRACGEN_RIGHT = 1 } fracgen_side;

typedef struct fracgen_generator fracgen_generator;
typedef struct fracgen_weights fracgen_weights;
typedef struct fracgen_report fracgen_report;
typedef struct fracgen_table fracgen_table;
typedef struct fracgen_stencil fracgen_stencil;

typedef double (*fracgen_function)(double x, void* user_data);

FRACGEN_API const char* fracgen_version(void);
FRACGEN_API const char* fracgen_last_error(void);
FRACGEN_API const char* fracgen_status_name(fracgen_status status);
FRACGEN_API void fracgen_string_free(char* s);

/* Generators: W_{p,r}(z) = (beta_0 + ... + beta_p z^p)^alpha. */
FRACGEN_API fracgen_status fracgen_generator_create(const char* alpha, int p, const char* r,
                                                    fracgen_generator** out);
/* Reads the JSON emitted by fracgen_generator_to_json (betas may be edited). */
FRACGEN_API fracgen_status fracgen_generator_from_json(const char* json, fracgen_generator** out);
FRACGEN_API void fracgen_generator_free(fracgen_generator* g);
FRACGEN_API int fracgen_generator_order(const fracgen_generator* g);
/* Writes beta_index as "num/den" text. */
FRACGEN_API fracgen_status fracgen_generator_beta(const fracgen_generator* g, int index, char** out);
FRACGEN_API int fracgen_generator_has_zero_constant_term(const fracgen_generator* g);
FRACGEN_API fracgen_status fracgen_generator_to_json(const fracgen_generator* g, char** out);

/* Grunwald weights w_0..w_M (Miller recurrence). */
FRACGEN_API fracgen_status fracgen_weights_compute(const fracgen_generator* g, size_t M, fracgen_weights** out);
FRACGEN_API void fracgen_weights_free(fracgen_weights* w);
FRACGEN_API size_t fracgen_weights_size(const fracgen_weights* w);
FRACGEN_API const double* fracgen_weights_data(const fracgen_weights* w);
FRACGEN_API fracgen_status fracgen_weights_to_csv(const fracgen_weights* w, char** out);

/* Shifted Grunwald operator on grid samples f(a + k h), k = 0..count-1. */
FRACGEN_API fracgen_status fracgen_apply_samples(const fracgen_generator* g, const fracgen_weights* w,
                                                 double a, double b, double h, const double* samples,
                                                 size_t count, double x, fracgen_side side, double* out);
/* Same operator with an evaluable function (needed for non-integer shifts). */
FRACGEN_API fracgen_status fracgen_apply_function(const fracgen_generator* g, const fracgen_weights* w,
                                                  double a, double b, double h, fracgen_function f,
                                                  void* user_data, double x, fracgen_side side, double* out);

/* Order verification; K == 0 selects the default depth p + 4. */
FRACGEN_API fracgen_status fracgen_verify(const fracgen_generator* g, size_t K, fracgen_report** out);
FRACGEN_API void fracgen_report_free(fracgen_report* r);
FRACGEN_API int fracgen_report_confirmed_order(const fracgen_report* r);
FRACGEN_API fracgen_status fracgen_report_to_json(const fracgen_report* r, char** out);

/* Convergence study on f(x) = x^mu over [0, 2 x0], h = h_start * 2^-i. */
FRACGEN_API fracgen_status fracgen_converge(const fracgen_generator* g, double mu, double x0, double h_start,
                                            size_t h_count, fracgen_side side, fracgen_table** out);
FRACGEN_API void fracgen_table_free(fracgen_table* t);
FRACGEN_API double fracgen_table_slope(const fracgen_table* t);
FRACGEN_API fracgen_status fracgen_table_to_csv(const fracgen_table* t, char** out);

/* Integer-order finite-difference stencils. */
FRACGEN_API fracgen_status fracgen_stencil_create(int n, int p, const char* r, fracgen_stencil** out);
FRACGEN_API fracgen_status fracgen_stencil_from_json(const char* json, fracgen_stencil** out);
FRACGEN_API void fracgen_stencil_free(fracgen_stencil* s);
FRACGEN_API size_t fracgen_stencil_size(const fracgen_stencil* s);
/* format: "text" or "json" */
FRACGEN_API fracgen_status fracgen_stencil_render(const fracgen_stencil* s, const char* format, char** out);
FRACGEN_API int fracgen_stencil_equal(const fracgen_stencil* a, const fracgen_stencil* b);

#ifdef __cplusplus
}
#endif

#endif /* FRACGEN_H */
