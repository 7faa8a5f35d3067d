#ifndef HARDY_C_API_H
#define HARDY_C_API_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HARDY_API __declspec(dllexport)
#else
#define HARDY_API __attribute__((visibility("default")))
#endif

/* Return codes. */
enum {
    HARDY_OK = 0,
    HARDY_E_DOMAIN = 1, /* mathematically invalid request, invalid spec, cap exceeded */
    HARDY_E_PARSE = 2,  /* malformed series, exponent or JSON text */
    HARDY_E_ARG = 3,    /* null pointer or bad argument */
    HARDY_E_INTERNAL = 4
};

typedef struct hardy_spec hardy_spec;
typedef struct hardy_series hardy_series;
typedef struct hardy_equation hardy_equation;

/* Message of the last failing call on this thread; never NULL. */
HARDY_API const char* hardy_what(void);
HARDY_API const char* hardy_version(void);
/* Frees strings returned through char** out-parameters. */
HARDY_API void hardy_string_free(char* s);

/* Derivation specs: {"rank": r, "log_derivatives": [...]}. */
HARDY_API int hardy_spec_from_json(const char* json_text, hardy_spec** out);
HARDY_API int hardy_spec_load(const char* path, hardy_spec** out);
HARDY_API void hardy_spec_free(hardy_spec* s);
HARDY_API size_t hardy_spec_rank(const hardy_spec* s);
/* Constants table and axiom report as JSON; returns HARDY_E_DOMAIN when an axiom fails (report still set). */
HARDY_API int hardy_spec_validate(const hardy_spec* s, char** report_json);

/* Series. */
HARDY_API int hardy_series_parse(const char* text, size_t rank, hardy_series** out);
HARDY_API void hardy_series_free(hardy_series* s);
HARDY_API int hardy_series_str(const hardy_series* s, char** out);
/* Drops terms >= beta and records O(t^beta). */
HARDY_API int hardy_series_truncate(const hardy_series* s, const char* beta, hardy_series** out);
/* Valuation as exponent text, or "inf" for zero. */
HARDY_API int hardy_series_valuation(const hardy_series* s, char** out);
/* D_k^i a (k = 0 is the base derivation). */
HARDY_API int hardy_derive(const hardy_spec* spec, const hardy_series* a, size_t k, unsigned i, hardy_series** out);

/* Differential polynomials: {"order": n, "derivation": k, "coefficients": [...]}. */
HARDY_API int hardy_equation_from_json(const hardy_spec* spec, const char* json_text, hardy_equation** out);
HARDY_API int hardy_equation_load(const hardy_spec* spec, const char* path, hardy_equation** out);
HARDY_API void hardy_equation_free(hardy_equation* e);
HARDY_API int hardy_equation_to_json(const hardy_equation* e, char** out);
HARDY_API int hardy_eval(const hardy_spec* spec, const hardy_equation* e, const hardy_series* y, hardy_series** out);
/* Pi polynomial, witnesses and roots of a Weierstrass-order-1 equation, as JSON. */
HARDY_API int hardy_indicial(const hardy_equation* e, char** out_json);

/* Transformations; bound_json (may be NULL) receives the support bound of the result. */
HARDY_API int hardy_conjugate_add(const hardy_spec* spec, const hardy_equation* e, const hardy_series* by,
                                  hardy_equation** out, char** bound_json);
HARDY_API int hardy_conjugate_mul(const hardy_spec* spec, const hardy_equation* e, const hardy_series* term,
                                  hardy_equation** out, char** bound_json);
HARDY_API int hardy_change_derivation(const hardy_spec* spec, const hardy_equation* e, size_t l,
                                      hardy_equation** out, char** bound_json);
/* Symbolic q_{j,i} table up to order n as JSON. */
HARDY_API int hardy_qtable(unsigned n, char** out_json);

/* Solver. options_json: {"max_terms", "max_branches", "max_reduction_depth", "enum_cap",
   "resonance_policy", "leading"}; every key optional. Output: JSON list of outcomes. */
HARDY_API int hardy_solve(const hardy_spec* spec, const hardy_equation* e, const char* options_json,
                          char** outcomes_json);
/* Replays a provenance list (JSON) into the support bound R. */
HARDY_API int hardy_support_bound(const hardy_spec* spec, const char* provenance_json, unsigned order,
                                  char** gridset_json);

/* Grid-based sets in text form. */
HARDY_API int hardy_gridset_normalize(const char* text, char** out_json);
HARDY_API int hardy_gridset_member(const char* text, const char* exponent, size_t cap, int* membership);
HARDY_API int hardy_gridset_enumerate(const char* text, const char* bound, size_t cap, char** out_json);
HARDY_API int hardy_gridset_semigroup(const char* text, char** out_json);
HARDY_API int hardy_gridset_sum(const char* a, const char* b, char** out_json);
HARDY_API int hardy_gridset_translate(const char* text, const char* beta, size_t cap, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
