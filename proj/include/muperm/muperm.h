#ifndef MUPERM_MUPERM_H
#define MUPERM_MUPERM_H

/*
 * C interface to the muperm library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a muperm_status; on failure muperm_last_error() gives a
 * message for the calling thread. Strings returned through char** out
 * parameters are heap-allocated and must be released with
 * muperm_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define MUPERM_API __declspec(dllexport)
#else
#define MUPERM_API __attribute__((visibility("default")))
#endif

typedef enum muperm_status {
  MUPERM_OK = 0,
  MUPERM_ERR_PARAMETER = 1,
  MUPERM_ERR_DOMAIN = 2,
  MUPERM_ERR_NOT_WRAPPABLE = 3,
  MUPERM_ERR_REWRITE_INVALID = 4,
  MUPERM_ERR_NOT_EXPRESSIBLE = 5,
  MUPERM_ERR_INVALID_FACTORY_INPUT = 6,
  MUPERM_ERR_EXISTENCE_VIOLATION = 7,
  MUPERM_ERR_RESOURCE = 8,
  MUPERM_ERR_PARSE = 9,
  MUPERM_ERR_NULL_ARGUMENT = 20,
  MUPERM_ERR_INTERNAL = 99
} muperm_status;

typedef struct muperm_field muperm_field;
typedef struct muperm_poly muperm_poly;

MUPERM_API const char* muperm_status_name(muperm_status status);
MUPERM_API const char* muperm_last_error(void);
MUPERM_API void muperm_string_free(char* s);

/* Fields F_{2^{2k}}, 1 <= k <= 12. omega_alt selects w^2 instead of w. */
MUPERM_API muperm_status muperm_field_new(int k, int omega_alt, muperm_field** out);
MUPERM_API void muperm_field_free(muperm_field* field);
/* {"k": int, "modulus_bits": hex, "omega": hex} */
MUPERM_API muperm_status muperm_field_json(const muperm_field* field, char** out);

/* Polynomials in the {"k": int, "terms": [[exp, "hex"], ...]} format. */
MUPERM_API muperm_status muperm_poly_parse(const char* json, muperm_poly** out);
MUPERM_API muperm_status muperm_poly_json(const muperm_poly* poly, char** out);
MUPERM_API void muperm_poly_free(muperm_poly* poly);
MUPERM_API muperm_status muperm_poly_is_permutation(const muperm_poly* poly, int* out);

/* Generators. Each writes one JSON record. */
MUPERM_API muperm_status muperm_gen_thm1(int k, long long ell, long long m, long long u, char** record);
MUPERM_API muperm_status muperm_gen_wydm(int k, long long s, long long t, long long r, char** record);
MUPERM_API muperm_status muperm_gen_lh(int k, long long n, char** record);

/* Unit-circle criterion vs brute force for one polynomial. */
MUPERM_API muperm_status muperm_verify(const muperm_poly* poly, char** report);
/* Quotient rewrite of X^r A(X^{q-1}); anchor < 0 uses the lowest exponent. */
MUPERM_API muperm_status muperm_rewrite(const muperm_poly* poly, long long anchor, char** report);
/* Witness with f = alpha * g(beta X^n), or the JSON literal null. */
MUPERM_API muperm_status muperm_equiv(const muperm_poly* f, const muperm_poly* g, char** witness);

/*
 * Deterministic sweep. config_json keys: "k" (range string), "ell", "m"
 * (optional range strings), "u_max" (int), "checks" (array of names),
 * "omega_alt" (bool). detail receives JSON lines; report receives the
 * summary object; failures receives the total failure count.
 */
MUPERM_API muperm_status muperm_sweep(const char* config_json, char** detail, char** report,
                                      unsigned long long* failures);

#ifdef __cplusplus
}
#endif

#endif /* MUPERM_MUPERM_H */
