/* C interface to libtidal. All handles are opaque; every call that can fail
 * returns a tidal_status and leaves a message for tidal_last_error() on the
 * calling thread. Strings returned through char** are owned by the caller
 * and released with tidal_string_free(). */
#ifndef TIDAL_TIDAL_H
#define TIDAL_TIDAL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(TIDAL_BUILDING_LIBRARY)
#define TIDAL_API __attribute__((visibility("default")))
#else
#define TIDAL_API
#endif

typedef enum tidal_status {
  TIDAL_OK = 0,
  TIDAL_ERR_INVALID_ARGUMENT = 1,
  TIDAL_ERR_CONSISTENCY = 2,
  TIDAL_ERR_NULL_POINTER = 3,
  TIDAL_ERR_INTERNAL = 4
} tidal_status;

typedef struct tidal_coxeter tidal_coxeter;
typedef struct tidal_hecke tidal_hecke;
typedef struct tidal_module tidal_module;
typedef struct tidal_fgl tidal_fgl;

TIDAL_API const char* tidal_version(void);
/* Message of the last failed call on this thread; "" if none. */
TIDAL_API const char* tidal_last_error(void);
TIDAL_API void tidal_string_free(char* s);

/* Coxeter systems. type is "A1", "A2", "A3", "B2" (or "C2") or "G2". Words
 * are hyphen-joined generator indices; "" or "e" is the identity. */
TIDAL_API tidal_status tidal_coxeter_create(const char* type, int affine, tidal_coxeter** out);
TIDAL_API void tidal_coxeter_destroy(tidal_coxeter* sys);
TIDAL_API tidal_status tidal_coxeter_normal_form(const tidal_coxeter* sys, const char* word, char** out);
TIDAL_API tidal_status tidal_coxeter_length(const tidal_coxeter* sys, const char* word, unsigned* out);
TIDAL_API tidal_status tidal_coxeter_bruhat_leq(const tidal_coxeter* sys, const char* y, const char* x, int* out);

/* Kazhdan-Lusztig polynomials. Polynomials are returned as JSON
 * {"lo": k, "coeffs": [...]}. The Hecke handle keeps its own reference to
 * the system, so the tidal_coxeter may be destroyed first. */
TIDAL_API tidal_status tidal_hecke_create(const tidal_coxeter* sys, tidal_hecke** out);
TIDAL_API void tidal_hecke_destroy(tidal_hecke* hecke);
TIDAL_API tidal_status tidal_hecke_kl_poly(tidal_hecke* hecke, const char* y, const char* x, char** out_json);
TIDAL_API tidal_status tidal_hecke_mu(tidal_hecke* hecke, const char* y, const char* x, long long* out);

/* Antispherical (spherical != 0: spherical) module of an affine system. */
TIDAL_API tidal_status tidal_module_create(const tidal_coxeter* sys, int spherical, tidal_module** out);
TIDAL_API void tidal_module_destroy(tidal_module* module);
TIDAL_API tidal_status tidal_module_coeff(tidal_module* module, const char* y, const char* x, char** out_json);
/* Graded dimension of Hom between tilting modules (antispherical only). */
TIDAL_API tidal_status tidal_module_graded_hom(tidal_module* module, const char* x, const char* y, char** out_json);

/* k[x]/x^{p^n} with a formal group law: "mult", "add" or a polynomial. */
TIDAL_API tidal_status tidal_fgl_create(unsigned p, unsigned n, const char* fgl, tidal_fgl** out);
TIDAL_API void tidal_fgl_destroy(tidal_fgl* alg);
/* Jordan type of J_a (x) J_b as a JSON array of block sizes. */
TIDAL_API tidal_status tidal_fgl_tensor(tidal_fgl* alg, unsigned a, unsigned b, char** out_json);
TIDAL_API tidal_status tidal_fgl_id_membership(tidal_fgl* alg, unsigned k, unsigned j, int* out);

/* Runs one CLI command described by a JSON config object (keys as the CLI
 * flags with '-' replaced by '_', plus "command"). exit_code follows the
 * CLI: 0 ok, 1 check violation, 2 usage error. out and err may be NULL. */
TIDAL_API tidal_status tidal_run(const char* config_json, char** out, char** err, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
