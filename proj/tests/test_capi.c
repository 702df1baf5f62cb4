/* Exercises the C interface from plain C. */
#include "tidal/tidal.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void coxeter_and_hecke(void) {
  tidal_coxeter* sys = NULL;
  EXPECT(tidal_coxeter_create("A2", 0, &sys) == TIDAL_OK);
  char* nf = NULL;
  EXPECT(tidal_coxeter_normal_form(sys, "2-1-2", &nf) == TIDAL_OK);
  EXPECT(nf && strcmp(nf, "1-2-1") == 0);
  tidal_string_free(nf);
  unsigned len = 0;
  EXPECT(tidal_coxeter_length(sys, "1-2-1-2", &len) == TIDAL_OK && len == 2);
  int leq = -1;
  EXPECT(tidal_coxeter_bruhat_leq(sys, "1", "2-1", &leq) == TIDAL_OK && leq == 1);
  EXPECT(tidal_coxeter_bruhat_leq(sys, "1-2", "2-1", &leq) == TIDAL_OK && leq == 0);

  tidal_hecke* hecke = NULL;
  EXPECT(tidal_hecke_create(sys, &hecke) == TIDAL_OK);
  tidal_coxeter_destroy(sys); /* the Hecke handle keeps its own copy */
  char* poly = NULL;
  EXPECT(tidal_hecke_kl_poly(hecke, "", "1-2-1", &poly) == TIDAL_OK);
  EXPECT(poly && strcmp(poly, "{\"lo\":3,\"coeffs\":[1]}") == 0);
  tidal_string_free(poly);
  long long mu = -1;
  EXPECT(tidal_hecke_mu(hecke, "1", "1-2", &mu) == TIDAL_OK && mu == 1);
  tidal_hecke_destroy(hecke);
}

static void modules(void) {
  tidal_coxeter* sys = NULL;
  EXPECT(tidal_coxeter_create("A1", 1, &sys) == TIDAL_OK);
  tidal_module* asph = NULL;
  EXPECT(tidal_module_create(sys, 0, &asph) == TIDAL_OK);
  char* out = NULL;
  EXPECT(tidal_module_coeff(asph, "0", "0-1", &out) == TIDAL_OK);
  EXPECT(out && strcmp(out, "{\"lo\":1,\"coeffs\":[1]}") == 0);
  tidal_string_free(out);
  EXPECT(tidal_module_graded_hom(asph, "0", "0", &out) == TIDAL_OK);
  EXPECT(out && strcmp(out, "{\"lo\":0,\"coeffs\":[1,0,1]}") == 0);
  tidal_string_free(out);
  out = NULL;
  EXPECT(tidal_module_coeff(asph, "", "1", &out) == TIDAL_ERR_INVALID_ARGUMENT);
  EXPECT(out == NULL);
  EXPECT(strlen(tidal_last_error()) > 0);
  tidal_module_destroy(asph);

  tidal_module* sph = NULL;
  EXPECT(tidal_module_create(sys, 1, &sph) == TIDAL_OK);
  EXPECT(tidal_module_graded_hom(sph, "0", "0", &out) == TIDAL_ERR_INVALID_ARGUMENT);
  tidal_module_destroy(sph);
  tidal_coxeter_destroy(sys);
}

static void cyclic(void) {
  tidal_fgl* alg = NULL;
  EXPECT(tidal_fgl_create(3, 1, "mult", &alg) == TIDAL_OK);
  char* out = NULL;
  EXPECT(tidal_fgl_tensor(alg, 2, 2, &out) == TIDAL_OK);
  EXPECT(out && strcmp(out, "[3,1]") == 0);
  tidal_string_free(out);
  int member = -1;
  EXPECT(tidal_fgl_id_membership(alg, 3, 1, &member) == TIDAL_OK && member == 1);
  EXPECT(tidal_fgl_id_membership(alg, 2, 1, &member) == TIDAL_OK && member == 0);
  EXPECT(tidal_fgl_tensor(alg, 7, 1, &out) == TIDAL_ERR_INVALID_ARGUMENT);
  tidal_fgl_destroy(alg);
  EXPECT(tidal_fgl_create(4, 1, "mult", &alg) == TIDAL_ERR_INVALID_ARGUMENT);
  EXPECT(tidal_fgl_create(3, 1, "u + v + u^2*v", &alg) == TIDAL_ERR_INVALID_ARGUMENT);
}

static void errors_and_run(void) {
  tidal_coxeter* sys = NULL;
  EXPECT(tidal_coxeter_create("E8", 0, &sys) == TIDAL_ERR_INVALID_ARGUMENT);
  EXPECT(sys == NULL);
  EXPECT(strstr(tidal_last_error(), "E8") != NULL);
  EXPECT(tidal_coxeter_create(NULL, 0, &sys) == TIDAL_ERR_NULL_POINTER);
  EXPECT(tidal_coxeter_create("A1", 0, NULL) == TIDAL_ERR_NULL_POINTER);
  EXPECT(tidal_coxeter_create("A1", 0, &sys) == TIDAL_OK);
  EXPECT(strcmp(tidal_last_error(), "") == 0);
  tidal_coxeter_destroy(sys);
  tidal_coxeter_destroy(NULL);

  char* out = NULL;
  char* err = NULL;
  int code = -1;
  EXPECT(tidal_run("{\"command\":\"duflo\",\"type\":\"A2\"}", &out, &err, &code) == TIDAL_OK);
  EXPECT(code == 0);
  EXPECT(out && strstr(out, "\"duflo\":[\"\",\"1\",\"2\",\"1-2-1\"]") != NULL);
  tidal_string_free(out);
  tidal_string_free(err);

  EXPECT(tidal_run("{\"command\":\"duflo\",\"colour\":1}", &out, &err, &code) == TIDAL_ERR_INVALID_ARGUMENT);
  EXPECT(code == 2);
  EXPECT(err && strstr(err, "colour") != NULL);
  tidal_string_free(out);
  tidal_string_free(err);
  EXPECT(tidal_run("not json", NULL, NULL, &code) == TIDAL_ERR_INVALID_ARGUMENT && code == 2);
  EXPECT(strlen(tidal_version()) > 0);
}

int main(void) {
  coxeter_and_hecke();
  modules();
  cyclic();
  errors_and_run();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  puts("capi: all checks passed");
  return 0;
}
