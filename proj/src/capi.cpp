#include "tidal/tidal.h"

#include "commands.hpp"
#include "json_io.hpp"
#include "tidal/error.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>

struct tidal_coxeter {
  tidal::CoxeterSystem sys;
};

struct tidal_hecke {
  tidal::HeckeAlgebra hecke;
};

struct tidal_module {
  tidal::ParabolicModule module;
};

struct tidal_fgl {
  tidal::FGLAlgebra alg;
};

namespace {

thread_local std::string last_error;

template <class F>
tidal_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return TIDAL_OK;
  } catch (const tidal::InvalidArgument& e) {
    last_error = e.what();
    return TIDAL_ERR_INVALID_ARGUMENT;
  } catch (const tidal::ConsistencyError& e) {
    last_error = e.what();
    return TIDAL_ERR_CONSISTENCY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TIDAL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return TIDAL_ERR_INTERNAL;
  }
}

template <class... P>
bool any_null(const P*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

tidal_status null_pointer() {
  last_error = "null pointer argument";
  return TIDAL_ERR_NULL_POINTER;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* tidal_version(void) { return "0.3.0"; }

const char* tidal_last_error(void) { return last_error.c_str(); }

void tidal_string_free(char* s) { std::free(s); }

tidal_status tidal_coxeter_create(const char* type, int affine, tidal_coxeter** out) {
  if (any_null(type, out)) return null_pointer();
  return guarded([&] { *out = new tidal_coxeter{tidal::CoxeterSystem::build(type, affine != 0)}; });
}

void tidal_coxeter_destroy(tidal_coxeter* sys) { delete sys; }

tidal_status tidal_coxeter_normal_form(const tidal_coxeter* sys, const char* word, char** out) {
  if (any_null(sys, word, out)) return null_pointer();
  return guarded([&] { *out = dup(sys->sys.element(word).str()); });
}

tidal_status tidal_coxeter_length(const tidal_coxeter* sys, const char* word, unsigned* out) {
  if (any_null(sys, word, out)) return null_pointer();
  return guarded([&] { *out = sys->sys.element(word).length(); });
}

tidal_status tidal_coxeter_bruhat_leq(const tidal_coxeter* sys, const char* y, const char* x, int* out) {
  if (any_null(sys, y, x, out)) return null_pointer();
  return guarded([&] { *out = sys->sys.bruhat_leq(sys->sys.element(y), sys->sys.element(x)) ? 1 : 0; });
}

tidal_status tidal_hecke_create(const tidal_coxeter* sys, tidal_hecke** out) {
  if (any_null(sys, out)) return null_pointer();
  return guarded([&] { *out = new tidal_hecke{tidal::HeckeAlgebra(sys->sys)}; });
}

void tidal_hecke_destroy(tidal_hecke* hecke) { delete hecke; }

tidal_status tidal_hecke_kl_poly(tidal_hecke* hecke, const char* y, const char* x, char** out_json) {
  if (any_null(hecke, y, x, out_json)) return null_pointer();
  return guarded([&] {
    const auto& sys = hecke->hecke.system();
    const auto p = hecke->hecke.kl_poly(sys.intern(sys.element(y)), sys.intern(sys.element(x)));
    *out_json = dup(tidal::io::poly(p).dump());
  });
}

tidal_status tidal_hecke_mu(tidal_hecke* hecke, const char* y, const char* x, long long* out) {
  if (any_null(hecke, y, x, out)) return null_pointer();
  return guarded([&] {
    const auto& sys = hecke->hecke.system();
    *out = static_cast<long long>(hecke->hecke.mu(sys.intern(sys.element(y)), sys.intern(sys.element(x))));
  });
}

tidal_status tidal_module_create(const tidal_coxeter* sys, int spherical, tidal_module** out) {
  if (any_null(sys, out)) return null_pointer();
  return guarded([&] {
    const auto kind = spherical ? tidal::ModuleKind::Spherical : tidal::ModuleKind::Antispherical;
    *out = new tidal_module{tidal::ParabolicModule(sys->sys, kind)};
  });
}

void tidal_module_destroy(tidal_module* module) { delete module; }

tidal_status tidal_module_coeff(tidal_module* module, const char* y, const char* x, char** out_json) {
  if (any_null(module, y, x, out_json)) return null_pointer();
  return guarded([&] {
    const auto& sys = module->module.system();
    const auto p = module->module.coeff(sys.intern(sys.element(y)), sys.intern(sys.element(x)));
    *out_json = dup(tidal::io::poly(p).dump());
  });
}

tidal_status tidal_module_graded_hom(tidal_module* module, const char* x, const char* y, char** out_json) {
  if (any_null(module, x, y, out_json)) return null_pointer();
  return guarded([&] {
    if (module->module.kind() != tidal::ModuleKind::Antispherical)
      throw tidal::InvalidArgument("graded Hom needs the antispherical module");
    const auto& sys = module->module.system();
    const auto h = tidal::graded_hom(module->module, sys.element(x), sys.element(y));
    *out_json = dup(tidal::io::poly(h.poly).dump());
  });
}

tidal_status tidal_fgl_create(unsigned p, unsigned n, const char* fgl, tidal_fgl** out) {
  if (any_null(fgl, out)) return null_pointer();
  return guarded([&] { *out = new tidal_fgl{tidal::FGLAlgebra::parse(p, n, fgl)}; });
}

void tidal_fgl_destroy(tidal_fgl* alg) { delete alg; }

tidal_status tidal_fgl_tensor(tidal_fgl* alg, unsigned a, unsigned b, char** out_json) {
  if (any_null(alg, out_json)) return null_pointer();
  return guarded([&] { *out_json = dup(tidal::io::report(tidal::tensor_decompose(alg->alg, a, b)).dump()); });
}

tidal_status tidal_fgl_id_membership(tidal_fgl* alg, unsigned k, unsigned j, int* out) {
  if (any_null(alg, out)) return null_pointer();
  return guarded([&] { *out = tidal::id_membership(alg->alg, k, j) ? 1 : 0; });
}

tidal_status tidal_run(const char* config_json, char** out, char** err, int* exit_code) {
  if (any_null(config_json, exit_code)) return null_pointer();
  if (out) *out = nullptr;
  if (err) *err = nullptr;
  tidal::RunResult res;
  const tidal_status st = guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw tidal::InvalidArgument(std::string("config is not valid JSON: ") + e.what());
    }
    res = tidal::run(tidal::RunConfig::from_json(j));
  });
  if (st != TIDAL_OK) {
    *exit_code = 2;
    if (err) *err = dup("error: " + last_error + "\n");
    return st;
  }
  *exit_code = res.exit_code;
  if (out) *out = dup(res.out);
  if (err) *err = dup(res.err);
  return TIDAL_OK;
}

}  // extern "C"
