#include "strval.h"

#include "strval/bott_samelson.hpp"
#include "strval/commands.hpp"
#include "strval/errors.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct sv_module {
  strval::HWModule module;
};

struct sv_polytope {
  strval::RationalPolytope polytope;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
sv_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const strval::UsageError& e) {
    last_error = e.what();
    return SV_ERR_USAGE;
  } catch (const strval::CapabilityError& e) {
    last_error = e.what();
    return SV_ERR_CAPABILITY;
  } catch (const strval::DomainError& e) {
    last_error = e.what();
    return SV_ERR_DOMAIN;
  } catch (const strval::ConsistencyError& e) {
    last_error = e.what();
    return SV_ERR_CONSISTENCY;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SV_ERR_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SV_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SV_ERR_INTERNAL;
  }
}

sv_status null_argument(const char* name) {
  last_error = std::string("null argument: ") + name;
  return SV_ERR_USAGE;
}

strval::RootSystemSpec spec_of(const char* family, int rank) {
  return strval::root_system(strval::parse_family(family), rank);
}

}  // namespace

extern "C" {

const char* sv_version(void) { return strval::version(); }

const char* sv_last_error(void) { return last_error.c_str(); }

const char* sv_status_name(sv_status status) {
  switch (status) {
    case SV_OK: return "ok";
    case SV_ERR_ASSERTION: return "assertion failed";
    case SV_ERR_USAGE: return "usage error";
    case SV_ERR_CAPABILITY: return "capability error";
    case SV_ERR_DOMAIN: return "domain error";
    case SV_ERR_CONSISTENCY: return "consistency error";
    case SV_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sv_free_string(char* s) { std::free(s); }

sv_status sv_run(const char* command, const char* config_json, char** out_report) {
  if (!command) return null_argument("command");
  if (!out_report) return null_argument("out_report");
  return guard([&] {
    *out_report = nullptr;
    nlohmann::json cfg = config_json && *config_json ? nlohmann::json::parse(config_json) : nlohmann::json::object();
    auto config = strval::parse_config(cfg);
    auto report = strval::run_command(command, config);
    *out_report = copy_string(strval::render(report, config.format));
    if (!report["passed"].get<bool>()) {
      last_error = std::string("assertion failed in ") + command;
      return SV_ERR_ASSERTION;
    }
    return SV_OK;
  });
}

sv_status sv_commands(char** out_list) {
  if (!out_list) return null_argument("out_list");
  return guard([&] {
    std::string s;
    for (const auto& name : strval::command_names()) s += name + "\n";
    *out_list = copy_string(s);
    return SV_OK;
  });
}

sv_status sv_module_build(const char* family, int rank, const int* lambda, size_t lambda_len, sv_module** out) {
  if (!family) return null_argument("family");
  if (!lambda && lambda_len) return null_argument("lambda");
  if (!out) return null_argument("out");
  return guard([&] {
    auto spec = spec_of(family, rank);
    strval::Weight w{std::vector<int>(lambda, lambda + lambda_len)};
    *out = new sv_module{strval::build_hw_module(spec, w)};
    return SV_OK;
  });
}

int sv_module_dim(const sv_module* m) { return m ? m->module.dim() : -1; }

sv_status sv_module_string_params(const sv_module* m, const int* word, size_t word_len, const char* const* sigma,
                                  int* out_params) {
  if (!m) return null_argument("module");
  if (!word && word_len) return null_argument("word");
  if (!sigma) return null_argument("sigma");
  if (!out_params) return null_argument("out_params");
  return guard([&] {
    strval::WeylWord w{std::vector<int>(word, word + word_len)};
    strval::validate_word(m->module.spec, w);
    strval::DualVector s;
    for (int j = 0; j < m->module.dim(); ++j) {
      if (!sigma[j]) throw strval::DomainError("null sigma coordinate");
      s.coords.push_back(strval::parse_rational(sigma[j]));
    }
    auto p = strval::string_params(m->module, w, s);
    for (size_t k = 0; k < word_len; ++k) out_params[k] = p.a[k];
    return SV_OK;
  });
}

sv_status sv_module_verify_main_theorem(const sv_module* m, const int* word, size_t word_len, int* out_matched,
                                        int* out_checked) {
  if (!m) return null_argument("module");
  if (!word && word_len) return null_argument("word");
  return guard([&] {
    strval::WeylWord w{std::vector<int>(word, word + word_len)};
    strval::validate_word(m->module.spec, w);
    if (!strval::is_reduced(m->module.spec, w) ||
        strval::weyl_length(m->module.spec, w) != m->module.spec.num_positive_roots)
      throw strval::DomainError("word is not a reduced word for w0");
    auto orbit = strval::chart_orbit(m->module, w);
    int matched = 0;
    for (int j = 0; j < m->module.dim(); ++j)
      if (strval::verify_main_theorem(m->module, w, strval::dual_basis_vector(m->module, j), orbit).match()) ++matched;
    if (out_matched) *out_matched = matched;
    if (out_checked) *out_checked = m->module.dim();
    if (matched != m->module.dim()) {
      last_error = "string parameters and valuation disagree";
      return SV_ERR_ASSERTION;
    }
    return SV_OK;
  });
}

sv_status sv_module_to_json(const sv_module* m, char** out_json) {
  if (!m) return null_argument("module");
  if (!out_json) return null_argument("out_json");
  return guard([&] {
    *out_json = copy_string(strval::to_json(m->module).dump());
    return SV_OK;
  });
}

void sv_module_free(sv_module* m) { delete m; }

sv_status sv_string_polytope(const char* family, int rank, const int* word, size_t word_len, const int* lambda,
                             size_t lambda_len, int level_cap, sv_polytope** out) {
  if (!family) return null_argument("family");
  if ((!word && word_len) || (!lambda && lambda_len)) return null_argument("word/lambda");
  if (!out) return null_argument("out");
  return guard([&] {
    auto spec = spec_of(family, rank);
    strval::WeylWord w{std::vector<int>(word, word + word_len)};
    strval::Weight l{std::vector<int>(lambda, lambda + lambda_len)};
    *out = new sv_polytope{strval::string_polytope(spec, w, l, level_cap).body};
    return SV_OK;
  });
}

sv_status sv_polytope_from_json(const char* json, sv_polytope** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guard([&] {
    auto given = strval::polytope_from_json(nlohmann::json::parse(json));
    if (given.vertices.empty()) throw strval::DomainError("polytope JSON has no vertices");
    *out = new sv_polytope{strval::convex_hull(given.vertices, given.ambient_dim)};
    return SV_OK;
  });
}

int sv_polytope_dim(const sv_polytope* p) { return p ? p->polytope.dim : -2; }

sv_status sv_polytope_lattice_count(const sv_polytope* p, int64_t k, uint64_t* out_count) {
  if (!p) return null_argument("polytope");
  if (!out_count) return null_argument("out_count");
  return guard([&] {
    *out_count = strval::lattice_count(p->polytope, k);
    return SV_OK;
  });
}

sv_status sv_polytope_volume(const sv_polytope* p, char** out_volume, int* out_intrinsic_dim) {
  if (!p) return null_argument("polytope");
  if (!out_volume) return null_argument("out_volume");
  return guard([&] {
    auto v = strval::volume(p->polytope);
    *out_volume = copy_string(strval::to_string(v.volume));
    if (out_intrinsic_dim) *out_intrinsic_dim = v.intrinsic_dim;
    return SV_OK;
  });
}

sv_status sv_polytope_to_json(const sv_polytope* p, char** out_json) {
  if (!p) return null_argument("polytope");
  if (!out_json) return null_argument("out_json");
  return guard([&] {
    *out_json = copy_string(strval::to_json(p->polytope).dump());
    return SV_OK;
  });
}

void sv_polytope_free(sv_polytope* p) { delete p; }

}  // extern "C"
