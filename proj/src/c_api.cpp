#include "witt/witt.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "report.hpp"

struct witt_algebra {
  std::shared_ptr<const witt::WittAlgebra> W;
};

struct witt_module {
  witt::KacModule kac;
};

struct witt_config {
  witt::report::RunConfig cfg;
};

namespace {

thread_local std::string last_error;

witt_status status_of(witt::ErrorCode c) {
  switch (c) {
    case witt::ErrorCode::Usage: return WITT_E_USAGE;
    case witt::ErrorCode::Domain: return WITT_E_DOMAIN;
    case witt::ErrorCode::ExtendField: return WITT_E_EXTEND_FIELD;
    case witt::ErrorCode::Sizing: return WITT_E_SIZING;
    case witt::ErrorCode::Internal: return WITT_E_INTERNAL;
  }
  return WITT_E_INTERNAL;
}

template <class F>
witt_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return WITT_OK;
  } catch (const witt::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return WITT_E_SIZING;
  } catch (const std::exception& e) {
    last_error = e.what();
    return WITT_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  witt::require(p != nullptr, std::string(what) + " must not be null");
}

witt::Weight weight_of(const witt::WittAlgebra& W, const int64_t* lambda, size_t len) {
  witt::require(len == W.rank(), "weight must have m + n coordinates");
  need(lambda, "lambda");
  witt::Weight w;
  for (size_t i = 0; i < len; ++i) w.push_back(W.field().from_int(lambda[i]));
  return w;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  witt::require(!v.empty() && v.find_first_not_of("0123456789") == std::string::npos,
                key + " expects a non-negative integer, got '" + v + "'");
  try {
    return std::stoull(v);
  } catch (const std::out_of_range&) {
    witt::fail(witt::ErrorCode::Usage, key + " is out of range");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  witt::fail(witt::ErrorCode::Usage, key + " expects true or false");
}

}  // namespace

extern "C" {

const char* witt_version(void) { return WITT_VERSION; }

const char* witt_last_error(void) { return last_error.c_str(); }

const char* witt_status_name(witt_status s) {
  switch (s) {
    case WITT_OK: return "ok";
    case WITT_E_USAGE: return "usage";
    case WITT_E_DOMAIN: return "domain";
    case WITT_E_EXTEND_FIELD: return "extend-field";
    case WITT_E_SIZING: return "sizing";
    case WITT_E_INTERNAL: return "internal";
  }
  return "unknown";
}

witt_status witt_algebra_new(uint32_t p, uint32_t m, uint32_t n, witt_algebra** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    witt::report::RunConfig c;
    c.p = p;
    c.m = m;
    c.n = n;
    witt::report::validate(c);
    *out = new witt_algebra{std::make_shared<const witt::WittAlgebra>(p, m, n)};
  });
}

void witt_algebra_free(witt_algebra* W) { delete W; }

witt_status witt_algebra_dim(const witt_algebra* W, size_t* out) {
  return guard([&] {
    need(W, "algebra");
    need(out, "out");
    *out = W->W->dim();
  });
}

witt_status witt_algebra_label(const witt_algebra* W, uint32_t idx, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    need(W, "algebra");
    witt::require(idx < W->W->dim(), "basis index out of range");
    const auto s = W->W->label(idx);
    if (needed) *needed = s.size() + 1;
    if (buf && cap) {
      const size_t k = std::min(cap - 1, s.size());
      std::memcpy(buf, s.data(), k);
      buf[k] = '\0';
    }
  });
}

witt_status witt_algebra_parse(const witt_algebra* W, const char* label, uint32_t* out) {
  return guard([&] {
    need(W, "algebra");
    need(label, "label");
    need(out, "out");
    *out = W->W->parse(label);
  });
}

witt_status witt_algebra_bracket(const witt_algebra* W, uint32_t i, uint32_t j, uint32_t* idx, uint32_t* coef,
                                 size_t cap, size_t* count) {
  return guard([&] {
    need(W, "algebra");
    need(count, "count");
    witt::require(i < W->W->dim() && j < W->W->dim(), "basis index out of range");
    const auto& b = W->W->bracket_basis(i, j);
    *count = b.nnz();
    witt::require(cap >= b.nnz() || (!idx && !coef), "output buffers too small");
    for (size_t k = 0; k < b.nnz(); ++k) {
      if (idx) idx[k] = b.entries[k].first;
      if (coef) coef[k] = b.entries[k].second;
    }
  });
}

witt_status witt_is_typical(const witt_algebra* W, const int64_t* lambda, size_t len, int* out) {
  return guard([&] {
    need(W, "algebra");
    need(out, "out");
    *out = W->W->is_typical(weight_of(*W->W, lambda, len)) ? 1 : 0;
  });
}

witt_status witt_kac_restricted(const witt_algebra* W, const int64_t* lambda, size_t len, witt_module** out) {
  return guard([&] {
    need(W, "algebra");
    need(out, "out");
    *out = nullptr;
    auto kac = witt::kac_restricted(W->W, weight_of(*W->W, lambda, len), 20000);
    *out = new witt_module{std::move(kac)};
  });
}

void witt_module_free(witt_module* M) { delete M; }

witt_status witt_module_dim(const witt_module* M, size_t* out) {
  return guard([&] {
    need(M, "module");
    need(out, "out");
    *out = M->kac.K.dim();
  });
}

witt_status witt_module_is_simple(const witt_module* M, uint64_t seed, int* out) {
  return guard([&] {
    need(M, "module");
    need(out, "out");
    witt::SimplicityOptions opt;
    opt.seed = seed;
    *out = witt::is_simple(M->kac.K, opt).simple ? 1 : 0;
  });
}

witt_status witt_module_head_dim(const witt_module* M, size_t* out) {
  return guard([&] {
    need(M, "module");
    need(out, "out");
    *out = witt::simple_head(M->kac).module.dim();
  });
}

witt_status witt_module_invariants_ok(const witt_module* M, int* out) {
  return guard([&] {
    need(M, "module");
    need(out, "out");
    *out = witt::check_invariants(M->kac.K).ok() ? 1 : 0;
  });
}

witt_status witt_config_new(witt_config** out) {
  return guard([&] {
    need(out, "out");
    *out = new witt_config{};
  });
}

void witt_config_free(witt_config* c) { delete c; }

witt_status witt_config_set(witt_config* c, const char* key, const char* value) {
  return guard([&] {
    need(c, "config");
    need(key, "key");
    need(value, "value");
    const std::string k = key, v = value;
    auto& cfg = c->cfg;
    if (k == "p") cfg.p = static_cast<std::uint32_t>(parse_u64(k, v));
    else if (k == "m") cfg.m = static_cast<std::uint32_t>(parse_u64(k, v));
    else if (k == "n") cfg.n = static_cast<std::uint32_t>(parse_u64(k, v));
    else if (k == "lambda") cfg.lambdas.push_back(v);
    else if (k == "chi") cfg.chi_text = v;
    else if (k == "gradation") cfg.gradation = v;
    else if (k == "seed") cfg.seed = parse_u64(k, v);
    else if (k == "max-ext") cfg.max_ext = static_cast<std::uint32_t>(parse_u64(k, v));
    else if (k == "max-dim") cfg.max_dim = parse_u64(k, v);
    else if (k == "threads") cfg.threads = static_cast<unsigned>(parse_u64(k, v));
    else if (k == "corrupt") cfg.corrupt = parse_bool(k, v);
    else if (k == "timings") cfg.timings = parse_bool(k, v);
    else if (k == "sample") {
      try {
        cfg.sample = std::stod(v);
      } catch (const std::exception&) {
        witt::fail(witt::ErrorCode::Usage, "sample expects a number");
      }
    } else {
      witt::fail(witt::ErrorCode::Usage, "unknown config key '" + k + "'");
    }
  });
}

witt_status witt_run(const witt_config* c, const char* command, const char* format, char** text, int* exit_code) {
  return guard([&] {
    need(c, "config");
    need(command, "command");
    need(text, "text");
    need(exit_code, "exit_code");
    *text = nullptr;
    const std::string cmd = command, fmt = format ? format : "json";
    witt::require(fmt == "json" || fmt == "csv", "format must be json or csv");
    witt::report::Outcome o;
    if (cmd == "info") o = witt::report::cmd_info(c->cfg);
    else if (cmd == "verify") o = witt::report::cmd_verify(c->cfg);
    else if (cmd == "kac-table") o = witt::report::cmd_kac_table(c->cfg);
    else if (cmd == "nonres") o = witt::report::cmd_nonres(c->cfg);
    else witt::fail(witt::ErrorCode::Usage, "unknown command '" + cmd + "'");
    const auto s = witt::report::render(o.report, fmt);
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *text = buf;
    *exit_code = o.exit_code;
  });
}

void witt_string_free(char* s) { std::free(s); }

}  // extern "C"
