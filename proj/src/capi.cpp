#include "gridshell.h"

#include <string>
#include <vector>

#include "gridshell/runner.hpp"

#if defined(__GNUC__)
#define GS_EXPORT __attribute__((visibility("default")))
#else
#define GS_EXPORT
#endif

struct gs_session {
  gs::RunConfig cfg;
  std::string report;
  std::string error;
};

namespace {

gs_status status_from_exit(int code) {
  switch (code) {
    case 0:
      return GS_OK;
    case 1:
      return GS_ERR_INPUT;
    case 2:
      return GS_ERR_CAP;
    case 3:
      return GS_ERR_INVARIANT;
    default:
      return GS_ERR_INTERNAL;
  }
}

gs_status parse_int(const char* value, long long& out) {
  try {
    std::size_t used = 0;
    out = std::stoll(value, &used);
    return used == std::string(value).size() ? GS_OK : GS_ERR_INPUT;
  } catch (...) {
    return GS_ERR_INPUT;
  }
}

}  // namespace

extern "C" {

GS_EXPORT gs_session* gs_session_new(void) { return new gs_session(); }

GS_EXPORT void gs_session_free(gs_session* s) { delete s; }

GS_EXPORT gs_status gs_add_grid_file(gs_session* s, const char* path) {
  if (!s || !path) return GS_ERR_INPUT;
  s->cfg.grid_paths.emplace_back(path);
  return GS_OK;
}

GS_EXPORT gs_status gs_add_grid_text(gs_session* s, const char* name,
                                     const char* text) {
  if (!s || !name || !text) return GS_ERR_INPUT;
  s->cfg.grid_texts.emplace_back(name, text);
  return GS_OK;
}

GS_EXPORT void gs_clear_grids(gs_session* s) {
  if (!s) return;
  s->cfg.grid_paths.clear();
  s->cfg.grid_texts.clear();
}

GS_EXPORT gs_status gs_set_option(gs_session* s, const char* key,
                                  const char* value) {
  if (!s || !key || !value) return GS_ERR_INPUT;
  const std::string k(key);
  long long iv = 0;
  if (k == "flavor") {
    if (std::string(value) != "tilde" && std::string(value) != "minus") {
      s->error = "flavor must be tilde or minus";
      return GS_ERR_INPUT;
    }
    s->cfg.flavor = value;
    return GS_OK;
  }
  if (k == "format") {
    const std::string v(value);
    if (v != "text" && v != "json") {
      s->error = "format must be text or json";
      return GS_ERR_INPUT;
    }
    s->cfg.json = v == "json";
    return GS_OK;
  }
  if (k == "line-pos") {
    try {
      s->cfg.line_pos = std::stod(value);
      return GS_OK;
    } catch (...) {
      s->error = "line-pos must be a number";
      return GS_ERR_INPUT;
    }
  }
  if (parse_int(value, iv) != GS_OK) {
    s->error = "option " + k + " needs an integer value";
    return GS_ERR_INPUT;
  }
  if (k == "sector") {
    s->cfg.sector = static_cast<int>(iv);
  } else if (k == "floor") {
    s->cfg.floor = static_cast<int>(iv);
  } else if (k == "interval-cap") {
    if (iv < 1) return GS_ERR_INPUT;
    s->cfg.interval_cap = static_cast<int>(iv);
  } else if (k == "gap-cap") {
    if (iv < 0) return GS_ERR_INPUT;
    s->cfg.gap_cap = static_cast<int>(iv);
  } else if (k == "budget") {
    if (iv < 1) return GS_ERR_INPUT;
    s->cfg.budget = iv;
  } else if (k == "threads") {
    if (iv < 1) return GS_ERR_INPUT;
    s->cfg.threads = static_cast<int>(iv);
  } else if (k == "facets") {
    s->cfg.facets = iv != 0;
  } else {
    s->error = "unknown option: " + k;
    return GS_ERR_INPUT;
  }
  return GS_OK;
}

GS_EXPORT gs_status gs_run(gs_session* s, const char* command) {
  if (!s || !command) return GS_ERR_INPUT;
  s->cfg.command = command;
  const gs::RunResult res = gs::run(s->cfg);
  s->report = res.report;
  s->error = res.error;
  return status_from_exit(res.exit_code);
}

GS_EXPORT const char* gs_report(const gs_session* s) {
  return s ? s->report.c_str() : "";
}

GS_EXPORT const char* gs_last_error(const gs_session* s) {
  return s ? s->error.c_str() : "";
}

GS_EXPORT const char* gs_version(void) { return "1.0.0"; }

}  // extern "C"
