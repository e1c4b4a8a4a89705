#include "bfunc/bfunc.h"

#include <new>
#include <string>
#include <vector>

#include "bfunc/driver.hpp"
#include "bfunc/errors.hpp"

struct bfunc_session {
  bfunc::RunConfig cfg;
  std::string last_error;
};

struct bfunc_report {
  bfunc::Report report;
  std::string json_compact, json_pretty;
};

namespace {

int fail(bfunc_session* s, int code, const std::string& msg) {
  if (s) s->last_error = msg;
  return code;
}

// Runs a setter body, mapping exceptions to status codes.
template <class F>
int setter(bfunc_session* s, F body) {
  if (!s) return BFUNC_ERR_INPUT;
  try {
    body();
    s->last_error.clear();
    return BFUNC_OK;
  } catch (const std::invalid_argument& e) {
    return fail(s, BFUNC_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(s, BFUNC_ERR_INTERNAL, e.what());
  }
}

template <class F>
int run(bfunc_session* s, bfunc_report** out, F body) {
  if (!s || !out) return fail(s, BFUNC_ERR_INPUT, "null argument");
  *out = nullptr;
  auto* r = new (std::nothrow) bfunc_report;
  if (!r) return fail(s, BFUNC_ERR_INTERNAL, "out of memory");
  try {
    r->report = body();
  } catch (const std::exception& e) {
    // argument marshalling only; the driver catches library errors itself
    r->report.status = bfunc::Status::Input;
    r->report.text = std::string("error: ") + e.what() + "\n";
    r->report.json = {{"error", {{"kind", "input"}, {"message", e.what()}}}};
  }
  r->json_compact = r->report.json.dump();
  r->json_pretty = r->report.json.dump(2);
  *out = r;
  const int code = static_cast<int>(r->report.status);
  if (code == BFUNC_OK) s->last_error.clear();
  else s->last_error = r->report.json["error"].value("message", std::string());
  return code;
}

std::vector<std::string> strings(const char* const* v, size_t n) {
  if (n && !v) throw bfunc::InputError("null expression list");
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    if (!v[i]) throw bfunc::InputError("null expression");
    out.emplace_back(v[i]);
  }
  return out;
}

std::string str(const char* p) {
  if (!p) throw bfunc::InputError("null expression");
  return p;
}

}  // namespace

extern "C" {

const char* bfunc_version(void) { return "0.1.0"; }

const char* bfunc_status_name(int status) {
  switch (status) {
    case BFUNC_OK: return "ok";
    case BFUNC_ERR_INPUT: return "input error";
    case BFUNC_ERR_RESOURCE: return "resource limit";
    case BFUNC_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

int bfunc_session_new(bfunc_session** out) {
  if (!out) return BFUNC_ERR_INPUT;
  *out = new (std::nothrow) bfunc_session;
  return *out ? BFUNC_OK : BFUNC_ERR_INTERNAL;
}

void bfunc_session_free(bfunc_session* s) { delete s; }

int bfunc_session_set_vars(bfunc_session* s, const char* list) {
  return setter(s, [&] { s->cfg.vars = bfunc::split_vars(str(list)); });
}

int bfunc_session_set_tie(bfunc_session* s, const char* name) {
  return setter(s, [&] { s->cfg.tie = bfunc::parse_tie_order(str(name)); });
}

int bfunc_session_set_gb(bfunc_session* s, const char* name) {
  return setter(s, [&] { s->cfg.gb = bfunc::parse_gb_strategy(str(name)); });
}

int bfunc_session_set_n0(bfunc_session* s, unsigned n0) {
  return setter(s, [&] {
    if (n0 == 0) s->cfg.n0.reset();
    else s->cfg.n0 = n0;
  });
}

int bfunc_session_set_nmax(bfunc_session* s, unsigned nmax) {
  return setter(s, [&] {
    if (nmax == 0) throw bfunc::InputError("nmax must be positive");
    s->cfg.nmax = nmax;
  });
}

int bfunc_session_set_as_basis(bfunc_session* s, int flag) {
  return setter(s, [&] { s->cfg.as_basis = flag != 0; });
}

const char* bfunc_session_last_error(const bfunc_session* s) { return s ? s->last_error.c_str() : ""; }

int bfunc_localb(bfunc_session* s, const char* f, bfunc_report** out) {
  return run(s, out, [&] { return bfunc::run_localb(str(f), s->cfg); });
}

int bfunc_ann(bfunc_session* s, const char* f, bfunc_report** out) {
  return run(s, out, [&] { return bfunc::run_ann(str(f), s->cfg); });
}

int bfunc_gb(bfunc_session* s, const char* const* ops, size_t count, bfunc_report** out) {
  return run(s, out, [&] { return bfunc::run_gb(strings(ops, count), s->cfg); });
}

int bfunc_nf(bfunc_session* s, const char* op, const char* const* ideal, size_t count, unsigned n,
             bfunc_report** out) {
  return run(s, out, [&] { return bfunc::run_nf(str(op), strings(ideal, count), n, s->cfg); });
}

int bfunc_divide(bfunc_session* s, const char* op, const char* const* by, size_t count, unsigned n,
                 bfunc_report** out) {
  return run(s, out, [&] { return bfunc::run_divide(str(op), strings(by, count), n, s->cfg); });
}

int bfunc_report_status(const bfunc_report* r) {
  return r ? static_cast<int>(r->report.status) : BFUNC_ERR_INPUT;
}

const char* bfunc_report_text(const bfunc_report* r) { return r ? r->report.text.c_str() : ""; }

const char* bfunc_report_json(const bfunc_report* r, int pretty) {
  if (!r) return "";
  return pretty ? r->json_pretty.c_str() : r->json_compact.c_str();
}

size_t bfunc_report_b_count(const bfunc_report* r) { return r ? r->report.b_coefficients.size() : 0; }

const char* bfunc_report_b_coefficient(const bfunc_report* r, size_t i) {
  if (!r || i >= r->report.b_coefficients.size()) return nullptr;
  return r->report.b_coefficients[i].c_str();
}

void bfunc_report_free(bfunc_report* r) { delete r; }

}  // extern "C"
