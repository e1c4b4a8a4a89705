#ifndef BFUNC_BFUNC_H
#define BFUNC_BFUNC_H

#include <stddef.h>

#if defined(_WIN32)
#define BFUNC_API __declspec(dllexport)
#else
#define BFUNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they double as CLI exit codes. */
enum {
  BFUNC_OK = 0,
  BFUNC_ERR_INTERNAL = 1,
  BFUNC_ERR_INPUT = 2,
  BFUNC_ERR_RESOURCE = 3
};

typedef struct bfunc_session bfunc_session;
typedef struct bfunc_report bfunc_report;

BFUNC_API const char* bfunc_version(void);
BFUNC_API const char* bfunc_status_name(int status);

BFUNC_API int bfunc_session_new(bfunc_session** out);
BFUNC_API void bfunc_session_free(bfunc_session* s);

/* "x,y,z"; an empty string means infer the names from the inputs */
BFUNC_API int bfunc_session_set_vars(bfunc_session* s, const char* list);
/* grevlex | deglex | lex */
BFUNC_API int bfunc_session_set_tie(bfunc_session* s, const char* name);
/* mora | lazard */
BFUNC_API int bfunc_session_set_gb(bfunc_session* s, const char* name);
/* 0 restores the default 2(2n+1) */
BFUNC_API int bfunc_session_set_n0(bfunc_session* s, unsigned n0);
BFUNC_API int bfunc_session_set_nmax(bfunc_session* s, unsigned nmax);
BFUNC_API int bfunc_session_set_as_basis(bfunc_session* s, int flag);
/* message of the last failed setter or run on this session, "" if none */
BFUNC_API const char* bfunc_session_last_error(const bfunc_session* s);

/* Each run stores a report in *out, also on failure (it then carries the
   error record); release it with bfunc_report_free. */
BFUNC_API int bfunc_localb(bfunc_session* s, const char* f, bfunc_report** out);
BFUNC_API int bfunc_ann(bfunc_session* s, const char* f, bfunc_report** out);
BFUNC_API int bfunc_gb(bfunc_session* s, const char* const* ops, size_t count, bfunc_report** out);
BFUNC_API int bfunc_nf(bfunc_session* s, const char* op, const char* const* ideal, size_t count,
                       unsigned n, bfunc_report** out);
BFUNC_API int bfunc_divide(bfunc_session* s, const char* op, const char* const* by, size_t count,
                           unsigned n, bfunc_report** out);

BFUNC_API int bfunc_report_status(const bfunc_report* r);
BFUNC_API const char* bfunc_report_text(const bfunc_report* r);
/* JSON record; `pretty` selects 2-space indentation */
BFUNC_API const char* bfunc_report_json(const bfunc_report* r, int pretty);
/* localb: ascending coefficients of b as rational text */
BFUNC_API size_t bfunc_report_b_count(const bfunc_report* r);
BFUNC_API const char* bfunc_report_b_coefficient(const bfunc_report* r, size_t i);
BFUNC_API void bfunc_report_free(bfunc_report* r);

#ifdef __cplusplus
}
#endif

#endif
