#ifndef Z2TK_H
#define Z2TK_H

/* C interface of the z2tk shared library. All strings are UTF-8; returned
   strings are owned by the session (or the library) and stay valid until the
   next call on the same session. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(Z2TK_BUILDING_LIBRARY)
#define Z2TK_API __attribute__((visibility("default")))
#else
#define Z2TK_API
#endif

/* Status codes double as process exit codes for the CLI. */
typedef enum z2tk_status {
    Z2TK_OK = 0,
    Z2TK_CHECK_FAILED = 2, /* a verification ran and found a failure */
    Z2TK_BAD_ARGUMENT = 64,
    Z2TK_INTERNAL = 70
} z2tk_status;

typedef enum z2tk_format { Z2TK_FORMAT_JSON = 0, Z2TK_FORMAT_TEXT = 1 } z2tk_format;

typedef enum z2tk_op { Z2TK_ADD = 0, Z2TK_SUB = 1, Z2TK_MUL = 2, Z2TK_DIV = 3 } z2tk_op;

typedef struct z2tk_session z2tk_session;
typedef struct z2tk_rf z2tk_rf; /* rational function in E and lambda */

Z2TK_API const char* z2tk_version(void);

Z2TK_API z2tk_session* z2tk_session_create(void);
Z2TK_API void z2tk_session_destroy(z2tk_session* s);

/* Highest time-derivative order; process-wide. Z2TK_DERIV_CAP sets the default. */
Z2TK_API z2tk_status z2tk_set_deriv_cap(z2tk_session* s, unsigned cap);
Z2TK_API unsigned z2tk_deriv_cap(void);

/* Runs a command given as a JSON object, e.g.
   {"command": "verify-relations", "rep": "DEl"}. Returns the exit status;
   the report is available through z2tk_report. */
Z2TK_API z2tk_status z2tk_run(z2tk_session* s, const char* config_json);
Z2TK_API const char* z2tk_report(z2tk_session* s, z2tk_format format);

/* Message of the last failing call on this session, or "". */
Z2TK_API const char* z2tk_last_error(const z2tk_session* s);

Z2TK_API z2tk_status z2tk_rf_parse(z2tk_session* s, const char* text, z2tk_rf** out);
Z2TK_API z2tk_status z2tk_rf_arith(z2tk_session* s, const z2tk_rf* a, const z2tk_rf* b, z2tk_op op, z2tk_rf** out);
/* Exact value at E = E0, lambda = L0 (Gaussian-rational literals), as text. */
Z2TK_API z2tk_status z2tk_rf_specialize(z2tk_session* s, const z2tk_rf* f, const char* E0, const char* L0,
                                        const char** out);
Z2TK_API const char* z2tk_rf_to_string(z2tk_session* s, const z2tk_rf* f);
Z2TK_API const char* z2tk_rf_to_json(z2tk_session* s, const z2tk_rf* f);
Z2TK_API int z2tk_rf_equal(const z2tk_rf* a, const z2tk_rf* b);
Z2TK_API void z2tk_rf_free(z2tk_rf* f);

#ifdef __cplusplus
}
#endif

#endif
