/* Exercises the shared library through its C header only. */
#include "z2tk/z2tk.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                                                                   \
    do {                                                                                                               \
        if (!(cond)) {                                                                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond);                                        \
            ++failures;                                                                                                \
        }                                                                                                              \
    } while (0)

int main(void) {
    z2tk_session* s = z2tk_session_create();
    EXPECT(s != NULL);
    EXPECT(strlen(z2tk_version()) > 0);

    EXPECT(z2tk_run(s, "{\"command\": \"verify-relations\", \"rep\": \"DEl\"}") == Z2TK_OK);
    EXPECT(strstr(z2tk_report(s, Z2TK_FORMAT_JSON), "\"schema_version\"") != NULL);
    EXPECT(strstr(z2tk_report(s, Z2TK_FORMAT_TEXT), "verify-relations") != NULL);

    EXPECT(z2tk_run(s, "{\"command\": \"verify-relations\", \"rep\": \"bogus\"}") == Z2TK_BAD_ARGUMENT);
    EXPECT(strlen(z2tk_last_error(s)) > 0);
    EXPECT(z2tk_run(s, "not json") == Z2TK_BAD_ARGUMENT);
    EXPECT(z2tk_run(s, NULL) == Z2TK_BAD_ARGUMENT);
    EXPECT(z2tk_run(NULL, "{}") == Z2TK_BAD_ARGUMENT);

    EXPECT(z2tk_run(s, "{\"command\": \"mechanics\", \"action1\": true, \"g\": \"mu*x*xbar\"}") ==
           Z2TK_CHECK_FAILED);

    z2tk_rf *a = NULL, *b = NULL, *q = NULL, *want = NULL;
    EXPECT(z2tk_rf_parse(s, "lambda^2 - lambda*E^2", &a) == Z2TK_OK);
    EXPECT(z2tk_rf_parse(s, "lambda", &b) == Z2TK_OK);
    EXPECT(z2tk_rf_arith(s, a, b, Z2TK_DIV, &q) == Z2TK_OK);
    EXPECT(z2tk_rf_parse(s, "lambda - E^2", &want) == Z2TK_OK);
    EXPECT(z2tk_rf_equal(q, want));
    EXPECT(strstr(z2tk_rf_to_json(s, q), "num") != NULL);

    const char* v = NULL;
    EXPECT(z2tk_rf_specialize(s, q, "1", "3", &v) == Z2TK_OK);
    EXPECT(v && strcmp(v, "2") == 0);

    z2tk_rf *zero = NULL, *bad = NULL;
    EXPECT(z2tk_rf_parse(s, "0", &zero) == Z2TK_OK);
    EXPECT(z2tk_rf_arith(s, a, zero, Z2TK_DIV, &bad) == Z2TK_BAD_ARGUMENT);
    EXPECT(bad == NULL);
    EXPECT(z2tk_rf_parse(s, "0.5", &bad) == Z2TK_BAD_ARGUMENT);

    z2tk_rf* inv = NULL;
    EXPECT(z2tk_rf_parse(s, "1/lambda", &inv) == Z2TK_OK);
    EXPECT(z2tk_rf_specialize(s, inv, "1", "0", &v) == Z2TK_BAD_ARGUMENT);

    unsigned cap = z2tk_deriv_cap();
    EXPECT(z2tk_set_deriv_cap(s, 0) == Z2TK_BAD_ARGUMENT);
    EXPECT(z2tk_set_deriv_cap(s, 8) == Z2TK_OK);
    EXPECT(z2tk_deriv_cap() == 8);
    z2tk_set_deriv_cap(s, cap);

    z2tk_rf_free(a);
    z2tk_rf_free(b);
    z2tk_rf_free(q);
    z2tk_rf_free(want);
    z2tk_rf_free(zero);
    z2tk_rf_free(inv);
    z2tk_session_destroy(s);

    if (failures)
        fprintf(stderr, "%d failures\n", failures);
    else
        printf("C API: all checks passed\n");
    return failures ? 1 : 0;
}
