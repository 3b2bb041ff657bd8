#include "z2tk/z2tk.h"

#include "z2tk/commands.hpp"
#include "z2tk/expr_parser.hpp"
#include "z2tk/supermech.hpp"

#include <new>
#include <string>

struct z2tk_session {
    std::string last_error;
    nlohmann::json report;
    std::string rendered;
    std::string scratch;
};

struct z2tk_rf {
    z2tk::RationalFunction value;
};

namespace {

z2tk_status fail(z2tk_session* s, z2tk_status code, const std::string& msg) {
    if (s)
        s->last_error = msg;
    return code;
}

// Runs f, mapping exceptions to status codes.
template <class F> z2tk_status guarded(z2tk_session* s, F&& f) {
    if (!s)
        return Z2TK_BAD_ARGUMENT;
    try {
        s->last_error.clear();
        return f();
    } catch (const z2tk::ParseError& e) {
        return fail(s, Z2TK_BAD_ARGUMENT, e.what());
    } catch (const z2tk::DivisionByZero& e) {
        return fail(s, Z2TK_BAD_ARGUMENT, e.what());
    } catch (const z2tk::PoleError& e) {
        return fail(s, Z2TK_BAD_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(s, Z2TK_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(s, Z2TK_INTERNAL, e.what());
    }
}

} // namespace

extern "C" {

const char* z2tk_version(void) { return "1.0.0"; }

z2tk_session* z2tk_session_create(void) { return new (std::nothrow) z2tk_session(); }

void z2tk_session_destroy(z2tk_session* s) { delete s; }

z2tk_status z2tk_set_deriv_cap(z2tk_session* s, unsigned cap) {
    if (cap == 0 || cap > 60)
        return fail(s, Z2TK_BAD_ARGUMENT, "derivative cap must be between 1 and 60");
    z2tk::set_derivative_cap(cap);
    return Z2TK_OK;
}

unsigned z2tk_deriv_cap(void) { return z2tk::derivative_cap(); }

z2tk_status z2tk_run(z2tk_session* s, const char* config_json) {
    return guarded(s, [&]() -> z2tk_status {
        s->report = nullptr;
        s->rendered.clear();
        if (!config_json)
            return fail(s, Z2TK_BAD_ARGUMENT, "null config");
        nlohmann::json cfg = nlohmann::json::parse(config_json, nullptr, false);
        if (cfg.is_discarded())
            return fail(s, Z2TK_BAD_ARGUMENT, "config is not valid JSON");
        z2tk::CommandResult r = z2tk::run_command(cfg);
        s->report = std::move(r.report);
        if (s->report.contains("error"))
            s->last_error = s->report["error"].get<std::string>();
        return static_cast<z2tk_status>(r.exit_code);
    });
}

const char* z2tk_report(z2tk_session* s, z2tk_format format) {
    if (!s || s->report.is_null())
        return "";
    s->rendered = format == Z2TK_FORMAT_TEXT ? z2tk::render_text(s->report) : s->report.dump(2) + "\n";
    return s->rendered.c_str();
}

const char* z2tk_last_error(const z2tk_session* s) { return s ? s->last_error.c_str() : "no session"; }

z2tk_status z2tk_rf_parse(z2tk_session* s, const char* text, z2tk_rf** out) {
    return guarded(s, [&] {
        if (!text || !out)
            return fail(s, Z2TK_BAD_ARGUMENT, "null argument");
        *out = new z2tk_rf{z2tk::parse_rational_function(text)};
        return Z2TK_OK;
    });
}

z2tk_status z2tk_rf_arith(z2tk_session* s, const z2tk_rf* a, const z2tk_rf* b, z2tk_op op, z2tk_rf** out) {
    return guarded(s, [&] {
        if (!a || !b || !out)
            return fail(s, Z2TK_BAD_ARGUMENT, "null argument");
        if (op < Z2TK_ADD || op > Z2TK_DIV)
            return fail(s, Z2TK_BAD_ARGUMENT, "unknown operation");
        *out = new z2tk_rf{z2tk::rf_arith(a->value, b->value, static_cast<z2tk::ArithOp>(op))};
        return Z2TK_OK;
    });
}

z2tk_status z2tk_rf_specialize(z2tk_session* s, const z2tk_rf* f, const char* E0, const char* L0, const char** out) {
    return guarded(s, [&] {
        if (!f || !E0 || !L0 || !out)
            return fail(s, Z2TK_BAD_ARGUMENT, "null argument");
        auto v = z2tk::rf_specialize(f->value, z2tk::parse_gaussian_rational(E0), z2tk::parse_gaussian_rational(L0));
        s->scratch = v.to_string();
        *out = s->scratch.c_str();
        return Z2TK_OK;
    });
}

const char* z2tk_rf_to_string(z2tk_session* s, const z2tk_rf* f) {
    if (!s || !f)
        return "";
    s->scratch = f->value.to_string();
    return s->scratch.c_str();
}

const char* z2tk_rf_to_json(z2tk_session* s, const z2tk_rf* f) {
    if (!s || !f)
        return "";
    s->scratch = z2tk::to_json(f->value).dump();
    return s->scratch.c_str();
}

int z2tk_rf_equal(const z2tk_rf* a, const z2tk_rf* b) { return a && b && a->value == b->value ? 1 : 0; }

void z2tk_rf_free(z2tk_rf* f) { delete f; }

} // extern "C"
