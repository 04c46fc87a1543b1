#include "bolsuper/bolsuper.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "bolsuper/algebra_io.hpp"
#include "bolsuper/catalog.hpp"
#include "bolsuper/command.hpp"
#include "bolsuper/constructions.hpp"
#include "bolsuper/error.hpp"
#include "bolsuper/forms.hpp"

struct bs_algebra {
    bolsuper::AlgebraDef def;
};

struct bs_form {
    bolsuper::BilinearForm form;
};

namespace {

thread_local std::string lastError;

bs_status fail(bs_status s, const std::string& msg) {
    lastError = msg;
    return s;
}

bs_status statusOf(bolsuper::ErrorKind k) {
    using bolsuper::ErrorKind;
    switch (k) {
        case ErrorKind::Precondition: return BS_ERR_PRECONDITION;
        case ErrorKind::Mismatch: return BS_ERR_MISMATCH;
        case ErrorKind::Parse: return BS_ERR_PARSE;
        case ErrorKind::Usage: return BS_ERR_USAGE;
        case ErrorKind::Internal: return BS_ERR_INTERNAL;
    }
    return BS_ERR_INTERNAL;
}

template <class F>
bs_status guarded(F&& f) {
    try {
        lastError.clear();
        f();
        return BS_OK;
    } catch (const bolsuper::Error& e) {
        return fail(statusOf(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(BS_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BS_ERR_INTERNAL, e.what());
    }
}

char* copy(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

bs_status nullArg() { return fail(BS_ERR_ARGUMENT, "null argument"); }

bs_status newAlgebra(bs_algebra** out, bolsuper::AlgebraDef def) {
    *out = new bs_algebra{std::move(def)};
    return BS_OK;
}

}  // namespace

extern "C" {

const char* bs_last_error(void) { return lastError.c_str(); }

void bs_string_free(char* s) { std::free(s); }

bs_status bs_algebra_parse(const char* text, bs_algebra** out) {
    if (!text || !out) return nullArg();
    return guarded([&] { newAlgebra(out, bolsuper::parseAlgebra(text)); });
}

bs_status bs_algebra_load(const char* path, bs_algebra** out) {
    if (!path || !out) return nullArg();
    return guarded([&] { newAlgebra(out, bolsuper::loadAlgebraFile(path)); });
}

bs_status bs_catalog_get(const char* key, bs_algebra** out) {
    if (!key || !out) return nullArg();
    return guarded([&] { newAlgebra(out, bolsuper::catalogEntry(key).algebra); });
}

void bs_algebra_free(bs_algebra* a) { delete a; }

bs_status bs_algebra_serialize(const bs_algebra* a, char** out) {
    if (!a || !out) return nullArg();
    return guarded([&] { *out = copy(bolsuper::serializeAlgebra(a->def)); });
}

bs_status bs_algebra_name(const bs_algebra* a, char** out) {
    if (!a || !out) return nullArg();
    return guarded([&] { *out = copy(a->def.name()); });
}

bs_status bs_algebra_dims(const bs_algebra* a, size_t* even, size_t* odd) {
    if (!a || !even || !odd) return nullArg();
    *even = a->def.space().evenDim();
    *odd = a->def.space().oddDim();
    return BS_OK;
}

int bs_algebra_equal(const bs_algebra* a, const bs_algebra* b) { return a && b && a->def == b->def; }

bs_status bs_check(const bs_algebra* a, const char* kind, int* passed, size_t* witnesses) {
    if (!a || !kind || !passed) return nullArg();
    const auto k = bolsuper::parseAxiomKind(kind);
    if (!k) return fail(BS_ERR_USAGE, std::string("unknown axiom kind '") + kind + "'");
    return guarded([&] {
        const auto r = bolsuper::checkAxioms(a->def, *k);
        *passed = r.passed();
        if (witnesses) *witnesses = r.witnesses.size();
    });
}

bs_status bs_malcev_to_bol(const bs_algebra* a, bs_algebra** out) {
    if (!a || !out) return nullArg();
    return guarded([&] { newAlgebra(out, bolsuper::malcevToBol(a->def)); });
}

bs_status bs_lie_to_lts(const bs_algebra* a, bs_algebra** out) {
    if (!a || !out) return nullArg();
    return guarded([&] { newAlgebra(out, bolsuper::lieToSupertriple(a->def)); });
}

bs_status bs_enveloping(const bs_algebra* a, int maximal, bs_algebra** out) {
    if (!a || !out) return nullArg();
    return guarded([&] {
        if (!bolsuper::checkAxioms(a->def, bolsuper::AxiomKind::Bol).passed())
            throw bolsuper::Error(bolsuper::ErrorKind::Precondition, "algebra fails the Bol axioms");
        const auto h = maximal ? bolsuper::psSpace(a->def) : bolsuper::ipsSpace(a->def);
        newAlgebra(out, bolsuper::enveloping(a->def, h).lie);
    });
}

bs_status bs_center_dim(const bs_algebra* a, size_t* dim) {
    if (!a || !dim) return nullArg();
    return guarded([&] { *dim = bolsuper::center(a->def).dim(); });
}

bs_status bs_killing(const bs_algebra* lie, bs_form** out) {
    if (!lie || !out) return nullArg();
    return guarded([&] { *out = new bs_form{bolsuper::killingForm(lie->def)}; });
}

bs_status bs_killing_ricci(const bs_algebra* bol, bs_ricci_method method, bs_form** out) {
    if (!bol || !out) return nullArg();
    const auto m = method == BS_RICCI_RESTRICTION ? bolsuper::RicciMethod::Restriction : bolsuper::RicciMethod::Direct;
    return guarded([&] { *out = new bs_form{bolsuper::killingRicci(bol->def, m)}; });
}

size_t bs_form_dim(const bs_form* f) { return f ? f->form.space().dim() : 0; }

bs_status bs_form_entry(const bs_form* f, size_t i, size_t j, char** out) {
    if (!f || !out) return nullArg();
    const std::size_t d = f->form.space().dim();
    if (i >= d || j >= d) return fail(BS_ERR_ARGUMENT, "index out of range");
    return guarded([&] { *out = copy(bolsuper::to_string(f->form.gram()(i, j))); });
}

int bs_form_equal(const bs_form* f, const bs_form* g) { return f && g && f->form == g->form; }

bs_status bs_form_nondegenerate(const bs_form* f, int* nondegenerate) {
    if (!f || !nondegenerate) return nullArg();
    return guarded([&] { *nondegenerate = bolsuper::isNondegenerate(f->form); });
}

void bs_form_free(bs_form* f) { delete f; }

bs_status bs_run_command(int argc, const char* const* argv, int* exit_code, char** out, char** err) {
    if (argc < 0 || (argc > 0 && !argv) || !exit_code || !out || !err) return nullArg();
    return guarded([&] {
        std::vector<std::string> args(argv, argv + argc);
        const auto r = bolsuper::runCommand(args);
        *exit_code = r.exitCode;
        *out = copy(r.out);
        *err = copy(r.err);
    });
}

}  // extern "C"
