#include "sperner/sperner.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "report.hpp"

using namespace sperner;

struct spn_family {
  Family fam;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
spn_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SPN_OK;
  } catch (const ModelError& e) {
    g_last_error = e.what();
    return SPN_ERROR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPN_ERROR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SPN_ERROR_INTERNAL;
  }
}

spn_status emit(const CmdOutcome& out, int* out_verdict, char** out_text) {
  if (!out_text) throw ModelError("out_text must not be null");
  *out_text = dup_string(out.text);
  if (!*out_text) throw std::bad_alloc();
  if (out_verdict) *out_verdict = out.verdict;
  return SPN_OK;
}

const Family& deref(const spn_family* fam) {
  if (!fam) throw ModelError("family handle must not be null");
  return fam->fam;
}

}  // namespace

extern "C" {

const char* spn_version(void) { return tool_version; }

const char* spn_last_error(void) { return g_last_error.c_str(); }

spn_status spn_family_parse(const char* json_text, spn_family** out) {
  return guarded([&] {
    if (!json_text || !out) throw ModelError("null argument");
    auto* handle = new spn_family{parse_family(json_text)};
    *out = handle;
  });
}

spn_status spn_family_load(const char* path, spn_family** out) {
  return guarded([&] {
    if (!path || !out) throw ModelError("null argument");
    auto* handle = new spn_family{load_family(path)};
    *out = handle;
  });
}

spn_status spn_family_to_json(const spn_family* fam, char** out_text) {
  return guarded([&] {
    if (!out_text) throw ModelError("null argument");
    *out_text = dup_string(family_to_json(deref(fam), 2) + "\n");
    if (!*out_text) throw std::bad_alloc();
  });
}

void spn_family_free(spn_family* fam) { delete fam; }

void spn_string_free(char* text) { std::free(text); }

spn_status spn_bound(const char* theorem, int n, int p, int r, const char* scope,
                     char** out_text) {
  return guarded([&] {
    if (!theorem) throw ModelError("theorem must not be null");
    emit(cmd_bound(theorem, n, p, r, scope ? scope : ""), nullptr, out_text);
  });
}

spn_status spn_check(const spn_family* fam, const char* theorem, int r, int* out_verdict,
                     char** out_text) {
  return guarded([&] {
    if (!theorem) throw ModelError("theorem must not be null");
    emit(cmd_check(deref(fam), theorem, r), out_verdict, out_text);
  });
}

spn_status spn_lym(const spn_family* fam, const char* theorem, int r, int* out_verdict,
                   char** out_text) {
  return guarded([&] {
    if (!theorem) throw ModelError("theorem must not be null");
    emit(cmd_lym(deref(fam), theorem, r), out_verdict, out_text);
  });
}

spn_status spn_construct(const char* kind, int n, int p, int r, char** out_text) {
  return guarded([&] {
    if (!kind) throw ModelError("kind must not be null");
    emit(cmd_construct(kind, n, p, r), nullptr, out_text);
  });
}

spn_status spn_search(const char* theorem, int n, int p, int r, long long budget_ms,
                      int* out_verdict, char** out_text) {
  return guarded([&] {
    if (!theorem) throw ModelError("theorem must not be null");
    emit(cmd_search(theorem, n, p, r, budget_ms), out_verdict, out_text);
  });
}

spn_status spn_separate_count(int n, const int* shape, int shape_len, char** out_text) {
  return guarded([&] {
    if (shape_len < 0 || (shape_len > 0 && !shape)) throw ModelError("bad shape array");
    std::vector<int> s(shape, shape + shape_len);
    emit(cmd_separate_count(n, s), nullptr, out_text);
  });
}

spn_status spn_separate_max(const spn_family* fam, int sampled, uint64_t samples, uint64_t seed,
                            char** out_text) {
  return guarded(
      [&] { emit(cmd_separate_max(deref(fam), sampled != 0, samples, seed), nullptr, out_text); });
}

spn_status spn_attain(int n, int p, int r, int* out_verdict, char** out_text) {
  return guarded([&] { emit(cmd_attain(n, p, r), out_verdict, out_text); });
}

spn_status spn_attain_sweep(int r_lo, int r_hi, int p_lo, int p_hi, int n_lo, int n_hi,
                            char** out_text) {
  return guarded(
      [&] { emit(cmd_attain_sweep(r_lo, r_hi, p_lo, p_hi, n_lo, n_hi), nullptr, out_text); });
}

}  // extern "C"
