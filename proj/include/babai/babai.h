#ifndef BABAI_H
#define BABAI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BABAI_API __declspec(dllexport)
#else
#define BABAI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    BABAI_OK = 0,
    BABAI_ERR_ARGUMENT = 1,     /* null pointer, bad enum, short buffer */
    BABAI_ERR_DOMAIN = 2,       /* input outside the operation's domain */
    BABAI_ERR_INAPPLICABLE = 3, /* construction does not cover this case */
    BABAI_ERR_INFEASIBLE = 4,
    BABAI_ERR_NO_CLOSED_FORM = 5,
    BABAI_ERR_BUDGET = 6,
    BABAI_ERR_IO = 7,
    BABAI_ERR_INTERNAL = 8
} babai_status;

typedef enum { BABAI_PATH = 0, BABAI_CYCLE = 1 } babai_family;
typedef enum { BABAI_MODE_BABAI = 0, BABAI_MODE_SPECTRUM = 1 } babai_mode;
typedef enum { BABAI_FORMAT_TABLE = 0, BABAI_FORMAT_JSON = 1, BABAI_FORMAT_CSV = 2 } babai_format;

typedef struct babai_cache babai_cache;
typedef struct babai_report babai_report;
typedef struct babai_conjecture babai_conjecture;

typedef struct {
    unsigned jobs;         /* worker threads for subset enumeration, >= 1 */
    uint64_t budget;       /* largest C(|R|, k) one instance may enumerate */
    uint64_t node_budget;  /* chromatic search nodes per component, 0 = unlimited */
    babai_cache* cache;    /* may be NULL */
} babai_options;

/* Message for the last failing call on this thread; "" after success. */
BABAI_API const char* babai_last_error(void);
BABAI_API const char* babai_version(void);
BABAI_API void babai_string_free(char* s);
BABAI_API void babai_options_init(babai_options* opts);

BABAI_API babai_status babai_cache_open(const char* path, babai_cache** out);
BABAI_API babai_status babai_cache_flush(babai_cache* cache);
BABAI_API size_t babai_cache_loaded(const babai_cache* cache);
BABAI_API void babai_cache_close(babai_cache* cache);

/* chi(G(X, D)). colors_out may be NULL, otherwise it receives n colors. */
BABAI_API babai_status babai_chi(babai_family family, int n, const int* d, size_t d_len, const babai_options* opts,
                                 int* chi_out, int* colors_out);

/* B_k by brute force; witness_out receives k distances (may be NULL). */
BABAI_API babai_status babai_number_bruteforce(babai_family family, int n, int k, const babai_options* opts,
                                               int* value_out, int* witness_out);
BABAI_API babai_status babai_number_formula(babai_family family, int n, int k, int* value_out);

/* Spec(X, k) by brute force. values_out has room for cap values, witnesses_out
   for cap*k distances (row i is the witness of values_out[i]); count_out gets the
   number of attained values even when it exceeds cap. */
BABAI_API babai_status babai_spectrum_bruteforce(babai_family family, int n, int k, const babai_options* opts,
                                                 int* values_out, int* witnesses_out, size_t cap, size_t* count_out);

BABAI_API babai_status babai_verify(babai_family family, int n_lo, int n_hi, int all_k, int k_lo, int k_hi,
                                    babai_mode mode, const babai_options* opts, babai_report** out);
BABAI_API babai_status babai_report_render(const babai_report* report, babai_format format, char** out);
BABAI_API int babai_report_all_pass(const babai_report* report);
BABAI_API int babai_report_truncated(const babai_report* report);
BABAI_API void babai_report_free(babai_report* report);

/* Path rows with floor(n/2) < k <= n-1; k bounds ignored when all_k is set. */
BABAI_API babai_status babai_conjecture_sweep(int n_lo, int n_hi, int all_k, int k_lo, int k_hi,
                                              const babai_options* opts, babai_conjecture** out);
BABAI_API babai_status babai_conjecture_render(const babai_conjecture* rows, babai_format format, char** out);
BABAI_API size_t babai_conjecture_truncated(const babai_conjecture* rows);
BABAI_API void babai_conjecture_free(babai_conjecture* rows);

/* Weak r-freeness of S in Z_n. When S is not weakly r-free and violation_out is
   non-NULL, it receives s_len coefficients of a violating combination. */
BABAI_API babai_status babai_wrf(int n, const int* s, size_t s_len, int r, int* verdict_out,
                                 long long* violation_out);
/* The r-coloring of Cay(Z_n, S) from a weakly r-free S; colors_out holds n ints. */
BABAI_API babai_status babai_wrf_coloring(int n, const int* s, size_t s_len, int r, int* colors_out);
/* Properness of colors (n ints) on Cay(Z_n, S). */
BABAI_API babai_status babai_cayley_proper(int n, const int* s, size_t s_len, const int* colors, int* proper_out);

#ifdef __cplusplus
}
#endif

#endif
