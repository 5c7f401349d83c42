#include "babai/babai.h"

#include "babai/colorings.hpp"
#include "babai/engine.hpp"
#include "babai/errors.hpp"
#include "babai/numtheory.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

struct babai_cache {
    std::unique_ptr<babai::ChiCache> impl;
};

struct babai_report {
    babai::VerificationReport impl;
};

struct babai_conjecture {
    std::vector<babai::ConjectureRow> impl;
};

namespace {

thread_local std::string last_error;

template <class F>
babai_status guarded(F&& f) {
    try {
        f();
        last_error.clear();
        return BABAI_OK;
    } catch (const babai::DomainError& e) {
        last_error = e.what();
        return BABAI_ERR_DOMAIN;
    } catch (const babai::InapplicableError& e) {
        last_error = e.what();
        return BABAI_ERR_INAPPLICABLE;
    } catch (const babai::InfeasibleError& e) {
        last_error = e.what();
        return BABAI_ERR_INFEASIBLE;
    } catch (const babai::NoClosedFormError& e) {
        last_error = e.what();
        return BABAI_ERR_NO_CLOSED_FORM;
    } catch (const babai::BudgetExceededError& e) {
        last_error = e.what();
        return BABAI_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return BABAI_ERR_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BABAI_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BABAI_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return BABAI_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

babai::Family to_family(babai_family f) {
    require(f == BABAI_PATH || f == BABAI_CYCLE, "unknown family");
    return f == BABAI_PATH ? babai::Family::Path : babai::Family::Cycle;
}

babai::EngineOptions to_options(const babai_options* o) {
    babai::EngineOptions opts;
    if (!o) return opts;
    require(o->jobs >= 1, "jobs must be at least 1");
    opts.jobs = o->jobs;
    opts.budget = o->budget;
    opts.oracle.node_budget = o->node_budget;
    opts.cache = o->cache ? o->cache->impl.get() : nullptr;
    return opts;
}

std::vector<int> to_vector(const int* p, size_t len) {
    require(p != nullptr || len == 0, "null array");
    return std::vector<int>(p, p + len);
}

std::optional<babai::IntRange> k_bounds(int all_k, int k_lo, int k_hi) {
    if (all_k) return std::nullopt;
    return babai::IntRange{k_lo, k_hi};
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Z_n elements: each in 1..n-1.
babai::DistanceSet to_generator_set(int n, const int* s, size_t len) {
    auto v = to_vector(s, len);
    if (n < 2) throw babai::DomainError("n must be at least 2");
    for (int x : v)
        if (x < 1 || x >= n) throw babai::DomainError("element " + std::to_string(x) + " is not in Z_n minus 0");
    return babai::DistanceSet(v);
}

} // namespace

extern "C" {

const char* babai_last_error(void) {
    return last_error.c_str();
}

const char* babai_version(void) {
    return "1.0.0";
}

void babai_string_free(char* s) {
    delete[] s;
}

void babai_options_init(babai_options* opts) {
    if (!opts) return;
    const babai::EngineOptions d;
    opts->jobs = d.jobs;
    opts->budget = d.budget;
    opts->node_budget = d.oracle.node_budget;
    opts->cache = nullptr;
}

babai_status babai_cache_open(const char* path, babai_cache** out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = new babai_cache{std::make_unique<babai::ChiCache>(path)};
    });
}

babai_status babai_cache_flush(babai_cache* cache) {
    return guarded([&] {
        require(cache, "null cache");
        cache->impl->flush();
    });
}

size_t babai_cache_loaded(const babai_cache* cache) {
    return cache ? cache->impl->loaded_entries() : 0;
}

void babai_cache_close(babai_cache* cache) {
    delete cache;
}

babai_status babai_chi(babai_family family, int n, const int* d, size_t d_len, const babai_options* opts,
                       int* chi_out, int* colors_out) {
    return guarded([&] {
        require(chi_out, "null output");
        const babai::MetricSpace space(to_family(family), n);
        const babai::DistanceSet ds(to_vector(d, d_len));
        ds.check_valid_for(space);
        auto eopts = to_options(opts);
        if (!colors_out) {
            *chi_out = babai::chi_of(space, ds, eopts);
            return;
        }
        const auto res = babai::chromatic_number(babai::distance_graph(space, ds), eopts.oracle);
        if (eopts.cache) eopts.cache->record(space, ds, res.chi);
        *chi_out = res.chi;
        for (int i = 0; i < n; ++i) colors_out[i] = res.witness[i];
    });
}

babai_status babai_number_bruteforce(babai_family family, int n, int k, const babai_options* opts, int* value_out,
                                     int* witness_out) {
    return guarded([&] {
        require(value_out, "null output");
        const babai::MetricSpace space(to_family(family), n);
        const auto res = babai::babai_number_bruteforce(space, k, to_options(opts));
        *value_out = res.value;
        if (witness_out)
            for (size_t i = 0; i < res.witness.size(); ++i) witness_out[i] = res.witness.values()[i];
    });
}

babai_status babai_number_formula(babai_family family, int n, int k, int* value_out) {
    return guarded([&] {
        require(value_out, "null output");
        *value_out = babai::closed_form_babai(babai::MetricSpace(to_family(family), n), k);
    });
}

babai_status babai_spectrum_bruteforce(babai_family family, int n, int k, const babai_options* opts, int* values_out,
                                       int* witnesses_out, size_t cap, size_t* count_out) {
    return guarded([&] {
        require(count_out, "null output");
        const babai::MetricSpace space(to_family(family), n);
        const auto res = babai::spectrum_bruteforce(space, k, to_options(opts));
        *count_out = res.entries.size();
        size_t i = 0;
        for (const auto& [chi, d] : res.entries) {
            if (i >= cap) break;
            if (values_out) values_out[i] = chi;
            if (witnesses_out)
                for (size_t j = 0; j < d.size(); ++j) witnesses_out[i * static_cast<size_t>(k) + j] = d.values()[j];
            ++i;
        }
    });
}

babai_status babai_verify(babai_family family, int n_lo, int n_hi, int all_k, int k_lo, int k_hi, babai_mode mode,
                          const babai_options* opts, babai_report** out) {
    return guarded([&] {
        require(out, "null output");
        require(mode == BABAI_MODE_BABAI || mode == BABAI_MODE_SPECTRUM, "unknown mode");
        auto rep = babai::verify_range(to_family(family), {n_lo, n_hi}, k_bounds(all_k, k_lo, k_hi),
                                       mode == BABAI_MODE_BABAI ? babai::Mode::Babai : babai::Mode::Spectrum,
                                       to_options(opts));
        *out = new babai_report{std::move(rep)};
    });
}

babai_status babai_report_render(const babai_report* report, babai_format format, char** out) {
    return guarded([&] {
        require(report && out, "null argument");
        switch (format) {
        case BABAI_FORMAT_TABLE: *out = dup_string(babai::report_to_text(report->impl)); break;
        case BABAI_FORMAT_JSON: *out = dup_string(babai::report_to_json(report->impl)); break;
        case BABAI_FORMAT_CSV: *out = dup_string(babai::report_to_csv(report->impl)); break;
        default: require(false, "unknown format");
        }
    });
}

int babai_report_all_pass(const babai_report* report) {
    return report && report->impl.all_pass() ? 1 : 0;
}

int babai_report_truncated(const babai_report* report) {
    return report && report->impl.truncated ? 1 : 0;
}

void babai_report_free(babai_report* report) {
    delete report;
}

babai_status babai_conjecture_sweep(int n_lo, int n_hi, int all_k, int k_lo, int k_hi, const babai_options* opts,
                                    babai_conjecture** out) {
    return guarded([&] {
        require(out, "null output");
        auto rows = babai::conjecture_sweep({n_lo, n_hi}, k_bounds(all_k, k_lo, k_hi), to_options(opts));
        *out = new babai_conjecture{std::move(rows)};
    });
}

babai_status babai_conjecture_render(const babai_conjecture* rows, babai_format format, char** out) {
    return guarded([&] {
        require(rows && out, "null argument");
        switch (format) {
        case BABAI_FORMAT_TABLE: *out = dup_string(babai::conjecture_to_text(rows->impl)); break;
        case BABAI_FORMAT_JSON: *out = dup_string(babai::conjecture_to_json(rows->impl)); break;
        case BABAI_FORMAT_CSV: *out = dup_string(babai::conjecture_to_csv(rows->impl)); break;
        default: require(false, "unknown format");
        }
    });
}

size_t babai_conjecture_truncated(const babai_conjecture* rows) {
    if (!rows) return 0;
    size_t t = 0;
    for (const auto& r : rows->impl) t += r.truncated ? 1 : 0;
    return t;
}

void babai_conjecture_free(babai_conjecture* rows) {
    delete rows;
}

babai_status babai_wrf(int n, const int* s, size_t s_len, int r, int* verdict_out, long long* violation_out) {
    return guarded([&] {
        require(verdict_out, "null output");
        const auto set = to_generator_set(n, s, s_len);
        const auto bad = babai::weak_r_free_violation(n, set, r);
        *verdict_out = bad ? 0 : 1;
        // Coefficients come back aligned with the sorted set; map them to the caller's order.
        if (bad && violation_out)
            for (size_t i = 0; i < s_len; ++i) {
                const auto& vals = set.values();
                const auto pos = std::lower_bound(vals.begin(), vals.end(), s[i]) - vals.begin();
                const bool first = std::find(s, s + i, s[i]) == s + i;
                violation_out[i] = first ? (*bad)[static_cast<size_t>(pos)] : 0;
            }
    });
}

babai_status babai_wrf_coloring(int n, const int* s, size_t s_len, int r, int* colors_out) {
    return guarded([&] {
        require(colors_out, "null output");
        const auto col = babai::weakly_r_free_coloring(n, to_generator_set(n, s, s_len), r);
        for (int i = 0; i < n; ++i) colors_out[i] = col[i];
    });
}

babai_status babai_cayley_proper(int n, const int* s, size_t s_len, const int* colors, int* proper_out) {
    return guarded([&] {
        require(colors && proper_out, "null argument");
        const auto set = to_generator_set(n, s, s_len);
        const auto space = babai::MetricSpace::cycle(n);
        const auto g = babai::distance_graph(space, babai::cayley_distance_set(n, set));
        *proper_out = babai::is_proper(g, babai::Coloring(to_vector(colors, static_cast<size_t>(n)))) ? 1 : 0;
    });
}

} // extern "C"
