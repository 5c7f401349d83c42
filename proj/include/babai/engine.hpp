#pragma once

#include "babai/chromatic.hpp"
#include "babai/graph_core.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace babai {

// Append-only JSON-lines cache of chi(family, n, D). Entries loaded at open are
// read without locking; new results are buffered under a mutex and appended by flush().
class ChiCache {
public:
    explicit ChiCache(std::string path);
    ~ChiCache();
    ChiCache(const ChiCache&) = delete;
    ChiCache& operator=(const ChiCache&) = delete;

    std::optional<int> lookup(const MetricSpace& space, const DistanceSet& d) const;
    void record(const MetricSpace& space, const DistanceSet& d, int chi);
    void flush();

    std::size_t loaded_entries() const { return loaded_.size(); }
    std::uint64_t hits() const;
    std::uint64_t misses() const;
    const std::string& path() const { return path_; }

    static std::string key(const MetricSpace& space, const DistanceSet& d);

private:
    std::string path_;
    std::unordered_map<std::string, int> loaded_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, int> pending_; // not yet on disk
    std::unordered_map<std::string, int> written_; // appended during this session
    mutable std::atomic<std::uint64_t> hits_{0};
    mutable std::atomic<std::uint64_t> misses_{0};
};

struct EngineOptions {
    unsigned jobs = 1;
    // Largest C(|R|, k) a single instance may enumerate.
    std::uint64_t budget = 1ull << 22;
    ChiCache* cache = nullptr;
    ChromaticOptions oracle{};
};

// chi(space, D) through the cache when one is attached.
int chi_of(const MetricSpace& space, const DistanceSet& d, const EngineOptions& opts = {});

std::uint64_t binomial(int n, int k);

// k-subsets of {1..m} in colex order.
DistanceSet colex_unrank(std::uint64_t rank, int m, int k);
std::uint64_t colex_rank(const DistanceSet& d);

struct BabaiResult {
    MetricSpace space;
    int k = 0;
    int value = 0;
    DistanceSet witness; // colex-smallest attaining subset
};

struct SpectrumResult {
    MetricSpace space;
    int k = 0;
    std::map<int, DistanceSet> entries; // chi value -> colex-smallest witness

    std::set<int> values() const;
};

// Throws DomainError for k outside 1..diameter, BudgetExceededError past opts.budget.
BabaiResult babai_number_bruteforce(const MetricSpace& space, int k, const EngineOptions& opts = {});
SpectrumResult spectrum_bruteforce(const MetricSpace& space, int k, const EngineOptions& opts = {});

int closed_form_babai(const MetricSpace& space, int k);

enum class Claim { Exact, LowerBound, ExactDerived };
const char* claim_name(Claim c);

struct PredictedSpectrum {
    std::set<int> values;
    Claim claim = Claim::Exact;
};

PredictedSpectrum closed_form_spectrum(const MetricSpace& space, int k);

// The eight rows of the Spec(C_n, 2) table.
enum class CycleSpecCase {
    PowerOfThree,         // {3}
    FourOrSeven,          // {4}
    Five,                 // {5}
    TwiceThreePower,      // {2,3}
    OddWithLargePrime,    // {3,4}
    EvenMixed,            // {2,3,4}
    FiveTimesOdd,         // {3,4,5}
    FiveTimesEven         // {2,3,4,5}
};

// Each row's predicate evaluated on its own; index i is true iff row i applies.
std::vector<bool> cycle_spec_case_predicates(int n);
CycleSpecCase classify_cycle_spec(int n); // throws if not exactly one row applies

enum class Mode { Babai, Spectrum };
const char* mode_name(Mode m);

enum class Status { Pass, Fail, DomainError, NoClosedForm, Truncated };
const char* status_name(Status s);

struct InstanceReport {
    Family family = Family::Path;
    int n = 0;
    int k = 0;
    Status status = Status::Pass;
    std::string message;
    // Babai mode.
    std::optional<int> predicted_value;
    std::optional<int> computed_value;
    // Spectrum mode.
    std::optional<PredictedSpectrum> predicted_set;
    std::optional<SpectrumResult> computed_set;
    std::vector<DistanceSet> witnesses;
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct VerificationReport {
    Family family = Family::Path;
    Mode mode = Mode::Babai;
    IntRange n_range;
    std::optional<IntRange> k_range; // nullopt = every legal k
    std::vector<InstanceReport> instances;
    bool truncated = false;

    std::size_t count(Status s) const;
    bool all_pass() const; // no Fail and no Truncated
};

VerificationReport verify_range(Family family, IntRange n_range, std::optional<IntRange> k_range, Mode mode,
                                const EngineOptions& opts = {});

struct ConjectureRow {
    int n = 0;
    int k = 0;
    int m = 0;
    std::set<int> predicted;
    std::set<int> computed;
    bool equal = false;
    bool truncated = false;
};

ConjectureRow conjecture_report(int n, int k, const EngineOptions& opts = {});

// Rows for every n in range and every k in (floor(n/2), n-1] (intersected with k_range).
std::vector<ConjectureRow> conjecture_sweep(IntRange n_range, std::optional<IntRange> k_range,
                                            const EngineOptions& opts = {});

// Serializers. JSON carries "schema": 1; CSV has a fixed header row.
std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);
std::string conjecture_to_csv(const std::vector<ConjectureRow>& rows);
std::string conjecture_to_json(const std::vector<ConjectureRow>& rows);
std::string conjecture_to_text(const std::vector<ConjectureRow>& rows);

std::string set_to_string(const std::set<int>& s);

} // namespace babai
