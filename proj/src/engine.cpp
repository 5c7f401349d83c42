#include "babai/engine.hpp"

#include "babai/errors.hpp"
#include "babai/numtheory.hpp"

#include <json.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

namespace babai {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// cache

ChiCache::ChiCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        // A torn final line from an interrupted run is skipped.
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("family") || !j.contains("n") || !j.contains("d") || !j.contains("chi"))
            continue;
        try {
            const MetricSpace space(parse_family(j["family"].get<std::string>()), j["n"].get<int>());
            const DistanceSet d(j["d"].get<std::vector<int>>());
            loaded_[key(space, d)] = j["chi"].get<int>();
        } catch (const std::exception&) {
            continue;
        }
    }
}

ChiCache::~ChiCache() {
    try {
        flush();
    } catch (...) {
    }
}

std::string ChiCache::key(const MetricSpace& space, const DistanceSet& d) {
    std::string k = std::string(family_name(space.family())) + ":" + std::to_string(space.size()) + ":";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) k += ',';
        k += std::to_string(d.values()[i]);
    }
    return k;
}

std::optional<int> ChiCache::lookup(const MetricSpace& space, const DistanceSet& d) const {
    const auto k = key(space, d);
    if (auto it = loaded_.find(k); it != loaded_.end()) {
        ++hits_;
        return it->second;
    }
    std::lock_guard lock(mu_);
    for (const auto* m : {&pending_, &written_}) {
        if (auto it = m->find(k); it != m->end()) {
            ++hits_;
            return it->second;
        }
    }
    ++misses_;
    return std::nullopt;
}

void ChiCache::record(const MetricSpace& space, const DistanceSet& d, int chi) {
    const auto k = key(space, d);
    if (loaded_.count(k)) return;
    std::lock_guard lock(mu_);
    if (!written_.count(k)) pending_.emplace(k, chi);
}

void ChiCache::flush() {
    std::lock_guard lock(mu_);
    if (pending_.empty()) return;
    // Sorted so the file contents do not depend on thread scheduling.
    std::vector<std::pair<std::string, int>> rows(pending_.begin(), pending_.end());
    std::sort(rows.begin(), rows.end());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot open cache file " + path_);
    for (const auto& [k, chi] : rows) {
        const auto first = k.find(':');
        const auto second = k.find(':', first + 1);
        std::vector<int> ds;
        std::stringstream list(k.substr(second + 1));
        for (std::string item; std::getline(list, item, ',');) ds.push_back(std::stoi(item));
        ordered_json j;
        j["family"] = k.substr(0, first);
        j["n"] = std::stoi(k.substr(first + 1, second - first - 1));
        j["d"] = ds;
        j["chi"] = chi;
        out << j.dump() << '\n';
        written_.emplace(k, chi);
    }
    pending_.clear();
}

std::uint64_t ChiCache::hits() const {
    return hits_.load();
}

std::uint64_t ChiCache::misses() const {
    return misses_.load();
}

int chi_of(const MetricSpace& space, const DistanceSet& d, const EngineOptions& opts) {
    if (opts.cache) {
        if (auto hit = opts.cache->lookup(space, d)) return *hit;
    }
    const int chi = chromatic_number(distance_graph(space, d), opts.oracle).chi;
    if (opts.cache) opts.cache->record(space, d, chi);
    return chi;
}

// ---------------------------------------------------------------------------
// subset enumeration

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 v = 1;
    for (int i = 1; i <= k; ++i) {
        v = v * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (v > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(v);
}

DistanceSet colex_unrank(std::uint64_t rank, int m, int k) {
    if (rank >= binomial(m, k)) throw DomainError("colex rank out of range");
    std::vector<int> out(static_cast<std::size_t>(k));
    int top = m;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < top && binomial(c + 1, i) <= rank) ++c;
        rank -= binomial(c, i);
        out[static_cast<std::size_t>(i - 1)] = c + 1;
        top = c;
    }
    return DistanceSet(out);
}

std::uint64_t colex_rank(const DistanceSet& d) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) r += binomial(d.values()[i] - 1, static_cast<int>(i) + 1);
    return r;
}

namespace {

bool next_colex(std::vector<int>& c, int m) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int limit = i + 1 < k ? c[i + 1] : m + 1;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<int>(j) + 1;
            return true;
        }
    }
    return false;
}

using RankMap = std::map<int, std::uint64_t>; // chi -> smallest colex rank

RankMap scan_ranks(const MetricSpace& space, int k, std::uint64_t lo, std::uint64_t hi, const EngineOptions& opts) {
    RankMap found;
    if (lo >= hi) return found;
    std::vector<int> cur = colex_unrank(lo, space.diameter(), k).values();
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
        const int chi = chi_of(space, DistanceSet(cur), opts);
        found.emplace(chi, rank); // ranks ascend, so the first insert is the smallest
        if (rank + 1 < hi) next_colex(cur, space.diameter());
    }
    return found;
}

SpectrumResult enumerate_spectrum(const MetricSpace& space, int k, const EngineOptions& opts) {
    const int m = space.diameter();
    if (k < 1 || k > m)
        throw DomainError(std::string(family_name(space.family())) + " n=" + std::to_string(space.size()) +
                          " has no k=" + std::to_string(k) + " (realized distances 1.." + std::to_string(m) + ")");
    const std::uint64_t total = binomial(m, k);
    if (total > opts.budget)
        throw BudgetExceededError("C(" + std::to_string(m) + "," + std::to_string(k) + ") = " + std::to_string(total) +
                                  " exceeds budget " + std::to_string(opts.budget));

    const std::uint64_t workers = std::clamp<std::uint64_t>(opts.jobs, 1, std::max<std::uint64_t>(total, 1));
    std::vector<RankMap> partial(workers);
    if (workers == 1) {
        partial[0] = scan_ranks(space, k, 0, total, opts);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
            pool.emplace_back([&, w, lo, hi] {
                try {
                    partial[w] = scan_ranks(space, k, lo, hi, opts);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    RankMap merged;
    for (const auto& part : partial) {
        for (auto [chi, rank] : part) {
            auto [it, inserted] = merged.emplace(chi, rank);
            if (!inserted) it->second = std::min(it->second, rank);
        }
    }
    SpectrumResult out{space, k, {}};
    for (auto [chi, rank] : merged) out.entries.emplace(chi, colex_unrank(rank, m, k));
    return out;
}

} // namespace

std::set<int> SpectrumResult::values() const {
    std::set<int> v;
    for (const auto& [chi, d] : entries) v.insert(chi);
    return v;
}

SpectrumResult spectrum_bruteforce(const MetricSpace& space, int k, const EngineOptions& opts) {
    return enumerate_spectrum(space, k, opts);
}

BabaiResult babai_number_bruteforce(const MetricSpace& space, int k, const EngineOptions& opts) {
    const auto spec = enumerate_spectrum(space, k, opts);
    const auto& [value, witness] = *spec.entries.rbegin();
    return {space, k, value, witness};
}

// ---------------------------------------------------------------------------
// closed forms

namespace {

void check_k(const MetricSpace& space, int k) {
    if (k < 1 || k > space.diameter()) {
        std::string msg = std::string(family_name(space.family())) + " n=" + std::to_string(space.size()) +
                          " has no k=" + std::to_string(k) + " Babai number";
        throw DomainError(msg);
    }
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::set<int> range_set(int lo, int hi) {
    std::set<int> s;
    for (int v = lo; v <= hi; ++v) s.insert(v);
    return s;
}

} // namespace

int closed_form_babai(const MetricSpace& space, int k) {
    check_k(space, k);
    const int n = space.size();
    if (space.family() == Family::Path) return k + 1;
    if (k == 1) return is_power_of(n, 2) ? 2 : 3;
    if (k == 2) {
        if (is_power_of(n, 3) || (n % 2 == 0 && is_power_of(n / 2, 3))) return 3;
        if (n % 5 == 0) return 5;
        return 4;
    }
    throw NoClosedFormError("no closed form for B_" + std::to_string(k) + "(C_" + std::to_string(n) + ")");
}

const char* claim_name(Claim c) {
    switch (c) {
    case Claim::Exact: return "exact";
    case Claim::LowerBound: return "lower-bound";
    case Claim::ExactDerived: return "exact-derived";
    }
    return "?";
}

std::vector<bool> cycle_spec_case_predicates(int n) {
    // p > 5 prime dividing n with cofactor m satisfying `pred`.
    const auto large_prime_split = [n](auto pred) {
        for (int p = 7; p <= n; ++p)
            if (n % p == 0 && is_prime(p) && pred(n / p)) return true;
        return false;
    };
    const auto [rest23, a2] = strip_factor(n, 2);
    const auto [rest3, u3] = strip_factor(rest23, 3);
    const bool two_three_smooth = rest3 == 1;

    std::vector<bool> p(8, false);
    p[0] = is_power_of(n, 3);
    p[1] = n == 4 || n == 7;
    p[2] = n == 5;
    p[3] = n % 2 == 0 && is_power_of(n / 2, 3);
    p[4] = n > 7 && large_prime_split([](int m) { return m % 2 == 1 && m % 5 != 0; });
    p[5] = (two_three_smooth && a2 >= 2 && n != 4) ||
           large_prime_split([](int m) { return m > 1 && m % 2 == 0 && m % 5 != 0; });
    p[6] = n % 5 == 0 && (n / 5) % 2 == 1 && n / 5 >= 3;
    p[7] = n % 5 == 0 && (n / 5) % 2 == 0 && n / 5 >= 2;
    (void)u3;
    return p;
}

CycleSpecCase classify_cycle_spec(int n) {
    if (n < 4) throw DomainError("Spec(C_n, 2) needs n >= 4");
    const auto p = cycle_spec_case_predicates(n);
    int hit = -1;
    for (int i = 0; i < 8; ++i) {
        if (!p[static_cast<std::size_t>(i)]) continue;
        if (hit >= 0) throw Error("n=" + std::to_string(n) + " matches two Spec(C_n,2) rows");
        hit = i;
    }
    if (hit < 0) throw Error("n=" + std::to_string(n) + " matches no Spec(C_n,2) row");
    return static_cast<CycleSpecCase>(hit);
}

PredictedSpectrum closed_form_spectrum(const MetricSpace& space, int k) {
    check_k(space, k);
    const int n = space.size();
    if (space.family() == Family::Path) {
        if (k <= n / 2) return {range_set(2, k + 1), Claim::Exact};
        const int m = spec_interval_m(n, k);
        return {range_set(m + 1, k + 1), Claim::LowerBound};
    }
    if (k == 1) {
        if (is_power_of(n, 2)) return {{2}, Claim::ExactDerived};
        return {n % 2 == 0 ? std::set<int>{2, 3} : std::set<int>{3}, Claim::Exact};
    }
    if (k == 2) {
        switch (classify_cycle_spec(n)) {
        case CycleSpecCase::PowerOfThree: return {{3}, Claim::Exact};
        case CycleSpecCase::FourOrSeven: return {{4}, Claim::Exact};
        case CycleSpecCase::Five: return {{5}, Claim::Exact};
        case CycleSpecCase::TwiceThreePower: return {{2, 3}, Claim::Exact};
        case CycleSpecCase::OddWithLargePrime: return {{3, 4}, Claim::Exact};
        case CycleSpecCase::EvenMixed: return {{2, 3, 4}, Claim::Exact};
        case CycleSpecCase::FiveTimesOdd: return {{3, 4, 5}, Claim::Exact};
        case CycleSpecCase::FiveTimesEven: return {{2, 3, 4, 5}, Claim::Exact};
        }
    }
    throw NoClosedFormError("no closed form for Spec(C_" + std::to_string(n) + ", " + std::to_string(k) + ")");
}

// ---------------------------------------------------------------------------
// verification

const char* mode_name(Mode m) {
    return m == Mode::Babai ? "babai" : "spectrum";
}

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::DomainError: return "domain-error";
    case Status::NoClosedForm: return "no-closed-form";
    case Status::Truncated: return "truncated";
    }
    return "?";
}

std::size_t VerificationReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(instances.begin(), instances.end(), [s](const InstanceReport& i) { return i.status == s; }));
}

bool VerificationReport::all_pass() const {
    return count(Status::Fail) == 0 && count(Status::Truncated) == 0;
}

namespace {

InstanceReport verify_instance(const MetricSpace& space, int k, Mode mode, const EngineOptions& opts) {
    InstanceReport rep;
    rep.family = space.family();
    rep.n = space.size();
    rep.k = k;
    try {
        if (mode == Mode::Babai) rep.predicted_value = closed_form_babai(space, k);
        else rep.predicted_set = closed_form_spectrum(space, k);
    } catch (const DomainError& e) {
        rep.status = Status::DomainError;
        rep.message = e.what();
        return rep;
    } catch (const NoClosedFormError& e) {
        rep.status = Status::NoClosedForm;
        rep.message = e.what();
        return rep;
    }
    try {
        auto spec = spectrum_bruteforce(space, k, opts);
        if (mode == Mode::Babai) {
            const auto& [value, witness] = *spec.entries.rbegin();
            rep.computed_value = value;
            rep.witnesses = {witness};
            rep.status = value == *rep.predicted_value ? Status::Pass : Status::Fail;
        } else {
            for (const auto& [chi, d] : spec.entries) rep.witnesses.push_back(d);
            const auto got = spec.values();
            const auto& want = rep.predicted_set->values;
            const bool ok = rep.predicted_set->claim == Claim::LowerBound
                                ? std::includes(got.begin(), got.end(), want.begin(), want.end())
                                : got == want;
            rep.computed_set = std::move(spec);
            rep.status = ok ? Status::Pass : Status::Fail;
        }
    } catch (const BudgetExceededError& e) {
        rep.status = Status::Truncated;
        rep.message = e.what();
    }
    return rep;
}

} // namespace

VerificationReport verify_range(Family family, IntRange n_range, std::optional<IntRange> k_range, Mode mode,
                                const EngineOptions& opts) {
    if (n_range.lo > n_range.hi) throw DomainError("empty n range");
    if (k_range && k_range->lo > k_range->hi) throw DomainError("empty k range");
    VerificationReport report{family, mode, n_range, k_range, {}, false};
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        std::optional<MetricSpace> space;
        try {
            space.emplace(family, n);
        } catch (const DomainError& e) {
            InstanceReport rep;
            rep.family = family;
            rep.n = n;
            rep.status = Status::DomainError;
            rep.message = e.what();
            report.instances.push_back(std::move(rep));
            continue;
        }
        const int k_lo = k_range ? k_range->lo : 1;
        const int k_hi = k_range ? k_range->hi : space->diameter();
        for (int k = k_lo; k <= k_hi; ++k) {
            report.instances.push_back(verify_instance(*space, k, mode, opts));
            if (report.instances.back().status == Status::Truncated) report.truncated = true;
        }
    }
    if (opts.cache) opts.cache->flush();
    return report;
}

ConjectureRow conjecture_report(int n, int k, const EngineOptions& opts) {
    const MetricSpace space = MetricSpace::path(n);
    const int m = spec_interval_m(n, k);
    ConjectureRow row{n, k, m, range_set(m + 1, k + 1), {}, false, false};
    try {
        row.computed = spectrum_bruteforce(space, k, opts).values();
        row.equal = row.computed == row.predicted;
    } catch (const BudgetExceededError&) {
        row.truncated = true;
    }
    return row;
}

std::vector<ConjectureRow> conjecture_sweep(IntRange n_range, std::optional<IntRange> k_range,
                                            const EngineOptions& opts) {
    if (n_range.lo > n_range.hi) throw DomainError("empty n range");
    std::vector<ConjectureRow> rows;
    for (int n = std::max(n_range.lo, 2); n <= n_range.hi; ++n) {
        int lo = n / 2 + 1, hi = n - 1;
        if (k_range) {
            lo = std::max(lo, k_range->lo);
            hi = std::min(hi, k_range->hi);
        }
        for (int k = lo; k <= hi; ++k) rows.push_back(conjecture_report(n, k, opts));
    }
    if (opts.cache) opts.cache->flush();
    return rows;
}

// ---------------------------------------------------------------------------
// serialization

std::string set_to_string(const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

namespace {

std::string predicted_text(const InstanceReport& i) {
    if (i.predicted_value) return std::to_string(*i.predicted_value);
    if (i.predicted_set) {
        std::string s = set_to_string(i.predicted_set->values);
        if (i.predicted_set->claim == Claim::LowerBound) s = ">=" + s;
        return s;
    }
    return "-";
}

std::string computed_text(const InstanceReport& i) {
    if (i.computed_value) return std::to_string(*i.computed_value);
    if (i.computed_set) return set_to_string(i.computed_set->values());
    return "-";
}

std::string witness_text(const InstanceReport& i) {
    if (i.witnesses.empty()) return "-";
    std::string s;
    for (std::size_t w = 0; w < i.witnesses.size(); ++w) {
        if (w) s += ' ';
        s += i.witnesses[w].to_string();
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

ordered_json range_json(IntRange r) {
    return ordered_json::array({r.lo, r.hi});
}

} // namespace

std::string report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["family"] = family_name(r.family);
    j["mode"] = mode_name(r.mode);
    j["n_range"] = range_json(r.n_range);
    j["k_range"] = r.k_range ? range_json(*r.k_range) : ordered_json("all");
    j["truncated"] = r.truncated;
    ordered_json summary;
    for (Status s : {Status::Pass, Status::Fail, Status::DomainError, Status::NoClosedForm, Status::Truncated})
        summary[status_name(s)] = r.count(s);
    j["summary"] = summary;
    j["all_pass"] = r.all_pass();
    ordered_json rows = ordered_json::array();
    for (const auto& i : r.instances) {
        ordered_json row;
        row["family"] = family_name(i.family);
        row["n"] = i.n;
        row["k"] = i.k;
        if (i.predicted_value) row["predicted"] = *i.predicted_value;
        else if (i.predicted_set) row["predicted"] = i.predicted_set->values;
        else row["predicted"] = nullptr;
        if (i.predicted_set) row["claim"] = claim_name(i.predicted_set->claim);
        if (i.computed_value) row["computed"] = *i.computed_value;
        else if (i.computed_set) row["computed"] = i.computed_set->values();
        else row["computed"] = nullptr;
        if (r.mode == Mode::Babai) {
            row["witness"] = i.witnesses.empty() ? ordered_json(nullptr) : ordered_json(i.witnesses.front().values());
        } else {
            ordered_json ws = ordered_json::array();
            for (const auto& w : i.witnesses) ws.push_back(w.values());
            row["witness"] = ws;
        }
        row["status"] = status_name(i.status);
        if (!i.message.empty()) row["message"] = i.message;
        rows.push_back(std::move(row));
    }
    j["instances"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r) {
    const std::vector<std::string> header = {"family", "n", "k", "predicted", "computed", "witness", "status"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& i : r.instances)
        rows.push_back({family_name(i.family), std::to_string(i.n), std::to_string(i.k), predicted_text(i),
                        computed_text(i), witness_text(i), status_name(i.status)});
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    const auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size()) cell.resize(width[c], ' ');
            line += cell;
            if (c + 1 < row.size()) line += "  ";
        }
        os << line << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    os << "# " << mode_name(r.mode) << ' ' << family_name(r.family) << ": " << r.count(Status::Pass) << " pass, "
       << r.count(Status::Fail) << " fail, " << r.count(Status::DomainError) << " domain-error, "
       << r.count(Status::NoClosedForm) << " no-closed-form, " << r.count(Status::Truncated) << " truncated\n";
    return os.str();
}

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "family,n,k,predicted,computed,witness,status\n";
    for (const auto& i : r.instances)
        os << family_name(i.family) << ',' << i.n << ',' << i.k << ',' << csv_field(predicted_text(i)) << ','
           << csv_field(computed_text(i)) << ',' << csv_field(witness_text(i)) << ',' << status_name(i.status) << '\n';
    return os.str();
}

std::string conjecture_to_csv(const std::vector<ConjectureRow>& rows) {
    std::ostringstream os;
    os << "n,k,m,predicted,computed,equal\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.k << ',' << r.m << ',' << csv_field(set_to_string(r.predicted)) << ','
           << (r.truncated ? std::string() : csv_field(set_to_string(r.computed))) << ','
           << (r.truncated ? "truncated" : (r.equal ? "true" : "false")) << '\n';
    return os.str();
}

std::string conjecture_to_json(const std::vector<ConjectureRow>& rows) {
    ordered_json j;
    j["schema"] = 1;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["k"] = r.k;
        row["m"] = r.m;
        row["predicted"] = r.predicted;
        row["computed"] = r.truncated ? ordered_json(nullptr) : ordered_json(r.computed);
        row["equal"] = r.truncated ? ordered_json("truncated") : ordered_json(r.equal);
        arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string conjecture_to_text(const std::vector<ConjectureRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(4) << "m" << std::setw(22)
       << "predicted" << std::setw(22) << "computed"
       << "equal\n";
    for (const auto& r : rows)
        os << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(4) << r.m << std::setw(22)
           << set_to_string(r.predicted) << std::setw(22) << (r.truncated ? "-" : set_to_string(r.computed))
           << (r.truncated ? "truncated" : (r.equal ? "true" : "false")) << '\n';
    return os.str();
}

} // namespace babai
