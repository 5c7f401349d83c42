#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "babai/engine.hpp"
#include "babai/errors.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace babai;

namespace {

std::set<int> span(int lo, int hi) {
    std::set<int> s;
    for (int v = lo; v <= hi; ++v) s.insert(v);
    return s;
}

std::string temp_path(const char* tag) {
    return (std::filesystem::temp_directory_path() / (std::string("babai_test_") + tag + ".jsonl")).string();
}

} // namespace

TEST_CASE("binomial") {
    CHECK(binomial(7, 5) == 21);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ull);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("colex rank and unrank follow colex order") {
    for (int m = 1; m <= 9; ++m)
        for (int k = 1; k <= m; ++k) {
            const auto all = oracle::colex_subsets(m, k);
            REQUIRE(all.size() == binomial(m, k));
            for (std::size_t r = 0; r < all.size(); ++r) {
                const auto d = colex_unrank(r, m, k);
                REQUIRE(d.values() == all[r]);
                REQUIRE(colex_rank(d) == r);
            }
        }
    CHECK_THROWS_AS(colex_unrank(21, 7, 5), DomainError);
}

TEST_CASE("brute-force Babai numbers, examples") {
    const auto p6 = babai_number_bruteforce(MetricSpace::path(6), 2);
    CHECK(p6.value == 3);
    CHECK(p6.witness == DistanceSet{1, 2});
    CHECK(babai_number_bruteforce(MetricSpace::cycle(8), 1).value == 2);
    const auto c10 = babai_number_bruteforce(MetricSpace::cycle(10), 2);
    CHECK(c10.value == 5);
    CHECK(c10.witness == DistanceSet{2, 4});
    CHECK_THROWS_AS(babai_number_bruteforce(MetricSpace::cycle(3), 2), DomainError);
    CHECK_THROWS_AS(babai_number_bruteforce(MetricSpace::path(5), 0), DomainError);
}

TEST_CASE("brute-force spectra, examples") {
    CHECK(spectrum_bruteforce(MetricSpace::cycle(7), 2).values() == std::set<int>{4});
    CHECK(spectrum_bruteforce(MetricSpace::path(8), 3).values() == std::set<int>{2, 3, 4});
    CHECK(spectrum_bruteforce(MetricSpace::cycle(9), 2).values() == std::set<int>{3});
}

TEST_CASE("witnesses are colex-first and reproduce their value") {
    for (int n = 4; n <= 14; ++n)
        for (Family f : {Family::Path, Family::Cycle}) {
            const MetricSpace sp(f, n);
            for (int k = 1; k <= std::min(3, sp.diameter()); ++k) {
                const auto spec = spectrum_bruteforce(sp, k);
                // independent scan in colex order
                std::map<int, std::vector<int>> first;
                for (const auto& sub : oracle::colex_subsets(sp.diameter(), k)) {
                    const int chi = chromatic_number(distance_graph(sp, DistanceSet(sub))).chi;
                    first.emplace(chi, sub);
                }
                REQUIRE(spec.entries.size() == first.size());
                for (const auto& [chi, d] : spec.entries) {
                    REQUIRE(first.at(chi) == d.values());
                    REQUIRE(static_cast<int>(d.size()) == k);
                }
                const auto b = babai_number_bruteforce(sp, k);
                REQUIRE(b.value == spec.entries.rbegin()->first);
                REQUIRE(b.witness == spec.entries.rbegin()->second);
            }
        }
}

TEST_CASE("Babai numbers are non-decreasing in k on computed tables") {
    // Observed property only.
    for (int n = 4; n <= 11; ++n) {
        int prev = 0;
        const auto sp = MetricSpace::cycle(n);
        for (int k = 1; k <= sp.diameter(); ++k) {
            const int v = babai_number_bruteforce(sp, k).value;
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    const auto sp = MetricSpace::cycle(24);
    EngineOptions one, many;
    many.jobs = 5;
    for (int k = 1; k <= 4; ++k) {
        const auto a = spectrum_bruteforce(sp, k, one);
        const auto b = spectrum_bruteforce(sp, k, many);
        REQUIRE(a.entries == b.entries);
    }
    EngineOptions lots;
    lots.jobs = 64; // more workers than subsets for k = 1
    CHECK(spectrum_bruteforce(MetricSpace::cycle(8), 1, lots).entries ==
          spectrum_bruteforce(MetricSpace::cycle(8), 1).entries);
}

TEST_CASE("budget refuses oversized enumerations") {
    EngineOptions tight;
    tight.budget = 10;
    CHECK_THROWS_AS(spectrum_bruteforce(MetricSpace::path(8), 3, tight), BudgetExceededError);
    CHECK_NOTHROW(spectrum_bruteforce(MetricSpace::path(6), 2, tight));
}

TEST_CASE("closed-form Babai numbers") {
    CHECK(closed_form_babai(MetricSpace::path(9), 4) == 5);
    CHECK(closed_form_babai(MetricSpace::cycle(12), 2) == 4);
    CHECK(closed_form_babai(MetricSpace::cycle(18), 2) == 3);
    CHECK(closed_form_babai(MetricSpace::cycle(16), 1) == 2);
    CHECK(closed_form_babai(MetricSpace::cycle(12), 1) == 3);
    CHECK(closed_form_babai(MetricSpace::cycle(25), 2) == 5);
    CHECK(closed_form_babai(MetricSpace::cycle(27), 2) == 3);
    CHECK_THROWS_AS(closed_form_babai(MetricSpace::cycle(12), 3), NoClosedFormError);
    CHECK_THROWS_AS(closed_form_babai(MetricSpace::cycle(3), 2), DomainError);
    CHECK_THROWS_AS(closed_form_babai(MetricSpace::path(4), 4), DomainError);
}

TEST_CASE("closed-form spectra") {
    const auto a = closed_form_spectrum(MetricSpace::path(10), 4);
    CHECK(a.values == span(2, 5));
    CHECK(a.claim == Claim::Exact);
    const auto b = closed_form_spectrum(MetricSpace::path(10), 6);
    CHECK(b.values == span(3, 7));
    CHECK(b.claim == Claim::LowerBound);
    CHECK(closed_form_spectrum(MetricSpace::cycle(15), 2).values == span(3, 5));
    CHECK(closed_form_spectrum(MetricSpace::cycle(14), 2).values == span(2, 4));
    const auto c = closed_form_spectrum(MetricSpace::cycle(16), 1);
    CHECK(c.values == std::set<int>{2});
    CHECK(c.claim == Claim::ExactDerived);
    CHECK(closed_form_spectrum(MetricSpace::cycle(12), 1).values == std::set<int>{2, 3});
    CHECK(closed_form_spectrum(MetricSpace::cycle(9), 1).values == std::set<int>{3});
    CHECK_THROWS_AS(closed_form_spectrum(MetricSpace::cycle(12), 3), NoClosedFormError);
    CHECK(std::string(claim_name(Claim::LowerBound)) == "lower-bound");
}

TEST_CASE("Spec(C_n, 2) rows: witness instances") {
    const std::vector<std::pair<int, CycleSpecCase>> rows = {
        {27, CycleSpecCase::PowerOfThree},   {9, CycleSpecCase::PowerOfThree},
        {4, CycleSpecCase::FourOrSeven},     {7, CycleSpecCase::FourOrSeven},
        {5, CycleSpecCase::Five},            {18, CycleSpecCase::TwiceThreePower},
        {6, CycleSpecCase::TwiceThreePower}, {21, CycleSpecCase::OddWithLargePrime},
        {11, CycleSpecCase::OddWithLargePrime}, {8, CycleSpecCase::EvenMixed},
        {12, CycleSpecCase::EvenMixed},      {16, CycleSpecCase::EvenMixed},
        {14, CycleSpecCase::EvenMixed},      {22, CycleSpecCase::EvenMixed},
        {26, CycleSpecCase::EvenMixed},      {28, CycleSpecCase::EvenMixed},
        {15, CycleSpecCase::FiveTimesOdd},   {25, CycleSpecCase::FiveTimesOdd},
        {10, CycleSpecCase::FiveTimesEven},  {20, CycleSpecCase::FiveTimesEven},
        {30, CycleSpecCase::FiveTimesEven},
    };
    for (auto [n, want] : rows) {
        INFO("n = " << n);
        CHECK(classify_cycle_spec(n) == want);
    }
}

TEST_CASE("Spec(C_n, 2) rows are mutually exclusive and exhaustive, 4 <= n <= 10^4") {
    for (int n = 4; n <= 10000; ++n) {
        const auto p = cycle_spec_case_predicates(n);
        int hits = 0;
        for (bool b : p) hits += b;
        INFO("n = " << n);
        REQUIRE(hits == 1);
    }
}

TEST_CASE("verify_range examples") {
    const auto a = verify_range(Family::Path, {2, 12}, std::nullopt, Mode::Babai);
    CHECK(a.all_pass());
    CHECK(a.count(Status::Pass) == 66);

    const auto c = verify_range(Family::Cycle, {3, 3}, IntRange{2, 2}, Mode::Babai);
    REQUIRE(c.instances.size() == 1);
    CHECK(c.instances[0].status == Status::DomainError);
    CHECK(c.all_pass());

    const auto d = verify_range(Family::Cycle, {12, 12}, IntRange{3, 3}, Mode::Babai);
    CHECK(d.instances[0].status == Status::NoClosedForm);

    EngineOptions tight;
    tight.budget = 5;
    const auto e = verify_range(Family::Path, {4, 6}, IntRange{2, 2}, Mode::Babai, tight);
    CHECK(e.truncated);
    CHECK_FALSE(e.all_pass());
    CHECK(e.count(Status::Truncated) == 2); // C(3,2)=3 fits, C(4,2) and C(5,2) do not

    const auto f = verify_range(Family::Path, {1, 2}, IntRange{1, 1}, Mode::Babai);
    CHECK(f.instances[0].status == Status::DomainError); // P_1 does not exist
    CHECK_THROWS_AS(verify_range(Family::Path, {5, 4}, std::nullopt, Mode::Babai), DomainError);
}

TEST_CASE("spectrum verification treats lower bounds as subsets") {
    const auto r = verify_range(Family::Path, {8, 8}, IntRange{5, 7}, Mode::Spectrum);
    for (const auto& i : r.instances) {
        CHECK(i.predicted_set->claim == Claim::LowerBound);
        CHECK(i.status == Status::Pass);
    }
}

TEST_CASE("conjecture rows") {
    const auto a = conjecture_report(6, 5);
    CHECK(a.m == 5);
    CHECK(a.predicted == std::set<int>{6});
    CHECK(a.computed == std::set<int>{6});
    CHECK(a.equal);
    const auto b = conjecture_report(8, 5);
    CHECK(b.m == 2);
    CHECK(b.predicted == span(3, 6));
    CHECK(b.computed == spectrum_bruteforce(MetricSpace::path(8), 5).values());
    const auto c = conjecture_report(7, 4);
    CHECK(c.predicted == span(3, 5));
    CHECK_THROWS_AS(conjecture_report(8, 4), DomainError);

    EngineOptions tight;
    tight.budget = 3;
    const auto rows = conjecture_sweep({13, 14}, std::nullopt, tight);
    CHECK_FALSE(rows.empty());
    for (const auto& r : rows) CHECK(r.truncated == (binomial(r.n - 1, r.k) > 3));
}

TEST_CASE("report serializers") {
    const auto r = verify_range(Family::Cycle, {3, 5}, IntRange{1, 2}, Mode::Babai);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["schema"] == 1);
    CHECK(j["family"] == "cycle");
    CHECK(j["mode"] == "babai");
    CHECK(j["instances"].size() == 6);
    CHECK(j["instances"][0]["n"] == 3);
    CHECK(j["instances"][0]["predicted"] == 3);
    CHECK(j["instances"][1]["status"] == "domain-error");
    for (const auto& inst : j["instances"])
        for (const char* key : {"family", "n", "k", "predicted", "computed", "witness", "status"})
            CHECK(inst.contains(key));

    const auto csv = report_to_csv(r);
    CHECK(csv.rfind("family,n,k,predicted,computed,witness,status\n", 0) == 0);
    CHECK(csv.find("cycle,5,2,5,5,\"{1,2}\",pass") != std::string::npos);

    const auto spec = verify_range(Family::Cycle, {6, 6}, IntRange{2, 2}, Mode::Spectrum);
    const auto js = nlohmann::json::parse(report_to_json(spec));
    CHECK(js["instances"][0]["predicted"] == nlohmann::json::array({2, 3}));
    CHECK(js["instances"][0]["claim"] == "exact");
    CHECK(js["instances"][0]["witness"].size() == 2);

    const auto text = report_to_text(r);
    CHECK(text.find("domain-error") != std::string::npos);

    const auto rows = conjecture_sweep({6, 6}, std::nullopt);
    CHECK(conjecture_to_csv(rows).rfind("n,k,m,predicted,computed,equal\n", 0) == 0);
    CHECK(nlohmann::json::parse(conjecture_to_json(rows))["rows"].size() == rows.size());
}

TEST_CASE("chi cache round trip") {
    const auto path = temp_path("cache");
    std::filesystem::remove(path);
    {
        ChiCache cache(path);
        EngineOptions opts;
        opts.cache = &cache;
        const auto fresh = spectrum_bruteforce(MetricSpace::cycle(12), 2, opts);
        CHECK(cache.misses() == binomial(6, 2));
        cache.flush();
        CHECK(fresh.values() == std::set<int>{2, 3, 4});
    }
    {
        ChiCache cache(path);
        CHECK(cache.loaded_entries() == binomial(6, 2));
        EngineOptions opts;
        opts.cache = &cache;
        const auto again = spectrum_bruteforce(MetricSpace::cycle(12), 2, opts);
        CHECK(cache.hits() == binomial(6, 2));
        CHECK(cache.misses() == 0);
        CHECK(again.values() == std::set<int>{2, 3, 4});
        CHECK(cache.lookup(MetricSpace::cycle(12), {2, 4}).value() == 3);
        CHECK_FALSE(cache.lookup(MetricSpace::path(12), {2, 4}).has_value());
    }
    // a torn trailing line is ignored
    {
        std::ofstream out(path, std::ios::app);
        out << "{\"family\":\"cycle\",\"n\":";
    }
    ChiCache cache(path);
    CHECK(cache.loaded_entries() == binomial(6, 2));
    std::filesystem::remove(path);
}

TEST_CASE("cache file lines are sorted JSON objects") {
    const auto path = temp_path("lines");
    std::filesystem::remove(path);
    {
        ChiCache cache(path);
        cache.record(MetricSpace::cycle(10), {2, 4}, 5);
        cache.record(MetricSpace::cycle(10), {1, 2}, 4);
    }
    std::ifstream in(path);
    std::string l1, l2;
    std::getline(in, l1);
    std::getline(in, l2);
    CHECK(l1 == R"({"family":"cycle","n":10,"d":[1,2],"chi":4})");
    CHECK(l2 == R"({"family":"cycle","n":10,"d":[2,4],"chi":5})");
    std::filesystem::remove(path);
}
