#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "babai/babai.h"

#include <json.hpp>

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    babai_string_free(s);
    return out;
}

} // namespace

TEST_CASE("options defaults") {
    babai_options o;
    babai_options_init(&o);
    CHECK(o.jobs == 1);
    CHECK(o.budget == (1ull << 22));
    CHECK(o.node_budget == 0);
    CHECK(o.cache == nullptr);
    CHECK(std::strlen(babai_version()) > 0);
}

TEST_CASE("chi through the C API") {
    const int d[] = {1, 2};
    int chi = 0;
    std::vector<int> cols(5);
    REQUIRE(babai_chi(BABAI_CYCLE, 5, d, 2, nullptr, &chi, cols.data()) == BABAI_OK);
    CHECK(chi == 5);
    CHECK(cols == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(std::string(babai_last_error()).empty());

    const int bad[] = {4};
    CHECK(babai_chi(BABAI_CYCLE, 7, bad, 1, nullptr, &chi, nullptr) == BABAI_ERR_DOMAIN);
    CHECK_FALSE(std::string(babai_last_error()).empty());
    CHECK(babai_chi(BABAI_CYCLE, 7, d, 2, nullptr, nullptr, nullptr) == BABAI_ERR_ARGUMENT);
    CHECK(babai_chi(static_cast<babai_family>(9), 7, d, 2, nullptr, &chi, nullptr) == BABAI_ERR_ARGUMENT);

    babai_options o;
    babai_options_init(&o);
    o.node_budget = 1;
    const int hard[] = {1, 5};
    CHECK(babai_chi(BABAI_CYCLE, 13, hard, 2, &o, &chi, nullptr) == BABAI_ERR_BUDGET);
}

TEST_CASE("Babai numbers through the C API") {
    int v = 0;
    int w[2] = {0, 0};
    REQUIRE(babai_number_bruteforce(BABAI_CYCLE, 10, 2, nullptr, &v, w) == BABAI_OK);
    CHECK(v == 5);
    CHECK(w[0] == 2);
    CHECK(w[1] == 4);
    REQUIRE(babai_number_formula(BABAI_PATH, 9, 4, &v) == BABAI_OK);
    CHECK(v == 5);
    CHECK(babai_number_formula(BABAI_CYCLE, 12, 3, &v) == BABAI_ERR_NO_CLOSED_FORM);
    CHECK(babai_number_formula(BABAI_CYCLE, 3, 2, &v) == BABAI_ERR_DOMAIN);

    babai_options o;
    babai_options_init(&o);
    o.budget = 2;
    CHECK(babai_number_bruteforce(BABAI_PATH, 8, 3, &o, &v, nullptr) == BABAI_ERR_BUDGET);
}

TEST_CASE("spectrum through the C API") {
    int vals[8];
    int wit[8 * 3];
    size_t count = 0;
    REQUIRE(babai_spectrum_bruteforce(BABAI_PATH, 8, 3, nullptr, vals, wit, 8, &count) == BABAI_OK);
    REQUIRE(count == 3);
    CHECK(vals[0] == 2);
    CHECK(vals[1] == 3);
    CHECK(vals[2] == 4);
    // witness of 4 is {1,2,3}
    CHECK(wit[6] == 1);
    CHECK(wit[7] == 2);
    CHECK(wit[8] == 3);

    // a short buffer still reports the full count
    REQUIRE(babai_spectrum_bruteforce(BABAI_PATH, 8, 3, nullptr, vals, wit, 1, &count) == BABAI_OK);
    CHECK(count == 3);
    CHECK(vals[0] == 2);
}

TEST_CASE("verify reports through the C API") {
    babai_report* r = nullptr;
    REQUIRE(babai_verify(BABAI_CYCLE, 4, 12, 0, 2, 2, BABAI_MODE_BABAI, nullptr, &r) == BABAI_OK);
    CHECK(babai_report_all_pass(r));
    CHECK_FALSE(babai_report_truncated(r));
    char* s = nullptr;
    REQUIRE(babai_report_render(r, BABAI_FORMAT_JSON, &s) == BABAI_OK);
    const auto j = nlohmann::json::parse(take(s));
    CHECK(j["instances"].size() == 9);
    CHECK(j["all_pass"] == true);
    REQUIRE(babai_report_render(r, BABAI_FORMAT_CSV, &s) == BABAI_OK);
    CHECK(take(s).rfind("family,n,k,", 0) == 0);
    CHECK(babai_report_render(r, static_cast<babai_format>(7), &s) == BABAI_ERR_ARGUMENT);
    babai_report_free(r);

    CHECK(babai_verify(BABAI_CYCLE, 9, 4, 1, 0, 0, BABAI_MODE_BABAI, nullptr, &r) == BABAI_ERR_DOMAIN);
    CHECK(babai_verify(BABAI_CYCLE, 4, 9, 1, 0, 0, BABAI_MODE_BABAI, nullptr, nullptr) == BABAI_ERR_ARGUMENT);
    babai_report_free(nullptr);
}

TEST_CASE("conjecture rows through the C API") {
    babai_conjecture* c = nullptr;
    REQUIRE(babai_conjecture_sweep(6, 8, 1, 0, 0, nullptr, &c) == BABAI_OK);
    CHECK(babai_conjecture_truncated(c) == 0);
    char* s = nullptr;
    REQUIRE(babai_conjecture_render(c, BABAI_FORMAT_CSV, &s) == BABAI_OK);
    const auto csv = take(s);
    CHECK(csv.rfind("n,k,m,predicted,computed,equal\n", 0) == 0);
    CHECK(csv.find("6,5,5,") != std::string::npos);
    babai_conjecture_free(c);
}

TEST_CASE("weak r-freeness through the C API") {
    const int s12[] = {1, 4};
    int verdict = -1;
    REQUIRE(babai_wrf(12, s12, 2, 3, &verdict, nullptr) == BABAI_OK);
    CHECK(verdict == 1);
    std::vector<int> cols(12);
    REQUIRE(babai_wrf_coloring(12, s12, 2, 3, cols.data()) == BABAI_OK);
    int proper = 0;
    REQUIRE(babai_cayley_proper(12, s12, 2, cols.data(), &proper) == BABAI_OK);
    CHECK(proper == 1);

    const int s5[] = {1, 2};
    long long viol[2] = {0, 0};
    REQUIRE(babai_wrf(5, s5, 2, 3, &verdict, viol) == BABAI_OK);
    CHECK(verdict == 0);
    CHECK((viol[0] * 1 + viol[1] * 2) % 5 == 0);
    CHECK((viol[0] + viol[1]) % 3 != 0);
    CHECK(babai_wrf_coloring(5, s5, 2, 3, cols.data()) == BABAI_ERR_INAPPLICABLE);
    CHECK(babai_wrf(5, s5, 2, 1, &verdict, nullptr) == BABAI_ERR_DOMAIN);
    const int zero[] = {0};
    CHECK(babai_wrf(5, zero, 1, 3, &verdict, nullptr) == BABAI_ERR_DOMAIN);
}

TEST_CASE("cache handle through the C API") {
    const auto path = (std::filesystem::temp_directory_path() / "babai_capi_cache.jsonl").string();
    std::filesystem::remove(path);
    babai_cache* cache = nullptr;
    REQUIRE(babai_cache_open(path.c_str(), &cache) == BABAI_OK);
    CHECK(babai_cache_loaded(cache) == 0);
    babai_options o;
    babai_options_init(&o);
    o.cache = cache;
    int v = 0;
    REQUIRE(babai_number_bruteforce(BABAI_CYCLE, 12, 2, &o, &v, nullptr) == BABAI_OK);
    REQUIRE(babai_cache_flush(cache) == BABAI_OK);
    babai_cache_close(cache);

    REQUIRE(babai_cache_open(path.c_str(), &cache) == BABAI_OK);
    CHECK(babai_cache_loaded(cache) == 15);
    babai_cache_close(cache);
    std::filesystem::remove(path);

    CHECK(babai_cache_open(nullptr, &cache) == BABAI_ERR_ARGUMENT);
}
