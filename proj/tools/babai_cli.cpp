// Command-line front end. Talks to the library only through babai.h.

#include "babai/babai.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

enum exit_code { EXIT_OK = 0, EXIT_FALSE = 1, EXIT_USAGE = 2, EXIT_BUDGET = 3, EXIT_INTERNAL = 4 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct range {
    int lo = 0;
    int hi = 0;
};

int parse_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw usage_error(std::string("bad ") + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw usage_error(std::string("bad ") + what + ": '" + s + "'");
    return v;
}

// "7" or "4..30", inclusive.
range parse_range(const std::string& s, const char* what) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int v = parse_int(s, what);
        return {v, v};
    }
    range r{parse_int(s.substr(0, dots), what), parse_int(s.substr(dots + 2), what)};
    if (r.lo > r.hi) throw usage_error(std::string("empty ") + what + " range '" + s + "'");
    return r;
}

std::vector<int> parse_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty()) throw usage_error(std::string("empty element in ") + what);
        out.push_back(parse_int(item, what));
    }
    if (out.empty()) throw usage_error(std::string(what) + " is empty");
    return out;
}

babai_family parse_family(const std::string& s) {
    if (s == "path") return BABAI_PATH;
    if (s == "cycle") return BABAI_CYCLE;
    throw usage_error("family must be path or cycle");
}

babai_format parse_format(const std::string& s) {
    if (s == "table") return BABAI_FORMAT_TABLE;
    if (s == "json") return BABAI_FORMAT_JSON;
    if (s == "csv") return BABAI_FORMAT_CSV;
    throw usage_error("format must be table, json or csv");
}

const char* family_str(babai_family f) {
    return f == BABAI_PATH ? "path" : "cycle";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Maps a library status to an exit code, printing the message.
int fail(babai_status st) {
    std::cerr << "error: " << babai_last_error() << '\n';
    if (st == BABAI_ERR_BUDGET) return EXIT_BUDGET;
    if (st == BABAI_ERR_INTERNAL || st == BABAI_ERR_IO) return EXIT_INTERNAL;
    return EXIT_USAGE;
}

struct common {
    std::string format; // empty: csv for conjecture, table otherwise
    unsigned jobs = 0;
    std::uint64_t budget = 0;
    std::uint64_t node_budget = 0;
    std::string cache;
    std::string output;
};

class session {
public:
    explicit session(const common& c) : c_(c) {
        babai_options_init(&opts_);
        if (c.jobs) opts_.jobs = c.jobs;
        else opts_.jobs = std::max(1u, std::thread::hardware_concurrency());
        if (c.budget) opts_.budget = c.budget;
        opts_.node_budget = c.node_budget;
        // --cache wins over BABAI_CACHE.
        std::string path = c.cache;
        if (path.empty())
            if (const char* env = std::getenv("BABAI_CACHE")) path = env;
        if (!path.empty()) {
            if (babai_cache_open(path.c_str(), &cache_) != BABAI_OK)
                throw usage_error(std::string("cannot open cache: ") + babai_last_error());
            opts_.cache = cache_;
        }
    }
    ~session() {
        if (cache_) {
            babai_cache_flush(cache_);
            babai_cache_close(cache_);
        }
    }
    session(const session&) = delete;
    session& operator=(const session&) = delete;

    const babai_options* opts() const { return &opts_; }
    babai_format format() const { return parse_format(c_.format); }

    void emit(const std::string& text) const {
        if (c_.output.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(c_.output, std::ios::binary);
        if (!out) throw usage_error("cannot write " + c_.output);
        out << text;
    }

private:
    const common& c_;
    babai_options opts_{};
    babai_cache* cache_ = nullptr;
};

std::string take(char* s) {
    std::string out(s);
    babai_string_free(s);
    return out;
}

void add_common(CLI::App* app, common& c, bool with_output = true) {
    app->add_option("--format", c.format, "table|json|csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app->add_option("--jobs", c.jobs, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
    app->add_option("--budget", c.budget, "largest C(|R|,k) enumerated per instance");
    app->add_option("--node-budget", c.node_budget, "chromatic search node cap per component (0 = none)");
    app->add_option("--cache", c.cache, "JSON-lines chi cache (overrides BABAI_CACHE)");
    if (with_output) app->add_option("--output,-o", c.output, "write the report here instead of stdout");
}

// --- chi -----------------------------------------------------------------

struct chi_args {
    std::string family;
    int n = 0;
    std::string distances;
    bool witness = false;
};

int cmd_chi(const chi_args& a, const common& c) {
    session s(c);
    const auto fam = parse_family(a.family);
    const auto d = parse_list(a.distances, "distances");
    int chi = 0;
    std::vector<int> colors(static_cast<std::size_t>(std::max(a.n, 0)));
    const auto st = babai_chi(fam, a.n, d.data(), d.size(), s.opts(), &chi, a.witness ? colors.data() : nullptr);
    if (st != BABAI_OK) return fail(st);

    std::ostringstream os;
    switch (s.format()) {
    case BABAI_FORMAT_JSON: {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["family"] = family_str(fam);
        j["n"] = a.n;
        j["distances"] = d;
        j["chi"] = chi;
        if (a.witness) j["coloring"] = colors;
        os << j.dump(2) << '\n';
        break;
    }
    case BABAI_FORMAT_CSV:
        os << "family,n,distances,chi" << (a.witness ? ",coloring" : "") << '\n';
        os << family_str(fam) << ',' << a.n << ",\"" << join(d) << "\"," << chi;
        if (a.witness) os << ",\"" << join(colors) << '"';
        os << '\n';
        break;
    default:
        os << "chi(" << (fam == BABAI_PATH ? "P_" : "C_") << a.n << ", {" << join(d) << "}) = " << chi << '\n';
        if (a.witness) os << "coloring: " << join(colors, " ") << '\n';
    }
    s.emit(os.str());
    return EXIT_OK;
}

// --- babai ---------------------------------------------------------------

struct babai_args {
    std::string family;
    int n = 0;
    int k = 0;
    std::string method = "brute";
};

int cmd_babai(const babai_args& a, const common& c) {
    session s(c);
    const auto fam = parse_family(a.family);
    const bool brute = a.method != "formula";
    const bool formula = a.method != "brute";

    std::optional<int> predicted, computed;
    std::vector<int> witness(static_cast<std::size_t>(std::max(a.k, 0)));
    std::string note;
    if (formula) {
        int v = 0;
        const auto st = babai_number_formula(fam, a.n, a.k, &v);
        if (st == BABAI_OK) predicted = v;
        else if (st == BABAI_ERR_NO_CLOSED_FORM && brute) note = babai_last_error();
        else return fail(st);
    }
    if (brute) {
        int v = 0;
        const auto st = babai_number_bruteforce(fam, a.n, a.k, s.opts(), &v, witness.data());
        if (st != BABAI_OK) return fail(st);
        computed = v;
    }
    const bool mismatch = predicted && computed && *predicted != *computed;
    const char* status = !(predicted && computed) ? "-" : (mismatch ? "fail" : "pass");

    std::ostringstream os;
    switch (s.format()) {
    case BABAI_FORMAT_JSON: {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["family"] = family_str(fam);
        j["n"] = a.n;
        j["k"] = a.k;
        j["method"] = a.method;
        j["predicted"] = predicted ? nlohmann::ordered_json(*predicted) : nlohmann::ordered_json(nullptr);
        j["computed"] = computed ? nlohmann::ordered_json(*computed) : nlohmann::ordered_json(nullptr);
        j["witness"] = computed ? nlohmann::ordered_json(witness) : nlohmann::ordered_json(nullptr);
        j["status"] = status;
        if (!note.empty()) j["message"] = note;
        os << j.dump(2) << '\n';
        break;
    }
    case BABAI_FORMAT_CSV:
        os << "family,n,k,predicted,computed,witness,status\n";
        os << family_str(fam) << ',' << a.n << ',' << a.k << ',' << (predicted ? std::to_string(*predicted) : "")
           << ',' << (computed ? std::to_string(*computed) : "") << ",\"" << (computed ? "{" + join(witness) + "}" : "")
           << "\"," << status << '\n';
        break;
    default: {
        const std::string name = std::string("B_") + std::to_string(a.k) + (fam == BABAI_PATH ? "(P_" : "(C_") +
                                 std::to_string(a.n) + ")";
        if (predicted && computed)
            os << name << ": formula " << *predicted << ", brute force " << *computed << " witness {" << join(witness)
               << "}, " << status << '\n';
        else if (computed)
            os << name << " = " << *computed << " witness {" << join(witness) << "}\n";
        else
            os << name << " = " << *predicted << '\n';
        if (!note.empty()) os << "note: " << note << '\n';
    }
    }
    s.emit(os.str());
    return mismatch ? EXIT_FALSE : EXIT_OK;
}

// --- verify --------------------------------------------------------------

struct verify_args {
    std::string family;
    std::string n;
    std::string k = "all";
    std::string mode = "babai";
};

int cmd_verify(const verify_args& a, const common& c) {
    session s(c);
    const auto fam = parse_family(a.family);
    const auto n = parse_range(a.n, "n");
    const bool all_k = a.k == "all";
    const auto k = all_k ? range{0, 0} : parse_range(a.k, "k");
    babai_report* rep = nullptr;
    const auto st = babai_verify(fam, n.lo, n.hi, all_k, k.lo, k.hi,
                                 a.mode == "spectrum" ? BABAI_MODE_SPECTRUM : BABAI_MODE_BABAI, s.opts(), &rep);
    if (st != BABAI_OK) return fail(st);
    char* text = nullptr;
    const auto rst = babai_report_render(rep, s.format(), &text);
    const bool all_pass = babai_report_all_pass(rep);
    const bool truncated = babai_report_truncated(rep);
    babai_report_free(rep);
    if (rst != BABAI_OK) return fail(rst);
    s.emit(take(text));
    if (truncated) return EXIT_BUDGET;
    return all_pass ? EXIT_OK : EXIT_FALSE;
}

// --- conjecture ----------------------------------------------------------

struct conjecture_args {
    std::string n;
    std::string k = "all";
};

int cmd_conjecture(const conjecture_args& a, const common& c) {
    session s(c);
    const auto n = parse_range(a.n, "n");
    const bool all_k = a.k == "all";
    const auto k = all_k ? range{0, 0} : parse_range(a.k, "k");
    babai_conjecture* rows = nullptr;
    const auto st = babai_conjecture_sweep(n.lo, n.hi, all_k, k.lo, k.hi, s.opts(), &rows);
    if (st != BABAI_OK) return fail(st);
    char* text = nullptr;
    const auto rst = babai_conjecture_render(rows, s.format(), &text);
    const auto truncated = babai_conjecture_truncated(rows);
    babai_conjecture_free(rows);
    if (rst != BABAI_OK) return fail(rst);
    s.emit(take(text));
    if (truncated) std::cerr << truncated << " row(s) truncated by the budget\n";
    return EXIT_OK; // evidence only
}

// --- wrf -----------------------------------------------------------------

struct wrf_args {
    int n = 0;
    std::string set;
    int r = 0;
    bool color = false;
};

int cmd_wrf(const wrf_args& a, const common& c) {
    session s(c);
    const auto set = parse_list(a.set, "set");
    int verdict = 0;
    std::vector<long long> coeffs(set.size());
    auto st = babai_wrf(a.n, set.data(), set.size(), a.r, &verdict, coeffs.data());
    if (st != BABAI_OK) return fail(st);

    std::vector<int> colors;
    int proper = 0;
    if (verdict && a.color) {
        colors.resize(static_cast<std::size_t>(a.n));
        st = babai_wrf_coloring(a.n, set.data(), set.size(), a.r, colors.data());
        if (st != BABAI_OK) return fail(st);
        st = babai_cayley_proper(a.n, set.data(), set.size(), colors.data(), &proper);
        if (st != BABAI_OK) return fail(st);
    }

    std::ostringstream os;
    switch (s.format()) {
    case BABAI_FORMAT_JSON: {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["n"] = a.n;
        j["set"] = set;
        j["r"] = a.r;
        j["weakly_r_free"] = verdict != 0;
        if (!verdict) j["violation"] = coeffs;
        if (!colors.empty()) {
            j["coloring"] = colors;
            j["proper"] = proper != 0;
        }
        os << j.dump(2) << '\n';
        break;
    }
    case BABAI_FORMAT_CSV:
        os << "n,set,r,weakly_r_free,violation,coloring,proper\n";
        os << a.n << ",\"" << join(set) << "\"," << a.r << ',' << (verdict ? "true" : "false") << ",\"";
        if (!verdict)
            for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
        os << "\",\"" << join(colors) << "\"," << (colors.empty() ? "" : (proper ? "true" : "false")) << '\n';
        break;
    default:
        os << "weakly " << a.r << "-free: " << (verdict ? "true" : "false") << '\n';
        if (!verdict) {
            os << "violation: ";
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                if (i) os << (coeffs[i] < 0 ? " - " : " + ");
                else if (coeffs[i] < 0) os << '-';
                os << std::llabs(coeffs[i]) << '*' << set[i];
            }
            os << " = 0 (mod " << a.n << "), coefficient sum not 0 (mod " << a.r << ")\n";
        }
        if (!colors.empty()) {
            os << "coloring: " << join(colors, " ") << '\n';
            os << "proper: " << (proper ? "yes" : "NO") << '\n';
        }
    }
    s.emit(os.str());
    if (!verdict) return EXIT_FALSE;
    if (!colors.empty() && !proper) return EXIT_INTERNAL;
    return EXIT_OK;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Babai numbers and spectra of path and cycle distance graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", babai_version());

    common c;

    chi_args chi;
    auto* chi_cmd = app.add_subcommand("chi", "chromatic number of G(X, D)");
    chi_cmd->add_option("--family", chi.family, "path|cycle")->required();
    chi_cmd->add_option("--n", chi.n, "vertex count")->required();
    chi_cmd->add_option("--distances,-d", chi.distances, "comma-separated D")->required();
    chi_cmd->add_flag("--witness", chi.witness, "print an optimal coloring");
    add_common(chi_cmd, c);

    babai_args bab;
    auto* bab_cmd = app.add_subcommand("babai", "k-th Babai number");
    bab_cmd->add_option("--family", bab.family, "path|cycle")->required();
    bab_cmd->add_option("--n", bab.n, "vertex count")->required();
    bab_cmd->add_option("--k", bab.k, "subset size")->required();
    bab_cmd->add_option("--method", bab.method, "brute|formula|both")
        ->check(CLI::IsMember({"brute", "formula", "both"}));
    add_common(bab_cmd, c);

    verify_args ver;
    auto* ver_cmd = app.add_subcommand("verify", "closed forms against brute force over a range");
    ver_cmd->add_option("--family", ver.family, "path|cycle")->required();
    ver_cmd->add_option("--n", ver.n, "n or a..b")->required();
    ver_cmd->add_option("--k", ver.k, "k, a..b, or all");
    ver_cmd->add_option("--mode", ver.mode, "babai|spectrum")->check(CLI::IsMember({"babai", "spectrum"}));
    add_common(ver_cmd, c);

    conjecture_args con;
    auto* con_cmd = app.add_subcommand("conjecture", "path spectra above n/2 against the interval prediction");
    con_cmd->add_option("--n", con.n, "n or a..b")->required();
    con_cmd->add_option("--k", con.k, "k, a..b, or all");
    add_common(con_cmd, c);

    wrf_args wrf;
    auto* wrf_cmd = app.add_subcommand("wrf", "weak r-freeness of S in Z_n");
    wrf_cmd->add_option("--n", wrf.n, "group order")->required();
    wrf_cmd->add_option("--set,-s", wrf.set, "comma-separated elements of Z_n")->required();
    wrf_cmd->add_option("--r", wrf.r, "r >= 2")->required();
    wrf_cmd->add_flag("--color", wrf.color, "build and check the r-coloring");
    add_common(wrf_cmd, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? EXIT_OK : EXIT_USAGE;
    }
    if (c.format.empty()) c.format = con_cmd->parsed() ? "csv" : "table";

    try {
        if (chi_cmd->parsed()) return cmd_chi(chi, c);
        if (bab_cmd->parsed()) return cmd_babai(bab, c);
        if (ver_cmd->parsed()) return cmd_verify(ver, c);
        if (con_cmd->parsed()) return cmd_conjecture(con, c);
        if (wrf_cmd->parsed()) return cmd_wrf(wrf, c);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_INTERNAL;
    }
    return EXIT_USAGE;
}
