// quartica: command-line front end for the point-count tables, single
// computations, verification suites and the count cache.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quartica/cache.hpp"
#include "quartica/curve_model.hpp"
#include "quartica/groebner.hpp"
#include "quartica/invariants.hpp"
#include "quartica/parse.hpp"
#include "quartica/quotient.hpp"
#include "quartica/verify.hpp"
#include "quartica/zeta.hpp"

namespace {

using namespace quartica;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr std::uint64_t kMaxTablePrime = 200;
// Largest q^2 = p^(2m) the lpoly table spends on one direct count of C.
constexpr std::uint64_t kCheckBudget = std::uint64_t{1} << 24;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string cache_path;
    unsigned workers = 0;
    bool verbose = false;
    std::string format = "text";
    bool json_flag = false;

    std::string curve;
    std::uint64_t p = 0;
    unsigned m = 1;
    std::uint64_t pmax = 103;
    std::string which;
    unsigned depth = 0;
    std::string suite = "all";
    std::vector<std::string> perturb;

    std::vector<std::string> polys;
    std::string vars;
    std::string order = "lex";
    std::string eliminate;
    std::string group;
    unsigned degree = 0;
    bool fundamental = false;
    std::string cache_action = "show";

    std::string effective_format() const { return json_flag ? "json" : format; }
};

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p) || p < 5) throw UsageError("--p must be a prime >= 5 (got " + std::to_string(p) + ")");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

json to_json(const Integer& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

json to_json(const LPolynomial& L) {
    json a = json::array();
    for (const auto& c : L.c) a.push_back(to_json(c));
    return a;
}

// Aligned plain-text table, right-justified numbers.
std::string render_text(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(w[i])) << r[i];
        }
        out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out.str();
}

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += ",";
            out += r[i];
        }
        out += "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

// Owns the cache for one invocation; counts go through it and it is
// written once at the end.
class Session {
public:
    // Cached counts are keyed by label, so an altered catalog must not read
    // or write the cache.
    explicit Session(const Options& o, bool use_cache = true)
        : path_(o.cache_path.empty() ? default_cache_path() : o.cache_path),
          use_cache_(use_cache),
          cache_(use_cache ? PointCache::load(path_) : PointCache{}),
          count_(use_cache ? caching_counter(cache_, o.workers, o.verbose ? &std::cerr : nullptr)
                           : direct_counter(o.workers)) {}

    const CountFn& count() const { return count_; }
    const std::string& path() const { return path_; }

    void save() {
        if (use_cache_ && cache_.dirty()) cache_.save(path_);
    }

private:
    std::string path_;
    bool use_cache_;
    PointCache cache_;
    CountFn count_;
};

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const auto* a : allowed)
        if (f == a) return;
    std::string list;
    for (const auto* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format " + f + " not supported here (choose " + list + ")");
}

// ---- count / lpoly ---------------------------------------------------------------

int run_count(const Options& o) {
    require_prime(o.p);
    if (o.m < 1) throw UsageError("--m must be >= 1");
    catalog(o.curve);
    if (auto bad = bad_reduction(o.curve, o.p)) throw UsageError(*bad);
    auto fmt = o.effective_format();
    check_format(fmt, {"text", "json"});
    Session s(o);
    auto N = s.count()(o.curve, o.p, o.m);
    s.save();
    if (fmt == "json") {
        std::cout << json{{"curve", o.curve}, {"p", o.p}, {"m", o.m}, {"N", N}}.dump() << "\n";
    } else {
        std::string field = o.m == 1 ? "F_" + std::to_string(o.p) : "F_" + std::to_string(o.p) + "^" + std::to_string(o.m);
        std::cout << "#" << o.curve << "(" << field << ") = " << N << "\n";
    }
    return kExitOk;
}

int run_lpoly(const Options& o) {
    require_prime(o.p);
    auto model = catalog(o.curve);
    if (auto bad = bad_reduction(o.curve, o.p)) throw UsageError(*bad);
    auto fmt = o.effective_format();
    check_format(fmt, {"text", "json"});
    Session s(o);
    LPolynomial L;
    std::string method = "counts";
    if (o.curve == "C" && o.p > 7) {
        // N_1..N_4 over F_{p^4} is out of reach; use the quotient product.
        L = lpoly_of("C12", o.p, s.count()) * lpoly_of("C123", o.p, s.count()) * lpoly_of("C1234", o.p, s.count());
        method = "product of the quotient L-polynomials";
    } else {
        L = lpoly_of(o.curve, o.p, s.count());
    }
    s.save();
    if (o.verbose) std::cerr << "L-polynomial from " << method << "\n";
    if (fmt == "json") {
        std::cout << json{{"curve", o.curve}, {"p", o.p}, {"genus", L.genus}, {"L", to_json(L)}}.dump() << "\n";
    } else {
        std::cout << "L(" << o.curve << ", t) over F_" << o.p << " = " << L.to_string() << "\n";
        std::cout << "genus " << L.genus << ", p-rank " << p_rank(L, o.p) << "\n";
    }
    return kExitOk;
}

// ---- tables ---------------------------------------------------------------------

std::string factors_string(const std::pair<LPolynomial, LPolynomial>& f) {
    return "(" + f.first.to_string() + ")(" + f.second.to_string() + ")";
}

bool within_budget(std::uint64_t p, unsigned depth) {
    // p^(2 depth) <= budget without overflow
    std::uint64_t v = 1;
    for (unsigned i = 0; i < 2 * depth; ++i) {
        if (v > kCheckBudget / p) return false;
        v *= p;
    }
    return true;
}

int run_tables(const Options& o) {
    if (o.which != "points" && o.which != "lpoly") throw UsageError("--which must be 'points' or 'lpoly'");
    if (o.pmax < 5) throw UsageError("--pmax must be >= 5");
    if (o.pmax > kMaxTablePrime) throw UsageError("--pmax is capped at " + std::to_string(kMaxTablePrime));
    auto fmt = o.effective_format();
    check_format(fmt, {"text", "json", "csv"});
    unsigned depth = o.depth ? o.depth : 1;
    if (depth > 4) throw UsageError("--depth must be between 1 and 4");

    Session s(o);
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    json out = json::array();
    bool failed = false;

    for (auto p : primes_between(5, o.pmax)) {
        if (o.which == "points") {
            auto r = points_row(p, s.count());
            Integer defect = r.upper - r.N;
            rows.push_back({std::to_string(p), r.lower.get_str(), r.N.get_str(), r.upper.get_str()});
            if (fmt == "text") rows.back().push_back(defect.get_str());
            out.push_back({{"p", p}, {"lower", to_json(r.lower)}, {"points", to_json(r.N)},
                           {"upper", to_json(r.upper)}, {"defect", to_json(defect)}});
        } else {
            auto r = lpoly_row(p, s.count());
            std::string check;
            if (within_budget(p, depth)) {
                auto v = verify_product_theorem(p, depth, s.count());
                check = (v.holds ? "ok(" : "FAIL(") + std::to_string(depth) + ")";
                failed = failed || !v.holds;
            } else {
                check = "skipped(" + std::to_string(depth) + ")";
            }
            std::string c123 = r.quotient123_factors ? factors_string(*r.quotient123_factors) : r.quotient123.to_string();
            rows.push_back({std::to_string(p), r.quotient12.to_string(), c123, r.quotient1234.to_string(),
                            std::to_string(r.p_rank), check});
            json factors = nullptr;
            if (r.quotient123_factors)
                factors = json::array({to_json(r.quotient123_factors->first), to_json(r.quotient123_factors->second)});
            out.push_back({{"p", p},
                           {"C12", to_json(r.quotient12)},
                           {"C123", to_json(r.quotient123)},
                           {"C123_factors", factors},
                           {"C1234", to_json(r.quotient1234)},
                           {"p_rank", r.p_rank},
                           {"check", check}});
        }
    }
    s.save();

    if (o.which == "points") {
        header = {"p", "lower", "points", "upper"};
        if (fmt == "text") header.push_back("defect");
    } else {
        header = {"p", "C12", "C123", "C1234", "p_rank", "check"};
    }
    if (fmt == "json")
        std::cout << out.dump(2) << "\n";
    else if (fmt == "csv")
        std::cout << render_csv(header, rows);
    else
        std::cout << render_text(header, rows);
    return failed ? kExitVerifyFailed : kExitOk;
}

// ---- algebra --------------------------------------------------------------------

int run_groebner(const Options& o) {
    if (o.polys.empty()) throw UsageError("give at least one polynomial");
    auto vars = split_list(o.vars);
    if (vars.empty()) throw UsageError("--vars must list the variables, highest priority first");
    MonomialOrder order;
    if (o.order == "lex")
        order = MonomialOrder::lex(vars);
    else if (o.order == "grevlex")
        order = MonomialOrder::grevlex(vars);
    else
        throw UsageError("--order must be lex or grevlex");
    auto ring = QRing::make(vars, RationalField{}, order);
    std::vector<QPoly> gens;
    for (const auto& text : o.polys) {
        try {
            gens.push_back(parse_poly(ring, text));
        } catch (const ParseError& e) {
            throw UsageError("cannot parse '" + text + "': " + e.what());
        }
    }
    std::vector<QPoly> basis;
    auto keep_list = split_list(o.eliminate);
    if (!o.eliminate.empty()) {
        std::vector<std::string> keep;
        for (const auto& v : vars)
            if (std::find(keep_list.begin(), keep_list.end(), v) == keep_list.end()) keep.push_back(v);
        for (const auto& v : keep_list) ring->index_of(v);
        basis = eliminate(gens, keep);
    } else {
        basis = buchberger(gens).elements;
    }
    if (o.effective_format() == "json") {
        json a = json::array();
        for (const auto& b : basis) a.push_back(b.to_string());
        std::cout << json{{"vars", vars}, {"order", o.order}, {"basis", a}}.dump() << "\n";
    } else {
        for (const auto& b : basis) std::cout << b.to_string() << "\n";
    }
    return kExitOk;
}

PermGroup parse_group(const std::string& text, std::size_t n) {
    if (text == "S4" || text == "S_4") {
        if (n != 4) throw UsageError("S4 acts on four variables");
        return PermGroup::symmetric(4);
    }
    try {
        return PermGroup::parse(text, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --group: ") + e.what());
    }
}

int run_invariants(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    auto vars = split_list(o.vars.empty() ? "x,y,z,w" : o.vars);
    auto ring = QRing::make(vars);
    auto group = parse_group(o.group, vars.size());
    auto gens = fundamental_invariants(ring, group);
    std::size_t cap = o.degree ? o.degree : std::max<std::size_t>(invariant_degree_bound(group), 6);
    auto series = molien(group, cap);
    if (o.effective_format() == "json") {
        json g = json::array(), c = json::array();
        for (const auto& f : gens) g.push_back(f.to_string());
        for (const auto& v : series.coefficients) c.push_back(to_json(v));
        std::cout << json{{"group", o.group},       {"order", group.order()}, {"vars", vars},
                          {"generators", g},         {"molien", series.to_string()},
                          {"expansion", c}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "group " << o.group << " of order " << group.order() << " on ";
    for (std::size_t i = 0; i < vars.size(); ++i) std::cout << (i ? "," : "") << vars[i];
    std::cout << "\n";
    std::cout << "generators:\n";
    for (const auto& f : gens) std::cout << "  " << f.to_string() << "\n";
    std::cout << "Molien series: " << series.to_string() << "\n";
    std::cout << "expansion: ";
    for (std::size_t d = 0; d < series.coefficients.size(); ++d) {
        if (d) std::cout << " + ";
        const auto& c = series.coefficients[d];
        if (d == 0 || c != 1) std::cout << c.get_str();
        if (d) std::cout << "t" << (d > 1 ? "^" + std::to_string(d) : "");
    }
    std::cout << " + O(t^" << series.coefficients.size() << ")\n";
    return kExitOk;
}

// Largest point named in a cycle string such as "(1,2)(3,4)".
unsigned largest_point(const std::string& text) {
    unsigned best = 0, cur = 0;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur = cur * 10 + static_cast<unsigned>(c - '0');
        } else {
            best = std::max(best, cur);
            cur = 0;
        }
    }
    return std::max(best, cur);
}

int run_quotient(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    QuotientIdeal q;
    bool projective = o.group == "S4" || o.group == "S_4" || largest_point(o.group) == 4;
    if (projective) {
        auto c = std::get<IntersectionP3>(catalog("C").model);
        auto r = c.quadric.ring();
        auto group = parse_group(o.group, 4);
        std::vector<QPoly> inv;
        if (group.order() == 24 && !o.fundamental) inv = catalog_invariants("S4", r);
        q = quotient_ideal({c.quadric, c.cubic}, group, inv);
    } else {
        auto eqs = affine_curve_equations();
        auto r = eqs.front().ring();
        auto group = parse_group(o.group, 3);
        std::vector<QPoly> inv;
        if (!o.fundamental && (o.group == "(1,2)" || o.group == "(1,2,3)")) inv = catalog_invariants(o.group, r);
        q = quotient_ideal(eqs, group, inv);
    }
    const auto& names = q.ring->vars();
    if (o.effective_format() == "json") {
        json inv = json::object(), ideal = json::array();
        for (std::size_t i = 0; i < q.invariants.size(); ++i) inv[names[i]] = q.invariants[i].to_string();
        for (const auto& g : q.ideal) ideal.push_back(g.to_string());
        std::cout << json{{"group", o.group}, {"chart", projective ? "P3" : "w=1"}, {"invariants", inv},
                          {"ideal", ideal}}
                         .dump()
                  << "\n";
        return kExitOk;
    }
    std::cout << "quotient of C by " << o.group << (projective ? " (projective)" : " (chart w = 1)") << "\n";
    std::cout << "invariants:\n";
    for (std::size_t i = 0; i < q.invariants.size(); ++i)
        std::cout << "  " << names[i] << " = " << q.invariants[i].to_string() << "\n";
    std::cout << "ideal:\n";
    for (const auto& g : q.ideal) std::cout << "  " << g.to_string() << "\n";
    return kExitOk;
}

// ---- verify -----------------------------------------------------------------------

void apply_perturbation(const std::string& assignment) {
    auto eq = assignment.find('=');
    auto dot = assignment.rfind('.', eq);
    if (eq == std::string::npos || dot == std::string::npos || dot == 0)
        throw UsageError("--perturb expects LABEL.COEFFICIENT=VALUE, got '" + assignment + "'");
    Rational value;
    try {
        value = Rational::parse(assignment.substr(eq + 1));
    } catch (const std::exception& e) {
        throw UsageError("--perturb value: " + std::string(e.what()));
    }
    perturb_catalog(assignment.substr(0, dot), assignment.substr(dot + 1, eq - dot - 1), value);
}

int run_verify(const Options& o) {
    VerifyOptions vo;
    if (o.p) {
        require_prime(o.p);
        vo.p = o.p;
    }
    if (o.depth) {
        if (o.depth > 4) throw UsageError("--depth must be between 1 and 4");
        vo.depth = o.depth;
    }
    if (o.pmax < 5) throw UsageError("--pmax must be >= 5");
    if (o.pmax > kMaxTablePrime) throw UsageError("--pmax is capped at " + std::to_string(kMaxTablePrime));
    vo.pmax = o.pmax;
    auto fmt = o.effective_format();
    check_format(fmt, {"text", "json"});
    for (const auto& a : o.perturb) apply_perturbation(a);

    Session s(o, o.perturb.empty());
    auto results = run_suite(o.suite, vo, s.count());
    s.save();

    std::size_t failed = 0;
    json checks = json::array(), failures = json::array();
    for (const auto& r : results) {
        if (!r.passed) {
            ++failed;
            failures.push_back(r.suite + ": " + r.name);
        }
        checks.push_back({{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (fmt == "json") {
        std::cout << json{{"suite", o.suite}, {"passed", failed == 0}, {"checks", checks}, {"failures", failures}}.dump(2)
                  << "\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name << ": " << r.detail << "\n";
        std::cout << results.size() << " checks, " << failed << " failed\n";
        for (const auto& r : results)
            if (!r.passed) std::cout << "failed: " << r.suite << ": " << r.name << "\n";
    }
    return failed ? kExitVerifyFailed : kExitOk;
}

// ---- cache --------------------------------------------------------------------------

int run_cache(const Options& o) {
    std::string path = o.cache_path.empty() ? default_cache_path() : o.cache_path;
    if (o.cache_action == "path") {
        std::cout << path << "\n";
        return kExitOk;
    }
    if (o.cache_action == "clear") {
        std::error_code ec;
        bool removed = std::filesystem::remove(path, ec);
        if (ec) throw std::runtime_error("cannot remove " + path + ": " + ec.message());
        std::cout << (removed ? "removed " : "no cache at ") << path << "\n";
        return kExitOk;
    }
    auto cache = PointCache::load(path);
    if (o.cache_action == "check") {
        std::cout << "ok: " << cache.size() << " entries in " << path << "\n";
        return kExitOk;
    }
    if (o.effective_format() == "json") {
        std::cout << cache.dump();
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, e] : cache.entries())
        rows.push_back({e.count.curve, std::to_string(e.count.p), std::to_string(e.count.m), std::to_string(e.count.N)});
    std::cout << path << ": " << cache.size() << " entries\n";
    if (!rows.empty()) std::cout << render_text({"curve", "p", "m", "N"}, rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Point counts, L-polynomials and symbolic checks for the curve x^2+y^2+z^2+w^2 = x^3+y^3+z^3+w^3 = 0"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cache", o.cache_path, "Cache file (default: $QUARTICA_CACHE or the user cache directory)");
    app.add_option("--workers", o.workers, "Counting threads (default: hardware concurrency)")
        ->check(CLI::Range(1u, 256u));
    app.add_flag("--verbose,-v", o.verbose, "Log cache hits and count timings to stderr");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_flag("--json", o.json_flag, "Same as --format json");

    auto* count = app.add_subcommand("count", "Number of points of a catalog curve over F_{p^m}");
    count->add_option("--curve", o.curve, "Catalog label")->required();
    count->add_option("--p", o.p, "Prime >= 5")->required();
    count->add_option("--m", o.m, "Extension degree");

    auto* lpoly = app.add_subcommand("lpoly", "L-polynomial of a catalog curve over F_p");
    lpoly->add_option("--curve", o.curve, "Catalog label")->required();
    lpoly->add_option("--p", o.p, "Prime >= 5")->required();

    auto* tables = app.add_subcommand("tables", "Point-count or L-polynomial table for primes 5..pmax");
    tables->add_option("which,--which", o.which, "points or lpoly")->required();
    tables->add_option("pmax,--pmax", o.pmax, "Largest prime (5..200)");
    tables->add_option("format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    tables->add_option("--depth", o.depth, "Extension depth for the product check column (1..4, default 1)");

    auto* groebner = app.add_subcommand("groebner", "Reduced Groebner basis of polynomials over Q");
    groebner->add_option("polys", o.polys, "Polynomials, e.g. \"x^2+y^2-1\"")->required();
    groebner->add_option("--vars", o.vars, "Variables, highest priority first, e.g. x,y,z")->required();
    groebner->add_option("--order", o.order, "lex or grevlex");
    groebner->add_option("--eliminate", o.eliminate, "Variables to eliminate (comma separated)");

    auto* invariants = app.add_subcommand("invariants", "Fundamental invariants and Molien series of a group");
    invariants->add_option("--group", o.group, "Generators as cycles, e.g. \"(1,2,3)\", or S4")->required();
    invariants->add_option("--vars", o.vars, "Variables the group permutes (default x,y,z,w)");
    invariants->add_option("--degree", o.degree, "Molien expansion degree");

    auto* quotient = app.add_subcommand("quotient", "Quotient ideal of the curve by a permutation group");
    quotient->add_option("--group", o.group, "\"(1,2)\", \"(1,2,3)\" (chart w = 1) or a group on four points")
        ->required();
    quotient->add_flag("--fundamental", o.fundamental, "Use computed fundamental invariants");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember(suite_names()));
    verify->add_option("--p", o.p, "Restrict prime-dependent checks to one prime");
    verify->add_option("--depth", o.depth, "Depth of the product check (1..4)");
    verify->add_option("--pmax", o.pmax, "Largest prime for per-prime checks (default 103)");
    verify->add_option("--perturb", o.perturb, "Alter a catalog coefficient first, LABEL.COEF=VALUE (negative control)");

    auto* cache = app.add_subcommand("cache", "Inspect or clear the count cache");
    cache->add_option("action", o.cache_action, "show, path, check or clear")
        ->check(CLI::IsMember({"show", "path", "check", "clear"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (o.workers == 0) o.workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);

    try {
        if (*count) return run_count(o);
        if (*lpoly) return run_lpoly(o);
        if (*tables) return run_tables(o);
        if (*groebner) return run_groebner(o);
        if (*invariants) return run_invariants(o);
        if (*quotient) return run_quotient(o);
        if (*verify) return run_verify(o);
        if (*cache) return run_cache(o);
    } catch (const UsageError& e) {
        std::cerr << "quartica: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CacheError& e) {
        std::cerr << "quartica: cache: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "quartica: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "quartica: internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
