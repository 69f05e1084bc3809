#include "simcore/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "simcore/ansatz.hpp"
#include "simcore/cores.hpp"
#include "simcore/limitdist.hpp"
#include "simcore/moments.hpp"
#include "simcore/pathdp.hpp"
#include "simcore/serialize.hpp"

namespace simcore {
namespace {

enum class Format { Text, Json, Csv };

struct GlobalOpts {
    Format format = Format::Text;
    std::string cache;
    int jobs = 1;
    bool show_float = false;
};

std::string approx_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

/* Display-only decimal annotation, gated by --float. */
std::string maybe_float(const GlobalOpts& g, const Rational& v) {
    return g.show_float ? " (approx " + approx_text(v.to_double()) + ")" : "";
}
std::string maybe_float(const GlobalOpts& g, const Radical& v) {
    return g.show_float ? " (approx " + approx_text(v.to_double()) + ")" : "";
}

Json radical_to_json(const Radical& r) {
    return Json{{"coeff", rational_to_json(r.coeff())}, {"radicand", r.radicand().get_str()}};
}

void csv_header(std::ostream& out) { out << "s,t,r,value_num,value_den\n"; }
void csv_row(std::ostream& out, long long s, long long t, long long r, const Rational& v) {
    out << s << ',' << t << ',' << r << ',' << v.numerator().get_str() << ','
        << v.denominator().get_str() << "\n";
}

/* Runs fn(0..n-1), fanning out over min(jobs, n) threads; the first exception
 * wins and is rethrown after the pool drains. */
void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

QPolynomial generating_polynomial(const CorePair& c, const std::string& engine,
                                  const GlobalOpts& g) {
    if (engine == "brute") return oracle_generating_polynomial(c);
    if (!g.cache.empty()) {
        QPolynomial cached;
        if (read_cached_polynomial(g.cache, c.s, c.t, cached)) return cached;
        QPolynomial poly = size_generating_polynomial(c);
        write_cached_polynomial(g.cache, c.s, c.t, poly);
        return poly;
    }
    return size_generating_polynomial(c);
}

int cmd_enumerate(const GlobalOpts& g, const CorePair& c, std::ostream& out) {
    require_valid(c);
    std::vector<Partition> cores = enumerate_cores(c);
    if (g.format == Format::Json) {
        Json list = Json::array();
        for (const Partition& p : cores)
            list.push_back(Json{{"size", p.size()}, {"parts", partition_to_json(p)}});
        out << Json{{"s", c.s}, {"t", c.t},
                    {"count", static_cast<long long>(cores.size())},
                    {"cores", list}}.dump(2)
            << "\n";
    } else if (g.format == Format::Csv) {
        // Size histogram under the plotting schema: r = size, value = multiplicity.
        csv_header(out);
        for (const auto& [size, mult] : size_multiset(c))
            csv_row(out, c.s, c.t, size, Rational(mult));
    } else {
        for (const Partition& p : cores) out << p.size() << " " << p.to_compact_string() << "\n";
        out << "count " << cores.size() << "\n";
    }
    return 0;
}

int cmd_genpoly(const GlobalOpts& g, const CorePair& c, const std::string& engine,
                std::ostream& out) {
    require_valid(c);
    QPolynomial poly = generating_polynomial(c, engine, g);
    if (g.format == Format::Json) {
        out << Json{{"s", c.s}, {"t", c.t}, {"engine", engine},
                    {"polynomial", qpoly_to_json(poly)}}.dump(2)
            << "\n";
    } else if (g.format == Format::Csv) {
        csv_header(out);
        for (const auto& [e, coeff] : poly.terms()) csv_row(out, c.s, c.t, e, coeff);
    } else {
        out << poly.to_text() << "\n";
    }
    return 0;
}

int cmd_moments(const GlobalOpts& g, const CorePair& c, int max_order,
                const std::string& engine, std::ostream& out) {
    require_valid(c);
    if (max_order < 1) throw std::invalid_argument("--max must be at least 1");
    MomentSet m = engine == "brute"
                      ? moments_from_polynomial(oracle_generating_polynomial(c), max_order)
                      : core_moments(c, max_order, Engine::Jet);
    bool have_alpha = max_order >= 3 && m.variance() > Rational(0);
    if (g.format == Format::Json) {
        Json central = Json::object(), alpha = Json::object();
        for (int r = 2; r <= max_order; ++r)
            central[std::to_string(r)] = rational_to_json(m.central[r]);
        if (have_alpha)
            for (int r = 3; r <= max_order; ++r)
                alpha[std::to_string(r)] = radical_to_json(m.standardized(r));
        out << Json{{"s", c.s}, {"t", c.t}, {"count", m.count.get_str()},
                    {"mean", rational_to_json(m.mean())}, {"central", central},
                    {"standardized", alpha}}.dump(2)
            << "\n";
    } else if (g.format == Format::Csv) {
        csv_header(out);
        csv_row(out, c.s, c.t, 1, m.mean());
        for (int r = 2; r <= max_order; ++r) csv_row(out, c.s, c.t, r, m.central[r]);
    } else {
        out << "pair (" << c.s << "," << c.t << ")\n";
        out << "count " << m.count.get_str() << "\n";
        out << "mean " << m.mean().to_string() << maybe_float(g, m.mean()) << "\n";
        for (int r = 2; r <= max_order; ++r)
            out << "m_" << r << " " << m.central[r].to_string() << maybe_float(g, m.central[r])
                << "\n";
        if (have_alpha)
            for (int r = 3; r <= max_order; ++r) {
                Radical a = m.standardized(r);
                out << "alpha_" << r << " " << a.to_string() << maybe_float(g, a) << "\n";
            }
    }
    return 0;
}

std::vector<CorePair> read_pairs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pairs file " + path);
    std::vector<CorePair> pairs;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long s, t;
        if (ls >> s >> t) pairs.push_back({s, t});
    }
    if (pairs.empty()) throw std::invalid_argument("pairs file " + path + " has no pairs");
    return pairs;
}

std::vector<CorePair> range_pairs(int id, long long range_max) {
    std::vector<CorePair> pairs;
    if (id >= 7) {
        for (long long s = 2; s <= range_max; ++s) pairs.push_back({s, s + 1});
        if (pairs.empty()) throw std::invalid_argument("--range too small for this theorem");
        return pairs;
    }
    for (long long n = 3; n <= 2 * range_max - 1; ++n)
        for (long long s = 1; 2 * s < n; ++s) {
            long long t = n - s;
            if (t <= range_max && std::gcd(s, t) == 1) pairs.push_back({s, t});
        }
    if (pairs.empty()) throw std::invalid_argument("--range too small: no coprime pairs");
    return pairs;
}

int cmd_verify(const GlobalOpts& g, int id, std::vector<CorePair> pairs, std::ostream& out) {
    for (const CorePair& c : pairs) require_valid(c);
    // Deterministic report order regardless of worker scheduling.
    std::sort(pairs.begin(), pairs.end(), [](const CorePair& a, const CorePair& b) {
        return std::tuple(a.s + a.t, a.s, a.t) < std::tuple(b.s + b.t, b.s, b.t);
    });
    theorem_polynomial(id);  // build + self-check once, outside the pool
    std::vector<VerifyRow> rows(pairs.size());
    parallel_for(g.jobs, pairs.size(), [&](std::size_t i) {
        VerifyResult one = verify_theorem(id, {pairs[i]});
        rows[i] = one.rows.at(0);
    });
    bool all = true;
    for (const VerifyRow& r : rows) all = all && r.match;

    if (g.format == Format::Json) {
        Json jrows = Json::array();
        for (const VerifyRow& r : rows)
            jrows.push_back(Json{{"s", r.pair.s}, {"t", r.pair.t},
                                 {"expected", rational_to_json(r.expected)},
                                 {"actual", rational_to_json(r.actual)},
                                 {"match", r.match}});
        out << Json{{"theorem", id}, {"rows", jrows}, {"all_match", all}}.dump(2) << "\n";
    } else if (g.format == Format::Csv) {
        csv_header(out);
        for (const VerifyRow& r : rows) csv_row(out, r.pair.s, r.pair.t, id, r.actual);
    } else {
        for (const VerifyRow& r : rows)
            out << "(" << r.pair.s << "," << r.pair.t << ") expected "
                << r.expected.to_string() << " actual " << r.actual.to_string()
                << (r.match ? " MATCH" : " MISMATCH") << "\n";
        out << (all ? "all " + std::to_string(rows.size()) + " pairs match"
                    : "verification FAILED")
            << "\n";
    }
    return all ? 0 : 1;
}

/* Moment-data cache: JSON array of [s, t, r, num, den] entries. */
using MomentKey = std::tuple<long long, long long, int>;

std::map<MomentKey, Rational> load_moment_cache(const std::string& dir) {
    std::map<MomentKey, Rational> cache;
    std::ifstream in(std::filesystem::path(dir) / "moment_data.json");
    if (!in) return cache;
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw std::runtime_error(std::string("moment cache is not valid JSON: ") + e.what());
    }
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 5)
            throw std::runtime_error("moment cache entry must be [s, t, r, num, den]");
        cache[{e[0].get<long long>(), e[1].get<long long>(), e[2].get<int>()}] =
            Rational(Integer(e[3].get<std::string>()), Integer(e[4].get<std::string>()));
    }
    return cache;
}

void save_moment_cache(const std::string& dir, const std::map<MomentKey, Rational>& cache) {
    std::filesystem::create_directories(dir);
    Json j = Json::array();
    for (const auto& [key, v] : cache)
        j.push_back(Json::array({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                 v.numerator().get_str(), v.denominator().get_str()}));
    std::ofstream out(std::filesystem::path(dir) / "moment_data.json");
    if (!out) throw std::runtime_error("cannot write moment cache in " + dir);
    out << j.dump(2) << "\n";
}

int cmd_fit(const GlobalOpts& g, const FitSpec& spec, int reference, std::ostream& out) {
    const std::size_t required = fit_required_rows(spec);
    std::size_t rows = required;
    if (spec.max_pairs != 0) {
        if (spec.max_pairs < required)
            throw InsufficientDataError("insufficient data: degree " +
                                        std::to_string(spec.degree) + " needs " +
                                        std::to_string(required) + " pairs, only " +
                                        std::to_string(spec.max_pairs) + " available");
        rows = spec.max_pairs;
    }

    std::map<MomentKey, Rational> cache;
    if (!g.cache.empty()) cache = load_moment_cache(g.cache);
    std::vector<CorePair> pairs;
    std::vector<Rational> values;
    // Cache-aware, parallel data collection with the same rank-deficiency
    // auto-extension as fit_polynomial.
    auto collect = [&] {
        pairs = fit_pair_schedule(spec.mode, rows);
        std::size_t start = values.size();
        values.resize(pairs.size());
        std::vector<std::size_t> missing;
        for (std::size_t i = start; i < pairs.size(); ++i) {
            auto it = cache.find({pairs[i].s, pairs[i].t, spec.r});
            if (it != cache.end())
                values[i] = it->second;
            else
                missing.push_back(i);
        }
        parallel_for(g.jobs, missing.size(), [&](std::size_t k) {
            std::size_t i = missing[k];
            values[i] = moment_statistic(spec.r, pairs[i], spec.engine);
        });
        if (!g.cache.empty() && !missing.empty()) {
            for (std::size_t i : missing) cache[{pairs[i].s, pairs[i].t, spec.r}] = values[i];
            save_moment_cache(g.cache, cache);
        }
    };

    FitOutcome fit;
    for (int attempt = 0;; ++attempt) {
        collect();
        try {
            fit = fit_polynomial_with_data(spec, pairs, values);
            break;
        } catch (const InsufficientDataError&) {
            if (spec.max_pairs != 0 || attempt >= 8) throw;
            rows += std::max<std::size_t>(8, rows / 2);
        }
    }
    bool ref_match = true;
    if (reference != 0) ref_match = (fit.polynomial == theorem_polynomial(reference));
    Rational spot = fit.polynomial.evaluate(Rational(3), Rational(5));

    if (g.format == Format::Json) {
        Json j{{"moment", spec.r},
               {"mode", spec.mode == FitMode::Bivariate ? "biv" : "succ"},
               {"degree", spec.degree},
               {"rows", fit.rows},
               {"columns", fit.columns},
               {"residuals_zero", fit.residuals_zero},
               {"at_3_5", rational_to_json(spot)},
               {"polynomial", bipoly_to_json(fit.polynomial)}};
        if (reference != 0) j["reference"] = Json{{"id", reference}, {"match", ref_match}};
        out << j.dump(2) << "\n";
    } else if (g.format == Format::Csv) {
        // The data points behind the fit, in the plotting schema.
        csv_header(out);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            csv_row(out, pairs[i].s, pairs[i].t, spec.r, values[i]);
    } else {
        out << "fit " << fit.polynomial.to_text() << "\n";
        out << "rows " << fit.rows << " columns " << fit.columns << "\n";
        out << "residuals_zero " << (fit.residuals_zero ? "true" : "false") << "\n";
        out << "at(3,5) " << spot.to_string() << maybe_float(g, spot) << "\n";
        if (reference != 0)
            out << "reference " << reference << (ref_match ? " MATCH" : " MISMATCH") << "\n";
    }
    return ref_match ? 0 : 1;
}

int cmd_limit(const GlobalOpts& g, int max_order, std::ostream& out) {
    ZMoments zm = z_moments(max_order);
    if (g.format == Format::Json) {
        Json raw = Json::array(), central = Json::array(), alpha = Json::object();
        for (int k = 0; k <= max_order; ++k) raw.push_back(rational_to_json(zm.raw[k]));
        for (int k = 0; k <= max_order; ++k) central.push_back(rational_to_json(zm.central[k]));
        for (int k = 3; k <= max_order; ++k)
            alpha[std::to_string(k)] = radical_to_json(zm.standardized[k]);
        out << Json{{"max", max_order}, {"straight", raw}, {"central", central},
                    {"standardized", alpha}}.dump(2)
            << "\n";
    } else {
        for (int k = 1; k <= max_order; ++k)
            out << "straight_" << k << " " << zm.raw[k].to_string()
                << maybe_float(g, zm.raw[k]) << "\n";
        for (int k = 2; k <= max_order; ++k)
            out << "central_" << k << " " << zm.central[k].to_string()
                << maybe_float(g, zm.central[k]) << "\n";
        for (int k = 3; k <= max_order; ++k)
            out << "alpha_" << k << " " << zm.standardized[k].to_string()
                << maybe_float(g, zm.standardized[k]) << "\n";
    }
    return 0;
}

int cmd_compare(const GlobalOpts& g, int max_order, std::ostream& out) {
    LimitComparison cmp = compare_limits(max_order);
    if (g.format == Format::Json) {
        Json rows = Json::array();
        for (const LimitComparisonRow& r : cmp.rows)
            rows.push_back(Json{{"r", r.r},
                                {"combinatorial", radical_to_json(r.combinatorial)},
                                {"distributional", radical_to_json(r.distributional)},
                                {"match", r.match}});
        out << Json{{"max", max_order}, {"rows", rows}, {"all_match", cmp.all_match}}.dump(2)
            << "\n";
    } else {
        for (const LimitComparisonRow& r : cmp.rows)
            out << "r=" << r.r << " combinatorial " << r.combinatorial.to_string()
                << " distributional " << r.distributional.to_string()
                << (r.match ? " MATCH" : " MISMATCH") << "\n";
        out << (cmp.all_match ? "all match" : "comparison FAILED") << "\n";
    }
    return cmp.all_match ? 0 : 1;
}

int cmd_calibrate(const GlobalOpts& g, long long max_t, std::ostream& out) {
    CalibrationResult cal = calibrate_conventions(
        {OffsetExpr::Zero, OffsetExpr::One, OffsetExpr::S, OffsetExpr::T, OffsetExpr::SPlusT,
         OffsetExpr::SPlusTPlus1},
        max_t);
    Json pairs = Json::array();
    for (const CorePair& c : cal.pairs_checked) pairs.push_back(Json::array({c.s, c.t}));
    Json report{{"offset_b", offset_expr_name(cal.convention.offset)},
                {"orientation", orientation_name(cal.convention.orientation)},
                {"pairs_checked", pairs}};
    if (!g.cache.empty()) {
        std::filesystem::create_directories(g.cache);
        std::ofstream f(std::filesystem::path(g.cache) / "calibration.json");
        if (!f) throw std::runtime_error("cannot write calibration report in " + g.cache);
        f << report.dump(2) << "\n";
    }
    if (g.format == Format::Json) {
        out << report.dump(2) << "\n";
    } else {
        out << "offset_b " << offset_expr_name(cal.convention.offset) << "\n";
        out << "orientation " << orientation_name(cal.convention.orientation) << "\n";
        out << "pairs_checked " << cal.pairs_checked.size() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact size statistics of simultaneous (s,t)-core partitions"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::map<std::string, Format> format_names{
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", g.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    app.add_option("--cache", g.cache, "directory for persisted polynomials and moment data");
    app.add_option("--jobs", g.jobs, "worker threads for independent pairs")
        ->check(CLI::PositiveNumber);
    app.add_flag("--float", g.show_float, "annotate exact values with display-only decimals");

    long long s = 0, t = 0, range_max = 0, max_st = 0, max_t = 8;
    int max_order = 6, theorem_id = 1, fit_moment = 1, fit_degree = -1, reference = 0;
    std::string engine = "dp", pairs_file, fit_mode = "biv";
    bool symmetric = false;

    CLI::App* c_enum = app.add_subcommand("enumerate", "list all (s,t)-cores with sizes");
    c_enum->add_option("--s", s, "first core size")->required();
    c_enum->add_option("--t", t, "second core size")->required();

    CLI::App* c_gen = app.add_subcommand("genpoly", "size generating polynomial");
    c_gen->add_option("--s", s)->required();
    c_gen->add_option("--t", t)->required();
    c_gen->add_option("--engine", engine, "dp (lattice paths) or brute (enumeration)")
        ->check(CLI::IsMember({"dp", "brute"}));

    CLI::App* c_mom = app.add_subcommand("moments", "exact raw/central/standardized moments");
    c_mom->add_option("--s", s)->required();
    c_mom->add_option("--t", t)->required();
    c_mom->add_option("--max", max_order, "highest moment order")->required();
    c_mom->add_option("--engine", engine)->check(CLI::IsMember({"dp", "brute"}));
    c_mom->add_flag_callback("--csv", [&g] { g.format = Format::Csv; },
                             "shorthand for --format csv");

    CLI::App* c_ver = app.add_subcommand("verify", "closed form vs DP, exact");
    c_ver->add_option("--theorem", theorem_id, "closed form id, 1..9")
        ->required()
        ->check(CLI::Range(1, 9));
    auto* opt_pairs = c_ver->add_option("--pairs", pairs_file, "file of s t lines");
    auto* opt_range = c_ver->add_option(
        "--range", range_max, "all coprime s<t<=N (ids 1..6) or s=2..N with t=s+1 (ids 7..9)");
    c_ver->add_flag_callback("--csv", [&g] { g.format = Format::Csv; },
                             "shorthand for --format csv");

    CLI::App* c_fit = app.add_subcommand("fit", "rediscover a moment polynomial by interpolation");
    c_fit->add_option("--moment", fit_moment, "statistic: 1 mean, k central m_k")
        ->required()
        ->check(CLI::Range(1, 9));
    c_fit->add_option("--mode", fit_mode, "biv for (s,t), succ for t=s+1")
        ->check(CLI::IsMember({"biv", "succ"}));
    c_fit->add_option("--degree", fit_degree, "ansatz degree bound (default 3*moment)");
    c_fit->add_option("--max-st", max_st, "only use pairs with s+t <= N");
    c_fit->add_option("--reference", reference, "compare against closed form id")
        ->check(CLI::Range(1, 9));
    c_fit->add_flag("--symmetric", symmetric, "symmetric bivariate basis");

    CLI::App* c_lim = app.add_subcommand("limit", "moments of the limiting distribution");
    c_lim->add_option("--max", max_order, "highest moment order")->required();

    CLI::App* c_cmp = app.add_subcommand("compare", "combinatorial vs distributional limits");
    c_cmp->add_option("--max", max_order, "highest order, 3..9")->required();

    CLI::App* c_cal = app.add_subcommand("calibrate", "fix the path-model conventions");
    c_cal->add_option("--max-t", max_t, "check all coprime s<t<=N");

    // Let the global flags (--format, --cache, --jobs, --float) appear after
    // the subcommand as well.
    for (CLI::App* sc : {c_enum, c_gen, c_mom, c_ver, c_fit, c_lim, c_cmp, c_cal})
        sc->fallthrough();

    std::vector<const char*> argv;
    argv.push_back("simcore");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_enum->parsed()) return cmd_enumerate(g, {s, t}, out);
        if (c_gen->parsed()) return cmd_genpoly(g, {s, t}, engine, out);
        if (c_mom->parsed()) return cmd_moments(g, {s, t}, max_order, engine, out);
        if (c_ver->parsed()) {
            if ((opt_pairs->count() > 0) == (opt_range->count() > 0))
                throw std::invalid_argument("verify needs exactly one of --pairs or --range");
            std::vector<CorePair> pairs = opt_pairs->count() > 0
                                              ? read_pairs_file(pairs_file)
                                              : range_pairs(theorem_id, range_max);
            return cmd_verify(g, theorem_id, std::move(pairs), out);
        }
        if (c_fit->parsed()) {
            FitSpec spec;
            spec.r = fit_moment;
            spec.mode = fit_mode == "succ" ? FitMode::UnivariateTEqSPlus1 : FitMode::Bivariate;
            spec.degree = fit_degree >= 0 ? fit_degree : 3LL * fit_moment;
            spec.symmetric = symmetric;
            if (max_st > 0) {
                // Pairs with s+t <= max_st form a prefix of the canonical schedule.
                std::size_t avail = 0;
                if (spec.mode == FitMode::UnivariateTEqSPlus1) {
                    for (long long v = 1; 2 * v + 1 <= max_st; ++v) ++avail;
                } else {
                    for (long long n = 3; n <= max_st; ++n)
                        for (long long a = 1; 2 * a < n; ++a)
                            if (std::gcd(a, n - a) == 1) ++avail;
                }
                spec.max_pairs = avail;
            }
            return cmd_fit(g, spec, reference, out);
        }
        if (c_lim->parsed()) {
            if (g.format == Format::Csv)
                throw std::invalid_argument("csv output is not available for limit");
            return cmd_limit(g, max_order, out);
        }
        if (c_cmp->parsed()) {
            if (g.format == Format::Csv)
                throw std::invalid_argument("csv output is not available for compare");
            return cmd_compare(g, max_order, out);
        }
        if (c_cal->parsed()) {
            if (g.format == Format::Csv)
                throw std::invalid_argument("csv output is not available for calibrate");
            return cmd_calibrate(g, max_t, out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace simcore
