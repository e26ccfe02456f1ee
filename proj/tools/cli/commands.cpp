#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catmod2/catmod2.hpp"

namespace catmod2::cli {
namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kBareissGuard = 2048;
constexpr std::uint64_t kCofactorGuard = 32;
constexpr std::uint64_t kClosedGuard = 1'000'000'000;

std::string render(const LaurentPoly& p, RuleKind kind) { return p.str(SequenceRule::make(kind).naming()); }

RuleKind rule_from(const std::string& s) {
    auto k = parse_rule(s);
    if (!k) throw UsageError("unknown rule '" + s + "'");
    return *k;
}

// ---------------------------------------------------------------- table

struct Record {
    std::uint64_t n;
    std::uint64_t m;
    std::string rule;
    std::string method;
    std::string value;
};

const std::map<std::string, std::vector<std::string>>& seq_methods() {
    static const std::map<std::string, std::vector<std::string>> methods{
        {"d", {"closed", "recursive", "oracle"}},
        {"D", {"closed", "recursive", "product", "oracle"}},
        {"T", {"ratio", "recurrence", "structural", "nonsquash"}},
        {"t", {"ratio", "structural"}},
        {"s", {"closed"}},
        {"S", {"closed"}},
        {"r", {"closed"}},
        {"b", {"closed"}},
        {"delta", {"closed"}},
        {"lambda", {"closed"}},
        {"mu", {"closed"}},
    };
    return methods;
}

bool rule_dependent(const std::string& seq) { return seq == "d" || seq == "D" || seq == "T" || seq == "t"; }

LaurentPoly oracle_value(RuleKind kind, std::uint64_t m, std::uint64_t n) {
    const SequenceRule rule = SequenceRule::make(kind, static_cast<unsigned>(m));
    if (rule.integer_valued()) {
        if (n > kBareissGuard) throw UsageError("oracle: n exceeds the elimination guard 2048");
        return det_bareiss(build_matrix(rule, n));
    }
    if (n > kCofactorGuard) throw UsageError("oracle: n exceeds the symbolic guard 32");
    return det_cofactor(build_matrix(rule, n));
}

LaurentPoly det_value(RuleKind kind, std::uint64_t m, std::uint64_t n, const std::string& method) {
    if (method == "oracle") return oracle_value(kind, m, n);
    if (kind == RuleKind::grs && m == 0) throw UsageError("grs rule requires a shifted determinant (m >= 1)");
    if (method == "product") {
        if (kind != RuleKind::unit) throw UsageError("method 'product' needs --rule unit");
        return D_sign(n, DMethod::paperfolding_product).value();
    }
    const bool recursive = method == "recursive";
    if (recursive && m >= 2) throw UsageError("method 'recursive' applies to m = 0 or 1");
    if (kind == RuleKind::unit) {
        if (m == 0) return recursive ? specialize(kind, generic_d_recursive(n)) : LaurentPoly(d_sign(n).value());
        if (m == 1) return (recursive ? D_sign(n, DMethod::recurrence) : D_sign(n)).value();
        return d_shift_int(n, m);
    }
    LaurentPoly generic;
    if (m == 0) generic = recursive ? generic_d_recursive(n) : generic_d(n);
    else if (m == 1) generic = recursive ? generic_D_recursive(n) : generic_D(n);
    else generic = d_shift_generic(n, m);
    if (kind == RuleKind::generic) return generic;
    if (m <= 1 && !recursive) return specialized_closed_form(kind, m == 1, n);
    return specialize(kind, generic);
}

std::string table_value(const std::string& seq, RuleKind kind, std::uint64_t m, std::uint64_t n,
                        const std::string& method) {
    if (seq == "d") return render(det_value(kind, m, n, method), kind);
    if (seq == "D") return render(det_value(kind, 1, n, method), kind);
    if (seq == "T") {
        if (kind == RuleKind::unit) {
            TMethod tm = TMethod::ratio;
            if (method == "recurrence") tm = TMethod::recurrence;
            if (method == "structural") tm = TMethod::structural;
            if (method == "nonsquash") tm = TMethod::nonsquash;
            return std::to_string(T_int(n, tm).value());
        }
        if (method == "recurrence" || method == "nonsquash")
            throw UsageError("method '" + method + "' needs --rule unit");
        const LaurentPoly g = method == "structural" ? generic_T_structural(n) : generic_T(n);
        return render(kind == RuleKind::generic ? g : specialize(kind, g), kind);
    }
    if (seq == "t") {
        if (kind == RuleKind::grs) throw UsageError("grs rule leaves x0 undefined, t needs it");
        const LaurentPoly g = method == "structural" ? generic_t_structural(n) : generic_t(n);
        return render(kind == RuleKind::generic ? g : specialize(kind, g), kind);
    }
    if (seq == "s") return std::to_string(seq::sign_s(n).value());
    if (seq == "S") return std::to_string(seq::paperfolding_S(n).value());
    if (seq == "r") return std::to_string(seq::grs_r(n).value());
    if (seq == "b") {
        if (n < 2) throw UsageError("b(n) is defined for n >= 2");
        return seq::nonsquash_b(n).str();
    }
    if (seq == "delta") return std::to_string(seq::delta_pairs(n));
    if (seq == "lambda") return lambda_profile(n).monomial().str();
    if (seq == "mu") return mu_profile(n).monomial().str();
    throw UsageError("unknown sequence '" + seq + "'");
}

struct TableOptions {
    std::string seq;
    std::string rule = "unit";
    std::uint64_t m = 0;
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::string format = "csv";
    std::string method;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
    const RuleKind kind = rule_from(o.rule);
    if (o.from > o.to) throw UsageError("--from must not exceed --to");
    if (o.seq != "d" && o.m != 0) throw UsageError("--m applies to --seq d only");
    const auto& allowed = seq_methods().at(o.seq);
    const std::string method = o.method.empty() ? allowed.front() : o.method;
    if (std::find(allowed.begin(), allowed.end(), method) == allowed.end())
        throw UsageError("method '" + method + "' is not available for --seq " + o.seq);

    const std::string rule_col = rule_dependent(o.seq) ? o.rule : "-";
    const std::uint64_t m_col = o.seq == "D" ? 1 : o.m;
    std::vector<Record> records;
    for (std::uint64_t n = o.from;; ++n) {
        try {
            records.push_back({n, m_col, rule_col, method, table_value(o.seq, kind, o.m, n, method)});
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        if (n == o.to) break;
    }

    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : records)
            arr.push_back({{"n", r.n}, {"m", r.m}, {"rule", r.rule}, {"method", r.method}, {"value", r.value}});
        out << arr.dump(2) << '\n';
    } else {
        out << "n,m,rule,method,value\n";
        for (const auto& r : records)
            out << r.n << ',' << r.m << ',' << r.rule << ',' << r.method << ',' << r.value << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct Failure {
    std::uint64_t n;
    std::uint64_t m;
    std::string check;
    std::string expected;
    std::string got;

    bool operator<(const Failure& o) const { return std::tie(n, m, check) < std::tie(o.n, o.m, o.check); }
};

struct SuiteResult {
    std::size_t checks = 0;
    std::vector<Failure> failures;

    void expect(std::uint64_t n, std::uint64_t m, const std::string& check, const std::string& expected,
                const std::string& got) {
        ++checks;
        if (expected != got) failures.push_back({n, m, check, expected, got});
    }
    template <class A, class B>
    void expect_eq(std::uint64_t n, std::uint64_t m, const std::string& check, const A& expected, const B& got) {
        std::ostringstream e, g;
        e << expected;
        g << got;
        expect(n, m, check, e.str(), g.str());
    }
    void merge(SuiteResult&& o) {
        checks += o.checks;
        for (auto& f : o.failures) failures.push_back(std::move(f));
    }
};

/// Runs body(i, result) for i in [0, count) on all hardware threads; the
/// merged failures are sorted so the report does not depend on scheduling.
SuiteResult parallel_for(std::uint64_t count, const std::function<void(std::uint64_t, SuiteResult&)>& body) {
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 16));
    std::vector<SuiteResult> parts(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for (std::uint64_t i = w; i < count; i += workers) {
                try {
                    body(i, parts[w]);
                } catch (const std::exception& e) {
                    parts[w].checks++;
                    parts[w].failures.push_back({i, 0, "exception", "no exception", e.what()});
                }
            }
        });
    for (auto& t : threads) t.join();
    SuiteResult all;
    for (auto& p : parts) all.merge(std::move(p));
    std::sort(all.failures.begin(), all.failures.end());
    return all;
}

SuiteResult suite_oracle(std::uint64_t max_n, std::uint64_t max_m) {
    if (max_n > kBareissGuard) throw UsageError("oracle suite: --max-n must be <= 2048");
    // Work items: (m, n) with m in 0..max_m.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
    for (std::uint64_t m = 0; m <= std::max<std::uint64_t>(max_m, 1); ++m)
        for (std::uint64_t n = 0; n <= max_n; ++n) items.emplace_back(m, n);
    return parallel_for(items.size(), [&](std::uint64_t i, SuiteResult& r) {
        const auto [m, n] = items[i];
        const auto unit = det_bareiss(build_matrix(SequenceRule::make(RuleKind::unit, static_cast<unsigned>(m)), n));
        const int closed = m == 0 ? d_sign(n).value() : m == 1 ? D_sign(n).value() : d_shift_int(n, m);
        r.expect_eq(n, m, "unit elimination vs closed form", closed, unit);
        if (n <= kCofactorGuard) {
            const auto sym =
                det_cofactor(build_matrix(SequenceRule::make(RuleKind::generic, static_cast<unsigned>(m)), n));
            const LaurentPoly expect = m == 0 ? generic_d(n) : m == 1 ? generic_D(n) : d_shift_generic(n, m);
            r.expect(n, m, "symbolic expansion vs closed form", expect.str(), sym.str());
        }
    });
}

SuiteResult suite_methods(std::uint64_t max_n, std::uint64_t seed) {
    SuiteResult res = parallel_for(max_n + 1, [](std::uint64_t n, SuiteResult& r) {
        const Sign D = D_sign(n);
        r.expect_eq(n, 1, "D recurrence", D, D_sign(n, DMethod::recurrence));
        r.expect_eq(n, 1, "D paperfolding product", D, D_sign(n, DMethod::paperfolding_product));
        const Sign T = T_int(n);
        r.expect_eq(n, 0, "T recurrence", T, T_int(n, TMethod::recurrence));
        r.expect_eq(n, 0, "T structural", T, T_int(n, TMethod::structural));
        r.expect_eq(n, 0, "T nonsquash", T, T_int(n, TMethod::nonsquash));
        r.expect_eq(n, 0, "S = D(n)D(n+1)", seq::paperfolding_S(n), D * D_sign(n + 1));

        r.expect(n, 0, "d recursion", generic_d(n).str(), generic_d_recursive(n).str());
        r.expect(n, 1, "D recursion", generic_D(n).str(), generic_D_recursive(n).str());
        r.expect(n, 0, "symbolic T structural", generic_T(n).str(), generic_T_structural(n).str());
        r.expect(n, 0, "symbolic t structural", generic_t(n).str(), generic_t_structural(n).str());
        const LaurentPoly h = n % 2 == 0 ? LaurentPoly::var(0) : -LaurentPoly::var(0);
        r.expect(n, 0, "h ratio", h.str(), ratio_h(n).str());
        r.expect_eq(n, 0, "lambda sign", d_sign(n), lambda_profile(n).sign());
        r.expect_eq(n, 1, "mu sign", D, mu_profile(n).sign());

        const auto powers_T = specialize(RuleKind::powers, generic_T(n));
        const std::int64_t e = static_cast<std::int64_t>(seq::digit_sum(n + 2)) -
                               static_cast<std::int64_t>(seq::digit_sum(n));
        const LaurentPoly want_T = T.negative() ? -LaurentPoly::var(0, e) : LaurentPoly::var(0, e);
        r.expect(n, 0, "powers T exponent", want_T.str(), powers_T.str());
        const int grs_T = (seq::grs_r(n) * seq::grs_r(n + 2)).value();
        r.expect(n, 0, "grs T coupling", std::to_string(grs_T), specialize(RuleKind::grs, generic_T(n)).str());

        for (RuleKind k : {RuleKind::powers, RuleKind::doubling})
            for (bool shifted : {false, true})
                r.expect(n, shifted, std::string(rule_name(k)) + " specialization",
                         specialized_closed_form(k, shifted, n).str(), specialize_det(k, shifted, n).str());
        r.expect(n, 1, "grs specialization", specialized_closed_form(RuleKind::grs, true, n).str(),
                 specialize_det(RuleKind::grs, true, n).str());

        const Favard f = favard_st(n);
        r.expect_eq(n, 0, "favard t", -1, f.t);
        if (n >= 1) {
            const int s = seq::paperfolding_S(2 * n).value() *
                          (seq::paperfolding_S(2 * n - 1).value() + seq::paperfolding_S(2 * n + 1).value());
            r.expect_eq(n, 0, "favard s", s, f.s);
        }
    });
    // Randomized checks on indices far beyond any table.
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 64; ++i) {
        BigInt n = 0;
        for (int w = 0; w < 3; ++w) n = (n << 64) | BigInt(rng());
        const std::uint64_t tag = static_cast<std::uint64_t>(i);
        res.expect_eq(tag, 1, "random D recurrence", D_sign(n), D_sign(n, DMethod::recurrence));
        res.expect_eq(tag, 0, "random T structural", T_int(n), T_int(n, TMethod::structural));
        res.expect_eq(tag, 0, "random S = D(n)D(n+1)", seq::paperfolding_S(n), D_sign(n) * D_sign(BigInt(n + 1)));
    }
    return res;
}

SuiteResult suite_reflect(std::uint64_t max_n) {
    const unsigned K = bits::length(max_n);
    return parallel_for(K + 1, [](std::uint64_t k, SuiteResult& r) {
        const std::uint64_t p = std::uint64_t{1} << k;
        for (std::uint64_t n = 0; n < p; ++n) {
            const Sign mirrored = D_sign(p - 1 - n) * Sign::from_parity(n & 1u);
            r.expect_eq(p + n, 1, "D reflection", mirrored, D_sign(p + n));
            if (k == 0) continue;  // the period laws need k > 0
            r.expect_eq(2 * p + n, 1, "D period shift", -D_sign(n), D_sign(2 * p + n));
            r.expect_eq(3 * p + n, 1, "D period shift", D_sign(p + n), D_sign(3 * p + n));
        }
        for (std::uint64_t n = p; n + 3 <= 2 * p; ++n)
            r.expect_eq(n, 0, "T reflection", T_int(2 * p - 3 - n), T_int(n));
    });
}

SuiteResult suite_ldlt(std::uint64_t max_n) {
    return parallel_for(max_n, [](std::uint64_t i, SuiteResult& r) {
        const std::size_t n = i + 1;
        r.expect_eq(n, 0, "plain factorization", true, ldlt_verify_plain(n));
        r.expect_eq(n, 1, "shifted factorization", true, ldlt_verify_shifted(n));
    });
}

SuiteResult suite_cf(std::uint64_t max_n) {
    SuiteResult r;
    const std::size_t order = std::min<std::uint64_t>(max_n, kIdentityMaxOrder);
    for (CFIdentity id : {CFIdentity::sfraction_T, CFIdentity::jfraction_favard, CFIdentity::sfraction_grs})
        r.expect_eq(order, 0, std::string("identity ") + identity_name(id), true, verify_identity(id, order));
    // t_n from the Hankel determinants of the moments against the three-term coefficients.
    const std::uint64_t top = std::min<std::uint64_t>(max_n, 20);
    for (std::uint64_t n = 0; n <= top; ++n) {
        auto H = [](std::uint64_t k) {
            return det_bareiss(build_matrix(SequenceRule::make(RuleKind::unit), static_cast<std::size_t>(k)));
        };
        const Rational t = Rational(H(n) * H(n + 2)) / Rational(H(n + 1) * H(n + 1));
        r.expect_eq(n, 0, "hankel t_n", Rational(favard_st(n).t), t);
    }
    return r;
}

SuiteResult suite_orthogonality(std::uint64_t max_n) {
    const std::uint64_t top = std::min<std::uint64_t>(max_n, kOrthogonalityMaxIndex);
    SuiteResult r = parallel_for(top + 1, [top](std::uint64_t i, SuiteResult& res) {
        for (std::uint64_t j = i + 1; j <= top; ++j) res.expect_eq(i, j, "L(p_i p_j)", 0, moment_orthogonality(i, j));
        BigInt norm = 1;
        for (std::uint64_t k = 0; k < i; ++k) norm *= T_int(k).value();
        res.expect_eq(i, i, "L(p_n^2)", norm, moment_orthogonality(i, i));
    });
    return r;
}

SuiteResult suite_parity(std::uint64_t max_n, std::uint64_t max_m) {
    return parallel_for(std::max<std::uint64_t>(max_m, 1), [max_n](std::uint64_t i, SuiteResult& r) {
        const std::uint64_t m = i + 1;
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            const int parity = catalan_shift_parity(n, m);
            r.expect_eq(n, m, "residue rule", static_cast<int>(parity_residue_rule(n, m)), parity);
            r.expect_eq(n, m, "nonvanishing", static_cast<int>(d_shift_int(n, m) != 0), parity);
        }
    });
}

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t max_n = 32;
    std::uint64_t max_m = 8;
    std::optional<std::uint64_t> m;
    std::uint64_t seed = 1;
};

int report(const std::string& name, const SuiteResult& r, std::ostream& out) {
    out << "suite=" << name << " checks=" << r.checks << " failures=" << r.failures.size() << ' '
        << (r.failures.empty() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : r.failures)
        out << "  fail n=" << f.n << " m=" << f.m << " check=\"" << f.check << "\" expected=" << f.expected
            << " got=" << f.got << '\n';
    return r.failures.empty() ? kOk : kCheckFailed;
}

int cmd_conjecture(const VerifyOptions& o, std::ostream& out) {
    std::vector<std::uint64_t> ms;
    if (o.m) {
        if (*o.m < 2) throw UsageError("conjecture: --m must be >= 2");
        ms.push_back(*o.m);
    } else {
        for (std::uint64_t m = 3; m <= std::max<std::uint64_t>(o.max_m, 3); ++m) ms.push_back(m);
    }
    for (std::uint64_t m : ms) {
        const ConjectureReport rep = conjecture_scan(m, o.max_n);
        out << "conjecture-scan " << rep.summary() << '\n';
        for (const auto& v : rep.violations)
            out << "  observed n=" << v.n << " index=" << v.index << " expected=" << v.expected << " got=" << v.got
                << '\n';
    }
    return kOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    if (o.max_n == 0) throw UsageError("--max-n must be positive");
    if (o.suite == "conjecture") return cmd_conjecture(o, out);
    const std::vector<std::string> order{"oracle", "methods", "reflect", "ldlt", "cf", "orthogonality", "parity"};
    int code = kOk;
    for (const auto& name : order) {
        if (o.suite != "all" && o.suite != name) continue;
        SuiteResult r;
        if (name == "oracle") r = suite_oracle(o.max_n, o.max_m);
        if (name == "methods") r = suite_methods(o.max_n, o.seed);
        if (name == "reflect") r = suite_reflect(o.max_n);
        if (name == "ldlt") r = suite_ldlt(o.max_n);
        if (name == "cf") r = suite_cf(o.max_n);
        if (name == "orthogonality") r = suite_orthogonality(o.max_n);
        if (name == "parity") r = suite_parity(o.max_n, o.max_m);
        code = std::max(code, report(name, r, out));
    }
    return code;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
    std::uint64_t n = 0;
    std::string engine = "closed";
    std::string rule = "unit";
    std::uint64_t m = 0;
    bool compare = false;
};

struct Timing {
    std::string value;
    double ns_per_call = 0;
    std::uint64_t reps = 0;
};

/// Repeats f until at least 20 ms have passed (or once for slow calls).
Timing time_it(const std::function<std::string()>& f) {
    using clock = std::chrono::steady_clock;
    Timing t;
    const auto start = clock::now();
    auto elapsed = clock::duration::zero();
    do {
        t.value = f();
        ++t.reps;
        elapsed = clock::now() - start;
    } while (elapsed < std::chrono::milliseconds(20));
    t.ns_per_call = std::chrono::duration<double, std::nano>(elapsed).count() / static_cast<double>(t.reps);
    return t;
}

std::function<std::string()> bench_engine(const std::string& engine, RuleKind kind, std::uint64_t m, std::uint64_t n) {
    const SequenceRule rule = SequenceRule::make(kind, static_cast<unsigned>(m));
    if (engine == "closed") {
        if (n > kClosedGuard) throw UsageError("closed engine: n must be <= 1000000000");
        if (kind != RuleKind::unit && m >= 2 && n > 4096) throw UsageError("closed engine: symbolic shifted n must be <= 4096");
        return [=] { return render(det_value(kind, m, n, "closed"), kind); };
    }
    if (engine == "bareiss") {
        if (!rule.integer_valued()) throw UsageError("bareiss engine needs an integer rule (unit or grs)");
        if (n > kBareissGuard) throw UsageError("bareiss engine: n must be <= 2048");
        if (kind == RuleKind::grs && m == 0) throw UsageError("grs rule requires m >= 1");
        return [=] { return det_bareiss(build_matrix(rule, n)).str(); };
    }
    if (engine == "cofactor") {
        if (n > kCofactorGuard) throw UsageError("cofactor engine: n must be <= 32");
        if (kind == RuleKind::grs && m == 0) throw UsageError("grs rule requires m >= 1");
        return [=] { return render(det_cofactor(build_matrix(rule, n)), kind); };
    }
    throw UsageError("unknown engine '" + engine + "'");
}

void print_timing(std::ostream& out, const std::string& engine, const BenchOptions& o, const Timing& t) {
    out << "engine=" << engine << " rule=" << o.rule << " m=" << o.m << " n=" << o.n << " value=" << t.value
        << " reps=" << t.reps << std::fixed << std::setprecision(1) << " ns_per_call=" << t.ns_per_call << '\n';
    out.unsetf(std::ios::fixed);
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
    const RuleKind kind = rule_from(o.rule);
    if (o.compare) {
        auto closed = bench_engine("closed", kind, o.m, o.n);
        auto oracle = bench_engine(o.engine == "closed" ? "bareiss" : o.engine, kind, o.m, o.n);
        const Timing a = time_it(closed);
        const Timing b = time_it(oracle);
        print_timing(out, "closed", o, a);
        print_timing(out, o.engine == "closed" ? "bareiss" : o.engine, o, b);
        out << "speedup=" << std::fixed << std::setprecision(1) << b.ns_per_call / a.ns_per_call
            << " agree=" << (a.value == b.value ? "yes" : "no") << '\n';
        out.unsetf(std::ios::fixed);
        return a.value == b.value ? kOk : kCheckFailed;
    }
    print_timing(out, o.engine, o, time_it(bench_engine(o.engine, kind, o.m, o.n)));
    return kOk;
}

// ---------------------------------------------------------------- det

struct DetOptions {
    std::string rule = "unit";
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    bool show = false;
};

int cmd_det(const DetOptions& o, std::ostream& out) {
    const RuleKind kind = rule_from(o.rule);
    const HankelMatrix h = build_matrix(SequenceRule::make(kind, static_cast<unsigned>(o.m)), o.n);
    if (o.show) out << h.render();
    out << render(oracle_value(kind, o.m, o.n), kind) << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hankel determinants of the sequence supported on n = 2^k - 1"};
    app.require_subcommand(1);

    TableOptions table;
    auto* t = app.add_subcommand("table", "emit one record per index");
    std::vector<std::string> seqs;
    for (const auto& [k, v] : seq_methods()) seqs.push_back(k);
    t->add_option("--seq", table.seq, "sequence")->required()->check(CLI::IsMember(seqs));
    t->add_option("--rule", table.rule, "unit, generic, powers, doubling or grs");
    t->add_option("--m", table.m, "shift");
    t->add_option("--from", table.from, "first index");
    t->add_option("--to", table.to, "last index");
    t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
    t->add_option("--method", table.method, "evaluation method");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "run a verification suite");
    v->add_option("--suite", verify.suite)
        ->check(CLI::IsMember(
            {"oracle", "methods", "reflect", "ldlt", "cf", "orthogonality", "parity", "conjecture", "all"}));
    v->add_option("--max-n", verify.max_n);
    v->add_option("--max-m", verify.max_m);
    v->add_option("--m", verify.m, "shift for the conjecture scan");
    v->add_option("--prop-seed", verify.seed, "seed for randomized checks");

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "time one evaluation engine");
    b->add_option("--n", bench.n)->required();
    b->add_option("--engine", bench.engine)->check(CLI::IsMember({"closed", "bareiss", "cofactor"}));
    b->add_option("--rule", bench.rule);
    b->add_option("--m", bench.m);
    b->add_flag("--compare", bench.compare, "also time an oracle engine and print the speedup");

    DetOptions det;
    auto* d = app.add_subcommand("det", "evaluate one determinant by the exact oracle");
    d->add_option("--n", det.n)->required();
    d->add_option("--rule", det.rule);
    d->add_option("--m", det.m);
    d->add_flag("--show", det.show, "print the matrix");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (t->parsed()) return cmd_table(table, out);
        if (v->parsed()) return cmd_verify(verify, out);
        if (b->parsed()) return cmd_bench(bench, out);
        if (d->parsed()) return cmd_det(det, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace catmod2::cli
