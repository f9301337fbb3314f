/*
 * buchiff command-line interface: one subcommand per library entry point,
 * JSON report on standard output, diagnostics on standard error.
 *
 * Exit codes: 0 success, 1 usage or input error, 2 mathematical
 * verification failure (with the witness serialized).
 */
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "buchiff/bounds.hpp"
#include "buchiff/buchi.hpp"
#include "buchiff/charp.hpp"
#include "buchiff/geometry.hpp"
#include "buchiff/parser.hpp"
#include "buchiff/roots.hpp"

using nlohmann::ordered_json;
using namespace buchiff;

namespace {

ordered_json json_int(const Int& v) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

const char* kind_str(FormClass k) {
    switch (k) {
    case FormClass::ConstantCoefficients: return "constant-coefficients";
    case FormClass::PowerOfLinear: return "power-of-linear";
    default: return "other";
    }
}

std::pair<long long, long long> parse_range(const std::string& s, const std::string& flag) {
    auto pos = s.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError(flag, "expected A..B");
    try {
        long long a = std::stoll(s.substr(0, pos));
        long long b = std::stoll(s.substr(pos + 2));
        if (a > b) throw CLI::ValidationError(flag, "range is empty");
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(flag, "expected integer endpoints");
    } catch (const std::out_of_range&) {
        throw CLI::ValidationError(flag, "endpoint out of range");
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fq_poly_str(const FqPoly& f) { return poly_str(f, "x"); }

std::string fq_form_str(const FqForm& F) {
    std::string out;
    for (long i = F.deg_i(); i >= 0; --i) {
        FqPoly c = F.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = fq_poly_str(c);
        bool unit = c.deg_i() == 0 && c.coeff(0).is_one();
        if (i == 0) {
            out += cs;
        } else {
            if (!unit) out += "(" + cs + ")*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

QForm load_form(const std::string& path) { return parse_form(slurp(path)); }

ordered_json form_json(const QForm& F) {
    ordered_json coeffs = ordered_json::array();
    for (long i = 0; i < F.n(); ++i) coeffs.push_back(F.coeff(i).str());
    return ordered_json{{"n", F.n()}, {"str", F.str()}, {"coeffs", coeffs}};
}

ordered_json census_json(const CensusReport& r, const QForm& F) {
    ordered_json powerful = ordered_json::array();
    for (const auto& e : r.powerful) {
        ordered_json row{{"point", e.point.str()}};
        row["max_k"] = e.max_k ? ordered_json(*e.max_k) : ordered_json(nullptr);
        powerful.push_back(row);
    }
    ordered_json degenerate = ordered_json::array();
    for (const auto& b : r.degenerate) degenerate.push_back(b.str());
    return ordered_json{{"form", F.str()},
                        {"kind", kind_str(r.kind)},
                        {"mu", r.mu},
                        {"tested_count", r.tested.size()},
                        {"powerful", powerful},
                        {"degenerate", degenerate},
                        {"bound_M", json_int(r.bound_m)},
                        {"verdict", r.consistent ? "CONSISTENT" : "INCONSISTENT"}};
}

ordered_json locus_json(const LocusResult& r, const QForm& F, long n) {
    ordered_json rational = ordered_json::array();
    for (const auto& l : r.rational_points) rational.push_back(l.str());
    ordered_json degenerate = ordered_json::array();
    for (const auto& l : r.degenerate_points) degenerate.push_back(l.str());
    return ordered_json{{"form", F.str()},
                        {"n", n},
                        {"kind", kind_str(r.kind)},
                        {"rational_points", rational},
                        {"degenerate_points", degenerate},
                        {"residual_degrees", r.residual_degrees},
                        {"residual_bound", json_int(r.residual_bound())},
                        {"total_bound", json_int(r.total_bound())}};
}

ordered_json harness_json(const HarnessReport& r) {
    ordered_json worst = ordered_json::array();
    for (const auto& c : r.worst)
        worst.push_back(ordered_json{{"form", c.form},
                                     {"kind", kind_str(c.kind)},
                                     {"locus_bound", json_int(c.locus_bound)},
                                     {"ok", c.ok}});
    return ordered_json{{"n", r.n},
                        {"trials_other", r.trials_other},
                        {"trials_power", r.trials_power},
                        {"trials_constant", r.trials_constant},
                        {"failures", r.failures},
                        {"bound_M", json_int(r.bound_m)},
                        {"max_locus_bound", json_int(r.max_locus_bound)},
                        {"worst", worst}};
}

struct SequenceFile {
    std::vector<QX> terms;
    bool all_rational = true;
};

SequenceFile load_sequence(const std::string& path) {
    ordered_json j = ordered_json::parse(slurp(path));
    if (!j.is_array() || j.empty())
        throw Error("sequence file must be a nonempty JSON array of strings");
    SequenceFile out;
    for (const auto& item : j) {
        if (!item.is_string())
            throw Error("sequence file must contain strings only");
        QX v = parse_ratfunc_q(item.get<std::string>());
        if (!(v.is_polynomial() && v.num().deg_i() <= 0)) out.all_rational = false;
        out.terms.push_back(v);
    }
    return out;
}

Rational as_rational(const QX& v) { return v.num().coeff(0) / v.den().coeff(0); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for powerful rational functions and their forms"};
    app.require_subcommand(1);

    std::string expr, form_path, seq_path, range_s, x1_s, x2_s, u_s, v_s, c_s;
    long k = 2, mu = 1, n = 2, g = 0, d = 1, e = 1, p = 3, min_len = 4, trials = 10;
    long long max_len = 100;
    std::uint64_t seed = 0;
    bool include_infinity = false;

    auto* c_pow = app.add_subcommand("powerful", "k-powerfulness of a rational function");
    c_pow->add_option("f", expr, "rational function in x")->required();
    c_pow->add_option("--k", k, "multiplicity threshold")->required();

    auto* c_cls = app.add_subcommand("classify", "conclusion branch of a form");
    c_cls->add_option("form", form_path, "form JSON file")->required();

    auto* c_cen = app.add_subcommand("census", "powerful count over sample points");
    c_cen->add_option("form", form_path, "form JSON file")->required();
    c_cen->add_option("--lambda-range", range_s, "A..B inclusive")->required();
    c_cen->add_option("--mu", mu, "powerfulness threshold")->required();
    c_cen->add_flag("--include-infinity", include_infinity, "also test [1:0]");

    auto* c_loc = app.add_subcommand("locus", "exact powerful locus");
    c_loc->add_option("form", form_path, "form JSON file")->required();
    c_loc->add_option("--n", n, "powerfulness threshold")->required();

    auto* c_seq = app.add_subcommand("sequence", "difference checks and form recovery");
    c_seq->require_subcommand(1);
    auto* c_seq_v = c_seq->add_subcommand("verify", "n-th differences constantly n!");
    c_seq_v->add_option("file", seq_path, "JSON array of terms")->required();
    c_seq_v->add_option("--n", n, "difference order")->required();
    auto* c_seq_f = c_seq->add_subcommand("to-form", "recover monic interpolation coefficients");
    c_seq_f->add_option("file", seq_path, "JSON array of terms")->required();
    c_seq_f->add_option("--n", n, "form degree")->required();

    auto* c_int = app.add_subcommand("search-int", "integer square sequences by forced recurrence");
    c_int->add_option("--x1", x1_s, "A..B")->required();
    c_int->add_option("--x2", x2_s, "A..B")->required();
    c_int->add_option("--min-len", min_len, "minimum reported length")->required();
    c_int->add_option("--max-len", max_len, "extension cap");

    auto* c_bnd = app.add_subcommand("bound", "closed-form bounds");
    c_bnd->add_option("--n", n, "form degree")->required();
    c_bnd->add_option("--g", g, "genus")->required();
    c_bnd->add_option("--d", d, "map degree for the branch-value bounds");

    auto* c_chp = app.add_subcommand("charp-example", "odd-characteristic squares family");
    c_chp->add_option("--p", p, "odd prime")->required();
    c_chp->add_option("--e", e, "extension degree")->required();

    auto* c_lem = app.add_subcommand("lemma-linear", "totally multiple fibers of a pencil");
    c_lem->add_option("--c", c_s, "nonconstant rational function")->required();

    auto* c_zeu = app.add_subcommand("zeuthen", "degree bookkeeping for a pair of maps");
    c_zeu->add_option("--u", u_s, "rational function")->required();
    c_zeu->add_option("--v", v_s, "rational function")->required();

    auto* c_har = app.add_subcommand("harness", "randomized theorem consistency run");
    c_har->add_option("--n", n, "form degree")->required();
    c_har->add_option("--trials", trials, "trials per family")->required();
    c_har->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) return app.exit(ex); // --help
        app.exit(ex);
        return 1;
    }

    ordered_json report;
    report["schema"] = "buchiff-report/1";
    auto t0 = std::chrono::steady_clock::now();
    int code = 0;

    try {
        if (c_pow->parsed()) {
            QX f = parse_ratfunc_q(expr);
            report["subcommand"] = "powerful";
            report["inputs"] = {{"f", f.str()}, {"k", k}};
            Powerful verdict = is_k_powerful(f, k);
            ordered_json result;
            if (verdict == Powerful::Degenerate) {
                result["powerful"] = nullptr;
                result["degenerate"] = true;
            } else {
                result["powerful"] = verdict == Powerful::Yes;
                result["degenerate"] = false;
                ZeroProfile<Rational> zp = zero_profile(f);
                ordered_json profile = ordered_json::array();
                for (const auto& part : zp.finite_part.parts)
                    profile.push_back(ordered_json::array(
                        {poly_str(part.factor, "x"), part.multiplicity}));
                result["profile"] = profile;
                result["order_at_infinity"] = zp.order_at_infinity;
                auto mk = max_powerful(f);
                result["max_k"] = mk ? ordered_json(*mk) : ordered_json(nullptr);
            }
            report["result"] = result;
        } else if (c_cls->parsed()) {
            QForm F = load_form(form_path);
            report["subcommand"] = "classify";
            report["inputs"] = {{"form", form_json(F)}};
            Classification<Rational> cls = classify(F);
            ordered_json result{{"kind", kind_str(cls.kind)}};
            result["nu"] = cls.nu ? ordered_json(cls.nu->str()) : ordered_json(nullptr);
            report["result"] = result;
        } else if (c_cen->parsed()) {
            QForm F = load_form(form_path);
            auto [lo, hi] = parse_range(range_s, "--lambda-range");
            report["subcommand"] = "census";
            report["inputs"] = {{"form", form_json(F)},
                                {"lambda_range", range_s},
                                {"mu", mu},
                                {"include_infinity", include_infinity}};
            std::vector<QPoint> pts;
            for (long long l = lo; l <= hi; ++l)
                pts.push_back(QPoint::finite(Rational(Int(l))));
            if (include_infinity) pts.push_back(QPoint::infinity());
            report["result"] = census_json(census(F, pts, mu), F);
        } else if (c_loc->parsed()) {
            QForm F = load_form(form_path);
            report["subcommand"] = "locus";
            report["inputs"] = {{"form", form_json(F)}, {"n", n}};
            report["result"] = locus_json(exact_powerful_locus(F, n), F, n);
        } else if (c_seq_v->parsed() || c_seq_f->parsed()) {
            SequenceFile sf = load_sequence(seq_path);
            bool to_form = c_seq_f->parsed();
            report["subcommand"] = to_form ? "sequence to-form" : "sequence verify";
            ordered_json terms = ordered_json::array();
            for (const auto& t : sf.terms) terms.push_back(t.str());
            report["inputs"] = {{"terms", terms}, {"n", n}};
            if (to_form) {
                if (!sf.all_rational)
                    throw Error("form recovery needs rational terms");
                std::vector<Rational> u;
                for (const auto& t : sf.terms) u.push_back(as_rational(t));
                SequenceForm<Rational> f = sequence_to_form(u, n);
                ordered_json result{{"buchi", f.buchi}};
                ordered_json coeffs = ordered_json::array();
                for (const auto& c : f.coeffs) coeffs.push_back(c.str());
                result["coeffs"] = coeffs;
                report["result"] = result;
            } else {
                std::vector<QX> diffs = nth_differences(sf.terms, n);
                QX target(Rational(factorial(n)));
                bool buchi = true;
                ordered_json ds = ordered_json::array();
                for (const auto& v : diffs) {
                    ds.push_back(v.str());
                    if (!(v == target)) buchi = false;
                }
                report["result"] = {{"buchi", buchi},
                                    {"expected", target.str()},
                                    {"differences", ds}};
            }
        } else if (c_int->parsed()) {
            auto [a1, b1] = parse_range(x1_s, "--x1");
            auto [a2, b2] = parse_range(x2_s, "--x2");
            report["subcommand"] = "search-int";
            report["inputs"] = {{"x1", x1_s}, {"x2", x2_s},
                                {"min_len", min_len}, {"max_len", max_len}};
            auto hits = search_integer_buchi(a1, b1, a2, b2, min_len, max_len);
            ordered_json rows = ordered_json::array();
            for (const auto& h : hits) {
                ordered_json squares = ordered_json::array();
                for (const auto& s : h.squares) squares.push_back(json_int(s));
                rows.push_back(ordered_json{{"x1", h.x1},
                                            {"x2", h.x2},
                                            {"length", h.squares.size()},
                                            {"squares", squares},
                                            {"trivial", h.trivial}});
            }
            report["result"] = {{"count", rows.size()}, {"hits", rows}};
        } else if (c_bnd->parsed()) {
            report["subcommand"] = "bound";
            report["inputs"] = {{"n", n}, {"g", g}, {"d", d}};
            report["result"] = {{"M", json_int(bound_M(n, g))},
                                {"lemma_linear", json_int(bound_lemma_linear(g))},
                                {"disc_zeros", json_int(bound_disc_zeros(n, d))},
                                {"E", json_int(bound_E(n, d))}};
        } else if (c_chp->parsed()) {
            report["subcommand"] = "charp-example";
            report["inputs"] = {{"p", p}, {"e", e}};
            CharPWitness w = build_witness(p, e);
            CharPReport cr = verify_all_squares(w);
            bool nondeg = verify_nondegenerate(w);
            auto probes = probe_outside(w);
            ordered_json squares = ordered_json::array();
            for (const auto& s : cr.witnesses)
                squares.push_back(ordered_json{{"lambda", s.lambda.str()},
                                               {"value", fq_poly_str(s.value)},
                                               {"root", fq_poly_str(s.root)}});
            ordered_json outside = ordered_json::array();
            for (const auto& pr : probes)
                outside.push_back(ordered_json{{"lambda", pr.lambda.str()},
                                               {"two_powerful", pr.two_powerful},
                                               {"min_multiplicity", pr.min_multiplicity}});
            report["result"] = {{"p", w.p},
                                {"e", w.e},
                                {"q", w.q},
                                {"form", fq_form_str(w.form)},
                                {"factorization", "(" + fq_form_str(w.factor_left) + ")*(" +
                                                      fq_form_str(w.factor_right) + ")"},
                                {"all_squares", cr.all_squares},
                                {"square_count", cr.witnesses.size()},
                                {"nondegenerate", nondeg},
                                {"squares", squares},
                                {"outside_probes", outside}};
        } else if (c_lem->parsed()) {
            QX c = parse_ratfunc_q(c_s);
            report["subcommand"] = "lemma-linear";
            report["inputs"] = {{"c", c.str()}};
            LemmaCensusResult r = lemma_linear_census(c);
            ordered_json pts = ordered_json::array();
            for (const auto& b : r.points) pts.push_back(b.str());
            report["result"] = {{"points", pts},
                                {"residual_degrees", r.residual_degrees},
                                {"residual_bound", json_int(r.residual_bound())},
                                {"total_bound", json_int(r.total_bound())},
                                {"bound", json_int(bound_lemma_linear(0))}};
        } else if (c_zeu->parsed()) {
            QX u = parse_ratfunc_q(u_s);
            QX v = parse_ratfunc_q(v_s);
            report["subcommand"] = "zeuthen";
            report["inputs"] = {{"u", u.str()}, {"v", v.str()}};
            ZeuthenResult r = zeuthen_check(u, v);
            report["result"] = {{"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}};
        } else if (c_har->parsed()) {
            report["subcommand"] = "harness";
            report["inputs"] = {{"n", n}, {"trials", trials}};
            report["seed"] = seed;
            report["result"] = harness_json(theorem_harness(n, trials, seed));
        }
    } catch (const TheoremViolation& ex) {
        report["verification_failure"] = ex.what();
        report["witness"] = ex.witness;
        code = 2;
        std::cerr << "verification failure: " << ex.what() << "\n";
    } catch (const VerificationFailed& ex) {
        report["verification_failure"] = ex.what();
        report["witness"] = nullptr;
        code = 2;
        std::cerr << "verification failure: " << ex.what() << "\n";
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report["timing_ms"] = ms;
    std::cout << report.dump(2) << "\n";
    return code;
}
