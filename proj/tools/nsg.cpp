#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nsg/analysis.hpp"
#include "nsg/progressions.hpp"
#include "nsg/quotient.hpp"
#include "nsg/roots.hpp"
#include "nsg/verify.hpp"

namespace {

using nsg::i64;
using nsg::json;

struct Globals {
    std::string format = "table";
    std::uint64_t seed = nsg::SweepConfig{}.seed;
    double tolerance = nsg::default_rounding_tolerance;
    int parallel = 1;
    std::string out;
};

std::string join(const std::vector<i64>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

std::string angle(const std::vector<i64>& gens) { return "<" + join(gens) + ">"; }

class Output {
public:
    explicit Output(const Globals& g) : format_(g.format) {
        if (!g.out.empty()) {
            file_.open(g.out);
            if (!file_)
                throw nsg::precondition_error("cannot open output file '" + g.out + "'");
        }
    }

    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
    const std::string& format() const { return format_; }
    bool table() const { return format_ == "table"; }

    // Header lines go to stdout for tables and to stderr otherwise, so that
    // json and csv streams stay machine-parseable.
    std::ostream& header() { return table() ? os() : std::cerr; }

private:
    std::string format_;
    std::ofstream file_;
};

json semigroup_json(const nsg::NumericalSemigroup& s) {
    return json{{"generators", s.minimal_generators()}, {"frobenius", s.frobenius()}, {"genus", s.genus()}};
}

int cmd_invariants(const Globals& g, const std::vector<i64>& gens) {
    const auto s = nsg::from_generators(gens);
    json flags = json::object();
    for (i64 d = 1; d <= 10; ++d)
        flags[std::to_string(d)] = nsg::is_d_symmetric(s, d);

    Output out(g);
    if (out.format() == "json") {
        json j{{"generators", s.minimal_generators()},
               {"multiplicity", s.multiplicity()},
               {"embedding_dimension", s.embedding_dimension()},
               {"frobenius", s.frobenius()},
               {"genus", s.genus()},
               {"gaps", s.gaps()},
               {"apery", s.apery().elements},
               {"symmetric", nsg::is_symmetric(s)},
               {"d_symmetric", flags}};
        out.os() << j.dump() << '\n';
    } else if (out.format() == "csv") {
        out.os() << "generators,multiplicity,embedding_dimension,frobenius,genus,gaps,apery,symmetric\n";
        out.os() << '"' << join(s.minimal_generators()) << "\"," << s.multiplicity() << ',' << s.embedding_dimension()
                 << ',' << s.frobenius() << ',' << s.genus() << ",\"" << join(s.gaps()) << "\",\""
                 << join(s.apery().elements) << "\"," << (nsg::is_symmetric(s) ? "true" : "false") << '\n';
    } else {
        auto& os = out.os();
        os << "minimal generators:  " << angle(s.minimal_generators()) << '\n'
           << "multiplicity:        " << s.multiplicity() << '\n'
           << "embedding dimension: " << s.embedding_dimension() << '\n'
           << "F:                   " << s.frobenius() << '\n'
           << "g:                   " << s.genus() << '\n'
           << "gaps:                " << join(s.gaps(), " ") << '\n'
           << "Apery set (mod " << s.apery().modulus << "): " << join(s.apery().elements, " ") << '\n'
           << "symmetric:           " << (nsg::is_symmetric(s) ? "yes" : "no") << '\n'
           << "d-symmetric for d:  ";
        for (i64 d = 1; d <= 10; ++d)
            if (flags[std::to_string(d)].get<bool>())
                os << ' ' << d;
        os << '\n';
    }
    return 0;
}

int cmd_quotient(const Globals& g, const std::vector<i64>& gens, i64 d) {
    const auto report = nsg::analyze_quotient(nsg::from_generators(gens), d);
    Output out(g);
    if (out.format() == "json") {
        json formulas = json::object();
        for (const auto& [id, r] : report.formula_results) {
            json f{{"quantity", r.quantity}, {"predicted", r.predicted}, {"oracle", r.oracle},
                   {"status", r.matches() ? "match" : "mismatch"}};
            if (!r.note.empty())
                f["note"] = r.note;
            formulas[id] = f;
        }
        json j{{"base", report.base.minimal_generators()}, {"d", d}, {"quotient", semigroup_json(report.quotient)},
               {"formulas", formulas}};
        out.os() << j.dump() << '\n';
    } else if (out.format() == "csv") {
        out.os() << "formula,quantity,predicted,oracle,status,note\n";
        for (const auto& [id, r] : report.formula_results)
            out.os() << id << ',' << r.quantity << ",\"" << join(r.predicted) << "\",\"" << join(r.oracle) << "\","
                     << (r.matches() ? "match" : "mismatch") << ",\"" << r.note << "\"\n";
    } else {
        auto& os = out.os();
        os << angle(report.base.minimal_generators()) << " / " << d << " = "
           << angle(report.quotient.minimal_generators()) << '\n'
           << "F = " << report.frobenius_bruteforce << ", g = " << report.genus_bruteforce << '\n';
        for (const auto& [id, r] : report.formula_results) {
            os << "  " << id << " (" << r.quantity << "): " << join(r.predicted) << " vs " << join(r.oracle) << "  "
               << (r.matches() ? "match" : "MISMATCH");
            if (!r.note.empty())
                os << "  [" << r.note << ']';
            os << '\n';
        }
    }
    return report.all_match() ? 0 : 1;
}

int cmd_apery(const Globals& g, const std::vector<i64>& gens, i64 n) {
    const auto s = nsg::from_generators(gens);
    const auto ap = nsg::apery_set(s, n > 0 ? n : s.multiplicity());
    const auto fg = nsg::invariants_from_apery(ap);
    Output out(g);
    if (out.format() == "json") {
        out.os() << json{{"modulus", ap.modulus}, {"elements", ap.elements}, {"frobenius", fg.frobenius},
                         {"genus", fg.genus}}
                        .dump()
                 << '\n';
    } else if (out.format() == "csv") {
        out.os() << "residue,element\n";
        for (std::size_t r = 0; r < ap.elements.size(); ++r)
            out.os() << r << ',' << ap.elements[r] << '\n';
    } else {
        out.os() << "Ap(S, " << ap.modulus << "): " << join(ap.elements, " ") << '\n'
                 << "F = " << fg.frobenius << ", g = " << fg.genus << " (Selmer)\n";
    }
    return 0;
}

struct VerifyOverrides {
    std::string theorem;
    std::optional<i64> cases, max_gen, d_min, d_max, ab_max, a_min, a_max, k_max, samples, min_samples;
    std::vector<i64> k_values;
    bool inject = false;
    bool report_noncoprime = false;
};

int cmd_verify(const Globals& g, bool tolerance_given, const VerifyOverrides& o) {
    const auto& ids = nsg::theorem_ids();
    if (std::find(ids.begin(), ids.end(), o.theorem) == ids.end())
        throw nsg::precondition_error("unknown theorem id '" + o.theorem + "'");
    auto c = nsg::defaults_for(o.theorem);
    auto set = [](i64& field, const std::optional<i64>& v) {
        if (v)
            field = *v;
    };
    set(c.cases, o.cases);
    set(c.max_gen, o.max_gen);
    set(c.d_min, o.d_min);
    set(c.d_max, o.d_max);
    set(c.ab_max, o.ab_max);
    set(c.a_min, o.a_min);
    set(c.a_max, o.a_max);
    set(c.k_max, o.k_max);
    set(c.samples, o.samples);
    set(c.min_samples, o.min_samples);
    if (!o.k_values.empty())
        c.k_values = o.k_values;
    if (tolerance_given)
        c.tolerance = g.tolerance;
    c.format = g.format;
    c.seed = g.seed;
    c.parallel = g.parallel;
    c.inject_off_by_one = o.inject;
    c.report_noncoprime = o.report_noncoprime;
    c.validate();

    const auto run = nsg::run_verification(c);
    Output out(g);
    out.header() << "# verify " << c.theorem << "  seed=" << c.seed << "  parallel=" << c.parallel
                 << (c.inject_off_by_one ? "  inject-off-by-one" : "") << '\n';

    double max_residual = -1;
    for (const auto& r : run.records)
        if (r.residual)
            max_residual = std::max(max_residual, *r.residual);

    if (out.format() == "json") {
        for (const auto& r : run.records)
            out.os() << nsg::to_json(r).dump() << '\n';
    } else if (out.format() == "csv") {
        out.os() << nsg::csv_header() << '\n';
        for (const auto& r : run.records)
            out.os() << nsg::to_csv(r) << '\n';
    } else {
        for (const auto& r : run.records)
            if (r.status == nsg::Status::mismatch)
                out.os() << "MISMATCH " << nsg::to_json(r).dump() << '\n';
    }
    auto& summary = out.header();
    summary << "# records=" << run.records.size() << "  match=" << run.matches << "  mismatch=" << run.mismatches
            << "  skipped=" << run.skipped;
    if (max_residual >= 0)
        summary << "  max_residual=" << max_residual;
    summary << '\n';
    return run.exit_code();
}

std::pair<i64, i64> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw nsg::precondition_error("range must look like LO..HI, got '" + text + "'");
    try {
        std::size_t used = 0;
        const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
        const i64 lo = std::stoll(lo_text, &used);
        if (used != lo_text.size())
            throw std::invalid_argument(text);
        const i64 hi = std::stoll(hi_text, &used);
        if (used != hi_text.size())
            throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw nsg::precondition_error("range must look like LO..HI, got '" + text + "'");
    }
}

int cmd_fit(const Globals& g, i64 k, i64 d, const std::string& range) {
    const auto [lo, hi] = parse_range(range);
    const auto fit = nsg::fit_quasipolynomial(k, d, lo, hi);
    Output out(g);
    auto constant = [](const nsg::ClassFit& c) { return c.cabd_constant ? c.cabd_constant->to_string() : std::string(); };
    if (out.format() == "json") {
        for (const auto& c : fit.per_class) {
            json j{{"k", k}, {"d", d}, {"class", c.residue}, {"c2", c.c2.to_string()}, {"c1", c.c1.to_string()},
                   {"c0", c.c0.to_string()}, {"C", c.cabd_constant ? json(constant(c)) : json(nullptr)},
                   {"samples", c.samples.size()}, {"status", "verified"}};
            out.os() << j.dump() << '\n';
        }
    } else if (out.format() == "csv") {
        out.os() << "k,d,class,c2,c1,c0,C,samples,status\n";
        for (const auto& c : fit.per_class)
            out.os() << k << ',' << d << ',' << c.residue << ',' << c.c2 << ',' << c.c1 << ',' << c.c0 << ','
                     << constant(c) << ',' << c.samples.size() << ",verified\n";
    } else {
        out.os() << "g(<a, a+" << k << ">/" << d << ") over a in [" << lo << ", " << hi << "]\n";
        for (const auto& c : fit.per_class) {
            out.os() << "  a = " << c.residue << " mod " << d << ":  " << c.c2 << " a^2 + " << c.c1 << " a + " << c.c0;
            if (c.cabd_constant)
                out.os() << "   C = " << *c.cabd_constant;
            out.os() << "   (" << c.samples.size() << " samples, all reproduced)\n";
        }
    }
    return 0;
}

int cmd_pmd(const Globals& g, i64 a, i64 b, i64 c, i64 window) {
    if (a < 1 || b < 1 || c < 1)
        throw nsg::precondition_error("pmd needs positive a, b, c");
    if (window < 1)
        throw nsg::precondition_error("window must be positive");
    auto member = [a, b, c](i64 x) { return nsg::mod_floor(nsg::checked_mul(a, x), b) <= nsg::checked_mul(c, x); };

    // ax mod b has period b in x while cx grows, so b consecutive members
    // mean every larger x is a member as well.
    i64 run = 0;
    i64 tail = -1;
    for (i64 x = 1; x <= window; ++x) {
        run = member(x) ? run + 1 : 0;
        if (run == b) {
            tail = x - b + 1;
            break;
        }
    }
    if (tail < 0)
        throw nsg::precondition_error("solution set did not stabilize within x <= " + std::to_string(window) +
                                      "; rerun with a larger --window");
    const i64 limit = tail + b;
    if (auto bad = nsg::first_closure_violation(member, limit))
        throw nsg::invariant_violation("solution set not closed: " + std::to_string(bad->first) + " + " +
                                       std::to_string(bad->second) + " is not a solution");
    const auto s = nsg::from_membership(member, tail);

    Output out(g);
    if (out.format() == "json") {
        json j{{"a", a}, {"b", b}, {"c", c}, {"generators", s.minimal_generators()}, {"frobenius", s.frobenius()},
               {"genus", s.genus()}, {"gaps", s.gaps()}};
        out.os() << j.dump() << '\n';
    } else if (out.format() == "csv") {
        out.os() << "a,b,c,generators,frobenius,genus\n"
                 << a << ',' << b << ',' << c << ",\"" << join(s.minimal_generators()) << "\"," << s.frobenius() << ','
                 << s.genus() << '\n';
    } else {
        out.os() << "{x : " << a << "x mod " << b << " <= " << c << "x} = " << angle(s.minimal_generators()) << '\n'
                 << "F = " << s.frobenius() << ", g = " << s.genus() << '\n'
                 << "gaps: " << join(s.gaps(), " ") << '\n';
    }
    return 0;
}

int cmd_sweep(const Globals& g, i64 a, i64 k, i64 ell, i64 d_min, i64 d_max) {
    const auto rows = nsg::open_problem_sweep(a, k, ell, d_min, d_max);
    Output out(g);
    out.header() << "# <" << a << ", " << a << "+" << k << ", ..., " << a << "+" << ell << "*" << k << "> / d\n";
    if (out.format() == "json") {
        for (const auto& r : rows)
            out.os() << json{{"d", r.d}, {"F", r.frobenius}, {"g", r.genus}, {"2g-F", r.twice_genus_minus_frobenius}}
                            .dump()
                     << '\n';
    } else if (out.format() == "csv") {
        out.os() << "d,F,g,2g-F\n";
        for (const auto& r : rows)
            out.os() << r.d << ',' << r.frobenius << ',' << r.genus << ',' << r.twice_genus_minus_frobenius << '\n';
    } else {
        out.os() << "   d      F      g   2g-F\n";
        for (const auto& r : rows) {
            char line[64];
            std::snprintf(line, sizeof line, "%4lld %6lld %6lld %6lld\n", static_cast<long long>(r.d),
                          static_cast<long long>(r.frobenius), static_cast<long long>(r.genus),
                          static_cast<long long>(r.twice_genus_minus_frobenius));
            out.os() << line;
        }
    }
    return 0;
}

int default_parallel() {
    if (const char* env = std::getenv("NSG_PARALLEL")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup invariants, quotients and closed-form verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    g.parallel = default_parallel();
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", g.seed, "seed for random corpora");
    auto* tol = app.add_option("--tolerance", g.tolerance, "rounding tolerance for floating-point checks")
                    ->check(CLI::PositiveNumber);
    app.add_option("--parallel", g.parallel, "worker threads (default $NSG_PARALLEL or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write output to this file");

    std::vector<i64> gens;
    i64 d = 1, n = 0;

    auto* inv = app.add_subcommand("invariants", "invariants of <gens>");
    inv->add_option("--gens", gens, "generators, comma separated")->delimiter(',')->required();

    auto* quo = app.add_subcommand("quotient", "S/d with every applicable closed form");
    quo->add_option("--gens", gens)->delimiter(',')->required();
    quo->add_option("--d", d)->required();

    auto* ap = app.add_subcommand("apery", "Apery set of S at n (default: multiplicity)");
    ap->add_option("--gens", gens)->delimiter(',')->required();
    ap->add_option("--n", n);

    VerifyOverrides vo;
    auto* ver = app.add_subcommand("verify", "check a closed form against brute force over a grid");
    ver->add_option("theorem", vo.theorem, "theorem id")->required();
    ver->add_option("--cases", vo.cases, "random corpus size");
    ver->add_option("--max-gen", vo.max_gen, "largest random generator");
    ver->add_option("--d-min", vo.d_min);
    ver->add_option("--d-max", vo.d_max);
    ver->add_option("--max", vo.ab_max, "bound on a, b for two-generator grids");
    ver->add_option("--a-min", vo.a_min);
    ver->add_option("--a-max", vo.a_max);
    ver->add_option("--k-max", vo.k_max);
    ver->add_option("--k-values", vo.k_values)->delimiter(',');
    ver->add_option("--samples", vo.samples, "samples per residue class");
    ver->add_option("--min-samples", vo.min_samples);
    ver->add_flag("--inject-off-by-one", vo.inject, "perturb every closed form by one (self-test)");
    ver->add_flag("--report-noncoprime", vo.report_noncoprime, "ed2: also report gcd(b, d) > 1, unasserted");
    std::string ids;
    for (const auto& id : nsg::theorem_ids())
        ids += (ids.empty() ? "" : ", ") + id;
    ver->footer("theorem ids: " + ids);

    i64 fk = 1, fd = 1;
    std::string frange;
    auto* fit = app.add_subcommand("fit", "quadratic fit of g(<a, a+k>/d) per residue class of a");
    fit->add_option("--k", fk)->required();
    fit->add_option("--d", fd)->required();
    fit->add_option("--a", frange, "LO..HI")->required();

    i64 pa = 0, pb = 0, pc = 0, window = i64{1} << 20;
    auto* pmd = app.add_subcommand("pmd", "solutions of ax mod b <= cx");
    pmd->add_option("a", pa)->required();
    pmd->add_option("b", pb)->required();
    pmd->add_option("c", pc)->required();
    pmd->add_option("--window", window, "largest x scanned while looking for the conductor");

    i64 sa = 0, sk = 1, sell = 3, sd_min = 1, sd_max = 1;
    auto* sweep = app.add_subcommand("sweep-open-problem", "brute-force F, g of <a, a+k, ..., a+ell*k>/d");
    sweep->add_option("--a", sa)->required();
    sweep->add_option("--k", sk)->required();
    sweep->add_option("--ell", sell)->required();
    sweep->add_option("--d-min", sd_min);
    sweep->add_option("--d-max", sd_max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inv)
            return cmd_invariants(g, gens);
        if (*quo)
            return cmd_quotient(g, gens, d);
        if (*ap)
            return cmd_apery(g, gens, n);
        if (*ver)
            return cmd_verify(g, tol->count() > 0, vo);
        if (*fit)
            return cmd_fit(g, fk, fd, frange);
        if (*pmd)
            return cmd_pmd(g, pa, pb, pc, window);
        if (*sweep)
            return cmd_sweep(g, sa, sk, sell, sd_min, sd_max);
    } catch (const nsg::precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nsg::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const nsg::error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
