#include "biexact/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "biexact/factor.hpp"
#include "biexact/printer.hpp"
#include "biexact/reduce.hpp"

namespace biexact {

using Json = nlohmann::ordered_json;

namespace {

/// Raised for malformed command lines and inputs; maps to exit 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Common {
    std::string pair;
    std::string q;
    bool q_symbolic = false;
    int root = 0;
    std::string expr;
    bool json = false;
    bool timing = false;
};

void add_mode_flags(CLI::App* app, Common& c)
{
    app->add_option("--q", c.q, "rational value of q as num/den");
    app->add_flag("--q-symbolic", c.q_symbolic, "q transcendental over Q");
    app->add_option("--root-of-unity", c.root, "q a primitive m-th root of unity")->check(CLI::PositiveNumber);
    app->add_flag("--json", c.json, "machine-readable output");
    app->add_flag("--timing", c.timing, "report wall time");
}

QMode mode_of(const Common& c)
{
    const int given = (c.q.empty() ? 0 : 1) + (c.q_symbolic ? 1 : 0) + (c.root > 0 ? 1 : 0);
    if (given > 1) {
        throw InputError("--q, --q-symbolic and --root-of-unity are mutually exclusive");
    }
    if (!c.q.empty()) {
        mpq_class v;
        if (c.q.find_first_not_of("+-0123456789/") != std::string::npos || v.set_str(c.q, 10) != 0) {
            throw InputError("bad rational q: " + c.q);
        }
        if (v.get_den() == 0) {
            throw InputError("bad rational q: " + c.q);
        }
        return QMode::rational(Rational(v));
    }
    if (c.q_symbolic) {
        return QMode::transcendental();
    }
    if (c.root > 0) {
        return QMode::root_of_unity(c.root);
    }
    return QMode::none();
}

template <Field F>
std::string show(const RatFunc<F>& f)
{
    return to_string(f);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0)
{
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::round(std::chrono::duration<double, std::milli>(dt).count() * 1000.0) / 1000.0;
}

void finish(Json& j, const std::string& pair, const QMode& mode, const Common& c,
            std::chrono::steady_clock::time_point t0)
{
    if (!pair.empty()) {
        j["pair"] = pair;
    }
    j["qmode"] = mode.describe();
    if (c.timing) {
        j["timing_ms"] = elapsed_ms(t0);
    }
}

template <Field F>
Json witness_json(const Witness<F>& w)
{
    Json j;
    j["kind"] = witness_kind_name(static_cast<int>(w.kind));
    j["d"] = to_string(w.d);
    j["j"] = w.j;
    j["residue"] = to_string(w.residue);
    return j;
}

template <Field F>
Json terms_json(const std::vector<PfdTerm<F>>& terms)
{
    Json arr = Json::array();
    for (const auto& t : terms) {
        Json e;
        e["d"] = to_string(t.d);
        e["j"] = t.j;
        e["a"] = to_string(t.a);
        arr.push_back(std::move(e));
    }
    return arr;
}

void print_human(std::ostream& out, const Json& j)
{
    for (const auto& [k, v] : j.items()) {
        if (k == "exact") {
            out << (v.get<bool>() ? "exact" : "not exact") << '\n';
            continue;
        }
        if (v.is_object()) {
            out << k << ':';
            for (const auto& [k2, v2] : v.items()) {
                out << ' ' << k2 << " = " << (v2.is_string() ? v2.get<std::string>() : v2.dump());
            }
            out << '\n';
        } else if (v.is_array()) {
            out << k << ":\n";
            for (const auto& e : v) {
                out << ' ';
                for (const auto& [k2, v2] : e.items()) {
                    out << ' ' << k2 << " = " << (v2.is_string() ? v2.get<std::string>() : v2.dump());
                }
                out << '\n';
            }
        } else {
            out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
}

void emit(std::ostream& out, const Json& j, bool json)
{
    if (json) {
        out << j.dump() << '\n';
    } else {
        print_human(out, j);
    }
}

template <Field F>
RatFunc<F> read_expr(const std::string& text, const Context<F>& ctx)
{
    if (text.empty()) {
        throw InputError("--expr is required");
    }
    return parse_ratfunc(text, ctx);
}

int cmd_decide(const Common& c, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const QMode mode = mode_of(c);
    const OperatorPair pair = resolve_pair(c.pair, mode);
    Json j = with_field(mode, [&](const auto& ctx) {
        const auto f = read_expr(c.expr, ctx);
        const auto d = decide_exact(f, pair, ctx);
        Json r;
        r["exact"] = d.exact;
        if (d.exact) {
            r["g"] = show(d.certificate->first);
            r["h"] = show(d.certificate->second);
        } else {
            r["witness"] = witness_json(*d.witness);
        }
        return r;
    });
    finish(j, c.pair, mode, c, t0);
    emit(out, j, c.json);
    return exit_ok;
}

int cmd_reduce(const Common& c, const std::string& flavor, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const QMode mode = mode_of(c);
    Json j = with_field(mode, [&](const auto& ctx) {
        using F = std::decay_t<decltype(*ctx.q)>;
        const RatFunc<F> f = read_expr(c.expr, ctx);
        Json r;
        if ((flavor == "tau-sy" || flavor == "tau-rou") && !mode.has_q()) {
            throw QModeMismatch(flavor + " needs a value of q");
        }
        if (flavor == "tau-rou") {
            const auto red = tau_reduced_root_of_unity(f, ctx);
            r["g"] = show(red.g);
            r["c"] = show(red.c);
            return r;
        }
        ReducedForm<F> rf;
        if (flavor == "hermite") {
            rf = hermite_reduce_y(f, ctx);
        } else if (flavor == "abramov") {
            rf = abramov_reduce_y(f, ctx);
        } else if (flavor == "phi-dy") {
            const Shift phi = mode.has_q() && c.pair != "dx-dy" ? Shift::TauX : Shift::SigmaX;
            rf = phi_dy_reduced_form(f, phi, ctx);
        } else if (flavor == "tau-sy") {
            rf = tau_sigma_reduced_form(f, ctx);
        } else {
            throw InputError("unknown flavor: " + flavor);
        }
        r["g"] = show(rf.g);
        r["h"] = show(rf.h);
        r["terms"] = terms_json(rf.terms);
        r["r"] = show(rf.residual(ctx));
        return r;
    });
    finish(j, "", mode, c, t0);
    emit(out, j, c.json);
    return exit_ok;
}

int cmd_residue(const Common& c, const std::string& kind, const std::string& at, int mult, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const QMode mode = mode_of(c);
    Json j = with_field(mode, [&](const auto& ctx) {
        const auto f = read_expr(c.expr, ctx);
        if (at.empty()) {
            throw InputError("--at is required");
        }
        const auto dr = parse_ratfunc(at, ctx);
        if (dr.den().degree() > 0 || dr.den().lc().degree() > 0 || dr.num().degree() <= 0) {
            throw InputError("--at must be a polynomial of positive degree in y");
        }
        Json r;
        if (kind == "dy") {
            r["residue"] = to_string(residue_dy(f, dr.num(), ctx));
        } else if (kind == "sy") {
            if (mult < 1) {
                throw InputError("--mult must be positive");
            }
            r["residue"] = to_string(residue_sigma(f, dr.num(), mult, ctx));
        } else {
            throw InputError("unknown residue kind: " + kind);
        }
        return r;
    });
    finish(j, "", mode, c, t0);
    emit(out, j, c.json);
    return exit_ok;
}

int cmd_factor(const Common& c, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const QMode mode = mode_of(c);
    Json j = with_field(mode, [&](const auto& ctx) {
        const auto f = read_expr(c.expr, ctx);
        Json arr = Json::array();
        auto add = [&](const auto& p, int sign) {
            if (p.degree() == 0 && p.lc().degree() <= 0) {
                return;
            }
            for (const auto& [g, e] : factor(p, ctx).factors) {
                Json fe;
                fe["p"] = to_string(g);
                fe["e"] = sign * e;
                arr.push_back(std::move(fe));
            }
        };
        add(f.num(), 1);
        add(f.den(), -1);
        Json r;
        r["factors"] = std::move(arr);
        return r;
    });
    finish(j, "", mode, c, t0);
    emit(out, j, c.json);
    return exit_ok;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int cmd_corpus(const std::string& path, unsigned threads, bool json, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read " << path << '\n';
        return exit_input_error;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const auto records = parse_corpus(buf.str());
    const auto results = run_corpus(records, threads);
    std::size_t failed = 0;
    Json cases = Json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        const auto& o = results[i];
        failed += o.pass ? 0 : 1;
        if (json) {
            Json e;
            e["line"] = r.line;
            e["pair"] = r.pair;
            e["qmode"] = r.qmode;
            e["expr"] = r.input;
            e["expected"] = r.expected;
            e["got"] = o.got;
            if (o.witness_kind) {
                e["witness_kind"] = *o.witness_kind;
            }
            e["pass"] = o.pass;
            cases.push_back(std::move(e));
        } else {
            out << std::left << std::setw(5) << r.line << std::setw(8) << r.pair << std::setw(14) << r.qmode
                << std::setw(32) << r.input << std::setw(10) << r.expected << std::setw(10) << o.got
                << (o.pass ? "PASS" : "FAIL");
            if (!o.pass && !o.detail.empty()) {
                out << "  " << o.detail;
            }
            out << '\n';
        }
    }
    if (json) {
        Json j;
        j["cases"] = std::move(cases);
        j["passed"] = records.size() - failed;
        j["failed"] = failed;
        out << j.dump() << '\n';
    } else {
        out << (records.size() - failed) << " passed, " << failed << " failed\n";
    }
    return failed == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

std::string witness_kind_name(int kind)
{
    return kind == 0 ? "mixed_denominator" : "non_summable_residue";
}

std::vector<CaseRecord> parse_corpus(const std::string& text)
{
    std::vector<CaseRecord> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto bar = line.find('|', start);
            fields.push_back(trim(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
            if (bar == std::string::npos) {
                break;
            }
            start = bar + 1;
        }
        if (fields.size() != 4 && fields.size() != 5) {
            throw std::invalid_argument("corpus line " + std::to_string(no) + ": expected 4 or 5 fields");
        }
        CaseRecord r;
        r.line = no;
        r.pair = fields[0];
        r.qmode = fields[1];
        r.input = fields[2];
        r.expected = fields[3];
        if (r.expected != "exact" && r.expected != "not-exact" && r.expected != "error") {
            throw std::invalid_argument("corpus line " + std::to_string(no) + ": bad expectation " + r.expected);
        }
        if (fields.size() == 5) {
            if (fields[4] != "mixed_denominator" && fields[4] != "non_summable_residue") {
                throw std::invalid_argument("corpus line " + std::to_string(no) + ": bad witness kind " + fields[4]);
            }
            r.witness_kind = fields[4];
        }
        resolve_pair(r.pair, QMode::parse(r.qmode));
        out.push_back(std::move(r));
    }
    return out;
}

CaseOutcome run_case(const CaseRecord& rec)
{
    CaseOutcome o;
    try {
        const QMode mode = QMode::parse(rec.qmode);
        const OperatorPair pair = resolve_pair(rec.pair, mode);
        with_field(mode, [&](const auto& ctx) {
            const auto d = decide_exact(parse_ratfunc(rec.input, ctx), pair, ctx);
            o.got = d.exact ? "exact" : "not-exact";
            if (d.witness) {
                o.witness_kind = witness_kind_name(static_cast<int>(d.witness->kind));
            }
        });
    } catch (const SyntaxError& e) {
        o.got = "error";
        o.detail = e.what();
    } catch (const QModeMismatch& e) {
        o.got = "error";
        o.detail = e.what();
    } catch (const ZeroDenominator& e) {
        o.got = "error";
        o.detail = e.what();
    }
    o.pass = o.got == rec.expected && (!rec.witness_kind || o.witness_kind == rec.witness_kind);
    if (!o.pass && o.detail.empty()) {
        o.detail = "got " + o.got + (o.witness_kind ? " (" + *o.witness_kind + ")" : "");
    }
    return o;
}

std::vector<CaseOutcome> run_corpus(const std::vector<CaseRecord>& records, unsigned threads)
{
    std::vector<CaseOutcome> out(records.size());
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(records.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            try {
                out[i] = run_case(records[i]);
            } catch (const std::exception& e) {
                out[i].got = "internal-error";
                out[i].detail = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
        t.join();
    }
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"decide exactness of bivariate rational functions for mixed operator pairs", "biexact"};
    app.require_subcommand(1);
    Common c;

    auto* decide = app.add_subcommand("decide", "decide exactness and print a certificate or witness");
    decide->add_option("--pair", c.pair, "dx-dy, dqx-dy or dqx-sy")->required();
    decide->add_option("--expr", c.expr, "rational function in x, y, q")->required();
    add_mode_flags(decide, c);

    std::string flavor;
    auto* reduce = app.add_subcommand("reduce", "print a reduced form");
    reduce->add_option("--flavor", flavor, "hermite, abramov, phi-dy, tau-sy or tau-rou")
        ->required()
        ->check(CLI::IsMember({"hermite", "abramov", "phi-dy", "tau-sy", "tau-rou"}));
    reduce->add_option("--pair", c.pair, "selects the x-operator for phi-dy");
    reduce->add_option("--expr", c.expr)->required();
    add_mode_flags(reduce, c);

    std::string kind;
    std::string at;
    int mult = 1;
    auto* residue = app.add_subcommand("residue", "residue of f at an irreducible polynomial");
    residue->add_option("--kind", kind)->required()->check(CLI::IsMember({"dy", "sy"}));
    residue->add_option("--at", at)->required();
    residue->add_option("--mult", mult);
    residue->add_option("--expr", c.expr)->required();
    add_mode_flags(residue, c);

    auto* fact = app.add_subcommand("factor", "irreducible factors of numerator and denominator");
    fact->add_option("--expr", c.expr)->required();
    add_mode_flags(fact, c);

    std::string path;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    bool corpus_json = false;
    auto* corpus = app.add_subcommand("corpus", "run a corpus file and print a pass/fail table");
    corpus->add_option("path", path)->required();
    corpus->add_option("--threads", threads)->check(CLI::PositiveNumber);
    corpus->add_flag("--json", corpus_json);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }

    try {
        if (decide->parsed()) {
            return cmd_decide(c, out);
        }
        if (reduce->parsed()) {
            return cmd_reduce(c, flavor, out);
        }
        if (residue->parsed()) {
            return cmd_residue(c, kind, at, mult, out);
        }
        if (fact->parsed()) {
            return cmd_factor(c, out);
        }
        return cmd_corpus(path, threads, corpus_json, out, err);
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_input_error;
}

}  // namespace biexact
