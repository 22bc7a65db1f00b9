/*
   Copyright 2026 The qumbral Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qumbral/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qumbral/qcombinatorics.hpp"

namespace qumbral::cli {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

// "num,den" columns holding the JSON coefficient arrays.
std::string csv_qrat(const QRat& v) {
    const json j = to_json(v);
    return csv_quote(j.at("num").dump()) + "," + csv_quote(j.at("den").dump());
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, sep)) out.push_back(part);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::size_t parse_index(const std::string& s, const std::string& context) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        s.size() > 9) {
        throw ParseError("expected a nonnegative integer in \"" + context + "\", got \"" + s + "\"");
    }
    return static_cast<std::size_t>(std::stoul(s));
}

std::string table_label(TableKind kind, std::size_t n, std::optional<std::size_t> r) {
    switch (kind) {
        case TableKind::number:
            return "B_" + std::to_string(n);
        case TableKind::poly:
            return "B_" + std::to_string(n) + "(x)";
        case TableKind::higher_number:
            return "B^(" + std::to_string(*r) + ")_" + std::to_string(n);
        case TableKind::higher_poly:
            return "B^(" + std::to_string(*r) + ")_" + std::to_string(n) + "(x)";
    }
    return {};
}

std::string table_kind_name(TableKind kind) {
    switch (kind) {
        case TableKind::number:
            return "number";
        case TableKind::poly:
            return "poly";
        case TableKind::higher_number:
            return "higher_number";
        case TableKind::higher_poly:
            return "higher_poly";
    }
    return {};
}

std::string to_string(const Quantity& q) {
    return std::visit([](const auto& v) { return qumbral::to_string(v); }, q);
}

std::string rational_latex(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    const bool negative = v < 0;
    const Integer num = abs(v.get_num());
    return std::string(negative ? "-" : "") + "\\frac{" + num.get_str() + "}{" + v.get_den().get_str() + "}";
}

std::string render_report_human(const std::vector<verify::VerifyReport>& reports, bool timing, bool verbose) {
    std::ostringstream os;
    bool all = true;
    for (const auto& rep : reports) {
        all = all && rep.pass();
        os << (rep.pass() ? "PASS  " : "FAIL  ") << std::left << std::setw(10) << rep.identity << std::setw(40)
           << rep.ranges << rep.passed() << "/" << rep.cases.size();
        if (timing) os << "  " << std::fixed << std::setprecision(3) << rep.wall_seconds << "s";
        os << "\n";
        for (const auto& note : rep.notes) os << "      note: " << note << "\n";
        for (const auto& c : rep.cases) {
            if (!c.pass) {
                os << "      FAIL " << c.key << ": " << c.detail << "\n";
            } else if (verbose) {
                os << "      pass " << c.key << "\n";
            }
        }
    }
    os << "overall: " << (all ? "PASS" : "FAIL") << " (" << reports.size() << (reports.size() == 1 ? " suite" : " suites")
       << ")\n";
    return os.str();
}

json report_json(const std::vector<verify::VerifyReport>& reports, bool timing) {
    json suites = json::array();
    bool all = true;
    for (const auto& rep : reports) {
        all = all && rep.pass();
        json cases = json::array();
        for (const auto& c : rep.cases) {
            json jc = {{"key", c.key}, {"pass", c.pass}};
            if (!c.pass) jc["detail"] = c.detail;
            cases.push_back(std::move(jc));
        }
        json js = {{"identity", rep.identity}, {"ranges", rep.ranges}, {"pass", rep.pass()},
                   {"passed", rep.passed()},   {"total", rep.cases.size()}, {"notes", rep.notes},
                   {"cases", cases}};
        if (timing) js["wall_seconds"] = rep.wall_seconds;
        suites.push_back(std::move(js));
    }
    return {{"pass", all}, {"suites", suites}};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "human") return OutputFormat::human;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "latex") return OutputFormat::latex;
    throw InvalidArgs("unknown output format \"" + name + "\" (expected json, csv, latex or human)");
}

void Limits::check(std::size_t n, const std::string& what) const {
    if (n > degree_cap && !force) {
        throw CapExceeded(what + " = " + std::to_string(n) + " exceeds the degree cap " + std::to_string(degree_cap) +
                          " (pass --force to override)");
    }
}

TableKind parse_table_kind(const std::string& name) {
    if (name == "number") return TableKind::number;
    if (name == "poly") return TableKind::poly;
    if (name == "higher_number") return TableKind::higher_number;
    if (name == "higher_poly") return TableKind::higher_poly;
    throw InvalidArgs("unknown table kind \"" + name + "\"");
}

std::string cmd_table(TableKind kind, std::size_t n_max, std::optional<std::size_t> r, OutputFormat format,
                      const Limits& limits, BernoulliCache& cache) {
    limits.check(n_max, "n_max");
    const bool higher = kind == TableKind::higher_number || kind == TableKind::higher_poly;
    if (higher && !r) throw InvalidArgs("table " + table_kind_name(kind) + " needs --r");
    if (higher && *r == 0) throw InvalidArgs("--r must be at least 1");
    if (!higher) r.reset();
    const bool is_poly = kind == TableKind::poly || kind == TableKind::higher_poly;

    std::vector<Quantity> rows;
    for (std::size_t n = 0; n <= n_max; ++n) {
        switch (kind) {
            case TableKind::number:
                rows.emplace_back(cache.number(n));
                break;
            case TableKind::poly:
                rows.emplace_back(cache.poly(n));
                break;
            case TableKind::higher_number:
                rows.emplace_back(cache.higher_number(n, *r));
                break;
            case TableKind::higher_poly:
                rows.emplace_back(cache.higher_poly(n, *r));
                break;
        }
    }

    std::ostringstream os;
    switch (format) {
        case OutputFormat::human:
            for (std::size_t n = 0; n <= n_max; ++n) os << table_label(kind, n, r) << " = " << to_string(rows[n]) << "\n";
            break;
        case OutputFormat::json: {
            json jrows = json::array();
            for (std::size_t n = 0; n <= n_max; ++n) {
                jrows.push_back({{"n", n}, {"value", std::visit([](const auto& v) { return to_json(v); }, rows[n])}});
            }
            json doc = {{"kind", table_kind_name(kind)}, {"r", r ? json(*r) : json(nullptr)}, {"rows", jrows}};
            os << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv: {
            const std::string rcol = r ? std::to_string(*r) + "," : "";
            os << "n," << (r ? "r," : "") << (is_poly ? "k," : "") << "num,den\n";
            for (std::size_t n = 0; n <= n_max; ++n) {
                if (is_poly) {
                    const XPoly& p = std::get<XPoly>(rows[n]);
                    for (std::size_t k = 0; k <= n; ++k) os << n << "," << rcol << k << "," << csv_qrat(p.coeff(k)) << "\n";
                } else {
                    os << n << "," << rcol << csv_qrat(std::get<QRat>(rows[n])) << "\n";
                }
            }
            break;
        }
        case OutputFormat::latex: {
            std::string head;
            if (kind == TableKind::number) head = "B_{n,q}";
            if (kind == TableKind::poly) head = "B_{n,q}(x)";
            if (kind == TableKind::higher_number) head = "B^{(" + std::to_string(*r) + ")}_{n,q}";
            if (kind == TableKind::higher_poly) head = "B^{(" + std::to_string(*r) + ")}_{n,q}(x)";
            os << "\\begin{tabular}{rl}\n$n$ & $" << head << "$ \\\\\n\\hline\n";
            for (std::size_t n = 0; n <= n_max; ++n) {
                os << n << " & $" << std::visit([](const auto& v) { return to_latex(v); }, rows[n]) << "$ \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
        }
    }
    return os.str();
}

Quantity parse_quantity(const std::string& text, const Limits& limits, BernoulliCache& cache) {
    const auto parts = split(text, ':');
    if (parts.empty()) throw ParseError("empty quantity");
    const std::string& name = parts[0];
    const auto arity = [&](std::size_t want) {
        if (parts.size() != want + 1) {
            throw ParseError("\"" + name + "\" takes " + std::to_string(want) + " index argument(s): \"" + text + "\"");
        }
    };
    const auto index = [&](std::size_t i) {
        const std::size_t v = parse_index(parts[i], text);
        limits.check(v, "index");
        return v;
    };
    if (name == "bernoulli") {
        arity(1);
        return cache.number(index(1));
    }
    if (name == "bernoulli_poly") {
        arity(1);
        return cache.poly(index(1));
    }
    if (name == "higher" || name == "higher_poly") {
        arity(2);
        const std::size_t n = index(1);
        const std::size_t r = index(2);
        if (r == 0) throw ParseError("order r must be at least 1 in \"" + text + "\"");
        if (name == "higher") return cache.higher_number(n, r);
        return cache.higher_poly(n, r);
    }
    if (name == "qint") {
        arity(1);
        return qint(index(1));
    }
    if (name == "qfactorial") {
        arity(1);
        return qfactorial(index(1));
    }
    if (name == "qbinomial") {
        arity(2);
        return qbinomial(static_cast<std::int64_t>(index(1)), static_cast<std::int64_t>(index(2)));
    }
    if (name == "qpoch") {
        arity(1);
        return qpochhammer_x_minus_1(index(1));
    }
    if (name == "monomial") {
        arity(1);
        return XPoly::monomial(index(1));
    }
    throw ParseError("unknown quantity \"" + name +
                     "\" (expected bernoulli, bernoulli_poly, higher, higher_poly, qint, qfactorial, qbinomial, qpoch "
                     "or monomial)");
}

XPoly parse_poly(const std::string& text, const Limits& limits, BernoulliCache& cache) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty polynomial");
    if (text[first] == '[' || text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
        }
        XPoly p;
        if (j.is_object()) {
            p = xpoly_from_json(j);
        } else {
            std::vector<QRat> c;
            for (const auto& entry : j) {
                if (!entry.is_array() || entry.size() != 2) {
                    throw ParseError("inline coefficient must be [num_coeffs, den_coeffs], got " + entry.dump());
                }
                c.push_back(qrat_from_json(json{{"num", entry[0]}, {"den", entry[1]}}));
            }
            p = XPoly(std::move(c));
        }
        if (p.degree() > 0) limits.check(static_cast<std::size_t>(p.degree()), "degree");
        return p;
    }
    Quantity q = parse_quantity(text, limits, cache);
    if (auto* p = std::get_if<XPoly>(&q)) return std::move(*p);
    return XPoly(std::get<QRat>(q));
}

ExpandOutcome expand(const XPoly& p, const std::string& basis, BernoulliCache& cache) {
    ExpandOutcome out;
    if (basis == "bernoulli") {
        out.result = expand_in_bernoulli(p, cache);
    } else if (basis == "qpoch") {
        out.result = expand_in_qpoch_basis(p);
    } else if (basis.rfind("higher:", 0) == 0) {
        const std::size_t r = parse_index(basis.substr(7), basis);
        if (r == 0) throw InvalidArgs("order r must be at least 1 in basis \"" + basis + "\"");
        out.result = expand_in_higher_bernoulli(p, r);
    } else {
        throw InvalidArgs("unknown basis \"" + basis + "\" (expected bernoulli, higher:<r> or qpoch)");
    }
    out.reconstruction_ok = reconstruct(out.result, cache) == p;
    return out;
}

std::string cmd_expand(const XPoly& p, const std::string& basis, OutputFormat format, const Limits& limits,
                       BernoulliCache& cache) {
    if (p.degree() > 0) limits.check(static_cast<std::size_t>(p.degree()), "degree");
    const ExpandOutcome e = expand(p, basis, cache);
    const auto& c = e.result.coeffs;
    std::ostringstream os;
    switch (format) {
        case OutputFormat::human:
            os << "basis: " << to_string(e.result.basis) << "\n";
            for (std::size_t k = 0; k < c.size(); ++k) os << "b_" << k << " = " << to_string(c[k]) << "\n";
            os << "reconstruction_ok: " << (e.reconstruction_ok ? "true" : "false") << "\n";
            break;
        case OutputFormat::json: {
            json doc = to_json(e.result);
            doc["reconstruction_ok"] = e.reconstruction_ok;
            os << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            os << "k,num,den,reconstruction_ok\n";
            for (std::size_t k = 0; k < c.size(); ++k) {
                os << k << "," << csv_qrat(c[k]) << "," << (e.reconstruction_ok ? "true" : "false") << "\n";
            }
            break;
        case OutputFormat::latex:
            os << "\\begin{align*}\n";
            for (std::size_t k = 0; k < c.size(); ++k) os << "b_{" << k << "} &= " << to_latex(c[k]) << " \\\\\n";
            os << "\\end{align*}\n";
            os << "% reconstruction_ok: " << (e.reconstruction_ok ? "true" : "false") << "\n";
            break;
    }
    return os.str();
}

VerifyOutcome cmd_verify(const std::string& suite, const verify::Bounds& bounds, OutputFormat format,
                         const Limits& limits, BernoulliCache& cache, bool timing, bool verbose) {
    if (bounds.n_max) limits.check(*bounds.n_max, "n_max");
    if (bounds.r_max) limits.check(*bounds.r_max, "r_max");
    VerifyOutcome out;
    out.reports = verify::run(suite, cache, bounds);
    bool all = true;
    for (const auto& rep : out.reports) all = all && rep.pass();
    out.exit_code = all ? 0 : 1;

    std::ostringstream os;
    switch (format) {
        case OutputFormat::human:
            os << render_report_human(out.reports, timing, verbose);
            break;
        case OutputFormat::json:
            os << report_json(out.reports, timing).dump(2) << "\n";
            break;
        case OutputFormat::csv:
            os << "suite,case,pass,detail\n";
            for (const auto& rep : out.reports) {
                for (const auto& c : rep.cases) {
                    os << rep.identity << "," << csv_quote(c.key) << "," << (c.pass ? "true" : "false") << ","
                       << csv_quote(c.detail) << "\n";
                }
            }
            break;
        case OutputFormat::latex:
            os << "\\begin{tabular}{llrl}\nsuite & range & cases & result \\\\\n\\hline\n";
            for (const auto& rep : out.reports) {
                os << "\\texttt{" << rep.identity << "} & " << rep.ranges << " & " << rep.passed() << "/"
                   << rep.cases.size() << " & " << (rep.pass() ? "pass" : "FAIL") << " \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
    }
    out.text = os.str();
    return out;
}

std::string cmd_eval(const std::string& expr, std::optional<Rational> q0, std::optional<Rational> x0, bool limit_q1,
                     OutputFormat format, const Limits& limits, BernoulliCache& cache) {
    if (limit_q1 && q0) throw InvalidArgs("--q and --limit-q1 are mutually exclusive");
    if (!limit_q1 && !q0) throw InvalidArgs("eval needs --q or --limit-q1");
    const Rational qv = limit_q1 ? Rational(1) : *q0;
    const Quantity quantity = parse_quantity(expr, limits, cache);
    Rational value;
    if (const auto* p = std::get_if<XPoly>(&quantity)) {
        if (!x0) throw InvalidArgs("\"" + expr + "\" is a polynomial in x; pass --x");
        value = eval_at(*p, qv, *x0);
    } else {
        if (x0) throw InvalidArgs("\"" + expr + "\" does not depend on x; drop --x");
        value = std::get<QRat>(quantity).eval(qv);
    }

    std::ostringstream os;
    switch (format) {
        case OutputFormat::human:
            os << value.get_str() << "\n";
            break;
        case OutputFormat::json: {
            json doc = {{"expr", expr}, {"q", qv.get_str()}, {"value", value.get_str()}};
            doc["x"] = x0 ? json(x0->get_str()) : json(nullptr);
            os << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            os << "expr,q,x,value\n"
               << csv_quote(expr) << "," << qv.get_str() << "," << (x0 ? x0->get_str() : "") << "," << value.get_str()
               << "\n";
            break;
        case OutputFormat::latex:
            os << rational_latex(value) << "\n";
            break;
    }
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-Bernoulli numbers and polynomials, q-umbral pairings and identity checks", "qumbral"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "human";
    Limits limits;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex", "human"}))
        ->capture_default_str();
    app.add_option("--degree-cap", limits.degree_cap, "Largest index/degree accepted without --force")
        ->capture_default_str();
    app.add_flag("--force", limits.force, "Allow bounds beyond the degree cap");

    auto* table = app.add_subcommand("table", "Tabulate q-Bernoulli numbers or polynomials");
    std::string table_kind;
    std::size_t table_n_max = 10;
    std::optional<std::size_t> table_r;
    table->add_option("kind", table_kind, "number, poly, higher_number or higher_poly")
        ->required()
        ->check(CLI::IsMember({"number", "poly", "higher_number", "higher_poly"}));
    table->add_option("--n-max", table_n_max, "Largest index")->capture_default_str();
    table->add_option("--r", table_r, "Order for higher_* tables");

    auto* expand_cmd = app.add_subcommand("expand", "Expand a polynomial in a q-Bernoulli or (x-1)_q^k basis");
    std::string poly_text;
    std::string poly_file;
    std::string basis = "bernoulli";
    auto* poly_opt = expand_cmd->add_option("--poly", poly_text,
                                            "Inline [[num,den],...] literal, JSON document, or named polynomial");
    auto* file_opt = expand_cmd->add_option("--file", poly_file, "JSON file holding {\"coeffs\": [...]}");
    poly_opt->excludes(file_opt);
    expand_cmd->add_option("--basis", basis, "bernoulli, higher:<r> or qpoch")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "Machine-check the identity suites");
    std::string suite = "all";
    verify::Bounds bounds;
    bool timing = false;
    bool verbose = false;
    std::optional<std::size_t> perturb;
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.emplace_back("all");
    verify_cmd->add_option("suite", suite, "Suite name or all")
        ->check(CLI::IsMember(suite_choices))
        ->capture_default_str();
    verify_cmd->add_option("--n-max", bounds.n_max, "Override every suite's index bound");
    verify_cmd->add_option("--r-max", bounds.r_max, "Override every suite's order bound");
    verify_cmd->add_option("--seed", bounds.seed, "Seed for random polynomials")->capture_default_str();
    verify_cmd->add_flag("--timing", timing, "Report wall time per suite");
    verify_cmd->add_flag("--verbose", verbose, "List passing cases too");
    verify_cmd->add_option("--perturb-bernoulli", perturb, "Add 1 to the cached B_n before verifying")->group("");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a named quantity at a rational q (and x)");
    std::string expr;
    std::string q_text;
    std::string x_text;
    bool limit_q1 = false;
    eval_cmd->add_option("expr", expr, "e.g. bernoulli:2, bernoulli_poly:3, higher:4:2, qbinomial:4:2")->required();
    auto* q_opt = eval_cmd->add_option("--q", q_text, "Rational value p/r for q");
    auto* limit_opt = eval_cmd->add_flag("--limit-q1", limit_q1, "Evaluate at q = 1 after cancellation");
    q_opt->excludes(limit_opt);
    eval_cmd->add_option("--x", x_text, "Rational value p/r for x");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    BernoulliCache cache;
    try {
        const OutputFormat format = parse_format(format_name);
        if (*table) {
            out << cmd_table(parse_table_kind(table_kind), table_n_max, table_r, format, limits, cache);
        } else if (*expand_cmd) {
            std::string text = poly_text;
            if (!poly_file.empty()) {
                std::ifstream in(poly_file);
                if (!in) throw InvalidArgs("cannot read " + poly_file);
                text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
            }
            if (text.empty()) throw InvalidArgs("expand needs --poly or --file");
            out << cmd_expand(parse_poly(text, limits, cache), basis, format, limits, cache);
        } else if (*verify_cmd) {
            if (perturb) cache.perturb_number(*perturb, QRat(1));
            const VerifyOutcome v = cmd_verify(suite, bounds, format, limits, cache, timing, verbose);
            out << v.text;
            return v.exit_code;
        } else if (*eval_cmd) {
            std::optional<Rational> q0;
            std::optional<Rational> x0;
            if (!q_text.empty()) q0 = parse_rational(q_text);
            if (!x_text.empty()) x0 = parse_rational(x_text);
            out << cmd_eval(expr, q0, x0, limit_q1, format, limits, cache);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgs& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace qumbral::cli
