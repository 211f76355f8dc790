#include "projconst/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>

#include "projconst/errors.hpp"
#include "projconst/flatness.hpp"
#include "projconst/projection.hpp"
#include "projconst/quadrature.hpp"
#include "projconst/verify.hpp"

namespace projconst::cli {

using json = nlohmann::ordered_json;

std::string format_real(double x) {
    if (!std::isfinite(x)) return "NA";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Range parse_range(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw DomainError("bad range '" + std::string(text) + "' (expected A:B)");
        }
        return v;
    };
    const auto colon = text.find(':');
    Range r;
    if (colon == std::string_view::npos) {
        r.first = r.last = parse_int(text);
    } else {
        r.first = parse_int(text.substr(0, colon));
        r.last = parse_int(text.substr(colon + 1));
    }
    if (r.first < 0 || r.last < r.first) throw DomainError("empty or negative range '" + std::string(text) + "'");
    return r;
}

namespace {

// JSON with every float rendered by format_real (null when non-finite).
void write_json(const json& j, std::string& out, int level) {
    const std::string pad(2 * (level + 1), ' '), close_pad(2 * level, ' ');
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad + json(key).dump() + ": ";
                write_json(value, out, level + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                write_json(j[i], out, level + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format_real(x) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

std::string render_json(const json& j) {
    std::string s;
    write_json(j, s, 0);
    return s + "\n";
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    if (text == "text") return Format::text;
    throw DomainError("unknown format '" + text + "'");
}

struct Config {
    std::string kind = "harmonic";
    int n = 2;
    int p = 0;
    int q = 0;
    std::string p_range;
    std::string q_range;
    std::vector<int> p_values;
    int d = 0;
    std::string format;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;  // 0: command default
    int restarts = 8;
    bool quick = false;
    int max_degree = 10'000;
};

void check_degree(const Config& c, int degree) {
    if (degree > c.max_degree) {
        throw DomainError("degree " + std::to_string(degree) + " exceeds --max-degree " + std::to_string(c.max_degree));
    }
}

SpaceId single_space(const Config& c) {
    SpaceId s{c.n, c.p, c.q, parse_space_kind(c.kind)};
    s.validate();
    check_degree(c, std::max(c.p, c.q));
    return s;
}

void emit_records(std::ostream& out, Format format, const std::vector<std::string>& columns,
                  const std::vector<std::vector<json>>& rows) {
    auto cell_text = [](const json& v) -> std::string {
        if (v.is_number_float()) return format_real(v.get<double>());
        if (v.is_string()) return v.get<std::string>();
        if (v.is_null()) return "NA";
        return v.dump();
    };
    if (format == Format::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
            out << '\n';
        }
    } else if (format == Format::json) {
        json doc;
        doc["schema"] = 1;
        json records = json::array();
        for (const auto& row : rows) {
            json rec;
            for (std::size_t i = 0; i < row.size(); ++i) rec[columns[i]] = row[i];
            records.push_back(std::move(rec));
        }
        doc["records"] = std::move(records);
        out << render_json(doc);
    } else {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) out << '\n';
            for (std::size_t i = 0; i < columns.size(); ++i) out << columns[i] << ": " << cell_text(rows[r][i]) << '\n';
        }
    }
}

int cmd_compute(const Config& c, std::ostream& out) {
    const SpaceId space = single_space(c);
    const LambdaResult r = projection_constant(space);
    if (!r.reliable || !std::isfinite(r.value)) throw NumericalError("quadrature did not converge for " + space.label());
    const Format f = c.format.empty() ? Format::text : parse_format(c.format);
    emit_records(out, f, {"n", "p", "q", "kind", "lambda", "method", "abs_error_estimate"},
                 {{space.n, space.p, space.q, std::string(to_string(space.kind)), r.value, std::string(to_string(r.method)),
                   r.abs_error_estimate}});
    return kOk;
}

int cmd_table(const Config& c, std::ostream& out, std::ostream& err) {
    const SpaceKind kind = parse_space_kind(c.kind);
    const Range pr = c.p_range.empty() ? Range{c.p, c.p} : parse_range(c.p_range);
    const Range qr = c.q_range.empty() ? Range{c.q, c.q} : parse_range(c.q_range);
    check_degree(c, std::max(pr.last, qr.last));
    SpaceId{c.n, pr.first, qr.first, kind}.validate();

    struct Cell {
        SpaceId space;
        std::optional<std::int64_t> dimension;
        double lambda = std::nan("");
        double ks = std::nan("");
        double ub = std::nan("");
        std::string error;
    };
    std::vector<Cell> cells;
    for (int p = pr.first; p <= pr.last; ++p)
        for (int q = qr.first; q <= qr.last; ++q) cells.push_back({SpaceId{c.n, p, q, kind}, {}, NAN, NAN, NAN, {}});

    parallel_for(cells.size(), [&](std::size_t i) {
        Cell& cell = cells[i];
        try {
            cell.dimension = dim(cell.space);
        } catch (const std::exception&) {
        }
        try {
            cell.ks = std::exp(0.5 * log_dim(cell.space));
            cell.ub = upper_bound(kind, cell.space.n, cell.space.p, cell.space.q);
            const LambdaResult r = projection_constant(cell.space);
            if (r.reliable && std::isfinite(r.value)) {
                cell.lambda = r.value;
            } else {
                cell.error = "quadrature did not converge";
            }
        } catch (const std::exception& e) {
            cell.error = e.what();
        }
    });

    std::vector<std::vector<json>> rows;
    bool failed = false;
    for (const Cell& cell : cells) {
        if (!cell.error.empty()) {
            failed = true;
            err << "projconst: " << cell.space.label() << ": " << cell.error << '\n';
        }
        rows.push_back({cell.space.n, cell.space.p, cell.space.q, std::string(to_string(kind)),
                        cell.dimension ? json(*cell.dimension) : json(nullptr), cell.lambda, cell.ks, cell.ub});
    }
    const Format f = c.format.empty() ? Format::csv : parse_format(c.format);
    emit_records(out, f, {"n", "p", "q", "kind", "dim", "lambda", "kadets_snobar_bound", "upper_bound"}, rows);
    return failed ? kNumericalFailure : kOk;
}

int cmd_asymptotic(const Config& c, std::ostream& out) {
    const SpaceKind kind = parse_space_kind(c.kind);
    std::vector<int> ps = c.p_values;
    if (!c.p_range.empty()) {
        const Range r = parse_range(c.p_range);
        for (int p = r.first; p <= r.last; ++p) ps.push_back(p);
    }
    if (ps.empty()) ps = {100, 400, 1600, 6400};
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (int p : ps) {
        if (p < 1 || p + c.d < 0) throw DomainError("asymptotic: need p >= 1 and p + d >= 0");
        check_degree(c, std::max(p, p + c.d));
    }
    SpaceId{c.n, ps.front(), ps.front() + c.d, kind}.validate();
    const auto rows = asymptotic_study(kind, c.n, c.d, ps);
    const double constant = asymptotic_constant(kind, c.n), limit = asymptotic_limit(kind, c.n);
    std::vector<std::vector<json>> table;
    for (const auto& r : rows) {
        table.push_back({c.n, std::string(to_string(kind)), c.d, r.p, r.q, r.lambda, r.ratio, constant, limit});
    }
    const Format f = c.format.empty() ? Format::csv : parse_format(c.format);
    emit_records(out, f, {"n", "kind", "d", "p", "q", "lambda", "ratio", "asymptotic_constant", "asymptotic_limit"},
                 table);
    return kOk;
}

int cmd_flatness(const Config& c, std::ostream& out) {
    const SpaceId space = single_space(c);
    FlatnessOptions fo;
    fo.seed = c.seed;
    fo.restarts = c.restarts;
    if (c.samples) fo.sphere_samples = c.samples;
    const FlatCertificate cert = flatness_certificate(space, fo);
    const Format f = c.format.empty() ? Format::text : parse_format(c.format);
    if (f == Format::json) {
        json doc;
        doc["schema"] = 1;
        doc["space"] = space.label();
        doc["n"] = space.n;
        doc["p"] = space.p;
        doc["q"] = space.q;
        doc["kind"] = std::string(to_string(space.kind));
        doc["dim"] = dim(space);
        doc["lambda"] = cert.lambda;
        doc["sup_norm"] = cert.sup_norm;
        doc["l2_norm"] = cert.l2_norm;
        doc["bound"] = cert.bound;
        doc["certified"] = cert.certified;
        doc["max_supporting_ratio"] = cert.max_supporting_ratio;
        doc["functions_tested"] = cert.functions_tested;
        json coeffs = json::array();
        for (const auto& z : cert.coefficients) coeffs.push_back(json::array({z.real(), z.imag()}));
        doc["coefficients"] = std::move(coeffs);
        out << render_json(doc);
    } else {
        emit_records(out, f,
                     {"n", "p", "q", "kind", "dim", "lambda", "sup_norm", "l2_norm", "bound", "certified",
                      "max_supporting_ratio", "functions_tested"},
                     {{space.n, space.p, space.q, std::string(to_string(space.kind)), dim(space), cert.lambda,
                       cert.sup_norm, cert.l2_norm, cert.bound, cert.certified ? "yes" : "no",
                       cert.max_supporting_ratio, cert.functions_tested}});
    }
    return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
    VerifyOptions vo;
    vo.quick = c.quick;
    vo.seed = c.seed;
    if (c.samples) vo.samples = c.samples;
    const VerifyReport report = run_verify(vo);
    const Format f = c.format.empty() ? Format::json : parse_format(c.format);
    if (f == Format::json) {
        json doc;
        doc["schema"] = 1;
        doc["overall"] = report.pass() ? "pass" : "fail";
        doc["quick"] = c.quick;
        doc["seed"] = c.seed;
        doc["counts"] = {{"pass", report.count(CheckStatus::pass)},
                         {"fail", report.count(CheckStatus::fail)},
                         {"skipped", report.count(CheckStatus::skipped)}};
        json checks = json::array();
        for (const auto& ch : report.checks) {
            checks.push_back({{"name", ch.name},
                              {"status", std::string(to_string(ch.status))},
                              {"measured", ch.measured},
                              {"expected", ch.expected},
                              {"tolerance", ch.tolerance},
                              {"detail", ch.detail}});
        }
        doc["checks"] = std::move(checks);
        out << render_json(doc);
    } else {
        std::vector<std::vector<json>> rows;
        for (const auto& ch : report.checks) {
            rows.push_back({ch.name, std::string(to_string(ch.status)), ch.measured, ch.expected, ch.tolerance, ch.detail});
        }
        emit_records(out, f, {"name", "status", "measured", "expected", "tolerance", "detail"}, rows);
        if (f == Format::text) out << "\noverall: " << (report.pass() ? "pass" : "fail") << '\n';
    }
    return report.pass() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Projection constants of bihomogeneous (harmonic) polynomial spaces on the complex sphere", "projconst"};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--kind", c.kind, "harmonic | bihom")->check(CLI::IsMember({"harmonic", "bihom", "bihomogeneous"}));
        sub->add_option("--n", c.n, "complex dimension (>= 2)");
        sub->add_option("--format", c.format, "csv | json | text")->check(CLI::IsMember({"csv", "json", "text"}));
        sub->add_option("--max-degree", c.max_degree, "refuse p or q above this")->capture_default_str();
    };
    auto single = [&](CLI::App* sub) {
        sub->add_option("--p", c.p, "holomorphic degree");
        sub->add_option("--q", c.q, "antiholomorphic degree");
    };

    CLI::App* compute = app.add_subcommand("compute", "lambda of one space");
    common(compute);
    single(compute);

    CLI::App* table = app.add_subcommand("table", "lambda over a (p, q) grid");
    common(table);
    single(table);
    table->add_option("--p-range", c.p_range, "A:B");
    table->add_option("--q-range", c.q_range, "A:B");

    CLI::App* asym = app.add_subcommand("asymptotic", "lambda(S_{p,p+d}) / p^{n-3/2} along p");
    common(asym);
    asym->add_option("--d", c.d, "q - p");
    asym->add_option("--p-range", c.p_range, "A:B");
    asym->add_option("--p-values", c.p_values, "explicit list, e.g. 100,400,1600")->delimiter(',');

    CLI::App* flat = app.add_subcommand("flatness", "search for a flat polynomial in the space");
    common(flat);
    single(flat);
    flat->add_option("--seed", c.seed);
    flat->add_option("--samples", c.samples, "sphere sample size for the sup norm");
    flat->add_option("--restarts", c.restarts);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--format", c.format, "csv | json | text")->check(CLI::IsMember({"csv", "json", "text"}));
    verify->add_flag("--quick", c.quick, "reduced grids");
    verify->add_option("--seed", c.seed);
    verify->add_option("--samples", c.samples, "Monte Carlo samples per space");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "projconst: " << e.what() << '\n';
        return kBadArguments;
    }

    try {
        if (*compute) return cmd_compute(c, out);
        if (*table) return cmd_table(c, out, err);
        if (*asym) return cmd_asymptotic(c, out);
        if (*flat) return cmd_flatness(c, out);
        if (*verify) return cmd_verify(c, out);
    } catch (const std::invalid_argument& e) {  // DomainError, UnsupportedParameter
        err << "projconst: " << e.what() << '\n';
        return kBadArguments;
    } catch (const std::domain_error& e) {
        err << "projconst: " << e.what() << '\n';
        return kBadArguments;
    } catch (const std::exception& e) {
        err << "projconst: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kBadArguments;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace projconst::cli
