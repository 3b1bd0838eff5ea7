// losc: verification CLI for the Legendre-oscillator library.
//
//   losc verify  [--truncation N] [--tol T] [--format json|csv] [--out PATH]
//   losc table   --grid-j START:STOP:COUNT [...]
//   losc eval    (--z RE[,IM] | --J V --gamma V) [--grid-x START:STOP:COUNT] [...]
//   losc overlap (--z1 .. --z2 .. | --J1 .. --gamma1 .. --J2 .. --gamma2 .. |
//                 --grid-z START:STOP:COUNT) [...]
//
// Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage error.
// Output is deterministic: identical invocations produce identical bytes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "losc/bg_states.hpp"
#include "losc/gk_states.hpp"
#include "losc/oscillator.hpp"
#include "losc/specfun.hpp"
#include "losc/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// ---------------------------------------------------------------- formatting

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// A cell is empty, text, or a number (formatted identically in CSV and JSON).
struct Cell {
    enum class Kind { empty, text, number } kind = Kind::empty;
    std::string text;
    double number = 0.0;

    static Cell none() { return {}; }
    static Cell str(std::string s) { return {Kind::text, std::move(s), 0.0}; }
    static Cell num(double v) { return {Kind::number, {}, v}; }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Meta {
    int truncation;
    double tol;
};

std::string render_csv(const Table& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << csv_escape(t.columns[i]);
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            switch (row[i].kind) {
                case Cell::Kind::empty: break;
                case Cell::Kind::text: os << csv_escape(row[i].text); break;
                case Cell::Kind::number: os << format_number(row[i].number); break;
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string render_json(const Table& t, const Meta& meta) {
    std::ostringstream os;
    os << "{\n  \"meta\": {\"truncation\": " << meta.truncation
       << ", \"tol\": " << format_number(meta.tol) << ", \"version\": \"" << kVersion
       << "\"},\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "    {";
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            if (i) os << ", ";
            os << '"' << json_escape(t.columns[i]) << "\": ";
            const Cell& c = t.rows[r][i];
            switch (c.kind) {
                case Cell::Kind::empty: os << "null"; break;
                case Cell::Kind::text: os << '"' << json_escape(c.text) << '"'; break;
                case Cell::Kind::number: {
                    const std::string n = format_number(c.number);
                    if (n == "nan" || n == "inf" || n == "-inf") os << "null";
                    else os << n;
                    break;
                }
            }
        }
        os << (r + 1 < t.rows.size() ? "},\n" : "}\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

// Full output is assembled in memory, then written via a temporary and a
// rename so a failure never leaves a partial file behind.
void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(out_path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << content;
        if (!f) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

// ------------------------------------------------------------------ parsing

struct Grid {
    double start = 0.0, stop = 0.0;
    int count = 0;
    double point(int i) const {
        if (count == 1) return start;
        return start + (stop - start) * i / (count - 1);
    }
};

Grid parse_grid(const std::string& text) {
    Grid g;
    const auto p1 = text.find(':');
    const auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw CLI::ValidationError("grid", "expected START:STOP:COUNT, got '" + text + "'");
    try {
        g.start = std::stod(text.substr(0, p1));
        g.stop = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
        g.count = std::stoi(text.substr(p2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("grid", "cannot parse '" + text + "'");
    }
    if (g.count < 1 || !(g.start <= g.stop))
        throw CLI::ValidationError("grid", "need count >= 1 and start <= stop");
    return g;
}

std::complex<double> parse_complex(const std::string& text) {
    try {
        const auto comma = text.find(',');
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("complex", "expected RE[,IM], got '" + text + "'");
    }
}

// ----------------------------------------------------------------- commands

int run_verify(int truncation, double tol, const std::string& format,
               const std::string& out_path) {
    const losc::verify::Report report = losc::verify::run_all(truncation, tol);

    Table t;
    t.columns = {"section", "name", "computed", "expected", "rel_err", "status", "note"};
    for (const auto& c : report.checks)
        t.rows.push_back({Cell::str("check"), Cell::str(c.name), Cell::num(c.computed),
                          Cell::num(c.expected), Cell::num(c.rel_err),
                          Cell::str(c.passed ? "pass" : "FAIL"), Cell::str(c.note)});
    for (const auto& c : report.errata)
        t.rows.push_back({Cell::str("erratum"), Cell::str(c.name), Cell::num(c.computed),
                          Cell::num(c.expected), Cell::num(c.rel_err), Cell::str("info"),
                          Cell::str(c.note)});

    if (format == "json") {
        emit(render_json(t, {truncation, tol}), out_path);
    } else if (format == "csv") {
        emit(render_csv(t), out_path);
    } else {
        std::ostringstream os;
        os << "losc verify  (truncation=" << truncation << ", tol=" << format_number(tol)
           << ")\n\n";
        for (const auto& c : report.checks) {
            char line[256];
            std::snprintf(line, sizeof(line), "  [%s] %-55s computed=%-13.6g expected=%-13.6g rel_err=%.3g\n",
                          c.passed ? "pass" : "FAIL", c.name.c_str(), c.computed,
                          c.expected, c.rel_err);
            os << line;
            if (!c.passed && !c.note.empty()) os << "         " << c.note << "\n";
        }
        os << "\nerrata / findings (informational):\n";
        for (const auto& c : report.errata)
            os << "  - " << c.name << ": " << c.note
               << " (computed=" << format_number(c.computed)
               << ", reference=" << format_number(c.expected) << ")\n";
        os << "\nresult: " << (report.all_passed() ? "PASS" : "FAIL") << " ("
           << report.checks.size() << " checks, " << report.errata.size()
           << " findings)\n";
        emit(os.str(), out_path);
    }
    return report.all_passed() ? 0 : 1;
}

int run_table(const Grid& grid, int truncation, double tol, const std::string& format,
              const std::string& out_path) {
    namespace gk = losc::gk;
    if (grid.start < 0.0 || grid.stop >= gk::action_radius)
        throw losc::domain_error("table: J grid must lie within [0, 1/2)");

    Table t;
    t.columns = {"J", "mean_H", "mean_n_series", "mean_n_elliptic", "mean_n2_series",
                 "mean_n2_elliptic", "variance", "mandel_Q"};
    for (int i = 0; i < grid.count; ++i) {
        const double J = grid.point(i);
        const auto st = gk::occupation_statistics(J);
        t.rows.push_back({Cell::num(J), Cell::num(gk::mean_energy(J)),
                          Cell::num(gk::mean_occupation(J)),
                          Cell::num(gk::mean_occupation_elliptic(J)),
                          Cell::num(gk::mean_occupation_sq(J)),
                          Cell::num(gk::mean_occupation_sq_elliptic(J)),
                          Cell::num(st.delta_n * st.delta_n), Cell::num(st.mandel_q)});
    }
    if (format == "json") emit(render_json(t, {truncation, tol}), out_path);
    else emit(render_csv(t), out_path);
    return 0;
}

int run_eval(const std::optional<std::complex<double>>& z, const std::optional<double>& J,
             double gamma, const std::optional<Grid>& grid_x, int truncation, double tol,
             const std::string& format, const std::string& out_path) {
    Table t;
    t.columns = {"kind", "n", "x", "c_re", "c_im", "series_re", "series_im", "closed_re",
                 "closed_im", "abs_diff"};

    if (z) {
        const auto state = losc::bg::coherent_state(*z, truncation);
        for (int n = 0; n < state.dim; ++n)
            t.rows.push_back({Cell::str("bg_amplitude"), Cell::num(n), Cell::none(),
                              Cell::num(state.amplitudes(n).real()),
                              Cell::num(state.amplitudes(n).imag()), Cell::none(),
                              Cell::none(), Cell::none(), Cell::none(), Cell::none()});
        if (grid_x) {
            for (int i = 0; i < grid_x->count; ++i) {
                const double x = grid_x->point(i);
                const auto series = losc::bg::wavefunction_series(state, x);
                const auto closed = losc::bg::wavefunction_closed(*z, x);
                t.rows.push_back({Cell::str("bg_wavefunction"), Cell::none(), Cell::num(x),
                                  Cell::none(), Cell::none(), Cell::num(series.real()),
                                  Cell::num(series.imag()), Cell::num(closed.real()),
                                  Cell::num(closed.imag()),
                                  Cell::num(std::abs(series - closed))});
            }
        }
    } else {
        const auto state = losc::gk::coherent_state(*J, gamma, truncation);
        for (int n = 0; n < state.dim; ++n)
            t.rows.push_back({Cell::str("gk_amplitude"), Cell::num(n), Cell::none(),
                              Cell::num(state.amplitudes(n).real()),
                              Cell::num(state.amplitudes(n).imag()), Cell::none(),
                              Cell::none(), Cell::none(), Cell::none(), Cell::none()});
    }
    if (format == "json") emit(render_json(t, {truncation, tol}), out_path);
    else emit(render_csv(t), out_path);
    return 0;
}

int run_overlap(const std::optional<std::complex<double>>& z1,
                const std::optional<std::complex<double>>& z2,
                const std::optional<double>& J1, double gamma1,
                const std::optional<double>& J2, double gamma2,
                const std::optional<Grid>& grid_z, int truncation, double tol,
                const std::string& format, const std::string& out_path) {
    Table t;
    t.columns = {"kind", "z1_re", "z1_im", "z2_re", "z2_im", "J1", "gamma1", "J2",
                 "gamma2", "closed_re", "closed_im", "direct_re", "direct_im", "abs_diff"};

    auto bg_row = [&](std::complex<double> a, std::complex<double> b) {
        const auto sa = losc::bg::coherent_state(a, truncation);
        const auto sb = losc::bg::coherent_state(b, truncation);
        const std::complex<double> direct = sa.amplitudes.dot(sb.amplitudes);
        const std::complex<double> closed = losc::bg::overlap(a, b);
        t.rows.push_back({Cell::str("bg"), Cell::num(a.real()), Cell::num(a.imag()),
                          Cell::num(b.real()), Cell::num(b.imag()), Cell::none(),
                          Cell::none(), Cell::none(), Cell::none(),
                          Cell::num(closed.real()), Cell::num(closed.imag()),
                          Cell::num(direct.real()), Cell::num(direct.imag()),
                          Cell::num(std::abs(closed - direct))});
    };

    if (grid_z) {
        for (int i = 0; i < grid_z->count; ++i)
            for (int j = 0; j < grid_z->count; ++j)
                bg_row({grid_z->point(i), 0.0}, {grid_z->point(j), 0.0});
    } else if (z1 && z2) {
        bg_row(*z1, *z2);
    } else {
        const auto sa = losc::gk::coherent_state(*J1, gamma1, truncation);
        const auto sb = losc::gk::coherent_state(*J2, gamma2, truncation);
        const std::complex<double> direct = sb.amplitudes.dot(sa.amplitudes);
        const std::complex<double> closed = losc::gk::overlap(*J1, gamma1, *J2, gamma2);
        t.rows.push_back({Cell::str("gk"), Cell::none(), Cell::none(), Cell::none(),
                          Cell::none(), Cell::num(*J1), Cell::num(gamma1), Cell::num(*J2),
                          Cell::num(gamma2), Cell::num(closed.real()),
                          Cell::num(closed.imag()), Cell::num(direct.real()),
                          Cell::num(direct.imag()),
                          Cell::num(std::abs(closed - direct))});
    }
    if (format == "json") emit(render_json(t, {truncation, tol}), out_path);
    else emit(render_csv(t), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendre oscillator: coherent states and identity verification"};
    app.require_subcommand(1);

    int truncation = 128;
    double tol = 1e-8;
    std::string format;
    std::string out_path;
    std::string grid_j_text, grid_x_text, grid_z_text;
    std::string z_text, z1_text, z2_text;
    double gamma = 0.0, gamma1 = 0.0, gamma2 = 0.0;
    double J = -1.0, J1 = -1.0, J2 = -1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--truncation", truncation, "state truncation dimension")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tol", tol, "tolerance for quadrature-backed checks")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", out_path, "output file (written atomically)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run all identity suites");
    add_common(verify);

    CLI::App* table = app.add_subcommand("table", "observables over a J grid");
    add_common(table);
    table->add_option("--grid-j", grid_j_text, "J grid START:STOP:COUNT")->required();

    CLI::App* eval = app.add_subcommand("eval", "state amplitudes and wavefunctions");
    add_common(eval);
    eval->add_option("--z", z_text, "BG parameter RE[,IM]");
    eval->add_option("--J", J, "GK action parameter");
    eval->add_option("--gamma", gamma, "GK angle parameter");
    eval->add_option("--grid-x", grid_x_text, "x grid START:STOP:COUNT");

    CLI::App* overlap = app.add_subcommand("overlap", "closed-form vs direct overlaps");
    add_common(overlap);
    overlap->add_option("--z1", z1_text, "first BG parameter RE[,IM]");
    overlap->add_option("--z2", z2_text, "second BG parameter RE[,IM]");
    overlap->add_option("--J1", J1, "first GK action");
    overlap->add_option("--gamma1", gamma1, "first GK angle");
    overlap->add_option("--J2", J2, "second GK action");
    overlap->add_option("--gamma2", gamma2, "second GK angle");
    overlap->add_option("--grid-z", grid_z_text, "real-z grid START:STOP:COUNT");

    try {
        app.parse(argc, argv);

        if (format.empty()) format = verify->parsed() ? "text" : "csv";

        if (verify->parsed()) return run_verify(truncation, tol, format, out_path);

        if (table->parsed())
            return run_table(parse_grid(grid_j_text), truncation, tol, format, out_path);

        if (eval->parsed()) {
            std::optional<std::complex<double>> z;
            std::optional<double> Jopt;
            if (!z_text.empty()) z = parse_complex(z_text);
            if (J >= 0.0) Jopt = J;
            if (z.has_value() == Jopt.has_value())
                throw CLI::ValidationError("eval", "need exactly one of --z or --J");
            std::optional<Grid> gx;
            if (!grid_x_text.empty()) gx = parse_grid(grid_x_text);
            return run_eval(z, Jopt, gamma, gx, truncation, tol, format, out_path);
        }

        if (overlap->parsed()) {
            std::optional<std::complex<double>> a, b;
            std::optional<double> j1, j2;
            std::optional<Grid> gz;
            if (!z1_text.empty()) a = parse_complex(z1_text);
            if (!z2_text.empty()) b = parse_complex(z2_text);
            if (J1 >= 0.0) j1 = J1;
            if (J2 >= 0.0) j2 = J2;
            if (!grid_z_text.empty()) gz = parse_grid(grid_z_text);
            const bool bg_pair = a.has_value() && b.has_value();
            const bool gk_pair = j1.has_value() && j2.has_value();
            if (static_cast<int>(bg_pair) + static_cast<int>(gk_pair) +
                    static_cast<int>(gz.has_value()) != 1)
                throw CLI::ValidationError(
                    "overlap", "need exactly one of --z1/--z2, --J1/--J2, or --grid-z");
            return run_overlap(a, b, j1, gamma1, j2, gamma2, gz, truncation, tol, format,
                               out_path);
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
    } catch (const losc::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const losc::dimension_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
