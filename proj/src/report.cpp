#include "equiclone/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "equiclone/analysis.hpp"
#include "equiclone/cloners.hpp"
#include "equiclone/network.hpp"
#include "equiclone/optimality.hpp"

namespace equiclone {

namespace {

const double kLambdaStar = 3.0 - 2.0 * std::sqrt(2.0);

struct Cell {
    enum class Kind { Num, Int, Str, Bool, Blank };

    Kind kind = Kind::Blank;
    double num = 0.0;
    long long integer = 0;
    std::string str;
    bool flag = false;

    static Cell number(double v) {
        Cell c;
        c.kind = Kind::Num;
        c.num = v;
        return c;
    }
    static Cell count(long long v) {
        Cell c;
        c.kind = Kind::Int;
        c.integer = v;
        return c;
    }
    static Cell text(std::string v) {
        Cell c;
        c.kind = Kind::Str;
        c.str = std::move(v);
        return c;
    }
    static Cell boolean(bool v) {
        Cell c;
        c.kind = Kind::Bool;
        c.flag = v;
        return c;
    }
    static Cell blank() { return Cell{}; }
};

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out.push_back('\\');
            out.push_back(ch);
        } else if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", ch);
            out += buf;
        } else {
            out.push_back(ch);
        }
    }
    return out;
}

std::string render_cell_csv(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Num: return fmt_float(c.num);
        case Cell::Kind::Int: return std::to_string(c.integer);
        case Cell::Kind::Str: return c.str;
        case Cell::Kind::Bool: return c.flag ? "1" : "0";
        case Cell::Kind::Blank: default: return "";
    }
}

std::string render_cell_json(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::Num: return fmt_float(c.num);
        case Cell::Kind::Int: return std::to_string(c.integer);
        case Cell::Kind::Str: return "\"" + json_escape(c.str) + "\"";
        case Cell::Kind::Bool: return c.flag ? "true" : "false";
        case Cell::Kind::Blank: default: return "null";
    }
}

// Deterministic two-format table: CSV is header + rows + "# key=value"
// trailer lines, JSON is one object with `meta` and `rows`.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void meta(const std::string& key, Cell value) { meta_.emplace_back(key, std::move(value)); }
    void row(std::vector<Cell> cells) { rows_.push_back(std::move(cells)); }

    std::string render(OutputFormat format) const {
        return format == OutputFormat::Csv ? render_csv() : render_json();
    }

private:
    std::string render_csv() const {
        std::string out;
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            if (i) out += ',';
            out += columns_[i];
        }
        out += '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) out += ',';
                out += render_cell_csv(r[i]);
            }
            out += '\n';
        }
        for (const auto& [key, value] : meta_) {
            out += "# " + key + "=" + render_cell_csv(value) + '\n';
        }
        return out;
    }

    std::string render_json() const {
        std::string out = "{\n  \"meta\": {";
        for (std::size_t i = 0; i < meta_.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + json_escape(meta_[i].first) + "\": " + render_cell_json(meta_[i].second);
        }
        out += "},\n  \"rows\": [\n";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            out += "    {";
            for (std::size_t i = 0; i < rows_[r].size(); ++i) {
                if (i) out += ", ";
                out += "\"" + json_escape(columns_[i]) + "\": " + render_cell_json(rows_[r][i]);
            }
            out += r + 1 < rows_.size() ? "},\n" : "}\n";
        }
        out += "  ]\n}\n";
        return out;
    }

    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, Cell>> meta_;
    std::vector<std::vector<Cell>> rows_;
};

}  // namespace

std::string fmt_float(double x) {
    char buf[64];
    if (!std::isfinite(x)) {
        std::snprintf(buf, sizeof buf, "%f", x);
        return buf;
    }
    if (x == 0.0) x = 0.0;  // normalize -0
    const double mag = std::abs(x);
    if (mag >= 1e6 || mag < 1e-4) {
        std::snprintf(buf, sizeof buf, "%.9e", x);
        return buf;
    }
    int digits_before = static_cast<int>(std::floor(std::log10(mag))) + 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::snprintf(buf, sizeof buf, "%.*f", 10 - digits_before, x);
        const char* p = buf[0] == '-' ? buf + 1 : buf;
        int intlen = 0;
        while (p[intlen] && p[intlen] != '.') ++intlen;
        const int actual = (intlen == 1 && p[0] == '0') ? 0 : intlen;
        if (actual <= std::max(digits_before, 0)) break;  // rounding can add one digit
        digits_before = actual;
    }
    return buf;
}

double reporting_tolerance() {
    const char* env = std::getenv("EQUICLONE_TOL");
    if (env == nullptr || *env == '\0') return kDefaultTol;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("EQUICLONE_TOL must be a positive number");
    return v;
}

CommandResult run_fidelity_table(const RunConfig& cfg) {
    if (cfg.nmax < 1 || cfg.mmax < 2 || cfg.nmax >= cfg.mmax)
        throw std::invalid_argument("need 1 <= nmax < mmax");
    if (cfg.mmax > 50) throw std::invalid_argument("closed forms capped at M = 50");
    if (cfg.grid < 2) throw std::invalid_argument("grid needs at least two points");

    Table table({"N", "M", "closed_form", "simulated", "abs_error", "asymptotic_limit"});
    table.meta("command", Cell::text("fidelity-table"));
    table.meta("nmax", Cell::count(cfg.nmax));
    table.meta("mmax", Cell::count(cfg.mmax));
    table.meta("grid", Cell::count(cfg.grid));
    table.meta("tolerance", Cell::number(cfg.tol));

    bool ok = true;
    for (int n = 1; n <= cfg.nmax; ++n) {
        for (int m = n + 1; m <= cfg.mmax; ++m) {
            const double closed = fidelity_closed_NtoM(n, m);
            const double limit = fidelity_asymptotic(n);
            if (m <= kSimulationCap) {
                const FidelityReport r = simulate_fidelity(n, m, cfg.grid);
                if (r.abs_error > cfg.tol || r.grid_spread > 1e-10) ok = false;
                table.row({Cell::count(n), Cell::count(m), Cell::number(closed),
                           Cell::number(r.simulated), Cell::number(r.abs_error),
                           Cell::number(limit)});
            } else {
                table.row({Cell::count(n), Cell::count(m), Cell::number(closed), Cell::blank(),
                           Cell::blank(), Cell::number(limit)});
            }
        }
    }
    return {table.render(cfg.format), ok ? 0 : 1};
}

CommandResult run_separability(const RunConfig& cfg) {
    if (!(cfg.lambda_min < cfg.lambda_max))
        throw std::invalid_argument("empty lambda range");
    if (cfg.lambda_min <= -1.0 || cfg.lambda_max >= 1.0)
        throw std::invalid_argument("lambda range must stay inside (-1, 1)");
    if (cfg.steps < 2) throw std::invalid_argument("need at least two sweep points");

    const std::vector<PTSpectrum> sweep =
        separability_sweep(cfg.lambda_min, cfg.lambda_max, cfg.steps);

    bool ok = true;
    int ppt_count = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const PTSpectrum& s = sweep[i];
        double sum = 0.0;
        for (double e : s.eigenvalues) sum += e;
        if (std::abs(sum - 1.0) > 1e-9) ok = false;
        if (s.is_ppt) ++ppt_count;
        if (s.eigenvalues.front() > sweep[best].eigenvalues.front()) best = i;
    }
    // Spot-check the closed form against the simulated spectrum.
    for (std::size_t i : {std::size_t{0}, sweep.size() / 2, sweep.size() - 1}) {
        const PTSpectrum closed = sweep[i];
        const PTSpectrum numeric = pt_spectrum_numeric(closed.lambda, 0.3);
        for (int e = 0; e < 4; ++e)
            if (std::abs(closed.eigenvalues[e] - numeric.eigenvalues[e]) > cfg.tol) ok = false;
    }

    const std::size_t lo = best > 0 ? best - 1 : best;
    const std::size_t hi = best + 1 < sweep.size() ? best + 1 : best;
    const bool star_in_window =
        sweep[lo].lambda <= kLambdaStar && kLambdaStar <= sweep[hi].lambda;

    Table table({"lambda", "e1", "e2", "e3", "e4", "is_ppt"});
    table.meta("command", Cell::text("separability"));
    table.meta("lambda_min", Cell::number(cfg.lambda_min));
    table.meta("lambda_max", Cell::number(cfg.lambda_max));
    table.meta("steps", Cell::count(cfg.steps));
    table.meta("tolerance", Cell::number(cfg.tol));
    table.meta("ppt_count", Cell::count(ppt_count));
    table.meta("ppt_window_low", Cell::number(sweep[lo].lambda));
    table.meta("ppt_window_high", Cell::number(sweep[hi].lambda));
    table.meta("lambda_star_in_window", Cell::boolean(star_in_window));

    for (const PTSpectrum& s : sweep) {
        table.row({Cell::number(s.lambda), Cell::number(s.eigenvalues[0]),
                   Cell::number(s.eigenvalues[1]), Cell::number(s.eigenvalues[2]),
                   Cell::number(s.eigenvalues[3]), Cell::boolean(s.is_ppt)});
    }
    if (!star_in_window) ok = false;
    return {table.render(cfg.format), ok ? 0 : 1};
}

CommandResult run_network_verify(const RunConfig& cfg) {
    if (cfg.grid < 2) throw std::invalid_argument("grid needs at least two points");

    Table table({"configuration", "max_copy_deviation", "max_leftover_deviation",
                 "fidelity_mean", "fidelity_spread", "pass"});
    table.meta("command", Cell::text("network-verify"));
    table.meta("grid", Cell::count(cfg.grid));
    table.meta("tolerance", Cell::number(cfg.tol));

    const double f_pc = 0.5 + std::sqrt(0.125);
    const struct {
        const char* name;
        NetworkConfig config;
        double expected_fidelity;
    } cases[] = {
        {"uqcm", NetworkConfig::Uqcm, 5.0 / 6.0},
        {"pc-xz", NetworkConfig::PcXz, f_pc},
        {"pc-xy", NetworkConfig::PcXy, f_pc},
    };

    bool ok = true;
    for (const auto& c : cases) {
        const NetworkComparison cmp = network_vs_direct(c.config, cfg.grid);
        const bool pass = cmp.max_deviation() <= cfg.tol &&
                          std::abs(cmp.fidelity_mean - c.expected_fidelity) <= cfg.tol;
        if (!pass) ok = false;
        table.row({Cell::text(c.name), Cell::number(cmp.max_copy_deviation),
                   Cell::number(cmp.max_leftover_deviation), Cell::number(cmp.fidelity_mean),
                   Cell::number(cmp.fidelity_spread), Cell::boolean(pass)});
    }
    return {table.render(cfg.format), ok ? 0 : 1};
}

CommandResult run_optimality(const RunConfig& cfg) {
    if (cfg.mmax < 2) throw std::invalid_argument("need mmax >= 2");
    if (cfg.mmax > 50) throw std::invalid_argument("closed forms capped at M = 50");

    Table table({"M", "closed_form", "via_A", "via_eta_gram", "agree"});
    table.meta("command", Cell::text("optimality"));
    table.meta("mmax", Cell::count(cfg.mmax));
    table.meta("tolerance", Cell::number(cfg.tol));

    bool ok = true;
    for (int m = 2; m <= cfg.mmax; ++m) {
        const double closed = fidelity_closed_1toM(m);
        const double via_a = optimal_fidelity_via_A(m);
        const double via_eta = 0.5 * (1.0 + maximize_eta(m).eta_max);
        const bool agree = std::abs(via_a - closed) <= 1e-10 && std::abs(via_eta - closed) <= 1e-10;
        if (!agree) ok = false;
        table.row({Cell::count(m), Cell::number(closed), Cell::number(via_a),
                   Cell::number(via_eta), Cell::boolean(agree)});
    }
    return {table.render(cfg.format), ok ? 0 : 1};
}

}  // namespace equiclone
