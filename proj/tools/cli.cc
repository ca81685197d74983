// Copyright 2026 The paritybit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "paritybit/errors.h"
#include "paritybit/infotheory.h"
#include "paritybit/version.h"

namespace paritybit::cli {

namespace {

std::string format_number(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

std::string machine(double x) {
    return format_number(x, 17);
}

std::string human(double x) {
    return format_number(x, 6);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

int parse_int(std::string_view text) {
    text = trim(text);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParameterError("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

double parse_real(std::string_view text) {
    std::string s(trim(text));
    char *end = nullptr;
    double value = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value)) {
        throw ParameterError("expected a real number, got '" + s + "'");
    }
    return value;
}

nlohmann::json optional_json(const std::optional<double> &v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

bool wants(const std::vector<std::string> &quantities, const char *name) {
    return std::find(quantities.begin(), quantities.end(), name) != quantities.end();
}

nlohmann::json row_json(const SweepRow &row) {
    return {
        {"n", row.n},
        {"alpha", row.alpha},
        {"r", row.r},
        {"i_m", optional_json(row.i_m)},
        {"i_s", optional_json(row.i_s)},
        {"i_d", optional_json(row.i_d)},
        {"i_d_single", optional_json(row.i_d_single)},
        {"i_m_asymptotic", optional_json(row.i_m_asymptotic)},
        {"i_m_upper_bound", optional_json(row.i_m_upper_bound)},
    };
}

std::vector<std::optional<double> SweepRow::*> value_columns() {
    return {&SweepRow::i_m,        &SweepRow::i_s,           &SweepRow::i_d,
            &SweepRow::i_d_single, &SweepRow::i_m_asymptotic, &SweepRow::i_m_upper_bound};
}

}  // namespace

Format parse_format(std::string_view text) {
    if (text == "human") {
        return Format::kHuman;
    }
    if (text == "json") {
        return Format::kJson;
    }
    if (text == "csv") {
        return Format::kCsv;
    }
    throw ParameterError("--format must be one of human, json, csv; got '" + std::string(text) + "'");
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (auto part : split(text, ',')) {
        auto bounds = split(part, ':');
        if (bounds.size() == 1) {
            out.push_back(parse_int(part));
        } else if (bounds.size() == 2) {
            int lo = parse_int(bounds[0]);
            int hi = parse_int(bounds[1]);
            if (hi < lo) {
                throw ParameterError("empty integer range '" + std::string(part) + "'");
            }
            for (int v = lo; v <= hi; v++) {
                out.push_back(v);
            }
        } else {
            throw ParameterError("malformed integer list entry '" + std::string(part) + "'");
        }
    }
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split(text, ',')) {
        auto fields = split(part, ':');
        if (fields.size() == 1) {
            out.push_back(parse_real(part));
        } else if (fields.size() == 3) {
            double lo = parse_real(fields[0]);
            double hi = parse_real(fields[1]);
            int count = parse_int(fields[2]);
            if (count < 1) {
                throw ParameterError("linspace count must be >= 1 in '" + std::string(part) + "'");
            }
            for (int i = 0; i < count; i++) {
                out.push_back(count == 1 ? lo : (i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1)));
            }
        } else {
            throw ParameterError("malformed real list entry '" + std::string(part) + "' (use v or start:stop:count)");
        }
    }
    return out;
}

std::vector<std::string> parse_quantities(std::string_view text) {
    std::vector<std::string> out;
    for (auto part : split(text, ',')) {
        std::string name(trim(part));
        if (std::find(kQuantityNames.begin(), kQuantityNames.end(), name) == kQuantityNames.end()) {
            throw ParameterError("unknown quantity '" + name +
                                 "' (expected i_m, i_s, i_d, i_d_single, asymptotic, bound)");
        }
        if (std::find(out.begin(), out.end(), name) == out.end()) {
            out.push_back(name);
        }
    }
    return out;
}

SweepRow row_from_report(const InfoReport &report, const std::vector<std::string> &quantities) {
    SweepRow row;
    row.n = report.n;
    row.alpha = report.signal.alpha();
    row.r = report.signal.r();
    if (wants(quantities, "i_m")) {
        row.i_m = report.i_m;
    }
    if (wants(quantities, "i_s")) {
        row.i_s = report.i_s;
    }
    if (wants(quantities, "i_d")) {
        row.i_d = report.i_d;
    }
    if (wants(quantities, "i_d_single")) {
        row.i_d_single = report.i_d_single;
    }
    if (wants(quantities, "asymptotic")) {
        row.i_m_asymptotic = report.i_m_asymptotic;
    }
    if (wants(quantities, "bound")) {
        row.i_m_upper_bound = report.i_m_upper_bound;
    }
    return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec, std::ostream &warnings) {
    if (spec.n_values.empty() || spec.alpha_values.empty() || spec.r_values.empty() || spec.quantities.empty()) {
        throw ParameterError("sweep: n, alpha, r and quantity lists must all be non-empty");
    }
    for (int n : spec.n_values) {
        if (n < 1) {
            throw ParameterError("sweep: n must be >= 1, got " + std::to_string(n));
        }
    }
    // Validate each (alpha, r) once; the same skip applies to every n.
    std::vector<std::optional<SignalPair>> signals;
    for (double alpha : spec.alpha_values) {
        for (double r : spec.r_values) {
            try {
                signals.emplace_back(SignalPair(alpha, r));
            } catch (const ParameterError &e) {
                warnings << "warning: skipping alpha=" << machine(alpha) << " r=" << machine(r) << ": " << e.what()
                         << "\n";
                signals.emplace_back(std::nullopt);
            }
        }
    }
    bool warned_asymptotic = false;
    std::vector<SweepRow> rows;
    for (int n : spec.n_values) {
        for (const auto &sig : signals) {
            if (!sig) {
                continue;
            }
            if (!warned_asymptotic && wants(spec.quantities, "asymptotic") && sig->is_pure() &&
                sig->alpha() >= kSmallAngleLimit) {
                warnings << "warning: i_m_asymptotic is a small-angle expansion; alpha >= " << kSmallAngleLimit
                         << " values are indicative only\n";
                warned_asymptotic = true;
            }
            rows.push_back(row_from_report(make_report(*sig, n), spec.quantities));
        }
    }
    return rows;
}

std::string render_csv(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < kSweepColumns.size(); i++) {
        out << (i ? "," : "") << kSweepColumns[i];
    }
    out << "\n";
    for (const auto &row : rows) {
        out << row.n << "," << machine(row.alpha) << "," << machine(row.r);
        for (auto member : value_columns()) {
            out << ",";
            if (row.*member) {
                out << machine(*(row.*member));
            }
        }
        out << "\n";
    }
    return out.str();
}

std::vector<SweepRow> parse_csv(std::string_view text) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParameterError("csv: missing header");
    }
    auto header = split(lines[0], ',');
    if (header.size() != kSweepColumns.size() ||
        !std::equal(header.begin(), header.end(), kSweepColumns.begin())) {
        throw ParameterError("csv: unexpected header '" + std::string(lines[0]) + "'");
    }
    std::vector<SweepRow> rows;
    for (std::size_t i = 1; i < lines.size(); i++) {
        auto cells = split(lines[i], ',');
        if (cells.size() != kSweepColumns.size()) {
            throw ParameterError("csv: line " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                                 " cells");
        }
        SweepRow row;
        row.n = parse_int(cells[0]);
        row.alpha = parse_real(cells[1]);
        row.r = parse_real(cells[2]);
        auto members = value_columns();
        for (std::size_t c = 0; c < members.size(); c++) {
            if (!cells[3 + c].empty()) {
                row.*members[c] = parse_real(cells[3 + c]);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::string render_sweep_json(const SweepSpec &spec, const std::vector<SweepRow> &rows) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto &row : rows) {
        results.push_back(row_json(row));
    }
    nlohmann::json doc = {
        {"parameters",
         {{"n_values", spec.n_values},
          {"alpha_values", spec.alpha_values},
          {"r_values", spec.r_values},
          {"quantities", spec.quantities}}},
        {"results", results},
        {"meta", {{"version", kVersion}}},
    };
    return doc.dump(2) + "\n";
}

std::string render_sweep_human(const std::vector<SweepRow> &rows) {
    std::ostringstream out;
    out << std::left;
    for (const auto &col : kSweepColumns) {
        out << std::setw(col == "n" ? 5 : 16) << col;
    }
    out << "\n";
    for (const auto &row : rows) {
        out << std::setw(5) << row.n << std::setw(16) << human(row.alpha) << std::setw(16) << human(row.r);
        for (auto member : value_columns()) {
            out << std::setw(16) << (row.*member ? human(*(row.*member)) : "-");
        }
        out << "\n";
    }
    return out.str();
}

std::string render_info(const InfoReport &report, Format format) {
    switch (format) {
        case Format::kCsv:
            return render_csv({row_from_report(report)});
        case Format::kJson: {
            nlohmann::json doc = {
                {"parameters", {{"n", report.n}, {"alpha", report.signal.alpha()}, {"r", report.signal.r()}}},
                {"results",
                 {{"n", report.n},
                  {"signal", {{"alpha", report.signal.alpha()}, {"r", report.signal.r()}}},
                  {"i_m", report.i_m},
                  {"i_s", report.i_s},
                  {"i_d", optional_json(report.i_d)},
                  {"i_d_single", optional_json(report.i_d_single)},
                  {"i_m_asymptotic", optional_json(report.i_m_asymptotic)},
                  {"i_m_upper_bound", report.i_m_upper_bound},
                  {"ratio_check", optional_json(report.ratio_check)}}},
                {"meta", {{"version", kVersion}}},
            };
            return doc.dump(2) + "\n";
        }
        case Format::kHuman:
            break;
    }
    auto opt = [](const std::optional<double> &v) { return v ? human(*v) : std::string("n/a"); };
    std::ostringstream out;
    out << std::left;
    auto line = [&out](const char *key, const std::string &value) { out << std::setw(17) << key << value << "\n"; };
    line("n", std::to_string(report.n));
    line("alpha", human(report.signal.alpha()));
    line("r", human(report.signal.r()));
    line("i_m", human(report.i_m));
    line("i_s", human(report.i_s));
    line("i_d", opt(report.i_d));
    line("i_d_single", opt(report.i_d_single));
    line("i_m_asymptotic", opt(report.i_m_asymptotic));
    line("i_m_upper_bound", human(report.i_m_upper_bound));
    line("ratio_check", opt(report.ratio_check));
    return out.str();
}

int cmd_info(int n, double alpha, double r, Format format, std::ostream &out, std::ostream &err) {
    try {
        if (n < 1) {
            throw ParameterError("n must be >= 1, got " + std::to_string(n));
        }
        SignalPair sig(alpha, r);
        InfoReport report = make_report(sig, n);
        if (sig.is_pure() && sig.alpha() >= kSmallAngleLimit) {
            err << "warning: i_m_asymptotic is a small-angle expansion; alpha >= " << kSmallAngleLimit
                << " values are indicative only\n";
        }
        out << render_info(report, format);
        return kExitOk;
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParameterError;
    }
}

int cmd_sweep(const SweepSpec &spec, Format format, const std::string &output_path, std::ostream &out,
              std::ostream &err) {
    std::string text;
    try {
        auto rows = run_sweep(spec, err);
        switch (format) {
            case Format::kCsv:
                text = render_csv(rows);
                break;
            case Format::kJson:
                text = render_sweep_json(spec, rows);
                break;
            case Format::kHuman:
                text = render_sweep_human(rows);
                break;
        }
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParameterError;
    }
    if (output_path.empty() || output_path == "-") {
        out << text;
        return kExitOk;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << output_path << "' for writing\n";
        return kExitIoError;
    }
    file << text;
    file.flush();
    if (!file) {
        err << "error: failed writing '" << output_path << "'\n";
        return kExitIoError;
    }
    return kExitOk;
}

std::vector<std::pair<double, double>> verification_grid(int grid_size, std::uint64_t seed) {
    static constexpr double kAnchors[] = {0.0, 0.05, std::numbers::pi / 8, 0.5, kQuarterPi};
    std::vector<double> alphas;
    for (int i = 0; i < grid_size && i < 5; i++) {
        alphas.push_back(kAnchors[i]);
    }
    std::mt19937_64 rng(seed);
    for (int i = 5; i < grid_size; i++) {
        // (0, pi/4), from the top 53 bits
        double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        alphas.push_back(u * kQuarterPi);
    }
    std::vector<std::pair<double, double>> grid;
    for (double alpha : alphas) {
        double sc = 0.5 * SignalPair(alpha).S();
        double middle = 0.05 < sc ? 0.05 : sc / 4;
        for (double r : {0.0, middle, sc / 2}) {
            grid.emplace_back(alpha, r);
        }
    }
    return grid;
}

namespace {

struct Check {
    std::string name;
    double tolerance;
    double worst = -std::numeric_limits<double>::infinity();
    long cases = 0;
    std::vector<std::string> failures;

    Check(std::string check_name, double tol) : name(std::move(check_name)), tolerance(tol) {}

    void record(double deviation, const std::string &where) {
        cases++;
        worst = std::max(worst, deviation);
        if (!(deviation <= tolerance)) {
            failures.push_back(where + " (" + name + ", deviation " + format_number(deviation, 3) + ")");
        }
    }
};

std::string where(int n, const SignalPair &sig) {
    return "n=" + std::to_string(n) + " alpha=" + machine(sig.alpha()) + " r=" + machine(sig.r());
}

}  // namespace

int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err) {
    int cap = 0;
    try {
        cap = bruteforce_cap();
        if (options.max_n < 1 || options.max_n > cap) {
            throw ParameterError("--max-n must lie in [1, " + std::to_string(cap) + "] (brute-force cap), got " +
                                 std::to_string(options.max_n));
        }
        if (options.grid_size < 1) {
            throw ParameterError("--grid must be >= 1");
        }
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParameterError;
    }

    Check oracle{"oracle-equivalence", 1e-10};
    Check strings{"sum-over-strings", 1e-12};
    Check blocks{"block-extraction", 1e-12};
    Check symmetry{"k-symmetry", 1e-12};
    Check dominance{"dominance", 1e-15};
    Check bound{"bound", 0.0};
    Check commuting{"commuting-case", 1e-12};
    Check n2{"n2-closed-forms", 1e-12};

    auto grid = verification_grid(options.grid_size, options.seed);
    for (auto [alpha, r] : grid) {
        SignalPair sig(alpha, r);
        for (int n = 1; n <= options.max_n; n++) {
            std::string at = where(n, sig);
            auto ens = block_channels_closed_form(sig, n);
            double closed = optimal_information(ens);
            oracle.record(std::abs(closed - bruteforce_information(sig, n, cap)), at);

            auto recursive = parity_matrices_bruteforce(sig, n, cap);
            auto summed = sum_over_strings_oracle(sig, n, cap);
            strings.record(std::max(max_abs_difference(recursive.first, summed.first),
                                    max_abs_difference(recursive.second, summed.second)),
                           at);

            // Every extracted block against the closed form for its weight, and
            // per-class block counts against the multiplicities.
            std::map<int, double> counts;
            std::map<int, std::vector<double>> contributions;
            for (const auto &b : extract_blocks(recursive.first, recursive.second)) {
                counts[b.k] += 1;
                double q = trace(b.block0);
                auto expect = block_channel(sig, n, b.weight);
                double dev = std::abs(q - expect.q);
                if (q > 0) {
                    auto [e0, e1] = normalized_block(sig, n, b.weight);
                    dev = std::max(dev, max_abs_difference((1 / q) * b.block0, e0));
                    dev = std::max(dev, max_abs_difference((1 / q) * b.block1, e1));
                    contributions[b.k].push_back(q * bsc_information(0.5 - b.block0.at(0, 1) / q));
                } else {
                    contributions[b.k].push_back(0);
                }
                if (!is_psd_2x2(b.block0) || !is_psd_2x2(b.block1)) {
                    dev = std::numeric_limits<double>::infinity();
                }
                blocks.record(dev, at + " block " + std::to_string(b.index));
            }
            for (const auto &ch : ens.channels) {
                blocks.record(std::abs(counts[ch.k] - ch.multiplicity), at + " count k=" + std::to_string(ch.k));
            }

            for (int k = 0; k <= n; k++) {
                auto lo = block_channel(sig, n, k);
                auto hi = block_channel(sig, n, n - k);
                double dev = std::max({std::abs(lo.q - hi.q), std::abs(lo.p_err - hi.p_err),
                                       std::abs(lo.p_inconclusive.value_or(0) - hi.p_inconclusive.value_or(0))});
                symmetry.record(dev, at + " k=" + std::to_string(k));
            }
            for (const auto &[k, values] : contributions) {
                auto [mn, mx] = std::minmax_element(values.begin(), values.end());
                symmetry.record(*mx - *mn, at + " blocks of k=" + std::to_string(k));
            }

            dominance.record(single_particle_information(sig, n) - closed, at);

            if (n == 2 && sig.is_pure()) {
                double big_c = sig.C();
                double big_s = sig.S();
                double im2 = 0.5 * (1 + big_c * big_c) * bsc_information(big_c * big_c / (1 + big_c * big_c)) +
                             big_s * big_s / 2;
                n2.record(std::abs(closed - im2), at + " I_M");
                n2.record(std::abs(deterministic_information(sig, 2) - (1 - big_c)), at + " I_D");
                // Both parity matrices entry by entry against the explicit 4x4 form.
                double c2 = sig.c2(), s2 = sig.s2(), x = sig.coherence() * sig.coherence();
                auto rho0 = DensityMatrix::from_rows(
                    {{c2 * c2, 0, 0, x}, {0, c2 * s2, x, 0}, {0, x, c2 * s2, 0}, {x, 0, 0, s2 * s2}});
                auto rho1 = DensityMatrix::from_rows(
                    {{c2 * c2, 0, 0, -x}, {0, c2 * s2, -x, 0}, {0, -x, c2 * s2, 0}, {-x, 0, 0, s2 * s2}});
                n2.record(std::max(max_abs_difference(recursive.first, rho0), max_abs_difference(recursive.second, rho1)),
                          at + " matrices");
            }
        }
        if (sig.is_pure() && sig.alpha() <= 0.05) {
            for (int n = 2; n <= 40; n++) {
                double b = information_upper_bound(sig.alpha(), n);
                double im = optimal_information(sig, n);
                bound.record(b > 0 ? im / b - 1 : im, where(n, sig));
            }
        }
        if (sig.is_orthogonal_angle() && sig.r() > 0) {
            for (int n = 1; n <= 20; n++) {
                double expect = bsc_information_from_bias(0.5 * std::pow(1 - 2 * sig.r(), n));
                double im = optimal_information(sig, n);
                commuting.record(
                    std::max(std::abs(im - single_particle_information(sig, n)), std::abs(im - expect)),
                    where(n, sig));
            }
        }
    }

    out << "verify: max_n=" << options.max_n << " grid=" << grid.size() << " points seed=" << options.seed << "\n";
    bool ok = true;
    for (const Check *c : {&oracle, &strings, &blocks, &symmetry, &dominance, &bound, &commuting, &n2}) {
        bool pass = c->failures.empty();
        ok = ok && pass;
        out << (pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(20) << c->name << " cases=" << std::setw(6)
            << c->cases << " worst=" << std::setw(11) << (c->cases ? format_number(c->worst, 3) : "-")
            << " tol=" << format_number(c->tolerance, 3) << "\n";
        for (const auto &f : c->failures) {
            out << "    failing: " << f << "\n";
        }
    }
    out << (ok ? "all checks passed\n" : "verification FAILED\n");
    return ok ? kExitOk : kExitVerifyFailed;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Optimal information about the parity of n bits sent as non-orthogonal qubit states", "paritybit"};
    app.require_subcommand(0, 1);
    bool show_version = false;
    app.add_flag("--version", show_version, "Print the version and exit");

    struct SignalOptions {
        std::string alpha, overlap, r = "0";
        bool degrees = false;
    };
    auto add_signal_options = [](CLI::App *cmd, SignalOptions &o) {
        auto *a = cmd->add_option("--alpha", o.alpha, "Signal angle (radians unless --degrees)");
        auto *ov = cmd->add_option("--overlap", o.overlap, "State overlap cos(2 alpha), instead of --alpha");
        a->excludes(ov);
        cmd->add_flag("--degrees", o.degrees, "Interpret --alpha in degrees");
        cmd->add_option("--r", o.r, "Mixing offset subtracted from the coherence sc")->capture_default_str();
    };
    auto to_alphas = [](const SignalOptions &o) {
        std::vector<double> alphas;
        if (!o.overlap.empty()) {
            for (double ov : parse_real_list(o.overlap)) {
                if (!(ov >= 0 && ov <= 1)) {
                    throw ParameterError("--overlap must lie in [0, 1], got " + machine(ov));
                }
                alphas.push_back(0.5 * std::acos(ov));
            }
        } else if (!o.alpha.empty()) {
            alphas = parse_real_list(o.alpha);
            if (o.degrees) {
                for (double &a : alphas) {
                    a *= std::numbers::pi / 180;
                }
            }
        } else {
            throw ParameterError("one of --alpha or --overlap is required");
        }
        return alphas;
    };

    auto *info = app.add_subcommand("info", "Report every information figure for one parameter point");
    int info_n = 0;
    SignalOptions info_sig;
    std::string info_format = "human";
    info->add_option("--n", info_n, "String length")->required();
    add_signal_options(info, info_sig);
    info->add_option("--format", info_format, "human, json or csv")->capture_default_str();

    auto *sweep = app.add_subcommand("sweep", "Tabulate information over a grid of (n, alpha, r)");
    std::string sweep_n;
    SignalOptions sweep_sig;
    std::string sweep_format = "csv", sweep_output, sweep_quantities;
    sweep->add_option("--n", sweep_n, "String lengths, e.g. 1:8 or 2,4,6")->required();
    add_signal_options(sweep, sweep_sig);
    sweep->add_option("--format", sweep_format, "human, json or csv")->capture_default_str();
    sweep->add_option("--output", sweep_output, "Write to PATH instead of stdout");
    sweep->add_option("--quantities", sweep_quantities, "Subset of i_m,i_s,i_d,i_d_single,asymptotic,bound");

    auto *verify = app.add_subcommand("verify", "Check the closed forms against the brute-force oracles");
    VerifyOptions vopt;
    verify->add_option("--max-n", vopt.max_n, "Largest n to check (at most the brute-force cap)")->capture_default_str();
    verify->add_option("--grid", vopt.grid_size, "Number of alpha values; each gets three r values")->capture_default_str();
    verify->add_option("--seed", vopt.seed, "Seed for alpha values beyond the five fixed anchors")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParameterError;
    }

    if (show_version) {
        out << "paritybit " << kVersion << "\n";
        return kExitOk;
    }
    try {
        if (info->parsed()) {
            auto alphas = to_alphas(info_sig);
            if (alphas.size() != 1) {
                throw ParameterError("info takes a single --alpha/--overlap value");
            }
            return cmd_info(info_n, alphas[0], parse_real(info_sig.r), parse_format(info_format), out, err);
        }
        if (sweep->parsed()) {
            SweepSpec spec;
            spec.n_values = parse_int_list(sweep_n);
            spec.alpha_values = to_alphas(sweep_sig);
            spec.r_values = parse_real_list(sweep_sig.r);
            if (!sweep_quantities.empty()) {
                spec.quantities = parse_quantities(sweep_quantities);
            }
            return cmd_sweep(spec, parse_format(sweep_format), sweep_output, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(vopt, out, err);
        }
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << "\n";
        return kExitParameterError;
    }
    out << app.help();
    return kExitParameterError;
}

}  // namespace paritybit::cli
