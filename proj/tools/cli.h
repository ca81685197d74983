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

#ifndef PARITYBIT_TOOLS_CLI_H
#define PARITYBIT_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paritybit/analysis.h"

namespace paritybit::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitParameterError = 2,
    kExitIoError = 3,
};

enum class Format { kHuman, kJson, kCsv };

/// Throws ParameterError for anything other than human, json or csv.
Format parse_format(std::string_view text);

/// Sweep columns, in output order.
inline const std::vector<std::string> kSweepColumns = {
    "n", "alpha", "r", "i_m", "i_s", "i_d", "i_d_single", "i_m_asymptotic", "i_m_upper_bound",
};

/// Names accepted by --quantities.
inline const std::vector<std::string> kQuantityNames = {"i_m", "i_s", "i_d", "i_d_single", "asymptotic", "bound"};

struct SweepSpec {
    std::vector<int> n_values;
    std::vector<double> alpha_values;
    std::vector<double> r_values;
    /// Subset of kQuantityNames; unrequested columns are left empty.
    std::vector<std::string> quantities = kQuantityNames;
};

struct SweepRow {
    int n = 0;
    double alpha = 0;
    double r = 0;
    std::optional<double> i_m, i_s, i_d, i_d_single, i_m_asymptotic, i_m_upper_bound;

    bool operator==(const SweepRow &) const = default;
};

/// "1,2,5" or an inclusive range "1:8". Throws ParameterError.
std::vector<int> parse_int_list(std::string_view text);
/// "0.1,0.2" or "start:stop:count" (count evenly spaced values, endpoints included).
std::vector<double> parse_real_list(std::string_view text);
/// Comma-separated names from kQuantityNames.
std::vector<std::string> parse_quantities(std::string_view text);

/// Evaluates every (n, alpha, r) in n-major, then alpha, then r order.
/// Invalid (alpha, r) pairs are skipped with a line on `warnings`.
std::vector<SweepRow> run_sweep(const SweepSpec &spec, std::ostream &warnings);

SweepRow row_from_report(const InfoReport &report, const std::vector<std::string> &quantities = kQuantityNames);

/// 17 significant digits; empty cells where a value is absent.
std::string render_csv(const std::vector<SweepRow> &rows);
/// Inverse of render_csv. Throws ParameterError on malformed input.
std::vector<SweepRow> parse_csv(std::string_view text);
std::string render_sweep_json(const SweepSpec &spec, const std::vector<SweepRow> &rows);
std::string render_sweep_human(const std::vector<SweepRow> &rows);

std::string render_info(const InfoReport &report, Format format);

struct VerifyOptions {
    int max_n = 8;
    int grid_size = 5;
    std::uint64_t seed = 1;
};

/// (alpha, r) points checked by `verify`.
std::vector<std::pair<double, double>> verification_grid(int grid_size, std::uint64_t seed);

/// Each command writes its result to `out` and diagnostics to `err`, and returns an ExitCode.
int cmd_info(int n, double alpha, double r, Format format, std::ostream &out, std::ostream &err);
int cmd_sweep(const SweepSpec &spec, Format format, const std::string &output_path, std::ostream &out,
              std::ostream &err);
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace paritybit::cli

#endif
