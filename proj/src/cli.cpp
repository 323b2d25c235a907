// Copyright 2026 The betasurv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "betasurv/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "betasurv/svg.hpp"

namespace betasurv::cli {

namespace {

std::size_t oracle_cap(const RunConfig& config) {
    return config.allow_large ? kExtendedOracleMaxPeriod : kDefaultOracleMaxPeriod;
}

void check_oracle_period(const RunConfig& config, std::size_t p) {
    if (p > oracle_cap(config)) {
        throw std::invalid_argument(
            "exhaustive search is capped at p=" + std::to_string(oracle_cap(config)) +
            (config.allow_large ? "" : " (use --allow-large for up to p=" +
                                           std::to_string(kExtendedOracleMaxPeriod) + ")"));
    }
}

bool wants(MethodChoice choice, Method method) {
    switch (choice) {
    case MethodChoice::All:
        return true;
    case MethodChoice::Brute:
        return method == Method::BruteForce;
    case MethodChoice::Theorem:
        return method == Method::TheoremWord;
    case MethodChoice::Closed:
        return method == Method::ClosedForm;
    }
    return false;
}

std::string text_line(const SurvivorRecord& r) {
    std::ostringstream line;
    line << name(r.method) << " p=" << r.p;
    if (r.empty) {
        line << " empty (S=0)";
        return line.str();
    }
    if (r.word) {
        line << " word=" << r.word->str();
    }
    line << " exact=" << r.value.str() << " float=" << r.value_float;
    if (r.method == Method::BruteForce) {
        line << " ties=" << r.ties;
    }
    return line.str();
}

std::string csv_line(const SurvivorRecord& r) {
    std::ostringstream line;
    line << r.p << ',' << (r.word ? r.word->str() : "") << ',' << r.value.str() << ','
         << r.value_float << ',' << name(r.method);
    return line.str();
}

constexpr const char* kCsvHeader = "p,word,exact,float,method";

// Records for one period, in brute, theorem, closed order.
std::vector<SurvivorRecord> records_for(const RunConfig& config, std::size_t p) {
    std::vector<SurvivorRecord> out;
    if (wants(config.method, Method::BruteForce)) {
        out.push_back(brute_force_S(make_context(config.kind), p, config.workers, config.digits));
    }
    if (wants(config.method, Method::TheoremWord)) {
        out.push_back(theorem_record(config.kind, p, config.digits));
    }
    if (wants(config.method, Method::ClosedForm)) {
        if (auto r = closed_record(config.kind, p, config.digits)) {
            out.push_back(std::move(*r));
        }
    }
    return out;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    file << content;
    file.flush();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return false;
    }
    return true;
}

int usage_error(const std::exception& e, std::ostream& err) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
}

} // namespace

void validate(const RunConfig& config) {
    if (config.p < 1) {
        throw std::invalid_argument("--p must be at least 1");
    }
    if (config.p_max < 1) {
        throw std::invalid_argument("--pmax must be at least 1");
    }
    if (config.digits < 1) {
        throw std::invalid_argument("--digits must be at least 1");
    }
    if (config.workers < 1) {
        throw std::invalid_argument("--workers must be at least 1");
    }
    if (config.family && (config.family->first == 0 ||
                          config.family->second >= config.family->first)) {
        throw std::invalid_argument("--family expects M:R with 0 <= R < M");
    }
}

int cmd_survivor(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<SurvivorRecord> records;
    try {
        validate(config);
        if (config.format == Format::Svg) {
            throw std::invalid_argument("survivor prints text or csv");
        }
        if (wants(config.method, Method::BruteForce)) {
            check_oracle_period(config, config.p);
        }
        records = records_for(config, config.p);
    } catch (const std::invalid_argument& e) {
        return usage_error(e, err);
    }

    std::ostringstream body;
    if (config.format == Format::Csv) {
        body << kCsvHeader << '\n';
        for (const auto& r : records) {
            body << csv_line(r) << '\n';
        }
    } else {
        for (const auto& r : records) {
            body << text_line(r) << '\n';
        }
        if (wants(config.method, Method::ClosedForm) && !closed_form(config.kind, config.p)) {
            body << "closed p=" << config.p << " no closed form for this period\n";
        }
    }
    if (!config.out_path.empty()) {
        return write_file(config.out_path, body.str(), err) ? kExitOk : kExitIo;
    }
    out << body.str();
    return kExitOk;
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<SurvivorRecord> rows;
    try {
        validate(config);
        if (wants(config.method, Method::BruteForce)) {
            check_oracle_period(config, config.p_max);
        }
        for (std::size_t p = 1; p <= config.p_max; ++p) {
            if (config.family && p % config.family->first != config.family->second) {
                continue;
            }
            for (auto& r : records_for(config, p)) {
                rows.push_back(std::move(r));
            }
        }
    } catch (const std::invalid_argument& e) {
        return usage_error(e, err);
    }

    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (const auto& r : rows) {
        csv << csv_line(r) << '\n';
    }

    if (config.format != Format::Svg) {
        if (!config.out_path.empty()) {
            return write_file(config.out_path, csv.str(), err) ? kExitOk : kExitIo;
        }
        out << csv.str();
        return kExitOk;
    }

    // One point per period: the first record computed for it.
    std::vector<PlotPoint> points;
    for (const auto& r : rows) {
        if (points.empty() || points.back().p != r.p) {
            points.push_back({r.p, std::stod(r.value_float)});
        }
    }
    std::string title = "S(p) for beta=" + std::string(name(config.kind)) + ", p=1.." +
                        std::to_string(config.p_max);
    if (config.family) {
        title += " (p=" + std::to_string(config.family->second) + " mod " +
                 std::to_string(config.family->first) + ")";
    }
    const std::string svg = render_svg(points, title);
    if (config.out_path.empty()) {
        out << svg;
        return kExitOk;
    }
    if (!write_file(config.out_path, svg, err)) {
        return kExitIo;
    }
    out << csv.str();
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        validate(config);
        check_oracle_period(config, config.p_max);
    } catch (const std::invalid_argument& e) {
        return usage_error(e, err);
    }

    std::ostringstream body;
    std::vector<Mismatch> mismatches;
    std::size_t formula_mismatches = 0;
    bool header = true;
    for (BetaKind kind : kAllBetaKinds) {
        CrossCheckReport report = cross_check(kind, config.p_max, config.workers, config.digits);
        body << report.csv(header);
        header = false;
        formula_mismatches += report.count(MismatchKind::PaperFormula);
        mismatches.insert(mismatches.end(), report.mismatches.begin(), report.mismatches.end());
    }
    body << "# p=1.." << config.p_max << ": " << mismatches.size() - formula_mismatches
         << " theorem mismatches, " << formula_mismatches << " paper-formula mismatches\n";
    for (const auto& m : mismatches) {
        body << "# mismatch," << name(m.kind) << ',' << m.p << ','
             << (m.what == MismatchKind::Theorem ? "theorem" : "paper-formula") << ',' << m.detail
             << '\n';
    }

    if (!config.out_path.empty()) {
        if (!write_file(config.out_path, body.str(), err)) {
            return kExitIo;
        }
    } else {
        out << body.str();
    }
    // Closed-form disagreements are reported but do not fail the run.
    return mismatches.size() == formula_mismatches ? kExitOk : kExitMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Critical hole sizes of the beta-transformation with a hole at the origin",
                 "betasurv"};
    app.require_subcommand(1);

    RunConfig config;
    std::string beta = "2";
    std::string method;
    std::string format;
    std::string family;

    const std::map<std::string, MethodChoice> methods{{"brute", MethodChoice::Brute},
                                                      {"theorem", MethodChoice::Theorem},
                                                      {"closed", MethodChoice::Closed},
                                                      {"all", MethodChoice::All}};
    const std::map<std::string, Format> formats{
        {"text", Format::Text}, {"csv", Format::Csv}, {"svg", Format::Svg}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--beta", beta, "Base: 2, golden or tribonacci")
            ->check(CLI::IsMember({"2", "golden", "tribonacci"}));
        sub->add_option("--digits", config.digits, "Significant digits of the float column");
        sub->add_option("--workers", config.workers, "Threads for the exhaustive search");
        sub->add_option("--out", config.out_path, "Write output to this file");
        sub->add_flag("--allow-large", config.allow_large,
                      "Allow the exhaustive search up to p=26");
    };

    CLI::App* survivor = app.add_subcommand("survivor", "S(p) for a single period");
    add_common(survivor);
    survivor->add_option("--p", config.p, "Period")->required();
    survivor->add_option("--method", method, "brute, theorem, closed or all")
        ->check(CLI::IsMember({"brute", "theorem", "closed", "all"}));
    survivor->add_option("--format", format, "text or csv")
        ->check(CLI::IsMember({"text", "csv", "svg"}));

    CLI::App* table = app.add_subcommand("table", "S(p) for p = 1..pmax as CSV or SVG");
    add_common(table);
    table->add_option("--pmax", config.p_max, "Largest period")->required();
    table->add_option("--method", method, "brute, theorem, closed or all")
        ->check(CLI::IsMember({"brute", "theorem", "closed", "all"}));
    table->add_option("--format", format, "csv or svg")
        ->check(CLI::IsMember({"text", "csv", "svg"}));
    table->add_option("--family", family, "Only periods p = R (mod M), given as M:R");

    CLI::App* verify = app.add_subcommand("verify", "Cross-check all methods for every base");
    add_common(verify);
    verify->add_option("--pmax", config.p_max, "Largest period")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    config.kind = *parse_beta_kind(beta);
    if (!format.empty()) {
        config.format = formats.at(format);
    }
    if (!family.empty()) {
        const auto colon = family.find(':');
        try {
            if (colon == std::string::npos) {
                throw std::invalid_argument("no colon");
            }
            config.family = std::pair<std::size_t, std::size_t>{
                std::stoul(family.substr(0, colon)), std::stoul(family.substr(colon + 1))};
        } catch (const std::exception&) {
            err << "usage error: --family expects M:R, got '" << family << "'\n";
            return kExitUsage;
        }
    }

    if (survivor->parsed()) {
        config.method = method.empty() ? MethodChoice::All : methods.at(method);
        return cmd_survivor(config, out, err);
    }
    if (table->parsed()) {
        config.method = method.empty() ? MethodChoice::Theorem : methods.at(method);
        if (format.empty()) {
            config.format = Format::Csv;
        }
        return cmd_table(config, out, err);
    }
    config.method = MethodChoice::All;
    return cmd_verify(config, out, err);
}

} // namespace betasurv::cli
