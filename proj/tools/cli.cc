// Copyright 2026 The cwsdecode Authors
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
#include <chrono>
#include <fstream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cws/audit.h"
#include "cws/io.h"
#include "cws/observables.h"
#include "cws/verify.h"

namespace cws::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string code_file;
    std::string errors_file;
    std::string mode = "corollary";
    std::string out_file;
    std::string report_file;
    std::string plan_file;
    std::string external_file;
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;
    bool json_output = false;
};

using Clock = std::chrono::steady_clock;

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw FormatError("cannot write '" + path + "'");
    }
    f << text;
}

ErrorSet errors_for(const CodeDocument &doc, const Options &opt) {
    if (!opt.errors_file.empty()) {
        return load_error_file(opt.errors_file, doc.code.n());
    }
    if (doc.errors) {
        return *doc.errors;
    }
    return ErrorSet::single_qubit(doc.code.n(), true);
}

void write_report(const Options &opt, const std::string &command, const std::string &hash, json outcome,
                  const std::optional<AuditReport> &audit, Clock::time_point start) {
    if (opt.report_file.empty()) {
        return;
    }
    json report;
    report["code_hash"] = hash;
    report["command"] = command;
    report["outcome"] = std::move(outcome);
    if (audit) {
        report["oracle"] = {{"run", audit->oracle_run},
                            {"checks", audit->checks()},
                            {"passed", audit->checks() - audit->failures()},
                            {"failed", audit->failures()}};
    } else {
        report["oracle"] = nullptr;
    }
    report["wall_time_s"] = std::chrono::duration<double>(Clock::now() - start).count();
    write_file(opt.report_file, report.dump(2) + "\n");
}

int cmd_analyze(const Options &opt, std::ostream &out) {
    auto start = Clock::now();
    auto doc = load_code_file(opt.code_file);
    const auto &code = doc.code;
    auto errors = errors_for(doc, opt);
    auto hash = code_hash(code);

    json outcome;
    outcome["name"] = doc.name;
    outcome["n"] = code.n();
    outcome["K"] = code.k();
    outcome["rank"] = code.codeword_system().rank();
    json gens = json::array();
    for (const auto &g : code.generators()) {
        gens.push_back(g.str());
    }
    outcome["generators"] = gens;
    json kernel = json::array();
    for (const auto &o : pauli_normalizer_generators(code)) {
        kernel.push_back(o.str());
    }
    outcome["pauli_observables"] = kernel;
    json detection = json::array();
    std::size_t detected = 0;
    for (const auto &e : errors) {
        auto r = detects(code, e.op);
        detected += r.detected();
        detection.push_back({{"label", e.label},
                             {"classical", r.classical.str()},
                             {"detected", r.detected()},
                             {"status", r.describe()}});
    }
    outcome["errors"] = detection;
    outcome["detected"] = detected;

    if (opt.json_output) {
        out << json{{"code_hash", hash}, {"analysis", outcome}}.dump(2) << '\n';
    } else {
        if (!doc.name.empty()) {
            out << doc.name << '\n';
        }
        out << "n=" << code.n() << " K=" << code.k() << " rank(C)=" << code.codeword_system().rank() << '\n';
        out << "hash " << hash << "\ngenerators:\n";
        for (std::size_t i = 0; i < code.generators().size(); ++i) {
            out << "  s_" << i + 1 << " = " << code.generators()[i].str() << '\n';
        }
        out << "N_S(W) generators:\n";
        for (const auto &o : kernel) {
            out << "  " << o.get<std::string>() << '\n';
        }
        out << "errors:\n";
        for (const auto &d : detection) {
            out << "  " << d["label"].get<std::string>() << "  Cl=" << d["classical"].get<std::string>() << "  "
                << d["status"].get<std::string>() << '\n';
        }
        out << detected << '/' << errors.size() << " errors detected\n";
    }
    write_report(opt, "analyze", hash, outcome, std::nullopt, start);
    return kExitOk;
}

int cmd_plan(const Options &opt, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    auto doc = load_code_file(opt.code_file);
    const auto &code = doc.code;
    auto errors = errors_for(doc, opt);
    SearchOptions search;
    search.mode = search_mode_from_string(opt.mode);
    search.threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;

    DecodingPlan plan;
    try {
        plan = build_decoding_plan(code, errors, search);
    } catch (const UndetectableError &e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    auto plan_json = plan_to_json(plan, code, errors);
    auto text = plan_json.dump(2) + "\n";
    if (!opt.out_file.empty()) {
        write_file(opt.out_file, text);
    }

    LoadedPlan loaded{code_hash(code), errors, plan};
    auto audit = verify_plan(code, loaded, oracle_cap_from_env());

    if (opt.json_output) {
        out << text;
    } else {
        out << "Pauli observables:\n";
        for (std::size_t k = 0; k < plan.pauli_observables.size(); ++k) {
            out << "  O_" << k + 1 << " = " << plan.pauli_observables[k].str() << '\n';
        }
        out << "type-4 observables (V, V1, V2, uses):\n";
        for (std::size_t k = 0; k < plan.type4_observables.size(); ++k) {
            const auto &a = plan.type4_observables[k];
            out << "  " << observable_name(k) << "  " << a.v.str() << ' ' << a.v1.str() << ' ' << a.v2.str() << "  "
                << plan.use_count(k) << '\n';
        }
        out << '\n' << render_sign_table(plan, errors);
        out << (plan.complete() ? "all errors resolved" : "plan is partial") << "; oracle "
            << (audit.oracle_run ? std::to_string(audit.checks() - audit.failures()) + "/" +
                                       std::to_string(audit.checks()) + " checks passed"
                                 : "skipped")
            << '\n';
    }
    if (opt.seed) {
        err << "note: --seed is reserved; the search is deterministic and ignores it\n";
    }
    write_report(opt, "plan", code_hash(code), plan_json, audit, start);
    if (!audit.passed()) {
        err << "error: plan failed its own verification\n" << audit.render();
        return kExitError;
    }
    return plan.complete() ? kExitOk : kExitPartial;
}

int cmd_verify(const Options &opt, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    auto doc = load_code_file(opt.code_file);
    const auto &code = doc.code;
    auto hash = code_hash(code);
    auto cap = oracle_cap_from_env();
    AuditReport audit;
    if (!opt.plan_file.empty()) {
        auto plan = plan_from_json(parse_json(read_text_file(opt.plan_file), opt.plan_file), code.n());
        try {
            audit = verify_plan(code, plan, cap);
        } catch (const HashMismatch &e) {
            err << "error: refusing to verify: " << e.what() << '\n';
            return kExitError;
        }
    } else {
        auto table = parse_external_table(parse_json(read_text_file(opt.external_file), opt.external_file), code.n());
        audit = verify_external(code, table, errors_for(doc, opt), cap);
    }
    if (opt.json_output) {
        out << audit.to_json().dump(2) << '\n';
    } else {
        out << audit.render();
    }
    for (const auto &w : audit.warnings) {
        err << "warning: " << w << '\n';
    }
    write_report(opt, "verify", hash, audit.to_json(), audit, start);
    return audit.passed() ? kExitOk : kExitError;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Decoding observables for codeword-stabilized codes", "cwsdecode"};
    app.require_subcommand(1);
    Options opt;

    auto *analyze = app.add_subcommand("analyze", "Code parameters, generators and error detectability");
    analyze->add_option("file", opt.code_file, "Code definition (JSON)")->required();
    analyze->add_option("--errors", opt.errors_file, "Error list (JSON)");
    analyze->add_flag("--json", opt.json_output, "Print JSON instead of text");
    analyze->add_option("--report", opt.report_file, "Write a run report (JSON)");

    auto *plan = app.add_subcommand("plan", "Synthesize a decoding plan");
    plan->add_option("file", opt.code_file, "Code definition (JSON)")->required();
    plan->add_option("--errors", opt.errors_file, "Error list (JSON)");
    plan->add_option("--mode", opt.mode, "Pair search mode")
        ->check(CLI::IsMember({"corollary", "exhaustive"}));
    plan->add_option("--out", opt.out_file, "Write the plan (JSON)");
    plan->add_option("--threads", opt.threads, "Search workers; 0 uses every core");
    plan->add_option("--seed", opt.seed, "Reserved; the search is deterministic");
    plan->add_flag("--json", opt.json_output, "Print the plan JSON instead of the table");
    plan->add_option("--report", opt.report_file, "Write a run report (JSON)");

    auto *verify = app.add_subcommand("verify", "Check a plan or an external table against the oracle");
    verify->add_option("file", opt.code_file, "Code definition (JSON)")->required();
    auto *plan_opt = verify->add_option("--plan", opt.plan_file, "Plan written by `plan --out`");
    auto *ext_opt = verify->add_option("--external", opt.external_file, "Reference table (JSON)");
    plan_opt->excludes(ext_opt);
    verify->add_option("--errors", opt.errors_file, "Error list used to resolve table labels");
    verify->add_flag("--json", opt.json_output, "Print JSON instead of text");
    verify->add_option("--report", opt.report_file, "Write a run report (JSON)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }
    try {
        if (analyze->parsed()) {
            return cmd_analyze(opt, out);
        }
        if (plan->parsed()) {
            return cmd_plan(opt, out, err);
        }
        if (opt.plan_file.empty() && opt.external_file.empty()) {
            err << "error: verify needs --plan or --external\n";
            return kExitError;
        }
        return cmd_verify(opt, out, err);
    } catch (const CodeError &e) {
        err << "error: invalid code: " << e.what() << '\n';
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitError;
}

}  // namespace cws::cli
