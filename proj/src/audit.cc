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

#include "cws/audit.h"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "cws/verify.h"

namespace cws {

using nlohmann::json;

namespace {

struct Oracle {
    bool enabled = false;
    std::vector<StateVector> words;

    Oracle(const CwsCode &code, std::size_t cap) {
        if (code.n() <= cap) {
            enabled = true;
            words = codeword_states(code, graph_state(code, cap));
        }
    }
};

std::optional<int> algebraic_eigenvalue(const CwsCode &code, const Type4Observable &a, const PauliOperator &e) {
    try {
        return eigenvalue_on_error(code, a, e);
    } catch (const std::domain_error &) {
        return std::nullopt;
    }
}

ObservableAudit audit_observable(const CwsCode &code, const std::string &name, const Type4Observable &a,
                                 const ErrorSet &applied, const Oracle &oracle, bool stabilization_required) {
    ObservableAudit out;
    out.name = name;
    out.stabilization_required = stabilization_required;
    out.op = a;
    out.valid_form = a.has_valid_form();
    out.applied_to = applied.size();
    if (!out.valid_form) {
        return out;
    }
    out.stabilizes = stabilizes(code, a);
    out.decoding = is_decoding_observable(code, applied, a);
    if (oracle.enabled) {
        out.oracle_stabilizes = oracle_stabilizes(a, code, oracle.words);
    }
    return out;
}

SignAudit audit_sign(const CwsCode &code, const Oracle &oracle, const std::string &class_signs,
                     const LabeledError &e, const std::string &name, const Type4Observable &a, int expected) {
    SignAudit s;
    s.class_signs = class_signs;
    s.error = e.label;
    s.observable = name;
    s.expected = expected;
    if (a.has_valid_form()) {
        s.algebraic = algebraic_eigenvalue(code, a, e.op);
        if (oracle.enabled) {
            s.oracle_run = true;
            s.oracle = oracle_eigenvalue(a, code, oracle.words, e.op);
        }
    }
    return s;
}

std::vector<bool> audit_pauli_layer(const CwsCode &code, const std::vector<BinaryVector> &observables) {
    std::vector<bool> out;
    for (const auto &o : observables) {
        out.push_back(code.codeword_system().in_kernel(o));
    }
    return out;
}

std::map<std::string, std::vector<std::string>> partition_by_signs(const CwsCode &code, const ErrorSet &errors,
                                                                   const std::vector<BinaryVector> &observables) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto &c : pauli_syndrome_partition(code, errors, observables)) {
        auto &members = out[c.sign_string()];
        for (auto i : c.members) {
            members.push_back(errors[i].label);
        }
    }
    return out;
}

ClassAudit audit_class(const std::string &signs, std::vector<std::string> expected,
                       const std::map<std::string, std::vector<std::string>> &partition) {
    ClassAudit out;
    out.signs = signs;
    out.expected = std::move(expected);
    if (auto it = partition.find(signs); it != partition.end()) {
        out.computed = it->second;
    }
    auto a = out.expected;
    auto b = out.computed;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.match = a == b;
    return out;
}

char sign_char(std::optional<int> s) {
    if (!s) {
        return '?';
    }
    return *s > 0 ? '+' : '-';
}

}  // namespace

std::size_t AuditReport::checks() const {
    std::size_t total = pauli_in_kernel.size() + classes.size() + signs.size();
    for (const auto &o : observables) {
        total += 1 + (o.valid_form ? 1 : 0) + (o.stabilization_required && o.valid_form ? 1 : 0);
    }
    return total;
}

std::size_t AuditReport::failures() const {
    std::size_t total = 0;
    total += static_cast<std::size_t>(std::count(pauli_in_kernel.begin(), pauli_in_kernel.end(), false));
    for (const auto &o : observables) {
        total += !o.valid_form;
        if (o.valid_form) {
            total += !o.decoding;
            total += !o.stabilization_ok();
        }
    }
    for (const auto &c : classes) {
        total += !c.match;
    }
    for (const auto &s : signs) {
        total += !s.passed();
    }
    return total;
}

json AuditReport::to_json() const {
    json doc;
    doc["oracle"] = oracle_run;
    doc["checks"] = checks();
    doc["failures"] = failures();
    doc["passed"] = passed();
    doc["pauli_in_kernel"] = pauli_in_kernel;
    json obs = json::array();
    for (const auto &o : observables) {
        json entry = {{"name", o.name},
                      {"v", o.op.v.str()},
                      {"v1", o.op.v1.str()},
                      {"v2", o.op.v2.str()},
                      {"valid_form", o.valid_form},
                      {"stabilizes", o.stabilizes},
                      {"stabilization_required", o.stabilization_required},
                      {"decoding", o.decoding},
                      {"applied_to", o.applied_to},
                      {"passed", o.passed()}};
        entry["oracle_stabilizes"] = o.oracle_stabilizes ? json(*o.oracle_stabilizes) : json(nullptr);
        obs.push_back(std::move(entry));
    }
    doc["observables"] = std::move(obs);
    json cls = json::array();
    for (const auto &c : classes) {
        cls.push_back({{"signs", c.signs}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
    }
    doc["classes"] = std::move(cls);
    json sg = json::array();
    for (const auto &s : signs) {
        sg.push_back({{"class", s.class_signs},
                      {"error", s.error},
                      {"observable", s.observable},
                      {"expected", std::string(1, sign_char(s.expected))},
                      {"algebraic", std::string(1, sign_char(s.algebraic))},
                      {"oracle", s.oracle_run ? json(std::string(1, sign_char(s.oracle))) : json(nullptr)},
                      {"passed", s.passed()}});
    }
    doc["signs"] = std::move(sg);
    doc["warnings"] = warnings;
    return doc;
}

std::string AuditReport::render() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < pauli_in_kernel.size(); ++k) {
        out << "O_" << k + 1 << (pauli_in_kernel[k] ? "  ok" : "  NOT IN ker(C)") << '\n';
    }
    for (const auto &o : observables) {
        out << std::left << std::setw(6) << o.name << ' ' << o.op.v.str() << ' ' << o.op.v1.str() << ' '
            << o.op.v2.str() << "  form=" << (o.valid_form ? "ok" : "BAD");
        if (o.valid_form) {
            const char *miss = o.stabilization_required ? "BAD" : "no";
            out << " stab=" << (o.stabilizes ? "ok" : miss) << " decode=" << (o.decoding ? "ok" : "BAD");
            if (o.oracle_stabilizes) {
                out << " oracle=" << (*o.oracle_stabilizes ? "ok" : miss);
            }
        }
        out << '\n';
    }
    // Sign matrix, one block per class.
    std::vector<std::string> order;
    std::map<std::string, std::vector<const SignAudit *>> by_class;
    for (const auto &s : signs) {
        if (!by_class.contains(s.class_signs)) {
            order.push_back(s.class_signs);
        }
        by_class[s.class_signs].push_back(&s);
    }
    for (const auto &c : classes) {
        if (!c.match) {
            out << c.signs << "  members differ: expected";
            for (const auto &m : c.expected) {
                out << ' ' << m;
            }
            out << ", computed";
            for (const auto &m : c.computed) {
                out << ' ' << m;
            }
            out << '\n';
        }
    }
    for (const auto &key : order) {
        const auto &rows = by_class[key];
        std::size_t width = 3;
        for (const auto *s : rows) {
            width = std::max(width, s->error.size() + 2);
            width = std::max(width, s->observable.size() + 2);
        }
        const auto w = static_cast<int>(width);
        auto line = [&](const char *title, auto pick) {
            out << std::left << std::setw(12) << title;
            for (const auto *s : rows) {
                out << std::left << std::setw(w) << pick(*s);
            }
            out << '\n';
        };
        out << '\n' << key << '\n';
        line("", [](const SignAudit &s) { return s.error; });
        line("observable", [](const SignAudit &s) { return s.observable; });
        line("expected", [](const SignAudit &s) { return std::string(1, sign_char(s.expected)); });
        line("algebraic", [](const SignAudit &s) { return std::string(1, sign_char(s.algebraic)); });
        if (rows.front()->oracle_run) {
            line("oracle", [](const SignAudit &s) { return std::string(1, sign_char(s.oracle)); });
        }
        if (std::any_of(rows.begin(), rows.end(), [](const SignAudit *s) { return !s->passed(); })) {
            line("", [](const SignAudit &s) { return std::string(s.passed() ? "" : "FAIL"); });
        }
    }
    for (const auto &w : warnings) {
        out << "warning: " << w << '\n';
    }
    out << '\n' << checks() - failures() << '/' << checks() << " checks passed";
    out << (oracle_run ? "" : " (oracle skipped)") << '\n';
    return out.str();
}

AuditReport verify_plan(const CwsCode &code, const LoadedPlan &loaded, std::size_t oracle_cap) {
    auto actual = code_hash(code);
    if (loaded.code_hash != actual) {
        throw HashMismatch("plan was computed for code " + loaded.code_hash + ", not " + actual);
    }
    const auto &plan = loaded.plan;
    const auto &errors = loaded.errors;
    Oracle oracle(code, oracle_cap);
    AuditReport report;
    report.oracle_run = oracle.enabled;
    if (!oracle.enabled) {
        report.warnings.push_back("n=" + std::to_string(code.n()) + " exceeds the oracle cap " +
                                  std::to_string(oracle_cap) + "; dense checks skipped");
    }
    if (plan.classes.empty() && plan.type4_observables.empty()) {
        report.warnings.push_back("plan is empty; nothing to verify");
        return report;
    }
    report.pauli_in_kernel = audit_pauli_layer(code, plan.pauli_observables);

    std::vector<std::vector<std::size_t>> applied(plan.type4_observables.size());
    for (const auto &c : plan.classes) {
        for (const auto &step : c.refinements) {
            if (step.observable < applied.size()) {
                auto &dst = applied[step.observable];
                dst.insert(dst.end(), step.members.begin(), step.members.end());
            }
        }
    }
    for (std::size_t k = 0; k < plan.type4_observables.size(); ++k) {
        auto &members = applied[k];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        report.observables.push_back(
            audit_observable(code, observable_name(k), plan.type4_observables[k], errors.subset(members), oracle,
                             plan.mode == SearchMode::kCorollary));
    }

    auto partition = partition_by_signs(code, errors, plan.pauli_observables);
    for (const auto &c : plan.classes) {
        std::vector<std::string> labels;
        for (auto i : c.syndrome.members) {
            labels.push_back(errors[i].label);
        }
        report.classes.push_back(audit_class(c.syndrome.sign_string(), std::move(labels), partition));
        for (const auto &step : c.refinements) {
            const auto &a = plan.type4_observables.at(step.observable);
            for (std::size_t m = 0; m < step.members.size(); ++m) {
                report.signs.push_back(audit_sign(code, oracle, c.syndrome.sign_string(), errors[step.members[m]],
                                                  observable_name(step.observable), a, step.signs[m]));
            }
        }
        if (!c.unresolved.empty()) {
            report.warnings.push_back("class " + c.syndrome.sign_string() + " has unresolved errors");
        }
    }
    return report;
}

AuditReport verify_external(const CwsCode &code, const ExternalTable &table, const ErrorSet &errors,
                            std::size_t oracle_cap) {
    Oracle oracle(code, oracle_cap);
    AuditReport report;
    report.oracle_run = oracle.enabled;
    if (!oracle.enabled) {
        report.warnings.push_back("n=" + std::to_string(code.n()) + " exceeds the oracle cap " +
                                  std::to_string(oracle_cap) + "; dense checks skipped");
    }
    if (table.entries.empty() && table.observables.empty()) {
        report.warnings.push_back("table is empty; nothing to verify");
        return report;
    }
    report.pauli_in_kernel = audit_pauli_layer(code, table.pauli_observables);

    // Every error named in the table, resolved once.
    std::vector<LabeledError> named;
    std::map<std::string, std::size_t> index;
    auto resolve = [&](const std::string &label) -> const LabeledError & {
        if (auto it = index.find(label); it != index.end()) {
            return named[it->second];
        }
        LabeledError e;
        try {
            e = errors[errors.index_of(label)];
        } catch (const std::out_of_range &) {
            e = parse_error_entry(json(label), code.n());
            e.label = label;
        }
        index[label] = named.size();
        named.push_back(std::move(e));
        return named.back();
    };
    std::map<std::string, std::size_t> by_name;
    for (std::size_t k = 0; k < table.observables.size(); ++k) {
        by_name[table.observables[k].name] = k;
    }
    std::vector<std::vector<LabeledError>> applied(table.observables.size());
    for (const auto &entry : table.entries) {
        auto it = by_name.find(entry.observable);
        if (it == by_name.end()) {
            throw FormatError("class " + entry.signs + " uses unknown observable '" + entry.observable + "'");
        }
        auto &dst = applied[it->second];
        for (const auto &label : entry.errors) {
            if (std::none_of(dst.begin(), dst.end(), [&](const auto &e) { return e.label == label; })) {
                dst.push_back(resolve(label));
            }
        }
    }
    for (std::size_t k = 0; k < table.observables.size(); ++k) {
        const auto &o = table.observables[k];
        report.observables.push_back(audit_observable(code, o.name, o.op, ErrorSet(applied[k]), oracle, true));
        if (applied[k].empty()) {
            report.warnings.push_back(o.name + " is not used by any class");
        }
    }

    auto partition = partition_by_signs(code, errors, table.pauli_observables);
    for (const auto &entry : table.entries) {
        report.classes.push_back(audit_class(entry.signs, entry.errors, partition));
        const auto &o = table.observables[by_name.at(entry.observable)];
        for (std::size_t m = 0; m < entry.errors.size(); ++m) {
            int expected = entry.eigenvalues[m] == '+' ? 1 : -1;
            report.signs.push_back(
                audit_sign(code, oracle, entry.signs, resolve(entry.errors[m]), o.name, o.op, expected));
        }
    }
    for (const auto &[signs, members] : partition) {
        bool listed = std::any_of(table.entries.begin(), table.entries.end(),
                                  [&](const auto &e) { return e.signs == signs; });
        if (!listed && members.size() > 1) {
            report.warnings.push_back("class " + signs + " with " + std::to_string(members.size()) +
                                      " errors is not in the table");
        }
    }
    return report;
}

}  // namespace cws
