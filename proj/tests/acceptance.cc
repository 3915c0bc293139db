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

// Acceptance checks on the ((10,20,3)) fixture. One PASS/FAIL line per
// criterion; indented lines carry detail. Usage: acceptance [1-6 ...].

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "cli.h"
#include "cws/io.h"
#include "cws/observables.h"
#include "cws/verify.h"
#include "test_util.h"

namespace cws {
namespace {

using Clock = std::chrono::steady_clock;
using testing::source_path;

// Reuse counts of the corollary-mode plan, frozen from the first run.
const std::vector<std::size_t> kGoldenUseCounts{4, 4, 2, 1, 1, 1, 2};

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            details.push_back("failed: " + what);
        }
    }
    void info(const std::string &what) { details.push_back(what); }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string ms(double seconds) { return std::to_string(static_cast<long>(seconds * 1000)) + " ms"; }

const CwsCode &code() { return testing::cross_code(); }

const ExternalTable &table() {
    static const ExternalTable t = parse_external_table(
        parse_json(read_text_file(source_path("fixtures/paper-table2.json")), "paper-table2.json"), 10);
    return t;
}

const ErrorSet &weight_one() {
    static const ErrorSet e = ErrorSet::single_qubit(10, false);
    return e;
}

const std::vector<StateVector> &words() {
    static const std::vector<StateVector> w = codeword_states(code(), graph_state(code()));
    return w;
}

Outcome criterion_1() {
    Outcome out;
    auto start = Clock::now();
    auto basis = pauli_normalizer_generators(code());
    out.check(basis.size() == 4, "kernel dimension " + std::to_string(basis.size()) + ", expected 4");
    auto span = enumerate_span(basis, 10);
    for (std::size_t k = 0; k < table().pauli_observables.size(); ++k) {
        const auto &o = table().pauli_observables[k];
        out.check(std::binary_search(span.begin(), span.end(), o), "O_" + std::to_string(k + 1) + " not in ker(C)");
    }
    out.check(enumerate_span(table().pauli_observables, 10) == span, "span(O_1..O_4) differs from ker(C)");
    auto t = seconds_since(start);
    out.check(t < 1.0, "runtime " + ms(t) + " over 1 s");
    out.info("ker(C) dimension " + std::to_string(basis.size()) + ", rank(C) " +
             std::to_string(code().codeword_system().rank()) + ", " + ms(t));
    return out;
}

// Errors each Table 2 observable is applied to in the measurement figure.
std::map<std::string, std::vector<std::string>> figure_usage() {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto &e : table().entries) {
        auto &dst = out[e.observable];
        dst.insert(dst.end(), e.errors.begin(), e.errors.end());
    }
    return out;
}

ErrorSet by_labels(const std::vector<std::string> &labels) {
    std::vector<std::size_t> idx;
    for (const auto &l : labels) {
        idx.push_back(weight_one().index_of(l));
    }
    return weight_one().subset(idx);
}

Outcome criterion_2() {
    Outcome out;
    auto start = Clock::now();
    auto usage = figure_usage();
    std::mt19937_64 rng(2);
    StateVector probe{10, {}};
    for (std::size_t k = 0; k < 1024; ++k) {
        probe.amplitudes.emplace_back(std::normal_distribution<double>()(rng), std::normal_distribution<double>()(rng));
    }
    std::size_t states = 0;
    std::size_t eigenstates = 0;
    std::size_t common = 0;
    std::size_t applied_total = 0;
    std::size_t literal_decoding = 0;
    for (const auto &[name, a] : table().observables) {
        // (a) type-4 invariants
        auto element = GroupAlgebraElement::from_type4(a);
        out.check(a.has_valid_form(), name + ": V1, V2 not distinct and nonzero");
        out.check(element.support_size() == 4 && is_involution(element), name + ": coefficients fail A^2 = I");
        auto twice = apply(element, code(), apply(element, code(), probe));
        double diff = 0;
        for (std::size_t k = 0; k < 1024; ++k) {
            diff += std::norm(twice.amplitudes[k] - probe.amplitudes[k]);
        }
        out.check(std::sqrt(diff) < 1e-10 * probe.norm(), name + ": dense A^2 != I");
        // (b) stabilization
        out.check(stabilizes(code(), a), name + ": C V != p");
        out.check(oracle_stabilizes(a, code(), words()), name + ": oracle A Z^{C_i}|psi> != Z^{C_i}|psi>");
        // (c) decoding over the errors it is applied to
        auto applied = by_labels(usage[name]);
        bool decoding = is_decoding_observable(code(), applied, a);
        std::string labels;
        for (const auto &e : applied) {
            labels += (labels.empty() ? "" : ",") + e.label;
        }
        out.check(decoding, name + ": decoding condition fails on {" + labels + "}");
        literal_decoding += is_decoding_observable(code(), weight_one(), a);
        // (d) dense eigenchecks on every codeword state per error
        for (const auto &e : applied) {
            std::set<int> seen;
            bool leak = false;
            ++applied_total;
            for (const auto &w : words()) {
                ++states;
                auto lambda = eigencheck(a, code(), apply(e.op, w), kEigenTolerance);
                if (!lambda) {
                    leak = true;
                } else {
                    ++eigenstates;
                    seen.insert(*lambda);
                }
            }
            if (!leak && seen.size() == 1) {
                ++common;
            } else {
                out.check(false, name + ": oracle finds " + e.label + " W_j|psi> not a common eigenvector");
            }
        }
    }
    auto t = seconds_since(start);
    out.check(t < 10.0, "runtime " + ms(t) + " over 10 s");
    out.info("oracle: " + std::to_string(eigenstates) + "/" + std::to_string(states) +
             " corrupted codeword states are eigenvectors; " + std::to_string(common) + "/" +
             std::to_string(applied_total) + " errors give one eigenvalue across all 20 codewords; " + ms(t));
    out.info("over all 30 weight-1 errors at once, " + std::to_string(literal_decoding) +
             "/7 observables satisfy the decoding condition");
    return out;
}

Outcome criterion_3() {
    Outcome out;
    auto classes = pauli_syndrome_partition(code(), weight_one(), table().pauli_observables);
    std::map<std::string, std::set<std::string>> computed;
    for (const auto &c : classes) {
        for (auto i : c.members) {
            computed[c.sign_string()].insert(weight_one()[i].label);
        }
    }
    out.check(computed.size() == 15, std::to_string(computed.size()) + " classes, expected 15");
    std::size_t members_ok = 0;
    std::size_t signs_ok = 0;
    std::size_t signs_total = 0;
    std::map<std::string, const Type4Observable *> ops;
    for (const auto &o : table().observables) {
        ops[o.name] = &o.op;
    }
    for (const auto &entry : table().entries) {
        std::set<std::string> want(entry.errors.begin(), entry.errors.end());
        bool same = computed[entry.signs] == want;
        members_ok += same;
        out.check(same, "class " + entry.signs + " membership");
        const auto &a = *ops.at(entry.observable);
        for (std::size_t m = 0; m < entry.errors.size(); ++m) {
            ++signs_total;
            int expected = entry.eigenvalues[m] == '+' ? 1 : -1;
            const auto &op = weight_one()[weight_one().index_of(entry.errors[m])].op;
            std::optional<int> algebraic;
            try {
                algebraic = eigenvalue_on_error(code(), a, op);
            } catch (const std::domain_error &) {
            }
            auto oracle = oracle_eigenvalue(a, code(), words(), op);
            auto show = [](std::optional<int> s) { return s ? std::string(*s > 0 ? "+" : "-") : std::string("leak"); };
            bool ok = algebraic == expected && oracle == expected;
            signs_ok += ok;
            out.check(ok, entry.signs + " " + entry.observable + " on " + entry.errors[m] + ": expected " +
                              show(expected) + ", algebraic " + show(algebraic) + ", oracle " + show(oracle));
        }
    }
    out.info("memberships " + std::to_string(members_ok) + "/" + std::to_string(table().entries.size()) +
             ", signs " + std::to_string(signs_ok) + "/" + std::to_string(signs_total));
    return out;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli_run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("cwsdecode-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir / name;
}

Outcome criterion_4() {
    Outcome out;
    auto plan_file = scratch("plan.json").string();
    auto run = cli_run({"plan", source_path("codes/cross-10-20-3.json").string(), "--out", plan_file});
    out.check(run.code == 0, "plan exit code " + std::to_string(run.code) + ": " + run.err);
    if (run.code != 0 && run.code != 2) {
        return out;
    }
    auto doc = parse_json(read_text_file(plan_file), plan_file);
    out.check(doc["complete"].get<bool>(), "plan is partial");
    std::set<std::string> resolved;
    std::size_t split_once = 0;
    std::size_t nontrivial = 0;
    for (const auto &c : doc["classes"]) {
        if (c["members"].size() < 2) {
            for (const auto &m : c["members"]) {
                resolved.insert(m.get<std::string>());
            }
            continue;
        }
        ++nontrivial;
        const auto &steps = c["refinements"];
        bool single = steps.size() == 1 && c["unresolved"].empty();
        if (single) {
            auto signs = steps[0]["eigenvalues"].get<std::string>();
            single = std::set<char>(signs.begin(), signs.end()).size() == signs.size();
        }
        split_once += single;
        out.check(single, "class " + c["signs"].get<std::string>() + " needs more than one type-4 measurement");
        if (single) {
            for (const auto &m : c["members"]) {
                resolved.insert(m.get<std::string>());
            }
        }
    }
    std::size_t weight_one_resolved = 0;
    for (const auto &e : weight_one()) {
        weight_one_resolved += resolved.contains(e.label);
    }
    out.check(weight_one_resolved == 30, std::to_string(weight_one_resolved) + "/30 errors resolved");
    std::vector<std::size_t> uses;
    std::size_t max_uses = 0;
    for (const auto &a : doc["type4_observables"]) {
        uses.push_back(a["uses"].get<std::size_t>());
        max_uses = std::max(max_uses, uses.back());
    }
    out.check(max_uses >= 2, "no observable reused across classes");
    std::string use_text;
    for (auto u : uses) {
        use_text += (use_text.empty() ? "" : ",") + std::to_string(u);
    }
    out.check(uses == kGoldenUseCounts, "reuse counts [" + use_text + "] differ from the golden values");
    out.info(std::to_string(weight_one_resolved) + "/30 resolved, " + std::to_string(split_once) + "/" +
             std::to_string(nontrivial) + " classes split by one measurement, " + std::to_string(uses.size()) +
             " type-4 observables, uses [" + use_text + "], max reuse " + std::to_string(max_uses));
    return out;
}

// Random real combination: a type-4 pattern, one signed term, or up to eight
// free coefficients.
GroupAlgebraElement random_element(std::mt19937_64 &rng, std::size_t n) {
    static const double kValues[] = {-1.0, -0.5, 0.5, 1.0};
    GroupAlgebraElement out;
    auto kind = rng() % 4;
    auto vec = [&] { return testing::random_vector(rng, n); };
    if (kind == 0) {
        // type-4 pattern, possibly negated
        BinaryVector v1;
        BinaryVector v2;
        do {
            v1 = vec();
            v2 = vec();
        } while (v1.none() || v2.none() || v1 == v2);
        double sign = rng() % 2 ? 1.0 : -1.0;
        auto v = vec();
        out.add(v, -0.5 * sign);
        out.add(v ^ v1, 0.5 * sign);
        out.add(v ^ v2, 0.5 * sign);
        out.add(v ^ v1 ^ v2, 0.5 * sign);
    } else if (kind == 1) {
        out.add(vec(), rng() % 2 ? 1.0 : -1.0);
    } else {
        auto terms = 1 + rng() % 8;
        for (std::size_t t = 0; t < terms; ++t) {
            out.add(vec(), kValues[rng() % 4]);
        }
    }
    return out;
}

bool dense_involution(const GroupAlgebraElement &a, const CwsCode &c) {
    auto m = dense_matrix(a, c);
    auto id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return (m * m - id).norm() < 1e-12;
}

ErrorSet detectable_weight_one(const CwsCode &c) {
    auto all = ErrorSet::single_qubit(c.n(), true);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (detects(c, all[i].op).detected()) {
            keep.push_back(i);
        }
    }
    return all.subset(keep);
}

Outcome criterion_5() {
    Outcome out;
    std::mt19937_64 rng(5);

    // 500 random type-4 triples square to the identity.
    std::size_t ok = 0;
    for (int trial = 0; trial < 500; ++trial) {
        auto c = testing::random_code(rng, 1 + rng() % 5, 2);
        if (c.n() < 2) {
            c = testing::random_code(rng, 2, 2);
        }
        BinaryVector v1;
        BinaryVector v2;
        do {
            v1 = testing::random_vector(rng, c.n());
            v2 = testing::random_vector(rng, c.n());
        } while (v1.none() || v2.none() || v1 == v2);
        Type4Observable a{testing::random_vector(rng, c.n()), v1, v2};
        ok += dense_involution(GroupAlgebraElement::from_type4(a), c);
    }
    out.check(ok == 500, "type-4 A^2 = I on " + std::to_string(ok) + "/500 triples");
    out.info("type-4 triples squaring to I: " + std::to_string(ok) + "/500");

    // Coefficient conditions agree with dense A^2 = I.
    std::size_t agree = 0;
    std::size_t involutions = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto c = testing::random_code(rng, 2 + rng() % 4, 2);
        auto a = random_element(rng, c.n());
        bool dense = dense_involution(a, c);
        involutions += dense;
        agree += is_involution(a) == dense;
    }
    out.check(agree == 200, "coefficient test disagrees with dense A^2 = I on " + std::to_string(200 - agree) +
                                " elements");
    out.check(involutions > 0 && involutions < 200, "random elements not mixed");
    out.info("coefficient test vs dense: " + std::to_string(agree) + "/200 agree (" + std::to_string(involutions) +
             " involutions)");

    // S^{(V1,V2)} g = -S^{F(g)} g S^{(V1,V2)} when g anticommutes with S^{V1} or S^{V2}.
    std::size_t lemma = 0;
    for (int trial = 0; trial < 200;) {
        auto c = testing::random_code(rng, 2 + rng() % 4, 2);
        auto n = c.n();
        auto v1 = testing::random_vector(rng, n);
        auto v2 = testing::random_vector(rng, n);
        PauliOperator g(testing::random_vector(rng, n), testing::random_vector(rng, n));
        if (v1.none() || v2.none() || v1 == v2) {
            continue;
        }
        auto cl = classicalize(c, g);
        if (!dot(v1, cl) && !dot(v2, cl)) {
            continue;
        }
        ++trial;
        auto pair = dense_matrix(GroupAlgebraElement::from_type4({BinaryVector(n), v1, v2}), c);
        auto f = f_map(v1, v2, g, c);
        auto gm = dense_matrix(g);
        Eigen::MatrixXcd lhs = pair * gm;
        Eigen::MatrixXcd rhs = -dense_stabilizer(c, f) * gm * pair;
        lemma += (lhs - rhs).norm() < 1e-12;
    }
    out.check(lemma == 200, "commutation identity holds on " + std::to_string(lemma) + "/200");
    out.info("commutation identity: " + std::to_string(lemma) + "/200");

    // Algebra vs oracle, and corollary soundness, on 20 random small codes.
    std::size_t pairs = 0;
    std::size_t pair_agree = 0;
    std::size_t corollary_obs = 0;
    std::size_t corollary_sound = 0;
    std::size_t corollary_complete = 0;
    std::size_t exhaustive_complete = 0;
    std::size_t exhaustive_only = 0;
    for (int k = 0; k < 20; ++k) {
        auto c = testing::random_code(rng, 3 + rng() % 4, 8);
        auto errors = detectable_weight_one(c);
        auto psi_words = codeword_states(c, graph_state(c));
        auto corollary = build_decoding_plan(c, errors, {SearchMode::kCorollary, 1});
        auto exhaustive = build_decoding_plan(c, errors, {SearchMode::kExhaustive, 1});
        corollary_complete += corollary.complete();
        exhaustive_complete += exhaustive.complete();
        exhaustive_only += exhaustive.complete() && !corollary.complete();

        std::vector<Type4Observable> observables = corollary.type4_observables;
        observables.insert(observables.end(), exhaustive.type4_observables.begin(),
                           exhaustive.type4_observables.end());
        for (int extra = 0; extra < 4; ++extra) {
            auto v1 = testing::random_vector(rng, c.n());
            auto v2 = testing::random_vector(rng, c.n());
            if (v1.none() || v2.none() || v1 == v2) {
                continue;
            }
            auto v = c.codeword_system().solve_particular(stabilization_rhs(c, v1, v2));
            observables.push_back({v ? *v : testing::random_vector(rng, c.n()), v1, v2});
        }
        auto all = ErrorSet::single_qubit(c.n(), true);
        for (const auto &a : observables) {
            for (const auto &e : all) {
                ++pairs;
                std::optional<int> algebraic;
                try {
                    algebraic = eigenvalue_on_error(c, a, e.op);
                } catch (const std::domain_error &) {
                }
                pair_agree += algebraic == oracle_eigenvalue(a, c, psi_words, e.op);
            }
        }
        for (const auto &cls : corollary.classes) {
            for (const auto &step : cls.refinements) {
                ++corollary_obs;
                auto subset = errors.subset(step.members);
                bool sound = is_decoding_observable(c, subset, corollary.type4_observables[step.observable]);
                if (step.members.size() >= 2) {
                    sound = sound && search_type4(c, subset, {SearchMode::kExhaustive, 1}).observable.has_value();
                }
                corollary_sound += sound;
            }
            // Every corollary-mode search hit on a member pair.
            for (std::size_t x = 0; x < cls.syndrome.members.size(); ++x) {
                for (std::size_t y = x + 1; y < cls.syndrome.members.size(); ++y) {
                    auto pair = errors.subset({cls.syndrome.members[x], cls.syndrome.members[y]});
                    if (classicalize(c, pair[0].op) == classicalize(c, pair[1].op)) {
                        continue;
                    }
                    auto hit = search_type4(c, pair, {SearchMode::kCorollary, 1}).observable;
                    if (hit) {
                        ++corollary_obs;
                        corollary_sound += is_decoding_observable(c, pair, *hit) &&
                                           oracle_eigenvalue(*hit, c, psi_words, pair[0].op).has_value() &&
                                           oracle_eigenvalue(*hit, c, psi_words, pair[1].op).has_value();
                    }
                }
            }
        }
    }
    out.check(pair_agree == pairs, "eigenvalue_on_error vs oracle: " + std::to_string(pairs - pair_agree) +
                                       " disagreements");
    out.check(corollary_sound == corollary_obs, "corollary observables rejected by the exhaustive check: " +
                                                    std::to_string(corollary_obs - corollary_sound));
    out.info("eigenvalue_on_error vs oracle: " + std::to_string(pair_agree) + "/" + std::to_string(pairs) +
             " (observable, error) pairs agree");
    out.info("corollary observables accepted by the exhaustive check: " + std::to_string(corollary_sound) + "/" +
             std::to_string(corollary_obs));
    out.info("complete plans: corollary " + std::to_string(corollary_complete) + "/20, exhaustive " +
             std::to_string(exhaustive_complete) + "/20, exhaustive only " + std::to_string(exhaustive_only));
    return out;
}

Outcome criterion_6() {
    Outcome out;
    auto code_file = source_path("codes/cross-10-20-3.json").string();
    auto cores = std::max(2u, std::thread::hardware_concurrency());
    for (std::string mode : {"corollary", "exhaustive"}) {
        auto serial = scratch("serial-" + mode + ".json").string();
        auto parallel = scratch("parallel-" + mode + ".json").string();
        auto a = cli_run({"plan", code_file, "--mode", mode, "--threads", "1", "--out", serial});
        auto b = cli_run({"plan", code_file, "--mode", mode, "--threads", std::to_string(cores), "--out", parallel});
        out.check(a.code == b.code, mode + ": exit codes differ");
        bool same = read_text_file(serial) == read_text_file(parallel);
        out.check(same, mode + ": plan JSON differs between 1 and " + std::to_string(cores) + " threads");
        out.info(mode + ": 1 vs " + std::to_string(cores) + " threads " + (same ? "byte-identical" : "DIFFERENT"));
    }
    return out;
}

}  // namespace
}  // namespace cws

int main(int argc, char **argv) {
    using namespace cws;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"normalizer reproduction", criterion_1},
        {"Table 2 validation", criterion_2},
        {"sign-table reproduction", criterion_3},
        {"end-to-end plan", criterion_4},
        {"property suite", criterion_5},
        {"determinism", criterion_6},
    };
    std::set<int> selected;
    for (int k = 1; k < argc; ++k) {
        selected.insert(std::stoi(argv[k]));
    }
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        int id = static_cast<int>(k + 1);
        if (!selected.empty() && !selected.contains(id)) {
            continue;
        }
        Outcome outcome;
        try {
            outcome = criteria[k].second();
        } catch (const std::exception &e) {
            outcome.pass = false;
            outcome.details.push_back(std::string("exception: ") + e.what());
        }
        failures += !outcome.pass;
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[k].first << '\n';
        for (const auto &d : outcome.details) {
            std::cout << "    " << d << '\n';
        }
    }
    std::filesystem::remove_all(std::filesystem::temp_directory_path() /
                                ("cwsdecode-acceptance-" + std::to_string(::getpid())));
    return failures == 0 ? 0 : 1;
}
