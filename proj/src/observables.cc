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

#include "cws/observables.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <thread>

namespace cws {

namespace {

BinaryVector bitwise_or(const BinaryVector &a, const BinaryVector &b) { return a ^ b ^ (a & b); }

// Per-member data for evaluating candidate observables on a fixed subset.
struct SubsetView {
    const CwsCode &code;
    std::vector<BinaryVector> classical;

    SubsetView(const CwsCode &c, const ErrorSet &errors) : code(c) {
        classical.reserve(errors.size());
        for (const auto &e : errors) {
            classical.push_back(classicalize(code, e.op));
        }
    }
};

bool decodes_classical(const CwsCode &code, const Type4Observable &a, const BinaryVector &rhs,
                       const BinaryVector &classical) {
    auto w = a.v ^ f_map_classical(a.v1, a.v2, classical);
    return code.codeword_matrix() * w == rhs;
}

int eigenvalue_classical(const Type4Observable &a, const BinaryVector &classical) {
    int m = dot(a.v, classical) ? -1 : 1;
    return f_map_classical(a.v1, a.v2, classical).any() ? -m : m;
}

// Signs of `a` over the subset when `a` is a decoding observable for all of
// it and the signs are not all equal.
std::optional<std::vector<int>> splitting_signs(const SubsetView &view, const Type4Observable &a,
                                                const BinaryVector &rhs) {
    std::vector<int> signs;
    signs.reserve(view.classical.size());
    for (const auto &c : view.classical) {
        if (!decodes_classical(view.code, a, rhs, c)) {
            return std::nullopt;
        }
        signs.push_back(eigenvalue_classical(a, c));
    }
    if (std::all_of(signs.begin(), signs.end(), [&](int s) { return s == signs.front(); })) {
        return std::nullopt;
    }
    return signs;
}

struct Hit {
    std::size_t first = 0;
    std::size_t second = 0;
    Type4Observable observable;
};

// Scans outer indices 0..count-1; `scan(i, abandon)` returns the first hit
// for outer index i. Workers take outer indices round-robin and the hit
// with the smallest (first, second) wins, so the answer is the one a
// serial scan would return.
std::optional<Hit> first_hit(std::size_t count, unsigned threads,
                             const std::function<std::optional<Hit>(std::size_t, const std::atomic<std::size_t> &)> &scan) {
    threads = std::max(1u, threads);
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<Hit>> found(threads);
    auto worker = [&](unsigned w) {
        for (std::size_t i = w; i < count; i += threads) {
            if (i > best.load(std::memory_order_relaxed)) {
                return;
            }
            if (auto hit = scan(i, best)) {
                found[w] = std::move(hit);
                auto current = best.load();
                while (i < current && !best.compare_exchange_weak(current, i)) {
                }
                return;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back(worker, w);
        }
    }
    std::optional<Hit> result;
    for (auto &f : found) {
        if (f && (!result || std::pair(f->first, f->second) < std::pair(result->first, result->second))) {
            result = std::move(f);
        }
    }
    return result;
}

}  // namespace

Type4Observable Type4Observable::make(BinaryVector v, BinaryVector v1, BinaryVector v2) {
    Type4Observable a{std::move(v), std::move(v1), std::move(v2)};
    if (a.v.size() != a.v1.size() || a.v.size() != a.v2.size()) {
        throw std::invalid_argument("type-4 observable vectors differ in length");
    }
    if (!a.has_valid_form()) {
        throw std::invalid_argument("type-4 observable needs V1 != V2 with both nonzero (got V1=" + a.v1.str() +
                                    ", V2=" + a.v2.str() + ")");
    }
    return a;
}

bool Type4Observable::has_valid_form() const {
    return v.size() == v1.size() && v.size() == v2.size() && v1.any() && v2.any() && v1 != v2;
}

std::vector<BinaryVector> pauli_normalizer_generators(const CwsCode &code) { return code.codeword_system().kernel(); }

BinaryVector f_map(const BinaryVector &v1, const BinaryVector &v2, const PauliOperator &g, const CwsCode &code) {
    if (g.size() != code.n() || v1.size() != code.n() || v2.size() != code.n()) {
        throw std::invalid_argument("f_map size mismatch");
    }
    bool anti1 = !commutes(stabilizer_element(code.generators(), v1), g);
    bool anti2 = !commutes(stabilizer_element(code.generators(), v2), g);
    if (anti1 && anti2) {
        return v1 ^ v2;
    }
    if (anti2) {
        return v1;
    }
    if (anti1) {
        return v2;
    }
    return BinaryVector(code.n());
}

BinaryVector f_map_classical(const BinaryVector &v1, const BinaryVector &v2, const BinaryVector &classical) {
    bool anti1 = dot(v1, classical);
    bool anti2 = dot(v2, classical);
    if (anti1 && anti2) {
        return v1 ^ v2;
    }
    if (anti2) {
        return v1;
    }
    if (anti1) {
        return v2;
    }
    return BinaryVector(classical.size());
}

BinaryVector stabilization_rhs(const CwsCode &code, const BinaryVector &v1, const BinaryVector &v2) {
    const auto &c = code.codeword_matrix();
    return bitwise_or(c * v1, c * v2);
}

bool stabilizes(const CwsCode &code, const Type4Observable &a) {
    return code.codeword_matrix() * a.v == stabilization_rhs(code, a.v1, a.v2);
}

bool is_decoding_observable(const CwsCode &code, const ErrorSet &errors, const Type4Observable &a) {
    auto rhs = stabilization_rhs(code, a.v1, a.v2);
    for (const auto &e : errors) {
        if (!decodes_classical(code, a, rhs, classicalize(code, e.op))) {
            return false;
        }
    }
    return true;
}

int eigenvalue_on_error(const CwsCode &code, const Type4Observable &a, const PauliOperator &e) {
    auto c = classicalize(code, e);
    if (!decodes_classical(code, a, stabilization_rhs(code, a.v1, a.v2), c)) {
        throw std::domain_error("observable is not a decoding observable for error " + default_label(e));
    }
    return eigenvalue_classical(a, c);
}

std::string SyndromeClass::sign_string() const {
    std::string out;
    for (int s : signs) {
        out += s > 0 ? '+' : '-';
    }
    return out;
}

std::vector<SyndromeClass> pauli_syndrome_partition(const CwsCode &code, const ErrorSet &errors,
                                                    const std::vector<BinaryVector> &observables) {
    // Key: true marks '-', so std::map order puts '+' first.
    std::map<std::vector<bool>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        auto c = classicalize(code, errors[i].op);
        std::vector<bool> key;
        key.reserve(observables.size());
        for (const auto &o : observables) {
            key.push_back(dot(o, c));
        }
        groups[key].push_back(i);
    }
    std::vector<SyndromeClass> out;
    for (auto &[key, members] : groups) {
        SyndromeClass cls;
        for (bool minus : key) {
            cls.signs.push_back(minus ? -1 : 1);
        }
        cls.members = std::move(members);
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<BinaryVector> error_normalizer_basis(const CwsCode &code, const ErrorSet &subset) {
    std::vector<BinaryVector> rows;
    rows.reserve(subset.size());
    for (const auto &e : subset) {
        rows.push_back(classicalize(code, e.op));
    }
    return kernel_basis(BinaryMatrix(std::move(rows), code.n()));
}

std::vector<BinaryVector> error_normalizer_elements(const CwsCode &code, const ErrorSet &subset) {
    auto basis = error_normalizer_basis(code, subset);
    return enumerate_span(basis, code.n());
}

std::string to_string(SearchMode mode) { return mode == SearchMode::kCorollary ? "corollary" : "exhaustive"; }

SearchMode search_mode_from_string(const std::string &text) {
    if (text == "corollary") {
        return SearchMode::kCorollary;
    }
    if (text == "exhaustive") {
        return SearchMode::kExhaustive;
    }
    throw std::invalid_argument("unknown search mode '" + text + "' (expected corollary or exhaustive)");
}

SearchResult search_type4(const CwsCode &code, const ErrorSet &subset, const SearchOptions &options) {
    if (subset.size() < 2) {
        throw std::invalid_argument("search_type4 needs at least two errors to split");
    }
    const auto n = code.n();
    const SubsetView view(code, subset);
    const auto &system = code.codeword_system();
    const auto &cmat = code.codeword_matrix();

    std::vector<BinaryVector> candidates;
    if (options.mode == SearchMode::kCorollary) {
        candidates = error_normalizer_elements(code, subset);
    } else {
        if (n > 20) {
            throw std::invalid_argument("exhaustive search is limited to n <= 20");
        }
        const std::uint64_t total = std::uint64_t{1} << n;
        candidates.reserve(total);
        for (std::uint64_t x = 0; x < total; ++x) {
            candidates.push_back(BinaryVector::from_index(n, x));
        }
    }
    // candidates[0] is the zero vector in both modes.
    const std::size_t count = candidates.size();
    std::vector<BinaryVector> images;
    images.reserve(count);
    for (const auto &v : candidates) {
        images.push_back(cmat * v);
    }

    SearchResult result;
    const std::uint64_t nonzero = count - 1;
    result.search_space = nonzero < 2 ? 0 : nonzero * (nonzero - 1) / 2;

    auto scan = [&](std::size_t i, const std::atomic<std::size_t> &best) -> std::optional<Hit> {
        if (i == 0) {
            return std::nullopt;
        }
        const auto &v1 = candidates[i];
        for (std::size_t j = i + 1; j < count; ++j) {
            if (best.load(std::memory_order_relaxed) < i) {
                return std::nullopt;
            }
            const auto &v2 = candidates[j];
            auto rhs = bitwise_or(images[i], images[j]);
            auto x0 = system.solve_particular(rhs);
            if (!x0) {
                continue;
            }
            Type4Observable a{std::move(*x0), v1, v2};
            if (options.mode == SearchMode::kExhaustive) {
                auto f_first = f_map_classical(v1, v2, view.classical.front());
                bool consistent = true;
                for (std::size_t k = 1; k < view.classical.size() && consistent; ++k) {
                    consistent = system.in_kernel(f_first ^ f_map_classical(v1, v2, view.classical[k]));
                }
                if (!consistent) {
                    continue;
                }
                a.v = system.coset_minimum(a.v ^ f_first);
            }
            if (splitting_signs(view, a, rhs)) {
                return Hit{i, j, std::move(a)};
            }
        }
        return std::nullopt;
    };

    if (auto hit = first_hit(count, options.threads, scan)) {
        result.observable = std::move(hit->observable);
    }
    return result;
}

bool DecodingPlan::complete() const {
    return std::all_of(classes.begin(), classes.end(), [](const ClassPlan &c) { return c.unresolved.empty(); });
}

std::size_t DecodingPlan::use_count(std::size_t index) const {
    std::size_t total = 0;
    for (const auto &c : classes) {
        for (const auto &step : c.refinements) {
            total += step.observable == index;
        }
    }
    return total;
}

namespace {

class PlanBuilder {
   public:
    PlanBuilder(const CwsCode &code, const ErrorSet &errors, const SearchOptions &options, DecodingPlan &plan)
        : code_(code), errors_(errors), options_(options), plan_(plan) {
        for (const auto &e : errors_) {
            classical_.push_back(classicalize(code_, e.op));
        }
    }

    void refine(ClassPlan &cls, const std::vector<std::size_t> &members) {
        if (members.size() < 2) {
            return;
        }
        if (all_same_image(members)) {
            if (!equivalent_on_code(members)) {
                cls.unresolved.push_back({members, 0});
            }
            return;
        }
        auto subset = errors_.subset(members);
        const SubsetView view(code_, subset);

        std::optional<std::size_t> chosen;
        std::vector<int> signs;
        bool reused = false;
        for (std::size_t k = 0; k < plan_.type4_observables.size() && !chosen; ++k) {
            const auto &a = plan_.type4_observables[k];
            if (auto s = splitting_signs(view, a, stabilization_rhs(code_, a.v1, a.v2))) {
                chosen = k;
                signs = std::move(*s);
                reused = true;
            }
        }
        if (!chosen) {
            auto found = search_type4(code_, subset, options_);
            if (!found.observable) {
                cls.unresolved.push_back({members, found.search_space});
                return;
            }
            const auto &a = *found.observable;
            signs = *splitting_signs(view, a, stabilization_rhs(code_, a.v1, a.v2));
            plan_.type4_observables.push_back(a);
            chosen = plan_.type4_observables.size() - 1;
        }
        cls.refinements.push_back({*chosen, members, signs, reused});

        std::vector<std::size_t> plus;
        std::vector<std::size_t> minus;
        for (std::size_t k = 0; k < members.size(); ++k) {
            (signs[k] > 0 ? plus : minus).push_back(members[k]);
        }
        refine(cls, plus);
        refine(cls, minus);
    }

   private:
    bool all_same_image(const std::vector<std::size_t> &members) const {
        return std::all_of(members.begin(), members.end(),
                           [&](std::size_t i) { return classical_[i] == classical_[members.front()]; });
    }

    // Errors with one Cl_S image act identically on the code iff their
    // quotient is a degenerate-pass error.
    bool equivalent_on_code(const std::vector<std::size_t> &members) const {
        const auto &first = errors_[members.front()].op;
        for (auto i : members) {
            if (!detects(code_, multiply(first, errors_[i].op)).detected()) {
                return false;
            }
        }
        return true;
    }

    const CwsCode &code_;
    const ErrorSet &errors_;
    const SearchOptions &options_;
    DecodingPlan &plan_;
    std::vector<BinaryVector> classical_;
};

}  // namespace

DecodingPlan build_decoding_plan(const CwsCode &code, const ErrorSet &errors, const SearchOptions &options) {
    for (const auto &e : errors) {
        auto d = detects(code, e.op);
        if (!d.detected()) {
            throw UndetectableError(e.label, "error " + e.label + " is not detected by the code: " + d.describe());
        }
    }
    DecodingPlan plan;
    plan.mode = options.mode;
    plan.pauli_observables = pauli_normalizer_generators(code);
    PlanBuilder builder(code, errors, options, plan);
    for (auto &cls : pauli_syndrome_partition(code, errors, plan.pauli_observables)) {
        ClassPlan cp;
        cp.syndrome = std::move(cls);
        builder.refine(cp, cp.syndrome.members);
        plan.classes.push_back(std::move(cp));
    }
    return plan;
}

}  // namespace cws
