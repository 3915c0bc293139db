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

// Cross-checks of decoding plans and reference tables: algebraic criteria
// next to the dense oracle, entry by entry.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cws/code.h"
#include "cws/io.h"
#include "cws/observables.h"

namespace cws {

class HashMismatch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ObservableAudit {
    std::string name;
    Type4Observable op;
    bool valid_form = false;
    bool stabilizes = false;
    std::optional<bool> oracle_stabilizes;  // absent when the oracle is off
    bool decoding = false;                  // over the errors it is applied to
    std::size_t applied_to = 0;
    // Exhaustive-mode observables may decode without fixing the code space.
    bool stabilization_required = true;

    bool stabilization_ok() const {
        return !stabilization_required || (stabilizes && oracle_stabilizes.value_or(true));
    }
    bool passed() const { return valid_form && decoding && stabilization_ok(); }
};

struct ClassAudit {
    std::string signs;
    std::vector<std::string> expected;  // members as listed
    std::vector<std::string> computed;  // members from the Pauli partition
    bool match = false;
};

struct SignAudit {
    std::string class_signs;
    std::string error;
    std::string observable;
    int expected = 0;
    std::optional<int> algebraic;  // absent: leaks information
    std::optional<int> oracle;     // absent: not an eigenvector, or oracle off
    bool oracle_run = false;

    bool passed() const {
        return algebraic == expected && (!oracle_run || oracle == expected);
    }
};

struct AuditReport {
    bool oracle_run = false;
    std::vector<bool> pauli_in_kernel;
    std::vector<ObservableAudit> observables;
    std::vector<ClassAudit> classes;
    std::vector<SignAudit> signs;
    std::vector<std::string> warnings;

    std::size_t failures() const;
    std::size_t checks() const;
    bool passed() const { return failures() == 0; }

    nlohmann::json to_json() const;
    /// Per-entry sign matrix: expected, algebraic and oracle rows.
    std::string render() const;
};

/// Oracle checks run when n <= oracle_cap.
/// Throws HashMismatch when the plan was computed for another code.
AuditReport verify_plan(const CwsCode &code, const LoadedPlan &plan, std::size_t oracle_cap);

/// Labels in the table resolve against `errors`; unknown labels are parsed
/// as sparse Pauli products.
AuditReport verify_external(const CwsCode &code, const ExternalTable &table, const ErrorSet &errors,
                            std::size_t oracle_cap);

}  // namespace cws
