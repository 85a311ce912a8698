#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tchrom/combinat.hpp"

namespace tchrom {

/// A named parameter of a checked instance: a number, or a rendered value
/// such as a composition "(1,2,1)".
using ParamValue = std::variant<Int, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

/// One failed instance of an exhaustive check.
struct Failure {
    Params params;
    Int expected = 0;
    Int actual = 0;
};

/// Outcome of checking one family of identities over many instances.
struct VerificationReport {
    VerificationReport() = default;
    explicit VerificationReport(std::string name) : family(std::move(name)) {}

    std::string family;
    Int instances = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }

    /// Counts one instance and records it when expected != actual.
    void check(Params params, Int expected, Int actual) {
        ++instances;
        if (expected != actual) failures.push_back({std::move(params), expected, actual});
    }

    void merge(const VerificationReport& other) {
        instances += other.instances;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

}  // namespace tchrom
