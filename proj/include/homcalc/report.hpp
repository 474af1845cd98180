#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace homcalc {

struct Witness {
    std::string assignment;
    std::string lhs;
    std::string rhs;
};

struct AxiomResult {
    std::string id;
    std::string anchor;
    bool passed = true;
    std::size_t checked = 0;
    std::optional<Witness> witness;
};

struct VerificationReport {
    std::string structure;
    unsigned sample_degree = 0;
    std::vector<AxiomResult> axioms;
    double elapsed_ms = 0;

    bool passed() const;
    const AxiomResult* find(const std::string& id) const;
    // First failing axiom id, empty when everything passed.
    std::string first_failure() const;
    void append(const VerificationReport& other);
    std::string to_text() const;
};

// Accumulates one axiom's sample checks and remembers the first counterexample.
class AxiomCheck {
public:
    AxiomCheck(std::string id, std::string anchor);

    bool failed() const { return !result_.passed; }

    // Returns false once the axiom has failed, so callers can stop sampling.
    template <class T>
    bool equal(const T& lhs, const T& rhs, const std::function<std::string()>& assignment)
    {
        ++result_.checked;
        if (lhs == rhs) return true;
        fail(assignment(), lhs.to_string(), rhs.to_string());
        return false;
    }

    bool holds(bool ok, const std::function<std::string()>& assignment, const std::function<std::string()>& lhs,
               const std::function<std::string()>& rhs);

    void fail(std::string assignment, std::string lhs, std::string rhs);
    const AxiomResult& result() const { return result_; }

private:
    AxiomResult result_;
};

} // namespace homcalc
