#include "homcalc/report.hpp"

#include <sstream>

namespace homcalc {

bool VerificationReport::passed() const
{
    for (const auto& a : axioms)
        if (!a.passed) return false;
    return true;
}

const AxiomResult* VerificationReport::find(const std::string& id) const
{
    for (const auto& a : axioms)
        if (a.id == id) return &a;
    return nullptr;
}

std::string VerificationReport::first_failure() const
{
    for (const auto& a : axioms)
        if (!a.passed) return a.id;
    return {};
}

void VerificationReport::append(const VerificationReport& other)
{
    axioms.insert(axioms.end(), other.axioms.begin(), other.axioms.end());
    elapsed_ms += other.elapsed_ms;
}

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    out << "structure: " << structure << "\n";
    out << "sample degree: " << sample_degree << "\n";
    for (const auto& a : axioms) {
        out << (a.passed ? "  PASS " : "  FAIL ") << a.id << "  [" << a.anchor << "]  (" << a.checked << " checks)\n";
        if (a.witness) {
            out << "       at  " << a.witness->assignment << "\n";
            out << "       lhs " << a.witness->lhs << "\n";
            out << "       rhs " << a.witness->rhs << "\n";
        }
    }
    out << (passed() ? "result: PASS" : "result: FAIL (" + first_failure() + ")") << "\n";
    return out.str();
}

AxiomCheck::AxiomCheck(std::string id, std::string anchor)
{
    result_.id = std::move(id);
    result_.anchor = std::move(anchor);
}

bool AxiomCheck::holds(bool ok, const std::function<std::string()>& assignment,
                       const std::function<std::string()>& lhs, const std::function<std::string()>& rhs)
{
    ++result_.checked;
    if (ok) return true;
    fail(assignment(), lhs(), rhs());
    return false;
}

void AxiomCheck::fail(std::string assignment, std::string lhs, std::string rhs)
{
    if (!result_.passed) return;
    result_.passed = false;
    result_.witness = Witness{std::move(assignment), std::move(lhs), std::move(rhs)};
}

} // namespace homcalc
