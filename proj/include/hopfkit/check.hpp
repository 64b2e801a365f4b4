#pragma once

#include <string>
#include <vector>

namespace hopfkit {

/// One verified identity. `id` names the identity (e.g. "coassociativity",
/// "eq-3.2-left"); `witness` describes the first failing basis tuple.
struct Check {
    std::string id;
    bool pass = true;
    std::string witness;
    std::size_t evaluated = 0;
};

class CheckList {
public:
    void add(std::string id, bool pass, std::string witness = {}, std::size_t evaluated = 0);
    void merge(const CheckList& other, const std::string& prefix = {});

    bool ok() const;
    const std::vector<Check>& items() const { return items_; }
    const Check* find(const std::string& id) const;
    bool passed(const std::string& id) const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;

private:
    std::vector<Check> items_;
};

/// Accumulates a single identity across many evaluations, keeping the first
/// counterexample.
class IdentityTally {
public:
    explicit IdentityTally(std::string id) : id_(std::move(id)) {}
    void record(bool ok, const std::string& witness_if_failed = {});
    template <class F>
    void record_lazy(bool ok, F&& make_witness) {
        ++count_;
        if (!ok && pass_) {
            pass_ = false;
            witness_ = make_witness();
        }
    }
    bool pass() const { return pass_; }
    void into(CheckList& list) const { list.add(id_, pass_, witness_, count_); }

private:
    std::string id_;
    bool pass_ = true;
    std::string witness_;
    std::size_t count_ = 0;
};

}  // namespace hopfkit

#include <stdexcept>

namespace hopfkit {

/// Raised when a construction produces data that fails its own axioms.
class VerificationError : public std::runtime_error {
public:
    VerificationError(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace hopfkit
