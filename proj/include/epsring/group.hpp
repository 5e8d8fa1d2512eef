#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epsring/scalar.hpp"

namespace epsring {

/// Group element value. For finite table groups this is the element index,
/// for the infinite cyclic group the exponent (arbitrary precision).
using GroupElt = BigInt;

class NotAGroup : public ValidationError {
public:
    enum class Reason { NotAssociative, NoIdentity, NoInverse };
    NotAGroup(Reason r, const std::string& msg) : ValidationError(msg), reason(r) {}
    Reason reason;
};

/// A grading group: either a finite group given by its Cayley table or the
/// infinite cyclic group (integers under addition). Finite tables are fully
/// validated at construction.
class GradingGroup {
public:
    enum class Kind { FiniteTable, InfiniteCyclic };

    static GradingGroup integers();
    static GradingGroup cyclic(int n);
    static GradingGroup from_table(std::vector<std::string> labels,
                                   std::vector<std::vector<int>> table);
    static GradingGroup direct_product(const GradingGroup& g, const GradingGroup& h);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::FiniteTable; }
    std::size_t order() const;  // finite groups only

    GroupElt identity() const { return GroupElt(identity_index_); }
    GroupElt mul(const GroupElt& a, const GroupElt& b) const;
    GroupElt inv(const GroupElt& a) const;
    std::vector<GroupElt> elements() const;  // finite groups only

    std::string label(const GroupElt& g) const;
    std::optional<GroupElt> parse_label(const std::string& text) const;

    bool operator==(const GradingGroup& other) const;

private:
    GradingGroup() = default;
    void validate_table();
    std::size_t index_of(const GroupElt& g) const;

    Kind kind_ = Kind::InfiniteCyclic;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    int identity_index_ = 0;
    std::vector<int> inverse_;
};

}  // namespace epsring
