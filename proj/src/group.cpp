#include "epsring/group.hpp"

namespace epsring {

GradingGroup GradingGroup::integers() {
    GradingGroup g;
    g.kind_ = Kind::InfiniteCyclic;
    return g;
}

GradingGroup GradingGroup::cyclic(int n) {
    if (n < 1) throw Error("cyclic group order must be >= 1");
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    return from_table(std::move(labels), std::move(table));
}

GradingGroup GradingGroup::from_table(std::vector<std::string> labels,
                                      std::vector<std::vector<int>> table) {
    GradingGroup g;
    g.kind_ = Kind::FiniteTable;
    g.labels_ = std::move(labels);
    g.table_ = std::move(table);
    const std::size_t n = g.labels_.size();
    if (g.table_.size() != n)
        throw ParseError("group table size does not match label count");
    for (const auto& row : g.table_) {
        if (row.size() != n) throw ParseError("group table is not square");
        for (int x : row)
            if (x < 0 || static_cast<std::size_t>(x) >= n)
                throw ParseError("group table entry out of range");
    }
    g.validate_table();
    return g;
}

void GradingGroup::validate_table() {
    const std::size_t n = labels_.size();
    // two-sided identity
    int id = -1;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (table_[e][i] != static_cast<int>(i) || table_[i][e] != static_cast<int>(i)) {
                ok = false;
                break;
            }
        if (ok) { id = static_cast<int>(e); break; }
    }
    if (id < 0) throw NotAGroup(NotAGroup::Reason::NoIdentity, "table has no two-sided identity");
    identity_index_ = id;
    // two-sided inverses
    inverse_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (table_[i][j] == id && table_[j][i] == id) {
                inverse_[i] = static_cast<int>(j);
                break;
            }
        if (inverse_[i] < 0)
            throw NotAGroup(NotAGroup::Reason::NoInverse,
                            "element '" + labels_[i] + "' has no two-sided inverse");
    }
    // associativity on all triples
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                    throw NotAGroup(NotAGroup::Reason::NotAssociative,
                                    "associativity fails at (" + labels_[i] + ", " + labels_[j] +
                                        ", " + labels_[k] + ")");
}

GradingGroup GradingGroup::direct_product(const GradingGroup& g, const GradingGroup& h) {
    if (!g.is_finite() || !h.is_finite())
        throw Error("direct products are only supported for finite groups");
    const std::size_t ng = g.order(), nh = h.order();
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table(ng * nh, std::vector<int>(ng * nh));
    for (std::size_t i = 0; i < ng; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            labels.push_back("(" + g.labels_[i] + "," + h.labels_[j] + ")");
    for (std::size_t i = 0; i < ng * nh; ++i)
        for (std::size_t j = 0; j < ng * nh; ++j) {
            std::size_t a1 = i / nh, b1 = i % nh, a2 = j / nh, b2 = j % nh;
            table[i][j] = g.table_[a1][a2] * static_cast<int>(nh) + h.table_[b1][b2];
        }
    return from_table(std::move(labels), std::move(table));
}

std::size_t GradingGroup::order() const {
    if (!is_finite()) throw Error("infinite group has no order");
    return labels_.size();
}

std::size_t GradingGroup::index_of(const GroupElt& g) const {
    if (g < 0 || g >= static_cast<std::int64_t>(labels_.size()))
        throw Error("group element index out of range");
    return static_cast<std::size_t>(g.convert_to<std::int64_t>());
}

GroupElt GradingGroup::mul(const GroupElt& a, const GroupElt& b) const {
    if (!is_finite()) return a + b;
    return GroupElt(table_[index_of(a)][index_of(b)]);
}

GroupElt GradingGroup::inv(const GroupElt& a) const {
    if (!is_finite()) return -a;
    return GroupElt(inverse_[index_of(a)]);
}

std::vector<GroupElt> GradingGroup::elements() const {
    if (!is_finite()) throw Error("cannot enumerate the infinite cyclic group");
    std::vector<GroupElt> out;
    for (std::size_t i = 0; i < labels_.size(); ++i) out.emplace_back(i);
    return out;
}

std::string GradingGroup::label(const GroupElt& g) const {
    if (!is_finite()) return g.str();
    return labels_[index_of(g)];
}

std::optional<GroupElt> GradingGroup::parse_label(const std::string& text) const {
    if (!is_finite()) {
        try {
            return GroupElt(text);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == text) return GroupElt(i);
    return std::nullopt;
}

bool GradingGroup::operator==(const GradingGroup& other) const {
    return kind_ == other.kind_ && labels_ == other.labels_ && table_ == other.table_;
}

}  // namespace epsring
