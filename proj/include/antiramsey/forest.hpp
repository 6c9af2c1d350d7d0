#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace antiramsey {

/// A union of vertex-disjoint paths, given by their orders t_1 >= ... >= t_k >= 2.
class LinearForest {
public:
    /// Sorts `parts` descending. Throws InvalidArgument if empty or any part < 2.
    explicit LinearForest(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int componentCount() const noexcept { return static_cast<int>(parts_.size()); }
    /// Total number of vertices.
    int order() const noexcept { return order_; }
    int edgeCount() const noexcept { return order_ - componentCount(); }
    /// Sum of floor(t_i / 2).
    int halfSum() const noexcept { return halfSum_; }
    int evenCount() const noexcept { return evenCount_; }
    bool allOdd() const noexcept { return evenCount_ == 0; }
    bool allEqualTo(int t) const noexcept;

    /// "5,4,2"
    std::string spec() const;
    /// "P5 ∪ P4"
    std::string name() const;

    friend bool operator==(const LinearForest&, const LinearForest&) = default;

private:
    std::vector<int> parts_;
    int order_ = 0;
    int halfSum_ = 0;
    int evenCount_ = 0;
};

/// Parses a comma-separated part list such as "4,5" (order irrelevant).
LinearForest parseForest(std::string_view spec);

/// Shorthand for a single path P_t.
LinearForest path(int t);

}  // namespace antiramsey
