#pragma once

#include "yao/geometry.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace yao {

class DuplicatePointError : public std::invalid_argument {
public:
    DuplicatePointError(std::size_t first, std::size_t second)
        : std::invalid_argument("duplicate points at indices " + std::to_string(first) + " and " +
                                std::to_string(second)),
          first_(first), second_(second) {}

    [[nodiscard]] std::size_t first() const { return first_; }
    [[nodiscard]] std::size_t second() const { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

/// Ordered list of distinct finite points with stable 0-based indices and
/// optional labels.
class PointSet {
public:
    using Labels = std::map<std::size_t, std::string>;

    PointSet() = default;

    explicit PointSet(std::vector<Point2> points, Labels labels = {})
        : points_(std::move(points)), labels_(std::move(labels)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!points_[i].finite()) throw std::invalid_argument("point " + std::to_string(i) + " is not finite");
        }
        for (const auto &[index, label] : labels_) {
            if (index >= points_.size())
                throw std::invalid_argument("label '" + label + "' refers to missing point " + std::to_string(index));
        }
        reject_duplicates();
    }

    [[nodiscard]] std::size_t size() const { return points_.size(); }
    [[nodiscard]] bool empty() const { return points_.empty(); }
    [[nodiscard]] std::span<const Point2> points() const { return points_; }
    [[nodiscard]] const Point2 &operator[](std::size_t i) const { return points_[i]; }
    [[nodiscard]] const Labels &labels() const { return labels_; }

    [[nodiscard]] std::optional<std::string> label(std::size_t i) const {
        if (auto it = labels_.find(i); it != labels_.end()) return it->second;
        return std::nullopt;
    }

    /// Label if present, otherwise "#<index>".
    [[nodiscard]] std::string name(std::size_t i) const { return label(i).value_or("#" + std::to_string(i)); }

    [[nodiscard]] std::optional<std::size_t> find_label(const std::string &label) const {
        for (const auto &[index, l] : labels_)
            if (l == label) return index;
        return std::nullopt;
    }

    friend bool operator==(const PointSet &, const PointSet &) = default;

private:
    void reject_duplicates() const {
        std::vector<std::size_t> order(points_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        auto less = [&](std::size_t a, std::size_t b) {
            const auto &p = points_[a];
            const auto &q = points_[b];
            return std::pair{p.x, p.y} < std::pair{q.x, q.y} || (p == q && a < b);
        };
        std::sort(order.begin(), order.end(), less);
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (points_[order[i - 1]] == points_[order[i]]) throw DuplicatePointError(order[i - 1], order[i]);
        }
    }

    std::vector<Point2> points_;
    Labels labels_;
};

}// namespace yao
