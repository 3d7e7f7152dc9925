#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace nachbin {

/// A finite set of distinct labels in declaration order. Copies share storage.
class Carrier {
public:
    Carrier() : labels_(std::make_shared<const std::vector<std::string>>()) {}

    explicit Carrier(std::vector<std::string> labels) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (labels[i] == labels[j]) throw duplicate_element(labels[i]);
        labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    }

    /// Labels "0", "1", ..., "n-1".
    static Carrier numbered(std::size_t n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
        return Carrier(std::move(labels));
    }

    std::size_t size() const noexcept { return labels_->size(); }
    bool empty() const noexcept { return labels_->empty(); }
    const std::string& label(std::size_t i) const { return labels_->at(i); }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }

    std::size_t index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_->size(); ++i)
            if ((*labels_)[i] == label) return i;
        throw unknown_element(std::string(label));
    }

    bool contains(std::string_view label) const {
        for (const auto& l : *labels_)
            if (l == label) return true;
        return false;
    }

    friend bool operator==(const Carrier& a, const Carrier& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

inline void require_same_carrier(const Carrier& a, const Carrier& b) {
    if (!(a == b)) throw carrier_mismatch();
}

} // namespace nachbin
