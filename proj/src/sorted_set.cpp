#include "friable/sorted_set.hpp"

#include <algorithm>
#include <sstream>

#include "friable/errors.hpp"

namespace friable {

SortedIntSet SortedIntSet::from_values(std::vector<std::uint64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    SortedIntSet s;
    s.values_ = std::move(values);
    return s;
}

SortedIntSet SortedIntSet::from_sorted(std::vector<std::uint64_t> values) {
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= values[i - 1])
            throw argument_error("SortedIntSet: input not strictly increasing");
    }
    SortedIntSet s;
    s.values_ = std::move(values);
    return s;
}

bool SortedIntSet::contains(std::uint64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

std::uint64_t SortedIntSet::counting(std::uint64_t X) const {
    return static_cast<std::uint64_t>(
        std::upper_bound(values_.begin(), values_.end(), X) - values_.begin());
}

std::uint64_t SortedIntSet::min() const {
    if (values_.empty())
        throw argument_error("SortedIntSet: min of empty set");
    return values_.front();
}

std::uint64_t SortedIntSet::max() const {
    if (values_.empty())
        throw argument_error("SortedIntSet: max of empty set");
    return values_.back();
}

std::string SortedIntSet::to_json() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out << ',';
        out << values_[i];
    }
    out << ']';
    return out.str();
}

std::string SortedIntSet::to_text() const {
    std::ostringstream out;
    for (std::uint64_t v : values_)
        out << v << '\n';
    return out.str();
}

SortedIntSet SortedIntSet::parse(const std::string &text) {
    std::vector<std::uint64_t> values;
    std::string token;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            token.push_back(ch);
            continue;
        }
        if (!token.empty()) {
            values.push_back(std::stoull(token));
            token.clear();
        }
        if (ch != ',' && ch != ' ' && ch != '\t' && ch != '\n' && ch != '[' &&
            ch != ']' && ch != '\r') {
            throw argument_error("SortedIntSet: unexpected character in list");
        }
    }
    if (!token.empty())
        values.push_back(std::stoull(token));
    return from_values(std::move(values));
}

} // namespace friable
