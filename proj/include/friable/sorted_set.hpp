#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace friable {

/// A finite set of non-negative integers kept strictly increasing.
/// Used for truncations of the infinite sets the library reasons about
/// (smooth numbers, decomposition factors, shifted sets).
class SortedIntSet {
  public:
    SortedIntSet() = default;

    /// Sorts and deduplicates.
    static SortedIntSet from_values(std::vector<std::uint64_t> values);

    /// Requires strictly increasing input; throws argument_error otherwise.
    static SortedIntSet from_sorted(std::vector<std::uint64_t> values);

    const std::vector<std::uint64_t> &values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    bool contains(std::uint64_t v) const;

    /// Counting function: |{a in set : a <= X}|, by binary search.
    std::uint64_t counting(std::uint64_t X) const;

    std::uint64_t min() const; // throws argument_error on empty
    std::uint64_t max() const; // throws argument_error on empty

    bool operator==(const SortedIntSet &) const = default;

    /// JSON array of integers, ascending.
    std::string to_json() const;
    /// Newline-delimited decimal text, one element per line.
    std::string to_text() const;
    /// Comma/whitespace separated decimals; sorts and deduplicates.
    static SortedIntSet parse(const std::string &text);

  private:
    std::vector<std::uint64_t> values_;
};

} // namespace friable
