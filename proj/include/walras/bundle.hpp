#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace walras {

/// Subset of the instance's items. Item 0 sits in the least significant
/// bit; the numeric value of the bit mask is the canonical ordering key,
/// so the empty bundle sorts first and the full bundle last.
class Bundle {
public:
    Bundle() = default;
    Bundle(std::uint64_t bits, int item_count);

    static Bundle empty(int item_count);
    static Bundle full(int item_count);

    bool contains(int item) const;
    Bundle with(int item) const;
    Bundle without(int item) const;
    bool subset_of(const Bundle& other) const;
    bool intersects(const Bundle& other) const;

    int size() const;
    bool is_empty() const { return bits_ == 0; }
    std::uint64_t key() const { return bits_; }
    int item_count() const { return item_count_; }
    std::vector<int> items() const;

    auto operator<=>(const Bundle&) const = default;

private:
    std::uint64_t bits_ = 0;
    int item_count_ = 0;
};

/// All 2^item_count bundles in canonical order. item_count is capped at
/// 20 to keep accidental blowups out; the solver itself is meant for
/// desk-scale instances far below that.
std::vector<Bundle> enumerate_bundles(int item_count);

}  // namespace walras
