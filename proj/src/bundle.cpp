#include "walras/bundle.hpp"

#include <bit>
#include <stdexcept>

namespace walras {

Bundle::Bundle(std::uint64_t bits, int item_count) : bits_(bits), item_count_(item_count) {
    if (item_count < 0 || item_count > 63) throw std::invalid_argument("bundle: item count out of range");
    if (item_count < 64 && bits >= (std::uint64_t{1} << item_count)) {
        throw std::invalid_argument("bundle: bits outside item range");
    }
}

Bundle Bundle::empty(int item_count) { return Bundle(0, item_count); }

Bundle Bundle::full(int item_count) {
    return Bundle((std::uint64_t{1} << item_count) - 1, item_count);
}

bool Bundle::contains(int item) const {
    if (item < 0 || item >= item_count_) throw std::out_of_range("bundle: item index");
    return (bits_ >> item) & 1;
}

Bundle Bundle::with(int item) const {
    if (item < 0 || item >= item_count_) throw std::out_of_range("bundle: item index");
    return Bundle(bits_ | (std::uint64_t{1} << item), item_count_);
}

Bundle Bundle::without(int item) const {
    if (item < 0 || item >= item_count_) throw std::out_of_range("bundle: item index");
    return Bundle(bits_ & ~(std::uint64_t{1} << item), item_count_);
}

bool Bundle::subset_of(const Bundle& other) const { return (bits_ & ~other.bits_) == 0; }

bool Bundle::intersects(const Bundle& other) const { return (bits_ & other.bits_) != 0; }

int Bundle::size() const { return std::popcount(bits_); }

std::vector<int> Bundle::items() const {
    std::vector<int> out;
    for (int j = 0; j < item_count_; ++j) {
        if ((bits_ >> j) & 1) out.push_back(j);
    }
    return out;
}

std::vector<Bundle> enumerate_bundles(int item_count) {
    if (item_count < 0) throw std::invalid_argument("enumerate_bundles: negative item count");
    if (item_count > 20) throw std::invalid_argument("enumerate_bundles: item count above desk scale");
    std::vector<Bundle> out;
    out.reserve(std::size_t{1} << item_count);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << item_count); ++b) {
        out.emplace_back(b, item_count);
    }
    return out;
}

}  // namespace walras
