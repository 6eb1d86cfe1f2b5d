#pragma once

#include <string>
#include <vector>

#include "sepwit/common.hpp"

namespace sepwit {

// A partition I_1 ... I_K of the subsystem index set {1..N}. Indices are
// 0-based internally and 1-based in all user-facing text (parse/str).
class Partition {
public:
    // blocks: 0-based indices; each block is sorted on construction.
    Partition(std::vector<std::vector<int>> blocks, int subsystem_count);

    // Parses "1,2:3" style text (colon-separated blocks of comma-separated
    // 1-based indices). Throws InvalidPartition on overlap, gap, empty block
    // or out-of-range index.
    static Partition parse(const std::string& text, int subsystem_count);

    std::string str() const;  // 1-based text form, e.g. "1,2:3"

    int subsystem_count() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<int>& block(int j) const;
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // True iff the blocks are consecutive ascending runs in ascending order,
    // i.e. the partition is its own canonical form.
    bool is_canonical() const;

    bool operator==(const Partition& other) const;
    bool operator!=(const Partition& other) const { return !(*this == other); }

private:
    std::vector<std::vector<int>> blocks_;
    int n_;
};

// True iff every block of `finer` is a subset of some block of `coarser`.
// Throws DimensionMismatch if the subsystem counts differ.
bool is_refinement(const Partition& finer, const Partition& coarser);

Partition parse_partition(const std::string& text, int subsystem_count);

}  // namespace sepwit
