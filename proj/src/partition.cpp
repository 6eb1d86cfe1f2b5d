#include "sepwit/partition.hpp"

#include <algorithm>
#include <sstream>

namespace sepwit {

Partition::Partition(std::vector<std::vector<int>> blocks, int subsystem_count)
    : blocks_(std::move(blocks)), n_(subsystem_count) {
    if (n_ < 1) throw InvalidPartition("subsystem count must be >= 1");
    if (blocks_.empty()) throw InvalidPartition("partition has no blocks");
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw InvalidPartition("empty block");
        std::sort(block.begin(), block.end());
        for (size_t i = 0; i < block.size(); ++i) {
            int idx = block[i];
            if (idx < 0 || idx >= n_)
                throw InvalidPartition("index " + std::to_string(idx + 1) +
                                       " out of range 1.." + std::to_string(n_));
            if (i > 0 && block[i - 1] == idx)
                throw InvalidPartition("index " + std::to_string(idx + 1) +
                                       " repeated within a block");
            if (seen[static_cast<size_t>(idx)])
                throw InvalidPartition("index " + std::to_string(idx + 1) +
                                       " appears in more than one block");
            seen[static_cast<size_t>(idx)] = 1;
            ++covered;
        }
    }
    if (covered != n_)
        throw InvalidPartition("blocks do not cover all " + std::to_string(n_) +
                               " subsystems");
}

Partition Partition::parse(const std::string& text, int subsystem_count) {
    std::vector<std::vector<int>> blocks;
    std::stringstream blocks_in(text);
    std::string block_text;
    while (std::getline(blocks_in, block_text, ':')) {
        std::vector<int> block;
        std::stringstream items_in(block_text);
        std::string item;
        while (std::getline(items_in, item, ',')) {
            size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw InvalidPartition("cannot parse index '" + item + "'");
            }
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size())
                throw InvalidPartition("cannot parse index '" + item + "'");
            block.push_back(value - 1);  // to 0-based
        }
        blocks.push_back(std::move(block));
    }
    return Partition(std::move(blocks), subsystem_count);
}

std::string Partition::str() const {
    std::string out;
    for (size_t j = 0; j < blocks_.size(); ++j) {
        if (j) out += ':';
        for (size_t i = 0; i < blocks_[j].size(); ++i) {
            if (i) out += ',';
            out += std::to_string(blocks_[j][i] + 1);
        }
    }
    return out;
}

const std::vector<int>& Partition::block(int j) const {
    if (j < 0 || j >= block_count())
        throw IndexOutOfRange("block index " + std::to_string(j) + " out of range");
    return blocks_[static_cast<size_t>(j)];
}

bool Partition::is_canonical() const {
    int next = 0;
    for (const auto& block : blocks_) {
        for (int idx : block) {
            if (idx != next) return false;
            ++next;
        }
    }
    return next == n_;
}

bool Partition::operator==(const Partition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
}

bool is_refinement(const Partition& finer, const Partition& coarser) {
    if (finer.subsystem_count() != coarser.subsystem_count())
        throw DimensionMismatch("partitions refer to different subsystem counts");
    // owner[i] = index of coarser block containing subsystem i
    std::vector<int> owner(static_cast<size_t>(coarser.subsystem_count()), -1);
    for (int j = 0; j < coarser.block_count(); ++j)
        for (int idx : coarser.block(j)) owner[static_cast<size_t>(idx)] = j;
    for (const auto& block : finer.blocks()) {
        int target = owner[static_cast<size_t>(block.front())];
        for (int idx : block)
            if (owner[static_cast<size_t>(idx)] != target) return false;
    }
    return true;
}

Partition parse_partition(const std::string& text, int subsystem_count) {
    return Partition::parse(text, subsystem_count);
}

}  // namespace sepwit
