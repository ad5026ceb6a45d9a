#ifndef MATCHDECOMP_BUCKET_QUEUE_HPP
#define MATCHDECOMP_BUCKET_QUEUE_HPP

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

namespace matchdecomp {

/// Max-priority queue over items 0..item_count-1 with integer keys in
/// [1, max_key]. Each item sits in at most one bucket and its slot is
/// tracked, so insert, erase and rekey are O(1). The max pointer only
/// slides down; raising it again is allowed but costs the gap.
class BucketQueue {
   public:
    using Item = std::int32_t;
    using Key = std::int64_t;

    BucketQueue(Item item_count, Key max_key)
        : buckets_(static_cast<std::size_t>(max_key) + 1),
          key_(static_cast<std::size_t>(item_count), 0),
          slot_(static_cast<std::size_t>(item_count), 0) {}

    bool contains(Item item) const { return key_[idx(item)] != 0; }
    Key key(Item item) const { return key_[idx(item)]; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    void insert(Item item, Key key) {
        assert(!contains(item) && key >= 1 && key < static_cast<Key>(buckets_.size()));
        auto& bucket = buckets_[static_cast<std::size_t>(key)];
        slot_[idx(item)] = static_cast<Item>(bucket.size());
        key_[idx(item)] = key;
        bucket.push_back(item);
        if (key > top_) top_ = key;
        ++size_;
    }

    void erase(Item item) {
        assert(contains(item));
        auto& bucket = buckets_[static_cast<std::size_t>(key_[idx(item)])];
        const Item at = slot_[idx(item)];
        const Item last = bucket.back();
        bucket[static_cast<std::size_t>(at)] = last;
        slot_[idx(last)] = at;
        bucket.pop_back();
        key_[idx(item)] = 0;
        --size_;
    }

    /// Moves an item to a new key; key 0 removes it.
    void rekey(Item item, Key key) {
        if (contains(item)) erase(item);
        if (key > 0) insert(item, key);
    }

    /// Largest key with a nonempty bucket, or 0 when empty.
    Key top_key() {
        while (top_ > 0 && buckets_[static_cast<std::size_t>(top_)].empty()) --top_;
        return top_;
    }

    std::span<const Item> bucket(Key key) const { return buckets_[static_cast<std::size_t>(key)]; }

   private:
    static std::size_t idx(Item item) { return static_cast<std::size_t>(item); }

    std::vector<std::vector<Item>> buckets_;
    std::vector<Key> key_;
    std::vector<Item> slot_;
    std::size_t size_ = 0;
    Key top_ = 0;
};

}  // namespace matchdecomp

#endif
