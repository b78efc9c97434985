#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "nrt/error.hpp"
#include "nrt/isotopy.hpp"

namespace nrt {

namespace {

using BucketKey = std::vector<std::uint64_t>;

/// Invariants shared by isotopic right loops: loop flag, number of left
/// non-singular elements, sorted row image sizes, order of the torsion.
/// Isomorphism additionally keys on the multiset of right translation
/// cycle types.
BucketKey bucket_key(const RightLoop& loop, Relation relation)
{
  const auto n = loop.order();
  BucketKey key{n};
  std::vector<std::uint64_t> images;
  std::vector<char> hit(n);
  for (Element x = 0; x < n; ++x) {
    std::fill(hit.begin(), hit.end(), 0);
    std::uint64_t image = 0;
    for (Element v : loop.row(x))
      if (!hit[v]) {
        hit[v] = 1;
        ++image;
      }
    images.push_back(image);
  }
  std::sort(images.begin(), images.end());
  auto lns = static_cast<std::uint64_t>(std::count(images.begin(), images.end(), n));
  key.push_back(lns == n);
  key.push_back(lns);
  key.insert(key.end(), images.begin(), images.end());
  key.push_back(group_torsion(loop).torsion.order());
  if (relation == Relation::Isomorphism) {
    std::vector<std::vector<std::uint64_t>> types;
    for (Element y = 0; y < n; ++y) {
      std::vector<std::uint64_t> t;
      for (auto [len, count] : cycle_type(loop.right_translation(y))) {
        t.push_back(len);
        t.push_back(count);
      }
      types.push_back(std::move(t));
    }
    std::sort(types.begin(), types.end());
    for (const auto& t : types) {
      key.push_back(~std::uint64_t{0});
      key.insert(key.end(), t.begin(), t.end());
    }
  }
  return key;
}

bool related(const RightLoop& a, const RightLoop& b, Relation relation)
{
  return relation == Relation::Isomorphism ? are_isomorphic(a, b).has_value()
                                           : are_isotopic(a, b).has_value();
}

/// Classes inside one bucket: each item is tested against one member of
/// every class found so far.
std::vector<std::vector<std::size_t>> split_bucket(std::span<const RightLoop> items,
                                                   const std::vector<std::size_t>& bucket,
                                                   Relation relation)
{
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t idx : bucket) {
    bool placed = false;
    for (auto& cls : classes)
      if (related(items[cls.front()], items[idx], relation)) {
        cls.push_back(idx);
        placed = true;
        break;
      }
    if (!placed)
      classes.push_back({idx});
  }
  return classes;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

ClassPartition classify(std::span<const RightLoop> items, Relation relation,
                        ClassifyOptions options)
{
  for (const auto& item : items)
    if (item.order() != items.front().order())
      throw Error(ErrorCode::InvalidArgument, "classify needs right loops of equal order");

  std::map<BucketKey, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < items.size(); ++i)
    by_key[bucket_key(items[i], relation)].push_back(i);
  std::vector<const std::vector<std::size_t>*> buckets;
  for (const auto& [key, members] : by_key)
    buckets.push_back(&members);

  // Workers split buckets; the union-find has a single writer.
  UnionFind uf(items.size());
  std::mutex uf_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < buckets.size(); b = next++) {
      auto classes = split_bucket(items, *buckets[b], relation);
      std::lock_guard lock(uf_mutex);
      for (const auto& cls : classes)
        for (std::size_t idx : cls)
          uf.unite(cls.front(), idx);
    }
  };
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }

  ClassPartition out;
  out.relation = relation;
  out.class_of.assign(items.size(), 0);
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, fresh] = root_to_class.emplace(uf.find(i), out.classes.size());
    if (fresh)
      out.classes.emplace_back();
    out.classes[it->second].push_back(i);
    out.class_of[i] = it->second;
  }
  for (const auto& cls : out.classes) {
    std::size_t best = cls.front();
    for (std::size_t idx : cls) {
      auto t = items[idx].table();
      auto b = items[best].table();
      if (std::lexicographical_compare(t.begin(), t.end(), b.begin(), b.end()))
        best = idx;
    }
    out.representatives.push_back(best);
  }
  return out;
}

} // namespace nrt
