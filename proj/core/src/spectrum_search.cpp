#include "ibistk/spectrum_search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <semaphore>
#include <vector>

#include "ibistk/errors.hpp"
#include "ibistk/orbits.hpp"

namespace ibistk {

namespace {

using Clock = std::chrono::steady_clock;

struct DfsResult {
  std::set<int> sizes;
  std::map<int, IrrSequence> witnesses;
  std::vector<int> found_order; // sizes in discovery order
  std::uint64_t nodes = 0;
  bool capped = false;
};

// Sequential orbit-pruned DFS. The prefix and its chain orders are shared
// mutable state; every completed leaf is an irredundant base.
class DfsEngine {
public:
  DfsEngine(int degree, std::uint64_t node_budget, Clock::time_point deadline,
            bool decide_mode)
      : degree_(degree), budget_(node_budget), deadline_(deadline),
        decide_(decide_mode) {}

  std::vector<int> prefix;
  std::vector<BigInt> orders;
  DfsResult result;

  void visit(const Bsgs& h) {
    if (stop_ || result.capped) return;
    if (++result.nodes > budget_) {
      result.capped = true;
      return;
    }
    if ((result.nodes & 0xff) == 0 && Clock::now() > deadline_) {
      result.capped = true;
      return;
    }
    auto part = orbit_partition(degree_, h.generators());
    for (int rep : part.reps) {
      if (stop_ || result.capped) return;
      const long len = part.orbit_size(rep);
      if (len < 2) continue;
      BigInt child_order = h.order() / len;
      prefix.push_back(rep);
      orders.push_back(std::move(child_order));
      if (orders.back() == 1) {
        record_leaf();
      } else {
        visit(h.stabilizer_of(rep));
      }
      prefix.pop_back();
      orders.pop_back();
    }
  }

  void record_leaf() {
    const int size = static_cast<int>(prefix.size());
    if (result.sizes.insert(size).second) {
      IrrSequence w;
      w.points = prefix;
      w.chain_orders = orders;
      result.witnesses.emplace(size, std::move(w));
      result.found_order.push_back(size);
      if (decide_ && result.sizes.size() >= 2) stop_ = true;
    }
  }

private:
  int degree_;
  std::uint64_t budget_;
  Clock::time_point deadline_;
  bool decide_;
  bool stop_ = false;
};

Clock::time_point deadline_from(const SearchCaps& caps) {
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(
             std::chrono::duration<double>(caps.time_cap_seconds));
}

DfsResult search_sequential(const Bsgs& b, const SearchCaps& caps,
                            bool decide_mode) {
  DfsEngine engine(b.degree(), caps.node_cap, deadline_from(caps), decide_mode);
  engine.orders.push_back(b.order());
  if (b.order() == 1) {
    ++engine.result.nodes;
    engine.record_leaf();
  } else {
    engine.visit(b);
  }
  return engine.result;
}

// Parallel variant for the full spectrum. Transitive groups have a single
// orbit at the root, so the search walks down the one-child spine first and
// fans out at the first genuine branching level. Subtrees get an equal
// share of the node budget and merge in child order, which keeps witnesses
// in tree order regardless of scheduling.
DfsResult search_parallel(const Bsgs& b, const SearchCaps& caps) {
  if (b.order() == 1) return search_sequential(b, caps, false);

  struct Child {
    int rep;
    BigInt order;
  };
  DfsResult merged;
  std::vector<int> spine;
  std::vector<BigInt> spine_orders{b.order()};
  Bsgs current = b;
  std::vector<Child> children;
  while (true) {
    ++merged.nodes;
    auto part = orbit_partition(b.degree(), current.generators());
    children.clear();
    for (int rep : part.reps)
      if (part.orbit_size(rep) >= 2)
        children.push_back({rep, current.order() / part.orbit_size(rep)});
    if (children.size() != 1) break;
    if (children[0].order == 1) {
      // the whole tree is one path; its leaf is the only witness
      spine.push_back(children[0].rep);
      spine_orders.push_back(1);
      const int size = static_cast<int>(spine.size());
      merged.sizes.insert(size);
      IrrSequence w;
      w.points = std::move(spine);
      w.chain_orders = std::move(spine_orders);
      merged.witnesses.emplace(size, std::move(w));
      merged.found_order.push_back(size);
      return merged;
    }
    spine.push_back(children[0].rep);
    spine_orders.push_back(children[0].order);
    current = current.stabilizer_of(children[0].rep);
  }

  const auto deadline = deadline_from(caps);
  const std::uint64_t used = merged.nodes;
  const std::uint64_t share = std::max<std::uint64_t>(
      1, (caps.node_cap > used ? caps.node_cap - used : 1) / children.size());
  std::counting_semaphore<> slots(std::max(1, caps.workers));

  std::vector<std::future<DfsResult>> futures;
  for (const auto& child : children) {
    if (child.order == 1) {
      futures.push_back(
          std::async(std::launch::deferred, [&spine, &spine_orders, &child] {
            DfsResult r;
            const int size = static_cast<int>(spine.size()) + 1;
            r.sizes.insert(size);
            IrrSequence w;
            w.points = spine;
            w.points.push_back(child.rep);
            w.chain_orders = spine_orders;
            w.chain_orders.push_back(1);
            r.witnesses.emplace(size, std::move(w));
            r.found_order.push_back(size);
            return r;
          }));
      continue;
    }
    futures.push_back(std::async(std::launch::async, [&, child] {
      slots.acquire();
      DfsEngine engine(b.degree(), share, deadline, false);
      engine.prefix = spine;
      engine.prefix.push_back(child.rep);
      engine.orders = spine_orders;
      engine.orders.push_back(child.order);
      engine.visit(current.stabilizer_of(child.rep));
      slots.release();
      return std::move(engine.result);
    }));
  }

  for (auto& f : futures) {
    DfsResult r = f.get();
    merged.nodes += r.nodes;
    merged.capped = merged.capped || r.capped;
    for (int size : r.found_order)
      if (merged.sizes.insert(size).second) {
        merged.witnesses.emplace(size, std::move(r.witnesses.at(size)));
        merged.found_order.push_back(size);
      }
  }
  return merged;
}

// Depth-limited search for one irredundant base of size exactly `limit`.
// A child worth visiting must be killable within the remaining levels.
class BoundedEngine {
public:
  BoundedEngine(int degree, int limit, std::uint64_t budget,
                Clock::time_point deadline)
      : degree_(degree), budget_(budget), deadline_(deadline) {
    pow_.assign(limit + 1, 1);
    for (int i = 1; i <= limit; ++i) pow_[i] = pow_[i - 1] * degree;
  }

  std::vector<int> prefix;
  std::vector<BigInt> orders;
  std::uint64_t nodes = 0;
  bool capped = false;

  // remaining >= 1 on entry. Leaves shallower than the pass limit cannot
  // exist, since earlier passes would have found them.
  bool visit(const Bsgs& h, int remaining) {
    if (capped) return false;
    if (++nodes > budget_) {
      capped = true;
      return false;
    }
    if ((nodes & 0xff) == 0 && Clock::now() > deadline_) {
      capped = true;
      return false;
    }
    auto part = orbit_partition(degree_, h.generators());
    for (int rep : part.reps) {
      const long len = part.orbit_size(rep);
      if (len < 2) continue;
      BigInt child_order = h.order() / len;
      if (child_order == 1) {
        prefix.push_back(rep);
        orders.push_back(1);
        return true;
      }
      if (remaining < 2 || child_order > pow_[remaining - 1]) continue;
      prefix.push_back(rep);
      orders.push_back(std::move(child_order));
      if (visit(h.stabilizer_of(rep), remaining - 1)) return true;
      prefix.pop_back();
      orders.pop_back();
      if (capped) return false;
    }
    return false;
  }

private:
  int degree_;
  std::uint64_t budget_;
  Clock::time_point deadline_;
  std::vector<BigInt> pow_;
};

} // namespace

Spectrum irredundant_spectrum(const Bsgs& b, const SearchCaps& caps) {
  DfsResult r = caps.workers > 1 ? search_parallel(b, caps)
                                 : search_sequential(b, caps, false);
  Spectrum s;
  s.sizes = std::move(r.sizes);
  s.witnesses = std::move(r.witnesses);
  s.node_count = r.nodes;
  s.complete = !r.capped;
  return s;
}

MinimalBase minimal_base_size(const Bsgs& b, const SearchCaps& caps) {
  MinimalBase out;
  if (b.order() == 1) {
    out.size = 0;
    out.witness.chain_orders.push_back(1);
    out.node_count = 1;
    return out;
  }
  // smallest d with degree^d >= order
  int lower = 0;
  BigInt pw = 1;
  while (pw < b.order()) {
    pw *= b.degree();
    ++lower;
  }
  const auto deadline = deadline_from(caps);
  std::uint64_t used = 0;
  for (int d = lower;; ++d) {
    if (used >= caps.node_cap)
      throw CapacityError("minimal base search capped; best bound so far: "
                          "b(G) >= " +
                          std::to_string(d));
    BoundedEngine engine(b.degree(), d, caps.node_cap - used, deadline);
    engine.orders.push_back(b.order());
    bool found = engine.visit(b, d);
    used += engine.nodes;
    if (found) {
      out.size = d;
      out.witness.points = std::move(engine.prefix);
      out.witness.chain_orders = std::move(engine.orders);
      out.node_count = used;
      return out;
    }
    if (engine.capped)
      throw CapacityError("minimal base search capped; best bound so far: "
                          "b(G) >= " +
                          std::to_string(d + 1));
  }
}

IbisVerdict is_ibis(const Bsgs& b, const SearchCaps& caps) {
  DfsResult r = search_sequential(b, caps, true);
  IbisVerdict v;
  v.node_count = r.nodes;
  if (r.sizes.size() >= 2) {
    v.is_ibis = false;
    v.decided = true;
    MinimalBase mb = minimal_base_size(b, caps);
    v.node_count += mb.node_count;
    v.base_size = mb.size;
    // Pair the minimal base with the first discovered base of another size.
    for (int size : r.found_order)
      if (size != mb.size) {
        v.counterexample = std::make_pair(mb.witness, r.witnesses.at(size));
        break;
      }
    return v;
  }
  if (r.capped) {
    v.decided = false;
    v.is_ibis = r.sizes.size() <= 1;
    if (!r.sizes.empty()) v.base_size = *r.sizes.begin();
    return v;
  }
  v.is_ibis = true;
  v.decided = true;
  v.base_size = r.sizes.empty() ? 0 : *r.sizes.begin();
  return v;
}

} // namespace ibistk
