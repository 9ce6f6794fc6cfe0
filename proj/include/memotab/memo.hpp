#pragma once

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "memotab/nondet.hpp"

namespace memotab {

// Duplicate-free collection of values, kept in first-insertion order.
template <class V>
class OrderedSet {
 public:
  // Returns false (and changes nothing) when v is already present.
  bool insert(const V& v) {
    if (!seen_.insert(v).second) return false;
    items_.push_back(v);
    return true;
  }
  bool contains(const V& v) const { return seen_.count(v) != 0; }
  const std::vector<V>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<V> items_;
  std::unordered_set<V> seen_;
};

// Per-key memo record: the answers found so far plus every consumer
// suspended on the key. The consumer list only grows during a run; it is a
// deque so a consumer can be invoked in place while new ones are appended.
template <class V>
struct Entry {
  OrderedSet<V> results;
  std::deque<Consumer<V>> consumers;
};

// One table per memoised function. The table is shared across all
// nondeterministic branches of the session; it is never copied and never
// rolled back on backtracking.
template <class K, class V>
struct MemoTable {
  std::unordered_map<K, Entry<V>> entries;
  std::vector<K> key_order;
};

// Consumer-free snapshot of a memo table: (key, answers) in discovery order.
template <class K, class V>
using Chart = std::vector<std::pair<K, std::vector<V>>>;

template <class K, class V>
Chart<K, V> snapshot(const MemoTable<K, V>& t) {
  Chart<K, V> chart;
  chart.reserve(t.key_order.size());
  for (const K& k : t.key_order) chart.emplace_back(k, t.entries.at(k).results.items());
  return chart;
}

// The memoised function bundled with read access to its table. This variant
// still expects the bundle of fixed points on every call; memo_rec and
// memo_rec2 produce the closed forms below.
template <class S, class K, class V>
struct OpenMemoHandle {
  std::function<Comp<V>(const S&, const K&)> fn;
  const MemoTable<K, V>* table;

  Chart<K, V> chart() const { return snapshot(*table); }
};

// A memoised function with its recursion already tied, plus a chart reader
// for its table. Safe to read the chart at any time; reading never mutates.
// Must not be used with a session other than the one it was built in.
template <class K, class V>
class MemoHandle {
 public:
  using Fn = std::function<Comp<V>(const K&)>;

  MemoHandle(Fn fn, const MemoTable<K, V>* table) : fn_(std::move(fn)), table_(table) {}

  Comp<V> operator()(const K& x) const { return fn_(x); }
  const Fn& fn() const { return fn_; }
  Chart<K, V> chart() const { return snapshot(*table_); }

 private:
  Fn fn_;
  const MemoTable<K, V>* table_;
};

template <class K, class V>
Chart<K, V> read_chart(const MemoHandle<K, V>& h) {
  return h.chart();
}

template <class S, class K, class V>
Chart<K, V> read_chart(const OpenMemoHandle<S, K, V>& h) {
  return h.chart();
}

// Tabling core. The returned function, applied to key x, captures the
// current consumer k and:
//
//   - if an entry for x exists: appends k to the entry's consumers and
//     replays the answers recorded so far into k. New answers reach k later
//     through the broadcast below.
//   - otherwise: creates the entry holding k as its only consumer *before*
//     starting the body, then runs the body once. Every value the body
//     yields re-reads the entry (recursive descent may have grown it),
//     drops duplicates, and broadcasts each fresh answer to exactly the
//     consumers registered at that moment.
//
// Registering the caller before the body starts is what makes left
// recursion bottom out: a same-key call made while the body is still
// producing lands in the replay branch instead of re-entering the body.
//
// K and V must support structural equality and std::hash.
template <class S, class K, class V>
OpenMemoHandle<S, K, V> memoize(Session& sess, std::function<Comp<V>(const S&, const K&)> body) {
  auto* table = sess.own(MemoTable<K, V>{});
  auto fn = [table, body = std::move(body)](const S& bundle, const K& x) -> Comp<V> {
    return Comp<V>([table, body, bundle, x](Session& s, const Consumer<V>& k) {
      Session* sp = &s;
      auto found = table->entries.find(x);
      if (found != table->entries.end()) {
        Entry<V>& e = found->second;
        e.consumers.push_back(k);
        const std::size_t ki = e.consumers.size() - 1;
        for (const V& r : e.results.items())
          sp->schedule([table, x, ki, r] { table->entries.at(x).consumers[ki](r); });
        return;
      }
      Entry<V>& e = table->entries[x];
      table->key_order.push_back(x);
      e.consumers.push_back(k);
      Consumer<V> record([table, x, sp](const V& y) {
        Entry<V>& cur = table->entries.at(x);
        if (!cur.results.insert(y)) return;
        const std::size_t n = cur.consumers.size();
        for (std::size_t i = 0; i < n; ++i)
          sp->schedule([table, x, i, y] { table->entries.at(x).consumers[i](y); });
      });
      Comp<V> produced = body(bundle, x);
      sp->schedule([produced = std::move(produced), record = std::move(record), sp] {
        produced.run(*sp, record);
      });
    });
  };
  return OpenMemoHandle<S, K, V>{std::move(fn), table};
}

// Fixed point of a single memoised function: what an open-recursive body
// receives as its self argument.
template <class K, class V>
using Fix = std::function<Comp<V>(const K&)>;

// Bundle for a mutually recursive pair.
template <class K1, class V1, class K2, class V2>
using Fix2 = std::pair<Fix<K1, V1>, Fix<K2, V2>>;

// Memoises an open-recursive body and ties the knot, so every recursive
// call goes through the table.
template <class K, class V>
MemoHandle<K, V> memo_rec(Session& sess, std::function<Comp<V>(const Fix<K, V>&, const K&)> body) {
  auto open = memoize<Fix<K, V>, K, V>(sess, std::move(body));
  auto* cell = sess.own(Fix<K, V>{});
  *cell = [fn = open.fn, cell](const K& x) { return fn(*cell, x); };
  return MemoHandle<K, V>(*cell, open.table);
}

// Dyadic form: both bodies see the pair of memoised fixed points, and each
// gets its own table.
template <class K1, class V1, class K2, class V2>
std::pair<MemoHandle<K1, V1>, MemoHandle<K2, V2>> memo_rec2(
    Session& sess,
    std::function<Comp<V1>(const Fix2<K1, V1, K2, V2>&, const K1&)> f,
    std::function<Comp<V2>(const Fix2<K1, V1, K2, V2>&, const K2&)> g) {
  using S = Fix2<K1, V1, K2, V2>;
  auto open_f = memoize<S, K1, V1>(sess, std::move(f));
  auto open_g = memoize<S, K2, V2>(sess, std::move(g));
  auto* cell = sess.own(S{});
  cell->first = [fn = open_f.fn, cell](const K1& x) { return fn(*cell, x); };
  cell->second = [fn = open_g.fn, cell](const K2& x) { return fn(*cell, x); };
  return {MemoHandle<K1, V1>(cell->first, open_f.table),
          MemoHandle<K2, V2>(cell->second, open_g.table)};
}

// Memoises a non-recursive function (unit bundle).
template <class K, class V>
MemoHandle<K, V> mem(Session& sess, std::function<Comp<V>(const K&)> f) {
  auto open = memoize<std::monostate, K, V>(
      sess, [f = std::move(f)](const std::monostate&, const K& x) { return f(x); });
  return MemoHandle<K, V>([fn = open.fn](const K& x) { return fn(std::monostate{}, x); },
                          open.table);
}

}  // namespace memotab
