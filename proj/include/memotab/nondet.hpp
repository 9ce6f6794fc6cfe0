#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace memotab {

class Session;

template <class T>
class Comp;

// One pending resumption on the agenda.
using Thunk = std::function<void()>;

// Receives one delivered value. A consumer may be stored and invoked any
// number of times; each invocation is an independent delivery.
template <class T>
using Consumer = std::function<void(const T&)>;

// How the agenda picks the next resumption. The multiset of results of a
// run does not depend on the policy; only the discovery order does.
struct AgendaPolicy {
  enum class Kind { Fifo, Lifo, Random };

  Kind kind = Kind::Fifo;
  std::uint64_t seed = 0;

  static AgendaPolicy fifo() { return {Kind::Fifo, 0}; }
  static AgendaPolicy lifo() { return {Kind::Lifo, 0}; }
  static AgendaPolicy seeded_random(std::uint64_t s) { return {Kind::Random, s}; }
};

// A session confines one computation universe: the agenda of pending
// resumptions plus everything allocated against it (memo tables, recursion
// cells, token buffers). Single-threaded; distinct sessions share nothing.
// Memo tables built during one run stay live for later runs in the same
// session.
class Session {
 public:
  Session() = default;
  explicit Session(AgendaPolicy p) : policy_(p), rng_(p.seed) {}

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  void schedule(Thunk t) { agenda_.push_back(std::move(t)); }

  // Runs c to exhaustion: schedules it against a fresh accumulator, drains
  // the agenda, and returns every delivered value in delivery order. An
  // empty result means the whole computation failed.
  template <class T>
  std::vector<T> run(const Comp<T>& c);

  // Moves x into session-lifetime storage and returns a stable pointer.
  template <class X>
  X* own(X x) {
    auto p = std::make_shared<X>(std::move(x));
    owned_.push_back(p);
    return p.get();
  }

 private:
  Thunk take_next() {
    switch (policy_.kind) {
      case AgendaPolicy::Kind::Fifo: {
        Thunk t = std::move(agenda_.front());
        agenda_.pop_front();
        return t;
      }
      case AgendaPolicy::Kind::Lifo:
        break;
      case AgendaPolicy::Kind::Random: {
        std::uniform_int_distribution<std::size_t> pick(0, agenda_.size() - 1);
        std::swap(agenda_[pick(rng_)], agenda_.back());
        break;
      }
    }
    Thunk t = std::move(agenda_.back());
    agenda_.pop_back();
    return t;
  }

  AgendaPolicy policy_;
  std::deque<Thunk> agenda_;
  std::mt19937_64 rng_;
  std::vector<std::shared_ptr<void>> owned_;
  bool running_ = false;
};

// A suspended nondeterministic computation delivering zero or more T values.
// Running it only schedules work; nothing executes until the session drains
// its agenda. Running the same value twice delivers equal result multisets.
template <class T>
class Comp {
 public:
  using value_type = T;
  using RunFn = std::function<void(Session&, const Consumer<T>&)>;

  explicit Comp(RunFn f) : run_(std::move(f)) {}

  void run(Session& s, const Consumer<T>& k) const { run_(s, k); }

 private:
  RunFn run_;
};

template <class T>
std::vector<T> Session::run(const Comp<T>& c) {
  if (running_) throw std::logic_error("Session::run: a run is already active on this session");
  running_ = true;
  auto acc = std::make_shared<std::vector<T>>();
  c.run(*this, Consumer<T>([acc](const T& v) { acc->push_back(v); }));
  while (!agenda_.empty()) take_next()();
  running_ = false;
  return std::move(*acc);
}

// Delivers x exactly once.
template <class T>
Comp<std::decay_t<T>> pure(T&& x) {
  using V = std::decay_t<T>;
  return Comp<V>([x = std::forward<T>(x)](Session& s, const Consumer<V>& k) {
    s.schedule([k, x] { k(x); });
  });
}

// Delivers nothing.
template <class T>
Comp<T> fail() {
  return Comp<T>([](Session&, const Consumer<T>&) {});
}

// Delivers everything a delivers and everything b delivers. No
// deduplication here; that lives in the memo tables.
template <class T>
Comp<T> choice(Comp<T> a, Comp<T> b) {
  return Comp<T>([a = std::move(a), b = std::move(b)](Session& s, const Consumer<T>& k) {
    a.run(s, k);
    b.run(s, k);
  });
}

// Sequencing: every value delivered by c is fed through f, and all values
// of the computations so produced are delivered.
template <class T, class F>
auto then(Comp<T> c, F f) -> std::invoke_result_t<F, const T&> {
  using CompU = std::invoke_result_t<F, const T&>;
  using U = typename CompU::value_type;
  return CompU([c = std::move(c), f = std::move(f)](Session& s, const Consumer<U>& k) {
    Session* sp = &s;
    c.run(s, Consumer<T>([f, k, sp](const T& x) { f(x).run(*sp, k); }));
  });
}

// Fold of choice over cs, with fail as the unit.
template <class T>
Comp<T> sum(std::vector<Comp<T>> cs) {
  Comp<T> acc = fail<T>();
  for (auto& c : cs) acc = choice(std::move(acc), std::move(c));
  return acc;
}

}  // namespace memotab
