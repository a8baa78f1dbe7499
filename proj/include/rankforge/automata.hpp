#ifndef RANKFORGE_AUTOMATA_HPP_
#define RANKFORGE_AUTOMATA_HPP_

// Finite automata over the inverse-closed alphabet {a_k, a_k^{-1} : k < n},
// used to represent rational subsets of the free group F_n.
//
// Letters are addressed by Letter::code(), so an automaton of rank n has 2n
// labels. Nfa additionally allows epsilon edges.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace rankforge {

  using State = std::size_t;

  class Nfa {
   public:
    static constexpr std::size_t epsilon = std::numeric_limits<std::size_t>::max();

    struct Edge {
      std::size_t label;  // Letter::code() or epsilon
      State       target;

      [[nodiscard]] bool is_epsilon() const noexcept {
        return label == epsilon;
      }
      bool operator==(Edge const&) const = default;
    };

    explicit Nfa(std::size_t rank = 0) : _rank(rank) {}

    State add_state() {
      _out.emplace_back();
      _initial.push_back(false);
      _accepting.push_back(false);
      return _out.size() - 1;
    }

    void add_transition(State from, Letter l, State to) {
      validate_state(from);
      validate_state(to);
      if (l.generator >= _rank) {
        throw InvalidInput("transition label " + to_string(l)
                           + " outside rank " + std::to_string(_rank));
      }
      insert(from, {l.code(), to});
    }

    // Returns false when the edge was already present.
    bool add_epsilon(State from, State to) {
      validate_state(from);
      validate_state(to);
      return insert(from, {epsilon, to});
    }

    void set_initial(State s, bool value = true) {
      validate_state(s);
      _initial[s] = value;
    }

    void set_accepting(State s, bool value = true) {
      validate_state(s);
      _accepting[s] = value;
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t state_count() const noexcept {
      return _out.size();
    }
    [[nodiscard]] bool is_initial(State s) const {
      return _initial.at(s);
    }
    [[nodiscard]] bool is_accepting(State s) const {
      return _accepting.at(s);
    }
    [[nodiscard]] std::span<Edge const> edges(State s) const {
      return _out.at(s);
    }

    [[nodiscard]] std::vector<State> initial_states() const {
      std::vector<State> out;
      for (State s = 0; s < state_count(); ++s) {
        if (_initial[s]) {
          out.push_back(s);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t transition_count() const noexcept {
      std::size_t n = 0;
      for (auto const& e : _out) {
        n += e.size();
      }
      return n;
    }

    [[nodiscard]] std::size_t epsilon_count() const noexcept {
      std::size_t n = 0;
      for (auto const& es : _out) {
        n += static_cast<std::size_t>(std::count_if(
            es.begin(), es.end(), [](Edge const& e) { return e.is_epsilon(); }));
      }
      return n;
    }

    [[nodiscard]] bool has_epsilon(State from, State to) const {
      auto const& es = _out.at(from);
      return std::find(es.begin(), es.end(), Edge{epsilon, to}) != es.end();
    }

    // Reflexive-transitive epsilon closure of `from`, sorted.
    [[nodiscard]] std::vector<State>
    epsilon_closure(std::vector<State> const& from) const {
      std::vector<bool>  seen(state_count(), false);
      std::vector<State> stack;
      for (auto s : from) {
        if (!seen[s]) {
          seen[s] = true;
          stack.push_back(s);
        }
      }
      std::vector<State> out;
      while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        out.push_back(s);
        for (auto const& e : _out[s]) {
          if (e.is_epsilon() && !seen[e.target]) {
            seen[e.target] = true;
            stack.push_back(e.target);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    [[nodiscard]] std::vector<State> step(std::vector<State> const& from,
                                          Letter                    l) const {
      std::vector<bool>  seen(state_count(), false);
      std::vector<State> out;
      for (auto s : from) {
        for (auto const& e : _out[s]) {
          if (e.label == l.code() && !seen[e.target]) {
            seen[e.target] = true;
            out.push_back(e.target);
          }
        }
      }
      return epsilon_closure(out);
    }

    [[nodiscard]] bool accepts(Word const& w) const {
      auto current = epsilon_closure(initial_states());
      for (auto l : w) {
        if (l.generator >= _rank) {
          return false;
        }
        current = step(current, l);
        if (current.empty()) {
          return false;
        }
      }
      return std::any_of(current.begin(), current.end(), [this](State s) {
        return _accepting[s];
      });
    }

   private:
    void validate_state(State s) const {
      if (s >= state_count()) {
        throw InvalidInput("state " + std::to_string(s) + " out of range");
      }
    }

    bool insert(State from, Edge e) {
      auto& es = _out[from];
      if (std::find(es.begin(), es.end(), e) != es.end()) {
        return false;
      }
      es.push_back(e);
      return true;
    }

    std::size_t                    _rank;
    std::vector<std::vector<Edge>> _out;
    std::vector<bool>              _initial;
    std::vector<bool>              _accepting;
  };

  // Complete deterministic automaton; every state has one edge per label.
  class Dfa {
   public:
    Dfa(std::size_t rank, std::size_t state_count, State initial)
        : _rank(rank),
          _state_count(state_count),
          _initial(initial),
          _table(state_count * 2 * rank, 0),
          _accepting(state_count, false) {
      if (state_count == 0 || initial >= state_count) {
        throw InvalidInput("a complete DFA needs a valid initial state");
      }
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t state_count() const noexcept {
      return _state_count;
    }
    [[nodiscard]] State initial() const noexcept {
      return _initial;
    }
    [[nodiscard]] bool is_accepting(State s) const {
      return _accepting.at(s);
    }
    [[nodiscard]] State next(State s, Letter l) const {
      return _table.at(s * 2 * _rank + l.code());
    }

    void set_next(State s, Letter l, State t) {
      if (t >= _state_count || l.generator >= _rank) {
        throw InvalidInput("DFA transition out of range");
      }
      _table.at(s * 2 * _rank + l.code()) = t;
    }

    void set_accepting(State s, bool value = true) {
      _accepting.at(s) = value;
    }

    [[nodiscard]] bool accepts(Word const& w) const {
      State s = _initial;
      for (auto l : w) {
        if (l.generator >= _rank) {
          return false;
        }
        s = next(s, l);
      }
      return _accepting[s];
    }

    // Same language over a larger alphabet: new letters lead to a fresh
    // rejecting sink.
    [[nodiscard]] Dfa lifted(std::size_t rank) const {
      if (rank <= _rank) {
        return *this;
      }
      Dfa   out(rank, _state_count + 1, _initial);
      State sink = _state_count;
      for (State s = 0; s <= _state_count; ++s) {
        for (std::size_t c = 0; c < 2 * rank; ++c) {
          auto  l = Letter::from_code(c);
          State t = (s < _state_count && l.generator < _rank) ? next(s, l) : sink;
          out.set_next(s, l, t);
        }
        if (s < _state_count) {
          out.set_accepting(s, _accepting[s]);
        }
      }
      return out;
    }

   private:
    std::size_t        _rank;
    std::size_t        _state_count;
    State              _initial;
    std::vector<State> _table;
    std::vector<bool>  _accepting;
  };

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void check_words(std::span<Word const> words, std::size_t rank) {
      for (auto const& w : words) {
        if (w.min_rank() > rank) {
          throw InvalidInput("word \"" + to_string(w) + "\" uses a generator "
                             + "outside rank " + std::to_string(rank));
        }
      }
    }
  }  // namespace detail

  // Recognizer for S^+ read as unreduced words. State 0 is the start state,
  // state 1 the accepting hub; each element of S is a petal leaving both.
  [[nodiscard]] inline Nfa flower_automaton(std::span<Word const> S,
                                            std::size_t           rank) {
    if (S.empty()) {
      throw InvalidInput("flower automaton needs a nonempty set of words");
    }
    detail::check_words(S, rank);
    Nfa   m(rank);
    State start = m.add_state();
    State hub   = m.add_state();
    m.set_initial(start);
    m.set_accepting(hub);
    for (auto const& w : S) {
      if (w.empty()) {
        throw InvalidInput("the empty word cannot label a petal");
      }
      if (w.size() == 1) {
        m.add_transition(start, w[0], hub);
        m.add_transition(hub, w[0], hub);
        continue;
      }
      State from = m.add_state();
      m.add_transition(start, w[0], from);
      m.add_transition(hub, w[0], from);
      for (std::size_t i = 1; i + 1 < w.size(); ++i) {
        State to = m.add_state();
        m.add_transition(from, w[i], to);
        from = to;
      }
      m.add_transition(from, w[w.size() - 1], hub);
    }
    return m;
  }

  // Adds epsilon edges p -> q whenever p -x-> p' =eps*=> q' -x^{-1}-> q, until
  // nothing changes. At most state_count^2 edges are added, so this
  // terminates.
  [[nodiscard]] inline Nfa benois_saturate(Nfa m) {
    std::size_t const n = m.state_count();
    while (true) {
      std::vector<std::vector<State>> closure(n);
      for (State s = 0; s < n; ++s) {
        closure[s] = m.epsilon_closure({s});
      }
      std::vector<std::pair<State, State>> found;
      for (State p = 0; p < n; ++p) {
        for (auto const& e : m.edges(p)) {
          if (e.is_epsilon()) {
            continue;
          }
          std::size_t back = Letter::from_code(e.label).inverse().code();
          for (State q1 : closure[e.target]) {
            for (auto const& f : m.edges(q1)) {
              if (f.label == back && f.target != p
                  && !m.has_epsilon(p, f.target)) {
                found.emplace_back(p, f.target);
              }
            }
          }
        }
      }
      bool changed = false;
      for (auto [p, q] : found) {
        changed = m.add_epsilon(p, q) || changed;
      }
      if (!changed) {
        return m;
      }
    }
  }

  // Deterministic recognizer of all reduced words of rank n. State 0 is the
  // start, state 1 + c means "last letter had code c", state 2n + 1 is the
  // sink.
  [[nodiscard]] inline Dfa all_reduced_words(std::size_t rank) {
    std::size_t const live = 2 * rank + 1;
    State const       sink = live;
    Dfa               d(rank, live + 1, 0);
    for (State s = 0; s <= sink; ++s) {
      for (std::size_t c = 0; c < 2 * rank; ++c) {
        auto  l = Letter::from_code(c);
        State t = 1 + c;
        if (s == sink || (s > 0 && Letter::from_code(s - 1).inverse() == l)) {
          t = sink;
        }
        d.set_next(s, l, t);
      }
      d.set_accepting(s, s != sink);
    }
    return d;
  }

  // Language of m intersected with the reduced words; reachable part of the
  // product with all_reduced_words(rank).
  [[nodiscard]] inline Nfa restrict_to_reduced(Nfa const& m) {
    Dfa const   red  = all_reduced_words(m.rank());
    State const sink = red.state_count() - 1;
    Nfa         out(m.rank());
    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>>      todo;

    auto visit = [&](State q, State r) {
      auto [it, inserted] = index.try_emplace({q, r}, 0);
      if (inserted) {
        it->second = out.add_state();
        out.set_accepting(it->second, m.is_accepting(q) && red.is_accepting(r));
        todo.emplace_back(q, r);
      }
      return it->second;
    };

    for (auto q : m.initial_states()) {
      out.set_initial(visit(q, red.initial()));
    }
    while (!todo.empty()) {
      auto [q, r] = todo.front();
      todo.pop_front();
      State from = index.at({q, r});
      for (auto const& e : m.edges(q)) {
        if (e.is_epsilon()) {
          out.add_epsilon(from, visit(e.target, r));
          continue;
        }
        auto  l  = Letter::from_code(e.label);
        State r2 = red.next(r, l);
        if (r2 != sink) {
          out.add_transition(from, l, visit(e.target, r2));
        }
      }
    }
    if (out.state_count() == 0) {
      // no initial states: keep a single dead state so the result is well
      // formed
      out.add_state();
    }
    return out;
  }

  // Subset construction with epsilon closures. The empty subset, when
  // reached, becomes the sink.
  [[nodiscard]] inline Dfa determinize(Nfa const& m) {
    std::size_t const                     labels = 2 * m.rank();
    std::map<std::vector<State>, State>   index;
    std::vector<std::vector<State>>       subsets;
    std::vector<std::vector<State>>       next;

    auto visit = [&](std::vector<State> subset) {
      auto [it, inserted] = index.try_emplace(subset, subsets.size());
      if (inserted) {
        subsets.push_back(std::move(subset));
        next.emplace_back(labels, 0);
      }
      return it->second;
    };

    visit(m.epsilon_closure(m.initial_states()));
    for (State s = 0; s < subsets.size(); ++s) {
      for (std::size_t c = 0; c < labels; ++c) {
        auto t     = m.step(subsets[s], Letter::from_code(c));
        next[s][c] = visit(std::move(t));
      }
    }

    Dfa d(m.rank(), subsets.size(), 0);
    for (State s = 0; s < subsets.size(); ++s) {
      for (std::size_t c = 0; c < labels; ++c) {
        d.set_next(s, Letter::from_code(c), next[s][c]);
      }
      d.set_accepting(s,
                      std::any_of(subsets[s].begin(),
                                  subsets[s].end(),
                                  [&](State q) { return m.is_accepting(q); }));
    }
    return d;
  }

  // Searches the synchronized product for a pair of states with different
  // acceptance. Automata of different rank are compared over the larger
  // alphabet.
  [[nodiscard]] inline bool equivalent(Dfa const& d1, Dfa const& d2) {
    std::size_t const rank = std::max(d1.rank(), d2.rank());
    Dfa const         a    = d1.lifted(rank);
    Dfa const         b    = d2.lifted(rank);
    std::vector<bool> seen(a.state_count() * b.state_count(), false);
    std::deque<std::pair<State, State>> todo{{a.initial(), b.initial()}};
    seen[a.initial() * b.state_count() + b.initial()] = true;
    while (!todo.empty()) {
      auto [p, q] = todo.front();
      todo.pop_front();
      if (a.is_accepting(p) != b.is_accepting(q)) {
        return false;
      }
      for (std::size_t c = 0; c < 2 * rank; ++c) {
        auto  l  = Letter::from_code(c);
        State p2 = a.next(p, l);
        State q2 = b.next(q, l);
        auto  k  = p2 * b.state_count() + q2;
        if (!seen[k]) {
          seen[k] = true;
          todo.emplace_back(p2, q2);
        }
      }
    }
    return true;
  }

  [[nodiscard]] inline bool is_empty(Dfa const& d) {
    std::vector<bool>  seen(d.state_count(), false);
    std::vector<State> stack{d.initial()};
    seen[d.initial()] = true;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      if (d.is_accepting(s)) {
        return false;
      }
      for (std::size_t c = 0; c < 2 * d.rank(); ++c) {
        State t = d.next(s, Letter::from_code(c));
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    return true;
  }

}  // namespace rankforge

#endif  // RANKFORGE_AUTOMATA_HPP_
