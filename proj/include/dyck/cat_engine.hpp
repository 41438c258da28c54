#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyck/errors.hpp"
#include "dyck/path.hpp"
#include "dyck/succession.hpp"

namespace dyck {

/// Fixed 2n-bit buffer read as the rotation that starts at the cursor.
/// Moving the cursor replaces shifting the whole word by one step.
class CircularWord {
 public:
  /// The pyramid p_n with the cursor at 0.
  explicit CircularWord(int n);
  /// Throws std::invalid_argument if the cursor is out of range.
  CircularWord(std::vector<std::uint8_t> buffer, std::size_t cursor);

  std::size_t size() const noexcept { return buffer_.size(); }
  std::size_t cursor() const noexcept { return cursor_; }
  std::span<const std::uint8_t> buffer() const noexcept { return buffer_; }

  std::uint8_t at(std::size_t logical) const noexcept { return buffer_[physical(logical)]; }

  void swap(std::size_t a, std::size_t b) noexcept {
    std::swap(buffer_[physical(a)], buffer_[physical(b)]);
  }
  void advance() noexcept {
    if (++cursor_ == buffer_.size()) cursor_ = 0;
  }
  void retreat() noexcept { cursor_ = (cursor_ == 0 ? buffer_.size() : cursor_) - 1; }

  /// Copies the logical word into `out` (resized to size()).
  void copy_logical(std::vector<std::uint8_t>& out) const;
  DyckWord logical_word() const;

 private:
  std::size_t physical(std::size_t logical) const noexcept {
    const std::size_t p = cursor_ + logical;
    return p >= buffer_.size() ? p - buffer_.size() : p;
  }

  std::vector<std::uint8_t> buffer_;
  std::size_t cursor_ = 0;
};

/// Elementary actions performed by the generator, plus per-operation tallies.
struct OpCounters {
  std::uint64_t swaps = 0;
  std::uint64_t cursor_moves = 0;
  std::uint64_t pushes = 0;
  std::uint64_t pops = 0;
  std::uint64_t label_updates = 0;
  std::uint64_t dispatch_tests = 0;

  std::uint64_t root_firstborn = 0;
  std::uint64_t op1 = 0;
  std::uint64_t op2 = 0;
  std::uint64_t op3 = 0;

  std::uint64_t stack_ops() const noexcept { return pushes + pops; }
  std::uint64_t actions() const noexcept {
    return swaps + cursor_moves + pushes + pops + label_updates + dispatch_tests;
  }
  std::uint64_t operations() const noexcept { return root_firstborn + op1 + op2 + op3; }

  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

enum class Phase { not_started, running, done };

enum class Op { none, root, root_firstborn, op1, op2, op3 };

/// Sequential generator of every Dyck word of one semilength, in generating
/// tree preorder (root first, then sons firstborn first).
///
/// Each step is one of a few bit swaps on a CircularWord plus O(1) label
/// bookkeeping. The current node's label (k, i) and a stack holding the labels
/// of its ancestors make every applicability test an integer comparison:
///
///   op1  (descend to firstborn)  needs i >= 1
///   op2  (next sibling)          needs k >= 2
///   op3  (parent's next sibling) needs a non-root parent on the stack
///
/// Invariant: cursor == max(stack depth - 1, 0).
class Generator {
 public:
  /// Starts at p_n with label (n-1, n-1). Throws std::invalid_argument for n < 1.
  explicit Generator(int n);

  int n() const noexcept { return n_; }
  Phase phase() const noexcept { return phase_; }
  const CircularWord& word() const noexcept { return word_; }
  DyckWord current() const { return word_.logical_word(); }
  Label label() const noexcept { return label_; }
  std::span<const Label> ancestors() const noexcept { return ancestors_; }
  const OpCounters& counters() const noexcept { return counters_; }
  std::uint64_t emitted() const noexcept { return emitted_; }
  Op last_op() const noexcept { return last_op_; }
  int op3_run() const noexcept { return op3_run_; }
  int max_op3_run() const noexcept { return max_op3_run_; }

  /// Advances to the next path; false once the stream is exhausted. The new
  /// path is available through word() / current().
  bool step() {
    switch (phase_) {
      case Phase::not_started:
        phase_ = n_ == 1 ? Phase::done : Phase::running;
        emitted_ = 1;
        last_op_ = Op::root;
        return true;
      case Phase::done:
        return false;
      case Phase::running:
        break;
    }
    if (ancestors_.empty()) {
      do_root_firstborn();
      return true;
    }
    ++counters_.dispatch_tests;
    if (label_.i >= 1) {
      do_op1();
      return true;
    }
    ++counters_.dispatch_tests;
    if (label_.k >= 2) {
      do_op2();
      return true;
    }
    ++counters_.dispatch_tests;
    if (ancestors_.size() >= 2) {
      do_op3();
      return true;
    }
    phase_ = Phase::done;
    return false;
  }

  /// step() returning the emitted word.
  std::optional<DyckWord> next();

  /// Overturns the root's apex. Requires n >= 2 and that no operation has
  /// been applied yet (the root itself may or may not have been emitted).
  DyckWord root_firstborn();
  /// Descend to the firstborn. Requires a non-root running state with i >= 1.
  DyckWord apply_op1();
  /// Move to the next sibling. Requires a non-root running state with k >= 2.
  DyckWord apply_op2();
  /// Move to the parent's next sibling. Requires k == 1 and a non-root parent.
  DyckWord apply_op3();

  /// Describes the first broken state invariant, if any. Linear time.
  std::optional<std::string> check_invariants() const;

  /// Versioned text snapshot of the full state.
  std::string snapshot() const;
  /// Rebuilds a generator from snapshot(); validates the result.
  static Generator restore(std::string_view text);

 private:
  Generator() = default;

  std::size_t length() const noexcept { return word_.size(); }

  void do_root_firstborn() {
    const auto n = static_cast<std::size_t>(n_);
    word_.swap(n - 1, n);
    ancestors_.push_back(label_);
    label_ = Label{n_ - 1, n_ - 2};
    counters_.swaps += 1;
    counters_.pushes += 1;
    counters_.label_updates += 1;
    counters_.root_firstborn += 1;
    finish(Op::root_firstborn);
  }

  // Strip the boundary steps and put a peak on top of the trailing descent:
  // swap the first step with the first down step of the last descent, then
  // move the cursor forward.
  void do_op1() {
    const int k = label_.k;
    word_.swap(0, length() - static_cast<std::size_t>(k));
    word_.advance();
    ancestors_.push_back(label_);
    label_ = Label{k, (k < label_.i ? k : label_.i) - 1};
    counters_.swaps += 1;
    counters_.cursor_moves += 1;
    counters_.pushes += 1;
    counters_.label_updates += 1;
    counters_.op1 += 1;
    finish(Op::op1);
  }

  // Overturn the rightmost peak.
  void do_op2() {
    const int k = label_.k;
    const std::size_t top = length() - static_cast<std::size_t>(k);
    word_.swap(top - 1, top);
    label_ = next_sibling(label_);
    counters_.swaps += 1;
    counters_.label_updates += 1;
    counters_.op2 += 1;
    finish(Op::op2);
  }

  // Drop the trailing p_1, add an up step in front and a down step where the
  // parent's last ascent ends: overturn the last two "10" pairs and move the
  // cursor back. The pair before the final p_1 sits k_parent steps earlier.
  void do_op3() {
    const Label parent = ancestors_.back();
    ancestors_.pop_back();
    const std::size_t len = length();
    const auto kp = static_cast<std::size_t>(parent.k);
    word_.swap(len - 2, len - 1);
    word_.swap(len - 2 - kp, len - 1 - kp);
    word_.retreat();
    label_ = next_sibling(parent);
    counters_.swaps += 2;
    counters_.cursor_moves += 1;
    counters_.pops += 1;
    counters_.label_updates += 1;
    counters_.op3 += 1;
    finish(Op::op3);
  }

  static constexpr Label next_sibling(Label l) noexcept {
    return Label{l.k - 1, l.i == l.k - 1 ? l.i - 1 : l.i};
  }

  void finish(Op op) noexcept {
    if (op == Op::op3) {
      if (++op3_run_ > max_op3_run_) max_op3_run_ = op3_run_;
    } else {
      op3_run_ = 0;
    }
    last_op_ = op;
    ++emitted_;
  }

  void require_operable(const char* what) const;

  int n_ = 0;
  CircularWord word_{1};
  Label label_;
  std::vector<Label> ancestors_;
  OpCounters counters_;
  std::uint64_t emitted_ = 0;
  Phase phase_ = Phase::not_started;
  Op last_op_ = Op::none;
  int op3_run_ = 0;
  int max_op3_run_ = 0;
};

struct RunSummary {
  std::uint64_t count = 0;
  OpCounters counters;
  int max_consecutive_op3 = 0;
};

/// Drives `gen` to completion, handing every emitted path to
/// sink(const CircularWord&). If the sink throws, the exception propagates and
/// the generator stays on the rejected path; calling run_all again resumes
/// after it.
template <class Sink>
RunSummary run_all(Generator& gen, Sink&& sink) {
  const std::uint64_t before = gen.emitted();
  while (gen.step()) sink(gen.word());
  return {gen.emitted() - before, gen.counters(), gen.max_op3_run()};
}

template <class Sink>
RunSummary run_all(int n, Sink&& sink) {
  Generator gen(n);
  return run_all(gen, std::forward<Sink>(sink));
}

/// Count-only run.
RunSummary run_all(int n);

/// Materializes the whole stream (small n only).
std::vector<DyckWord> generate_all(int n);

}  // namespace dyck
