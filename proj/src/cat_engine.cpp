#include "dyck/cat_engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dyck {

CircularWord::CircularWord(int n) {
  if (n < 1) throw std::invalid_argument("CircularWord: semilength must be >= 1");
  buffer_.assign(2 * static_cast<std::size_t>(n), kDown);
  std::fill_n(buffer_.begin(), n, kUp);
}

CircularWord::CircularWord(std::vector<std::uint8_t> buffer, std::size_t cursor)
    : buffer_(std::move(buffer)), cursor_(cursor) {
  if (buffer_.empty() || cursor_ >= buffer_.size()) {
    throw std::invalid_argument("CircularWord: cursor outside buffer");
  }
}

void CircularWord::copy_logical(std::vector<std::uint8_t>& out) const {
  out.resize(buffer_.size());
  const auto split = buffer_.begin() + static_cast<std::ptrdiff_t>(cursor_);
  auto it = std::copy(split, buffer_.end(), out.begin());
  std::copy(buffer_.begin(), split, it);
}

DyckWord CircularWord::logical_word() const {
  std::vector<std::uint8_t> bits;
  copy_logical(bits);
  return DyckWord::from_bits_unchecked(std::move(bits));
}

Generator::Generator(int n) : n_(n), word_(n), label_{n - 1, n - 1} {
  ancestors_.reserve(2 * static_cast<std::size_t>(n));
}

std::optional<DyckWord> Generator::next() {
  if (!step()) return std::nullopt;
  return word_.logical_word();
}

void Generator::require_operable(const char* what) const {
  if (phase_ != Phase::running) {
    throw ContractError(std::string(what) + ": generator is not running");
  }
  if (ancestors_.empty()) {
    throw ContractError(std::string(what) + ": current path is the root");
  }
}

DyckWord Generator::root_firstborn() {
  if (n_ < 2) throw ContractError("root_firstborn: p_1 has no sons");
  if (phase_ == Phase::done || !ancestors_.empty()) {
    throw ContractError("root_firstborn: generator has left the root");
  }
  if (phase_ == Phase::not_started) phase_ = Phase::running;
  do_root_firstborn();
  return word_.logical_word();
}

DyckWord Generator::apply_op1() {
  require_operable("op1");
  if (label_.i < 1) throw ContractError("op1: current path is not active");
  do_op1();
  return word_.logical_word();
}

DyckWord Generator::apply_op2() {
  require_operable("op2");
  if (label_.k < 2) throw ContractError("op2: current path is the last son");
  do_op2();
  return word_.logical_word();
}

DyckWord Generator::apply_op3() {
  require_operable("op3");
  if (label_.k != 1) throw ContractError("op3: current path does not end in p_1");
  if (ancestors_.size() < 2) throw ContractError("op3: parent is the root");
  do_op3();
  return word_.logical_word();
}

std::optional<std::string> Generator::check_invariants() const {
  std::vector<std::uint8_t> bits;
  word_.copy_logical(bits);
  if (auto err = check(bits)) return std::string("logical word invalid: ") + err->what();
  if (bits.size() != 2 * static_cast<std::size_t>(n_)) return std::string("buffer length is not 2n");

  const std::size_t depth = ancestors_.size();
  const std::size_t expected_cursor = depth == 0 ? 0 : depth - 1;
  if (word_.cursor() != expected_cursor) {
    return "cursor " + std::to_string(word_.cursor()) + " but ancestor depth " +
           std::to_string(depth);
  }

  const auto w = DyckWord::from_bits_unchecked(std::move(bits));
  const Label actual = label_of(w);
  if (actual != label_) {
    return "label " + to_string(label_) + " but " + w.to_string() + " has " + to_string(actual);
  }
  if (!ancestors_.empty() && ancestors_.front() != Label{n_ - 1, n_ - 1}) {
    return "bottom ancestor " + to_string(ancestors_.front()) + " is not the root label";
  }
  return std::nullopt;
}

namespace {

constexpr std::string_view kSnapshotMagic = "dyck-genstate";
constexpr int kSnapshotVersion = 1;

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::not_started:
      return "not-started";
    case Phase::running:
      return "running";
    case Phase::done:
      return "done";
  }
  return "?";
}

Phase parse_phase(const std::string& s) {
  if (s == "not-started") return Phase::not_started;
  if (s == "running") return Phase::running;
  if (s == "done") return Phase::done;
  throw std::invalid_argument("snapshot: unknown phase " + s);
}

const char* op_name(Op op) {
  switch (op) {
    case Op::none:
      return "none";
    case Op::root:
      return "root";
    case Op::root_firstborn:
      return "root-firstborn";
    case Op::op1:
      return "op1";
    case Op::op2:
      return "op2";
    case Op::op3:
      return "op3";
  }
  return "?";
}

Op parse_op(const std::string& s) {
  for (Op op : {Op::none, Op::root, Op::root_firstborn, Op::op1, Op::op2, Op::op3}) {
    if (s == op_name(op)) return op;
  }
  throw std::invalid_argument("snapshot: unknown op " + s);
}

void expect_key(std::istream& in, std::string_view key) {
  std::string got;
  if (!(in >> got) || got != key) {
    throw std::invalid_argument("snapshot: expected '" + std::string(key) + "', got '" + got + "'");
  }
}

template <class T>
T read_value(std::istream& in, std::string_view key) {
  T value{};
  if (!(in >> value)) throw std::invalid_argument("snapshot: bad value for " + std::string(key));
  return value;
}

}  // namespace

// Layout (one field per line, LF separated):
//   dyck-genstate 1
//   n <n>
//   phase <not-started|running|done>
//   buffer <2n bits, physical order>
//   cursor <c>
//   label <k> <i>
//   ancestors <count> <k> <i> ...   (bottom of the stack first)
//   counters <swaps> <cursor_moves> <pushes> <pops> <label_updates> <dispatch_tests>
//   ops <root_firstborn> <op1> <op2> <op3>
//   emitted <count>
//   last <op> <op3_run> <max_op3_run>
//   end
std::string Generator::snapshot() const {
  std::ostringstream os;
  os << kSnapshotMagic << ' ' << kSnapshotVersion << '\n';
  os << "n " << n_ << '\n';
  os << "phase " << phase_name(phase_) << '\n';
  os << "buffer ";
  for (auto b : word_.buffer()) os << (b == kUp ? '1' : '0');
  os << '\n';
  os << "cursor " << word_.cursor() << '\n';
  os << "label " << label_.k << ' ' << label_.i << '\n';
  os << "ancestors " << ancestors_.size();
  for (const Label& l : ancestors_) os << ' ' << l.k << ' ' << l.i;
  os << '\n';
  const auto& c = counters_;
  os << "counters " << c.swaps << ' ' << c.cursor_moves << ' ' << c.pushes << ' ' << c.pops << ' '
     << c.label_updates << ' ' << c.dispatch_tests << '\n';
  os << "ops " << c.root_firstborn << ' ' << c.op1 << ' ' << c.op2 << ' ' << c.op3 << '\n';
  os << "emitted " << emitted_ << '\n';
  os << "last " << op_name(last_op_) << ' ' << op3_run_ << ' ' << max_op3_run_ << '\n';
  os << "end\n";
  return os.str();
}

Generator Generator::restore(std::string_view text) {
  std::istringstream in{std::string(text)};
  expect_key(in, kSnapshotMagic);
  if (read_value<int>(in, "version") != kSnapshotVersion) {
    throw std::invalid_argument("snapshot: unsupported version");
  }

  Generator g;
  expect_key(in, "n");
  g.n_ = read_value<int>(in, "n");
  if (g.n_ < 1) throw std::invalid_argument("snapshot: semilength must be >= 1");
  expect_key(in, "phase");
  g.phase_ = parse_phase(read_value<std::string>(in, "phase"));

  expect_key(in, "buffer");
  const auto text_bits = read_value<std::string>(in, "buffer");
  if (text_bits.size() != 2 * static_cast<std::size_t>(g.n_)) {
    throw std::invalid_argument("snapshot: buffer length is not 2n");
  }
  std::vector<std::uint8_t> buffer;
  buffer.reserve(text_bits.size());
  for (char ch : text_bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("snapshot: buffer is not binary");
    buffer.push_back(ch == '1' ? kUp : kDown);
  }
  expect_key(in, "cursor");
  g.word_ = CircularWord(std::move(buffer), read_value<std::size_t>(in, "cursor"));

  expect_key(in, "label");
  g.label_.k = read_value<int>(in, "label");
  g.label_.i = read_value<int>(in, "label");

  expect_key(in, "ancestors");
  const auto depth = read_value<std::size_t>(in, "ancestors");
  if (depth > 2 * static_cast<std::size_t>(g.n_)) {
    throw std::invalid_argument("snapshot: ancestor stack deeper than 2n");
  }
  g.ancestors_.reserve(2 * static_cast<std::size_t>(g.n_));
  for (std::size_t d = 0; d < depth; ++d) {
    Label l;
    l.k = read_value<int>(in, "ancestor");
    l.i = read_value<int>(in, "ancestor");
    g.ancestors_.push_back(l);
  }

  auto& c = g.counters_;
  expect_key(in, "counters");
  for (auto* field : {&c.swaps, &c.cursor_moves, &c.pushes, &c.pops, &c.label_updates,
                      &c.dispatch_tests}) {
    *field = read_value<std::uint64_t>(in, "counters");
  }
  expect_key(in, "ops");
  for (auto* field : {&c.root_firstborn, &c.op1, &c.op2, &c.op3}) {
    *field = read_value<std::uint64_t>(in, "ops");
  }
  expect_key(in, "emitted");
  g.emitted_ = read_value<std::uint64_t>(in, "emitted");
  expect_key(in, "last");
  g.last_op_ = parse_op(read_value<std::string>(in, "last"));
  g.op3_run_ = read_value<int>(in, "op3_run");
  g.max_op3_run_ = read_value<int>(in, "max_op3_run");
  expect_key(in, "end");

  if (auto err = g.check_invariants()) throw std::invalid_argument("snapshot: " + *err);
  for (const Label& l : g.ancestors_) {
    if (l.k < 1 || l.i < 1 || l.i > g.n_ - 1) {
      throw std::invalid_argument("snapshot: ancestor label " + to_string(l) + " is not active");
    }
  }
  if (g.phase_ == Phase::not_started && (!g.ancestors_.empty() || g.emitted_ != 0)) {
    throw std::invalid_argument("snapshot: not-started state has progress");
  }
  return g;
}

RunSummary run_all(int n) {
  return run_all(n, [](const CircularWord&) {});
}

std::vector<DyckWord> generate_all(int n) {
  std::vector<DyckWord> words;
  run_all(n, [&](const CircularWord& w) { words.push_back(w.logical_word()); });
  return words;
}

}  // namespace dyck
