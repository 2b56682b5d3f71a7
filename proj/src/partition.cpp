#include "symrep/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "symrep/errors.hpp"

namespace symrep {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw DomainError("negative part");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::row(int k) {
  if (k < 0) throw DomainError("negative weight");
  return k == 0 ? Partition() : Partition(std::vector<int>{k});
}

Partition Partition::column(int k) {
  if (k < 0) throw DomainError("negative weight");
  return Partition(std::vector<int>(static_cast<std::size_t>(k), 1));
}

std::vector<int> PartitionTuple::weights() const {
  std::vector<int> w;
  w.reserve(components_.size());
  for (const auto& c : components_) w.push_back(c.weight());
  return w;
}

int PartitionTuple::length() const {
  int s = 0;
  for (const auto& c : components_) s += c.length();
  return s;
}

bool CanonicalTupleOrder::operator()(const PartitionTuple& a,
                                     const PartitionTuple& b) const noexcept {
  const auto& x = a.components();
  const auto& y = b.components();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == y[i]) continue;
    return CanonicalOrder{}(x[i], y[i]);
  }
  return x.size() < y.size();
}

namespace {

void enumerate_into(int remaining, int max_part, int slots, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // The remaining slots must be able to absorb what is left.
    if (static_cast<long long>(part) * slots < remaining) break;
    prefix.push_back(part);
    enumerate_into(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_length) {
  if (k < 0) throw DomainError("cannot enumerate partitions of a negative integer");
  const int slots = max_length ? std::max(*max_length, 0) : k;
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(k, k, slots, prefix, out);
  return out;
}

Natural count_partitions(int k, std::optional<int> max_length) {
  if (k < 0) return 0;
  // Partitions with at most L parts are equinumerous with partitions whose
  // parts are at most L.
  const int largest = max_length ? std::min(std::max(*max_length, 0), k) : k;
  std::vector<Natural> ways(static_cast<std::size_t>(k) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= largest; ++part) {
    for (int n = part; n <= k; ++n) ways[n] += ways[n - part];
  }
  return ways[k];
}

Natural count_partitions_of_length(int k, int length) {
  if (k < 0 || length < 0) return 0;
  if (length == 0) return k == 0 ? 1 : 0;
  if (length > k) return 0;
  return count_partitions(k - length, length);
}

Partition transpose(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw DomainError("dominance compares partitions of equal weight");
  }
  const std::size_t n = std::max(mu.parts().size(), lambda.parts().size());
  int a = 0;
  int b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a += mu[i];
    b += lambda[i];
    if (a < b) return false;
  }
  return true;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.parts().size(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

Natural count_by_length_profile(std::span<const int> weights, const LengthProfile& profile) {
  if (weights.size() != profile.entries.size()) {
    throw DomainError("weight tuple and length profile differ in arity");
  }
  Natural total = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total *= count_partitions_of_length(weights[i], profile.entries[i]);
    if (total == 0) break;
  }
  return total;
}

std::vector<PartitionTuple> enumerate_partition_tuples(std::span<const int> weights,
                                                       std::span<const int> max_lengths) {
  if (weights.size() != max_lengths.size()) {
    throw DomainError("weight tuple and length bounds differ in arity");
  }
  std::vector<std::vector<Partition>> factors;
  factors.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    factors.push_back(enumerate_partitions(weights[i], max_lengths[i]));
    if (factors.back().empty()) return {};
  }
  std::vector<PartitionTuple> out;
  std::vector<Partition> current;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == factors.size()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& p : factors[i]) {
      current.push_back(p);
      walk(i + 1);
      current.pop_back();
    }
  };
  walk(0);
  return out;
}

Natural count_partition_tuples(std::span<const int> weights, std::span<const int> max_lengths) {
  if (weights.size() != max_lengths.size()) {
    throw DomainError("weight tuple and length bounds differ in arity");
  }
  Natural total = 1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total *= count_partitions(weights[i], max_lengths[i]);
  }
  return total;
}

std::vector<std::pair<Partition, Partition>> splits(const Partition& lambda) {
  // Distinct part values with multiplicities, largest first.
  std::vector<std::pair<int, int>> groups;
  for (int p : lambda.parts()) {
    if (!groups.empty() && groups.back().first == p) {
      ++groups.back().second;
    } else {
      groups.emplace_back(p, 1);
    }
  }
  std::vector<std::pair<Partition, Partition>> out;
  std::vector<int> first;
  std::vector<int> second;
  std::function<void(std::size_t)> walk = [&](std::size_t g) {
    if (g == groups.size()) {
      out.emplace_back(Partition(first), Partition(second));
      return;
    }
    const auto [value, mult] = groups[g];
    for (int take = mult; take >= 0; --take) {
      first.insert(first.end(), static_cast<std::size_t>(take), value);
      second.insert(second.end(), static_cast<std::size_t>(mult - take), value);
      walk(g + 1);
      first.resize(first.size() - static_cast<std::size_t>(take));
      second.resize(second.size() - static_cast<std::size_t>(mult - take));
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return CanonicalOrder{}(a.first, b.first);
  });
  return out;
}

std::string to_string(const Partition& lambda) {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda.parts()[i]);
  }
  s += ']';
  return s;
}

std::string to_string(const PartitionTuple& tuple) {
  std::string s;
  for (std::size_t i = 0; i < tuple.arity(); ++i) {
    if (i) s += ';';
    s += to_string(tuple[i]);
  }
  return s;
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, where()); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

Partition parse_bracketed(Cursor& in) {
  in.expect('[');
  std::vector<int> parts;
  in.skip_space();
  if (in.peek() == ']') {
    in.expect(']');
    return Partition();
  }
  while (true) {
    in.skip_space();
    const std::size_t num_at = in.where();
    const int part = in.number();
    if (part < 1) throw ParseError("partition parts must be positive", num_at);
    if (!parts.empty() && part > parts.back()) {
      throw ParseError("partition parts must be weakly decreasing", num_at);
    }
    parts.push_back(part);
    in.skip_space();
    if (in.peek() == ',') {
      in.expect(',');
      continue;
    }
    in.expect(']');
    break;
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(std::string_view text) {
  Cursor in(text, 0);
  Partition p = parse_bracketed(in);
  in.skip_space();
  if (!in.at_end()) in.fail("unexpected trailing input");
  return p;
}

PartitionTuple parse_partition_tuple(std::string_view text) {
  Cursor in(text, 0);
  std::vector<Partition> comps;
  comps.push_back(parse_bracketed(in));
  in.skip_space();
  while (in.peek() == ';') {
    in.expect(';');
    comps.push_back(parse_bracketed(in));
    in.skip_space();
  }
  if (!in.at_end()) in.fail("unexpected trailing input");
  return PartitionTuple(std::move(comps));
}

std::vector<int> parse_int_tuple(std::string_view text) {
  Cursor in(text, 0);
  std::vector<int> out;
  out.push_back(in.number());
  in.skip_space();
  while (in.peek() == ',') {
    in.expect(',');
    out.push_back(in.number());
    in.skip_space();
  }
  if (!in.at_end()) in.fail("unexpected trailing input");
  return out;
}

}  // namespace symrep
