#include "inflatable/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "inflatable/error.hpp"

namespace inflatable {

Permutation::Permutation(std::vector<value_type> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("empty permutation");
  const auto n = static_cast<value_type>(values_.size());
  std::vector<bool> seen(values_.size() + 1, false);
  for (value_type v : values_) {
    if (v < 1 || v > n) {
      throw PreconditionError("value " + std::to_string(v) +
                              " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw PreconditionError("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
  std::vector<value_type> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[values_[i] - 1] = static_cast<value_type>(i + 1);
  }
  return Permutation(std::move(inv), Unchecked{});
}

namespace {

int compact_digit(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char compact_char(int v) {
  return v <= 9 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Re-throws construction failures as parse errors with the offending text.
Permutation build(std::vector<int> values, std::string_view text) {
  try {
    return Permutation(std::move(values));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty permutation");

  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = std::min(text.find(',', start), text.size());
      auto token = trim(text.substr(start, end - start));
      if (token.empty()) throw ParseError("empty entry in '" + std::string(text) + "'");
      long long v = 0;
      for (char c : token) {
        if (c >= '0' && c <= '9') {
          v = v * 10 + (c - '0');
          if (v > 1'000'000'000) throw ParseError("value too large in '" + std::string(text) + "'");
        } else if (compact_digit(c) > 0) {
          throw ParseError("mixed compact and comma styles in '" + std::string(text) + "'");
        } else {
          throw ParseError(std::string("invalid character '") + c + "' in '" +
                           std::string(text) + "'");
        }
      }
      values.push_back(static_cast<int>(v));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      int v = compact_digit(c);
      if (v < 0) {
        throw ParseError(std::string("invalid character '") + c + "' in '" +
                         std::string(text) + "'");
      }
      values.push_back(v);
    }
  }
  return build(std::move(values), text);
}

std::string format_permutation(const Permutation& p, Style style) {
  std::string out;
  if (style == Style::compact) {
    if (p.size() > kMaxCompactLength) {
      throw PreconditionError("compact style supports length <= 35, got " +
                              std::to_string(p.size()));
    }
    for (int v : p.values()) out.push_back(compact_char(v));
    return out;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(p[i]);
  }
  return out;
}

std::string to_string(const Permutation& p) {
  return format_permutation(
      p, p.size() <= kMaxCompactLength ? Style::compact : Style::comma);
}

Permutation pattern_of(std::span<const Permutation::value_type> values) {
  if (values.empty()) throw PreconditionError("empty sequence has no pattern");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw PreconditionError("duplicate value " + std::to_string(values[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r + 1);
  }
  return Permutation(std::move(ranks), Permutation::Unchecked{});
}

Permutation inflate(const Permutation& tau, const Permutation& gamma) {
  const auto m = static_cast<int>(gamma.size());
  std::vector<int> values;
  values.reserve(tau.size() * gamma.size());
  for (int t : tau.values()) {
    for (int g : gamma.values()) values.push_back(m * (t - 1) + g);
  }
  return Permutation(std::move(values), Permutation::Unchecked{});
}

Permutation generalized_inflate(const Permutation& tau,
                                std::span<const Permutation> blocks) {
  if (blocks.size() != tau.size()) {
    throw PreconditionError("generalized inflation of a length-" +
                            std::to_string(tau.size()) + " permutation needs " +
                            std::to_string(tau.size()) + " blocks, got " +
                            std::to_string(blocks.size()));
  }
  // offset[v] = total size of the blocks whose tau-value is below v.
  const std::size_t n = tau.size();
  std::vector<int> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[tau[i]] = static_cast<int>(blocks[i].size());
  }
  for (std::size_t v = 1; v <= n; ++v) offset[v] += offset[v - 1];

  std::vector<int> values;
  values.reserve(offset[n]);
  for (std::size_t i = 0; i < n; ++i) {
    int base = offset[tau[i] - 1];
    for (int g : blocks[i].values()) values.push_back(base + g);
  }
  return Permutation(std::move(values));
}

Permutation rotate(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<int> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = static_cast<int>(n) + 1 - p[n - 1 - i];
  }
  return Permutation(std::move(values));
}

bool is_centrally_symmetric(const Permutation& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] + p[n - 1 - i] != static_cast<int>(n) + 1) return false;
  }
  return true;
}

}  // namespace inflatable
