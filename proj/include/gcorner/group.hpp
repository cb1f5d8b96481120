#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "gcorner/error.hpp"

namespace gcorner {

/// Element of a product of cyclic groups; one coordinate per factor.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Direct product Z^a x Z_{n1} x ... in factor order. A factor of order 0
/// is Z; order n >= 1 is Z_n. The group is abelian, so op(a, b) == op(b, a),
/// but callers still pass operands in the order the formulas use.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw GraphError("group must have at least one factor");
    for (auto n : orders_)
      if (n < 0) throw GraphError("cyclic factor order must be >= 1, or 0 for Z");
  }

  static GroupSpec integers() { return GroupSpec({0}); }
  static GroupSpec cyclic(std::int64_t n) {
    if (n < 1) throw GraphError("Z_n needs n >= 1");
    return GroupSpec({n});
  }

  const std::vector<std::int64_t>& orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }

  bool is_finite() const {
    for (auto n : orders_)
      if (n == 0) return false;
    return true;
  }

  /// |G|; only meaningful when is_finite().
  std::size_t order() const {
    if (!is_finite()) throw GraphError("group is infinite");
    std::size_t n = 1;
    for (auto k : orders_) n *= static_cast<std::size_t>(k);
    return n;
  }

  GroupElement identity() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }

  GroupElement canonical(GroupElement a) const {
    check(a);
    for (std::size_t i = 0; i < rank(); ++i)
      if (orders_[i] > 0) {
        a.coords[i] %= orders_[i];
        if (a.coords[i] < 0) a.coords[i] += orders_[i];
      }
    return a;
  }

  GroupElement op(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    GroupElement c = a;
    for (std::size_t i = 0; i < rank(); ++i) c.coords[i] += b.coords[i];
    return canonical(std::move(c));
  }

  GroupElement inverse(const GroupElement& a) const {
    check(a);
    GroupElement c = a;
    for (auto& x : c.coords) x = -x;
    return canonical(std::move(c));
  }

  bool is_identity(const GroupElement& a) const { return canonical(a) == identity(); }

  /// Largest |coordinate| over the infinite factors (0 for a finite group).
  std::int64_t infinite_norm(const GroupElement& a) const {
    check(a);
    std::int64_t m = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      if (orders_[i] == 0) m = std::max(m, std::abs(a.coords[i]));
    return m;
  }

  /// All elements of a finite group, lexicographic with the first factor slowest.
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    GroupElement g = identity();
    std::size_t total = order();
    for (std::size_t k = 0; k < total; ++k) {
      out.push_back(g);
      for (std::size_t i = rank(); i-- > 0;) {
        if (++g.coords[i] < orders_[i]) break;
        g.coords[i] = 0;
      }
    }
    return out;
  }

  /// Parses comma-joined decimals, e.g. "-2,1"; the result is canonical.
  GroupElement parse_element(std::string_view text) const {
    GroupElement a;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      std::int64_t x = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw GraphError("bad group element '" + std::string(text) + "'");
      a.coords.push_back(x);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (a.coords.size() != rank())
      throw GraphError("group element '" + std::string(text) + "' has " +
                       std::to_string(a.coords.size()) + " coordinates, group " + to_string() +
                       " needs " + std::to_string(rank()));
    return canonical(std::move(a));
  }

  /// Comma-joined decimals.
  std::string encode(const GroupElement& a) const { return join(a, ','); }

  /// Encoding used inside vertex and edge names, where ',' is not allowed:
  /// coordinates are joined with '_'.
  std::string encode_for_name(const GroupElement& a) const { return join(a, '_'); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ',';
      s += 'z';
      if (orders_[i] > 0) s += std::to_string(orders_[i]);
    }
    return s;
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  void check(const GroupElement& a) const {
    if (a.coords.size() != rank()) throw GraphError("group element has the wrong arity");
  }
  std::string join(const GroupElement& a, char sep) const {
    check(a);
    std::string s;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(a.coords[i]);
    }
    return s;
  }

  std::vector<std::int64_t> orders_;
};

/// `z` | `z<n>` | comma-joined product such as `z,z2`.
inline GroupSpec parse_group_spec(std::string_view text) {
  std::vector<std::int64_t> orders;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (tok.empty() || (tok[0] != 'z' && tok[0] != 'Z'))
      throw GraphError("bad group spec '" + std::string(text) + "'");
    if (tok.size() == 1) {
      orders.push_back(0);
    } else {
      std::int64_t n = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), n);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || n < 1)
        throw GraphError("bad group spec '" + std::string(text) + "'");
      orders.push_back(n);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return GroupSpec(std::move(orders));
}

}  // namespace gcorner
