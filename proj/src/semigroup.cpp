#include "wilson/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "wilson/errors.hpp"

namespace wilson {

  CayleyTable::CayleyTable(std::size_t order, std::vector<Element> entries)
      : order_(order), entries_(std::move(entries)) {
    if (order_ == 0) {
      throw Error("a semigroup must have at least one element");
    }
    if (entries_.size() != order_ * order_) {
      throw Error("expected " + std::to_string(order_ * order_)
                  + " table entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i] >= order_) {
        throw IndexOutOfRange(i / order_, i % order_, entries_[i]);
      }
    }
  }

  CayleyTable::CayleyTable(
      std::initializer_list<std::initializer_list<Element>> rows) {
    std::vector<Element> entries;
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        throw Error("Cayley table rows must have length equal to the order");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    *this = CayleyTable(rows.size(), std::move(entries));
  }

  std::optional<Triple> find_associativity_failure(CayleyTable const& t) {
    auto const n = static_cast<Element>(t.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (t(t(x, y), z) != t(x, t(y, z))) {
            return Triple{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  CayleyTable const& validate(CayleyTable const& table) {
    if (auto bad = find_associativity_failure(table)) {
      throw AssocFail(bad->x, bad->y, bad->z);
    }
    return table;
  }

  bool is_commutative(CayleyTable const& t) {
    auto const n = static_cast<Element>(t.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (t(x, y) != t(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  SquareGeneration square_generation(CayleyTable const& t) {
    std::size_t const    n = t.order();
    std::vector<bool>    in(n, false);
    std::vector<Element> members, work;
    for (Element x = 0; x < n; ++x) {
      Element const s = t(x, x);
      if (!in[s]) {
        in[s] = true;
        members.push_back(s);
        work.push_back(s);
      }
    }
    while (!work.empty()) {
      Element const a = work.back();
      work.pop_back();
      // members grows while we scan, so index rather than iterate
      for (std::size_t i = 0; i < members.size(); ++i) {
        Element const b = members[i];
        for (Element p : {t(a, b), t(b, a)}) {
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
            work.push_back(p);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    return SquareGeneration{members.size() == n, std::move(members)};
  }

  std::vector<bool> products(CayleyTable const& t) {
    std::vector<bool> out(t.order(), false);
    for (Element e : t.entries()) {
      out[e] = true;
    }
    return out;
  }

  std::vector<bool> triple_products(CayleyTable const& t) {
    std::vector<bool> const two = products(t);
    std::vector<bool>       out(t.order(), false);
    auto const              n = static_cast<Element>(t.order());
    for (Element p = 0; p < n; ++p) {
      if (!two[p]) {
        continue;
      }
      for (Element z = 0; z < n; ++z) {
        out[t(p, z)] = true;
      }
    }
    return out;
  }

  bool is_closed(CayleyTable const& t, std::vector<bool> const& subset) {
    auto const n = static_cast<Element>(t.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (subset[x] && subset[y] && !subset[t(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  Involution identity_involution(std::size_t order) {
    Involution id;
    id.perm.resize(order);
    std::iota(id.perm.begin(), id.perm.end(), Element{0});
    return id;
  }

  bool is_homomorphism(CayleyTable const& t, std::vector<Element> const& map) {
    auto const n = static_cast<Element>(t.order());
    if (map.size() != n) {
      return false;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (map[t(x, y)] != t(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_involutive_automorphism(CayleyTable const&          t,
                                  std::vector<Element> const& perm) {
    if (perm.size() != t.order()) {
      return false;
    }
    for (Element x = 0; x < perm.size(); ++x) {
      if (perm[x] >= perm.size() || perm[perm[x]] != x) {
        return false;
      }
    }
    return is_homomorphism(t, perm);
  }

  std::vector<Involution>
  enumerate_involutive_automorphisms(CayleyTable const& t) {
    std::vector<Involution> out;
    Involution              candidate = identity_involution(t.order());
    do {
      if (is_involutive_automorphism(t, candidate.perm)) {
        out.push_back(candidate);
      }
    } while (std::next_permutation(candidate.perm.begin(),
                                   candidate.perm.end()));
    return out;
  }

  std::vector<std::vector<Element>>
  enumerate_endomorphisms(CayleyTable const& t) {
    std::size_t const                 n = t.order();
    std::vector<std::vector<Element>> out;
    std::vector<Element>              map(n, 0);
    while (true) {
      if (is_homomorphism(t, map)) {
        out.push_back(map);
      }
      std::size_t i = n;
      while (i > 0 && map[i - 1] == n - 1) {
        map[--i] = 0;
      }
      if (i == 0) {
        break;
      }
      ++map[i - 1];
    }
    return out;
  }

  MonogenicData monogenic_data(CayleyTable const& t, Element x) {
    std::vector<std::size_t> seen(t.order(), 0);  // exponent, 0 = unseen
    Element                  power = x;
    for (std::size_t k = 1;; ++k) {
      if (seen[power] != 0) {
        return MonogenicData{x, seen[power], k - seen[power]};
      }
      seen[power] = k;
      power       = t(power, x);
    }
  }

  std::size_t period_lcm(CayleyTable const& t) {
    std::size_t l = 1;
    for (Element x = 0; x < t.order(); ++x) {
      l = std::lcm(l, monogenic_data(t, x).period);
    }
    return l;
  }

  unsigned session_conductor(CayleyTable const& t) {
    return static_cast<unsigned>(2 * period_lcm(t));
  }

  SemigroupEnumerator::SemigroupEnumerator(std::size_t order,
                                           std::size_t max_order)
      : n_(static_cast<int>(order)),
        cells_(order * order, -1),
        pos_(0) {
    if (max_order > kHardMaxOrder) {
      throw Error("enumeration bound " + std::to_string(max_order)
                  + " exceeds the hard cap " + std::to_string(kHardMaxOrder));
    }
    if (order == 0 || order > max_order) {
      throw Error("order " + std::to_string(order)
                  + " is outside the enumeration bound 1.."
                  + std::to_string(max_order));
    }
  }

  bool SemigroupEnumerator::triple_ok(int x, int y, int z) const {
    int const xy = at(x, y);
    if (xy < 0) {
      return true;
    }
    int const left = at(xy, z);
    if (left < 0) {
      return true;
    }
    int const yz = at(y, z);
    if (yz < 0) {
      return true;
    }
    int const right = at(x, yz);
    return right < 0 || left == right;
  }

  // A triple becomes fully determined only when one of its four lookups is
  // the cell just assigned, so only those triples need checking.
  bool SemigroupEnumerator::consistent(std::size_t cell) const {
    int const a = static_cast<int>(cell) / n_;
    int const b = static_cast<int>(cell) % n_;
    for (int z = 0; z < n_; ++z) {
      if (!triple_ok(a, b, z) || !triple_ok(z, a, b)) {
        return false;
      }
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        int const uv = at(u, v);
        if (uv == a && !triple_ok(u, v, b)) {
          return false;
        }
        if (uv == b && !triple_ok(a, u, v)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<CayleyTable> SemigroupEnumerator::next() {
    long const last = static_cast<long>(cells_.size()) - 1;
    while (!done_) {
      if (pos_ < 0) {
        done_ = true;
        break;
      }
      auto& cell = cells_[static_cast<std::size_t>(pos_)];
      ++cell;
      if (cell == n_) {
        cell = -1;
        --pos_;
        continue;
      }
      if (!consistent(static_cast<std::size_t>(pos_))) {
        continue;
      }
      if (pos_ == last) {
        std::vector<Element> entries(cells_.begin(), cells_.end());
        return CayleyTable(static_cast<std::size_t>(n_), std::move(entries));
      }
      ++pos_;
    }
    return std::nullopt;
  }

  std::vector<CayleyTable> enumerate_semigroups(std::size_t order,
                                                std::size_t max_order) {
    SemigroupEnumerator      e(order, max_order);
    std::vector<CayleyTable> out;
    while (auto t = e.next()) {
      out.push_back(std::move(*t));
    }
    return out;
  }

  CayleyTable parse_semigroup_text(std::string_view text) {
    std::istringstream   in{std::string(text)};
    std::string          line;
    std::size_t          line_no = 0;
    std::size_t          order   = 0;
    std::vector<Element> entries;
    auto next_content_line = [&]() -> bool {
      while (std::getline(in, line)) {
        ++line_no;
        auto const first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
          return true;
        }
      }
      return false;
    };
    if (!next_content_line()) {
      throw ParseError("empty semigroup file", 1, 1);
    }
    {
      std::istringstream header(line);
      std::string        keyword;
      long long          n = 0;
      if (!(header >> keyword) || keyword != "order") {
        throw ParseError("expected \"order n\"", line_no, 1);
      }
      if (!(header >> n) || n <= 0) {
        throw ParseError("expected a positive order",
                         line_no,
                         line.find("order") + 6);
      }
      std::string rest;
      if (header >> rest) {
        throw ParseError("unexpected text after order", line_no,
                         line.find(rest) + 1);
      }
      order = static_cast<std::size_t>(n);
    }
    for (std::size_t row = 0; row < order; ++row) {
      if (!next_content_line()) {
        throw ParseError("expected " + std::to_string(order)
                             + " table rows, found " + std::to_string(row),
                         line_no + 1,
                         1);
      }
      std::size_t col = 0;
      std::size_t i   = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i >= line.size()) {
          break;
        }
        std::size_t const start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        std::string const token = line.substr(start, i - start);
        if (!std::all_of(token.begin(), token.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c)) != 0;
            })) {
          throw ParseError("not a non-negative integer: \"" + token + "\"",
                           line_no,
                           start + 1);
        }
        if (col >= order) {
          throw ParseError("too many entries in row", line_no, start + 1);
        }
        unsigned long const value = std::stoul(token);
        if (value >= order) {
          throw ParseError("entry " + token + " out of range [0, "
                               + std::to_string(order) + ")",
                           line_no,
                           start + 1);
        }
        entries.push_back(static_cast<Element>(value));
        ++col;
      }
      if (col != order) {
        throw ParseError("expected " + std::to_string(order)
                             + " entries in row, found " + std::to_string(col),
                         line_no,
                         line.size() + 1);
      }
    }
    if (next_content_line()) {
      throw ParseError("unexpected trailing content", line_no, 1);
    }
    return CayleyTable(order, std::move(entries));
  }

  std::string to_text(CayleyTable const& t) {
    std::ostringstream os;
    os << "order " << t.order() << "\n";
    for (Element x = 0; x < t.order(); ++x) {
      for (Element y = 0; y < t.order(); ++y) {
        os << (y == 0 ? "" : " ") << t(x, y);
      }
      os << "\n";
    }
    return os.str();
  }

  namespace examples {
    CayleyTable trivial() {
      return CayleyTable(1, {0});
    }
    CayleyTable two_multiplicative() {
      return CayleyTable(2, {0, 0, 0, 1});
    }
    CayleyTable cyclic_group(std::size_t n) {
      std::vector<Element> entries(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          entries[x * n + y] = static_cast<Element>((x + y) % n);
        }
      }
      return CayleyTable(n, std::move(entries));
    }
    CayleyTable constant(std::size_t n, Element value) {
      return CayleyTable(n, std::vector<Element>(n * n, value));
    }
  }  // namespace examples

}  // namespace wilson
