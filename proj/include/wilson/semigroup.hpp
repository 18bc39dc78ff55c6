#ifndef WILSON_SEMIGROUP_HPP_
#define WILSON_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wilson {

  using Element = std::uint32_t;

  constexpr std::size_t kDefaultMaxOrder = 4;
  constexpr std::size_t kHardMaxOrder    = 5;

  //! A finite magma given by its composition table, entry (x, y) = x*y.
  //! Construction checks the entries are in range; associativity is
  //! checked by validate().
  class CayleyTable {
   public:
    CayleyTable() = default;
    CayleyTable(std::size_t order, std::vector<Element> entries);
    CayleyTable(std::initializer_list<std::initializer_list<Element>> rows);

    std::size_t order() const noexcept {
      return order_;
    }
    Element operator()(Element x, Element y) const noexcept {
      return entries_[x * order_ + y];
    }
    std::vector<Element> const& entries() const noexcept {
      return entries_;
    }

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;
    friend auto operator<=>(CayleyTable const&, CayleyTable const&) = default;

   private:
    std::size_t          order_ = 0;
    std::vector<Element> entries_;
  };

  struct Triple {
    Element x, y, z;
  };

  //! First (x, y, z), in lexicographic order, with (xy)z != x(yz).
  std::optional<Triple> find_associativity_failure(CayleyTable const& table);

  //! Returns the table unchanged if associative; throws AssocFail otherwise.
  CayleyTable const& validate(CayleyTable const& table);

  bool is_commutative(CayleyTable const& table);

  struct SquareGeneration {
    bool                 generated = false;
    std::vector<Element> closure;  // sorted
  };

  //! Closure of {x*x} under composition, via a worklist.
  SquareGeneration square_generation(CayleyTable const& table);

  inline bool is_square_generated(CayleyTable const& table) {
    return square_generation(table).generated;
  }

  //! Elements of the form x*y, as a membership mask.
  std::vector<bool> products(CayleyTable const& table);
  //! Elements of the form x*y*z, as a membership mask.
  std::vector<bool> triple_products(CayleyTable const& table);

  bool is_closed(CayleyTable const& table, std::vector<bool> const& subset);

  struct Involution {
    std::vector<Element> perm;

    Element operator()(Element x) const noexcept {
      return perm[x];
    }
    friend bool operator==(Involution const&, Involution const&) = default;
  };

  Involution identity_involution(std::size_t order);

  bool is_homomorphism(CayleyTable const& table,
                       std::vector<Element> const& map);
  bool is_involutive_automorphism(CayleyTable const& table,
                                  std::vector<Element> const& perm);

  //! Every involutive automorphism, in lexicographic order of the
  //! permutation; the identity comes first.
  std::vector<Involution>
  enumerate_involutive_automorphisms(CayleyTable const& table);

  //! Every homomorphism S -> S (not necessarily bijective or involutive).
  std::vector<std::vector<Element>>
  enumerate_endomorphisms(CayleyTable const& table);

  //! x^(index + period) = x^index with both minimal.
  struct MonogenicData {
    Element     element;
    std::size_t index;
    std::size_t period;
  };

  MonogenicData monogenic_data(CayleyTable const& table, Element x);

  //! lcm of the periods of all elements.
  std::size_t period_lcm(CayleyTable const& table);

  //! Conductor used for every computation on this semigroup: twice the
  //! period lcm.
  unsigned session_conductor(CayleyTable const& table);

  //! Streams every associative table of a given order (labeled, not up to
  //! isomorphism) in lexicographic order of the row-major entries. Cells are
  //! filled one at a time and every associativity triple that becomes fully
  //! determined is checked immediately.
  class SemigroupEnumerator {
   public:
    explicit SemigroupEnumerator(std::size_t order,
                                 std::size_t max_order = kDefaultMaxOrder);

    std::optional<CayleyTable> next();

   private:
    bool consistent(std::size_t cell) const;
    bool triple_ok(int x, int y, int z) const;
    int  at(int x, int y) const noexcept {
      return cells_[static_cast<std::size_t>(x * n_ + y)];
    }

    int              n_;
    std::vector<int> cells_;
    long             pos_;
    bool             done_ = false;
  };

  std::vector<CayleyTable> enumerate_semigroups(std::size_t order,
                                                std::size_t max_order
                                                = kDefaultMaxOrder);

  //! Text format: "order n" followed by n rows of n zero-based entries.
  CayleyTable parse_semigroup_text(std::string_view text);
  std::string to_text(CayleyTable const& table);

  //! A few small semigroups used throughout tests and examples.
  namespace examples {
    CayleyTable trivial();           // {e}
    CayleyTable two_multiplicative();  // ({0,1}, *)
    CayleyTable cyclic_group(std::size_t n);  // (Z/n, +)
    CayleyTable constant(std::size_t n, Element value);  // xy = value
  }  // namespace examples

}  // namespace wilson

#endif  // WILSON_SEMIGROUP_HPP_
