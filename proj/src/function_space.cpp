#include "wilson/function_space.hpp"

#include <algorithm>

namespace wilson {

  namespace {
    constexpr int kZeroCode = -1;

    // Codes: -1 is the value 0, k >= 0 is zeta_L^k.
    int code_product(int a, int b, int l) {
      if (a == kZeroCode || b == kZeroCode) {
        return kZeroCode;
      }
      return (a + b) % l;
    }

    void require_closed(CayleyTable const& s, std::vector<bool> const& subset) {
      if (subset.size() != s.order()) {
        throw PreconditionError("bad-subset", "mask length differs from |S|");
      }
      if (!is_closed(s, subset)) {
        throw PreconditionError("subset-not-closed",
                                "the subset is not closed under composition");
      }
    }

    // Rows: A(xy) - A(x) - A(y) for x, y in the subset; columns indexed by
    // the subset's members in increasing order.
    Matrix<Rational> additive_system(CayleyTable const&          s,
                                     std::vector<Element> const& members,
                                     std::vector<Index> const&   column) {
      auto const       m = static_cast<Index>(members.size());
      Matrix<Rational> a(m * m, m);
      a.setConstant(Rational(0));
      Index row = 0;
      for (Element x : members) {
        for (Element y : members) {
          a(row, column[s(x, y)]) += Rational(1);
          a(row, column[x]) -= Rational(1);
          a(row, column[y]) -= Rational(1);
          ++row;
        }
      }
      return a;
    }

    Matrix<Cyclotomic> embed_basis(Matrix<Rational> const&     basis,
                                   std::vector<Element> const& members,
                                   std::size_t                 order) {
      Matrix<Cyclotomic> out(static_cast<Index>(order), basis.cols());
      out.setConstant(Cyclotomic(0));
      for (Index k = 0; k < basis.cols(); ++k) {
        for (std::size_t i = 0; i < members.size(); ++i) {
          out(members[i], k) = Cyclotomic(basis(static_cast<Index>(i), k));
        }
      }
      return out;
    }

    Matrix<Cyclotomic> additive_kernel(CayleyTable const&       s,
                                       std::vector<bool> const& subset,
                                       Involution const*        sigma) {
      std::vector<Element> members;
      std::vector<Index>   column(s.order(), -1);
      for (Element x = 0; x < s.order(); ++x) {
        if (subset[x]) {
          column[x] = static_cast<Index>(members.size());
          members.push_back(x);
        }
      }
      if (members.empty()) {
        return Matrix<Cyclotomic>(static_cast<Index>(s.order()), 0);
      }
      Matrix<Rational> a = additive_system(s, members, column);
      if (sigma != nullptr) {
        auto const       m = static_cast<Index>(members.size());
        Matrix<Rational> odd(m, m);
        odd.setConstant(Rational(0));
        for (Index i = 0; i < m; ++i) {
          Element const x = members[static_cast<std::size_t>(i)];
          odd(i, column[x]) += Rational(1);
          odd(i, column[(*sigma)(x)]) += Rational(1);
        }
        Matrix<Rational> stacked(a.rows() + m, m);
        stacked.topRows(a.rows()) = a;
        stacked.bottomRows(m)     = odd;
        a                         = std::move(stacked);
      }
      return embed_basis(kernel(a), members, s.order());
    }
  }  // namespace

  std::vector<SFunc> enumerate_multiplicative(CayleyTable const&     s,
                                              CyclotomicField const& field) {
    auto const n = static_cast<int>(s.order());
    int const  l = static_cast<int>(period_lcm(s));
    if (field.conductor() % static_cast<unsigned>(l) != 0) {
      throw ConductorMismatch(static_cast<unsigned>(l), field.conductor());
    }
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      int const p = static_cast<int>(
          monogenic_data(s, static_cast<Element>(x)).period);
      auto& c = candidates[static_cast<std::size_t>(x)];
      c.push_back(kZeroCode);
      for (int k = 0; k < p; ++k) {
        c.push_back(k * (l / p));
      }
    }

    std::vector<std::vector<int>> found;
    std::vector<int>              code(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t>      choice(static_cast<std::size_t>(n), 0);
    // Check every pair whose operands and product are assigned and which
    // involves the newest element in one of the three positions.
    auto consistent = [&](int upto) {
      for (int a = 0; a <= upto; ++a) {
        for (int b = 0; b <= upto; ++b) {
          auto const ab = static_cast<int>(
              s(static_cast<Element>(a), static_cast<Element>(b)));
          if (ab > upto || (a != upto && b != upto && ab != upto)) {
            continue;
          }
          if (code[static_cast<std::size_t>(ab)]
              != code_product(code[static_cast<std::size_t>(a)],
                              code[static_cast<std::size_t>(b)],
                              l)) {
            return false;
          }
        }
      }
      return true;
    };

    int x = 0;
    choice[0] = 0;
    while (x >= 0) {
      auto const ux = static_cast<std::size_t>(x);
      if (choice[ux] == candidates[ux].size()) {
        choice[ux] = 0;
        --x;
        if (x >= 0) {
          ++choice[static_cast<std::size_t>(x)];
        }
        continue;
      }
      code[ux] = candidates[ux][choice[ux]];
      if (!consistent(x)) {
        ++choice[ux];
        continue;
      }
      if (x == n - 1) {
        found.push_back(code);
        ++choice[ux];
        continue;
      }
      ++x;
      choice[static_cast<std::size_t>(x)] = 0;
    }

    std::vector<Cyclotomic> roots;
    roots.reserve(static_cast<std::size_t>(l));
    for (int k = 0; k < l; ++k) {
      roots.push_back(root_of_unity(field, static_cast<unsigned>(l), k));
    }
    Cyclotomic const   zero(field, Rational(0));
    std::vector<SFunc> out;
    out.reserve(found.size());
    for (auto const& codes : found) {
      SFunc f(n);
      for (int y = 0; y < n; ++y) {
        int const c = codes[static_cast<std::size_t>(y)];
        f(y)        = c == kZeroCode ? zero : roots[static_cast<std::size_t>(c)];
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  std::vector<MuWitness> enumerate_mu(CayleyTable const&     s,
                                      Involution const&      sigma,
                                      CyclotomicField const& field) {
    if (!is_involutive_automorphism(s, sigma.perm)) {
      throw PreconditionError("bad-sigma",
                              "sigma is not an involutive automorphism");
    }
    std::vector<MuWitness> out;
    auto const             n = static_cast<Element>(s.order());
    for (auto& m : enumerate_multiplicative(s, field)) {
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x) {
        ok = !m(x).is_zero() && m(s(x, sigma(x))).is_one();
      }
      if (ok) {
        out.push_back(MuWitness{std::move(m), sigma});
      }
    }
    return out;
  }

  Matrix<Cyclotomic> additive_space(CayleyTable const&       s,
                                    std::vector<bool> const& subset) {
    require_closed(s, subset);
    return additive_kernel(s, subset, nullptr);
  }

  Matrix<Cyclotomic> odd_additive_space(CayleyTable const&       s,
                                        std::vector<bool> const& subset,
                                        Involution const&        sigma) {
    require_closed(s, subset);
    for (Element x = 0; x < s.order(); ++x) {
      if (subset[x] != subset[sigma(x)]) {
        throw PreconditionError("subset-not-sigma-stable",
                                "sigma does not map the subset to itself");
      }
    }
    return additive_kernel(s, subset, &sigma);
  }

  NullIdeal null_ideal(SFunc const& chi, CayleyTable const& s) {
    if (chi.size() != static_cast<Index>(s.order())
        || !is_multiplicative(s, chi)) {
      throw PreconditionError("not-multiplicative",
                              "the null ideal needs a multiplicative function");
    }
    NullIdeal ideal;
    ideal.members.resize(s.order());
    for (Element x = 0; x < s.order(); ++x) {
      ideal.members[x] = chi(x).is_zero();
    }
    auto const n = static_cast<Element>(s.order());
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if ((ideal.members[x] || ideal.members[y])
            && !ideal.members[s(x, y)]) {
          throw Error("null set of a multiplicative function is not an ideal");
        }
      }
    }
    if (!is_closed(s, ideal.complement())) {
      throw Error("complement of a null ideal is not closed");
    }
    return ideal;
  }

  StructureInstance make_instance(CayleyTable const& s) {
    return make_instance(s, identity_involution(s.order()));
  }

  StructureInstance make_instance(CayleyTable const& s, Involution sigma) {
    auto const& field = CyclotomicField::get(session_conductor(s));
    return make_instance(
        s,
        std::move(sigma),
        constant_function(s.order(), Cyclotomic(field, Rational(1))));
  }

  StructureInstance make_instance(CayleyTable const& s,
                                  Involution         sigma,
                                  SFunc              mu) {
    validate(s);
    auto const& field = CyclotomicField::get(session_conductor(s));
    for (Index x = 0; x < mu.size(); ++x) {
      mu(x) = mu(x).embed(field);
    }
    StructureInstance ctx{s, std::move(sigma), std::move(mu)};
    validate_structure(ctx);
    return ctx;
  }

  bool function_less(SFunc const& lhs, SFunc const& rhs) {
    return std::lexicographical_compare(
        lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  }

}  // namespace wilson
