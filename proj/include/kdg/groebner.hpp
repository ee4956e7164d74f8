#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "kdg/common.hpp"
#include "kdg/hilbert.hpp"
#include "kdg/polynomial.hpp"

namespace kdg {

/// One term m·e_comp of an element of a graded free S-module.
struct VTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coef;
};

/// Term order on a graded free S-module S^r with generator twists.
///   term_over_position: twisted degree, then monomial order, then lower index wins.
///   position_over_term: lower index wins, then monomial order.
///   block: components below `split` dominate the rest; term-over-position inside a block.
///   schreyer: m·e_c compared through m·lead_c in the base order, then lower index wins.
class ModuleOrder {
 public:
  enum class Kind { term_over_position, position_over_term, block, schreyer };

  ModuleOrder() = default;
  static ModuleOrder top(MonomialOrder mono, std::vector<int> twists);
  static ModuleOrder pot(MonomialOrder mono, std::vector<int> twists);
  static ModuleOrder block(MonomialOrder mono, std::vector<int> twists, std::size_t split);
  static ModuleOrder schreyer(const ModuleOrder& base, std::vector<Monomial> lead_monos,
                              std::vector<std::uint32_t> lead_comps);

  Kind kind() const { return kind_; }
  std::size_t rank() const { return twists_.size(); }
  const std::vector<int>& twists() const { return twists_; }
  const MonomialOrder& monomial_order() const { return mono_; }
  std::size_t split() const { return split_; }

  int degree(const Monomial& m, std::uint32_t c) const { return m.degree() + twists_[c]; }

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                               std::uint32_t cb) const;
  std::strong_ordering compare(const VTerm& a, const VTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp);
  }

 private:
  Kind kind_ = Kind::term_over_position;
  MonomialOrder mono_;
  std::vector<int> twists_;
  std::size_t split_ = 0;
  std::shared_ptr<const ModuleOrder> base_;
  std::vector<Monomial> lead_monos_;
  std::vector<std::uint32_t> lead_comps_;
};

/// Sparse module element: terms strictly decreasing in some ModuleOrder, no zero coefficients.
/// The order is not stored; every operation takes it explicitly.
struct Vec {
  std::vector<VTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const VTerm& lead() const { return terms.front(); }
  std::size_t size() const { return terms.size(); }

  /// Sorts and merges arbitrary terms.
  static Vec from_terms(std::vector<VTerm> terms, const ModuleOrder& order);
  /// Polynomial placed in a single component.
  static Vec from_polynomial(const Polynomial& p, std::uint32_t comp);

  friend bool operator==(const Vec& a, const Vec& b);
};

Vec vec_add(const Vec& a, const Vec& b, const ModuleOrder& order);
/// a + c·m·b
Vec vec_add_multiple(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b,
                     const ModuleOrder& order);
Vec vec_scale(const Vec& a, const Scalar& c, const Monomial& m);
Vec vec_negate(const Vec& a);
/// Re-sorts a vector (e.g. after changing the module order or relabeling components).
Vec vec_resort(Vec a, const ModuleOrder& order);
/// Twisted degree if all terms share it.
std::optional<int> vec_degree(const Vec& a, const ModuleOrder& order);
/// Extract component c as a polynomial.
Polynomial vec_component(const Vec& a, std::uint32_t c, const RingPtr& ring);

enum class ReductionStrategy { first_divisor, last_divisor };

struct BuchbergerOptions {
  /// Inhomogeneous input is processed by sugar degree instead of being rejected.
  bool allow_inhomogeneous = false;
  /// 0 means the ring's cap.
  int degree_cap = 0;
  /// Homogeneous input only: skip everything above this degree. The result then decides
  /// membership for elements up to that degree and nothing more.
  int truncate_degree = kPlusInfinity;
};

/// Reduced Gröbner basis of a submodule of a graded free S-module.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, ModuleOrder order, std::vector<Vec> elements)
      : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {}

  const RingPtr& ring() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Vec>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// Fully reduced remainder; zero iff f lies in the submodule.
  Vec normal_form(const Vec& f, ReductionStrategy strategy = ReductionStrategy::first_divisor) const;
  /// Same, also returning q with f = sum_k q_k·g_k + remainder.
  Vec normal_form_tracking(const Vec& f, std::vector<Polynomial>& quotients) const;
  bool contains(const Vec& f) const { return normal_form(f).is_zero(); }

  /// Leading monomials grouped by component.
  std::vector<std::vector<Monomial>> lead_ideals() const;
  /// HS of F/(submodule).
  HilbertSeries quotient_hilbert_series() const;
  /// True when the submodule contains every basis vector e_c.
  bool is_everything() const;

 private:
  std::optional<std::size_t> find_divisor(const VTerm& t, ReductionStrategy strategy) const;

  RingPtr ring_;
  ModuleOrder order_;
  std::vector<Vec> elements_;
};

/// Throws InhomogeneousInput (unless allowed) and ResourceCapExceeded past the degree cap.
GroebnerBasis buchberger(const RingPtr& ring, const ModuleOrder& order, std::vector<Vec> gens,
                         const BuchbergerOptions& options = {});

/// Ideal convenience: rank-1 module with the ring's own order.
GroebnerBasis ideal_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             const BuchbergerOptions& options = {});

struct SyzygyModule {
  /// Order on S^t (t = gb.size()) with twists deg(g_k); Schreyer-induced.
  ModuleOrder order;
  std::vector<Vec> generators;
};

/// Schreyer syzygies of the elements of a Gröbner basis, from the S-pair reductions.
SyzygyModule syzygies(const GroebnerBasis& gb);

/// Elimination data for the submodule U = <gens> + <extra> of a graded free module S^r:
/// one Gröbner basis of {(g_j, e_j)} ∪ {(n, 0)} in S^r ⊕ S^k under a block order.
/// Gives the kernel of S^k -> S^r/<extra>, e_j -> g_j, and membership with cofactors.
class SubmoduleLifter {
 public:
  SubmoduleLifter(const RingPtr& ring, std::vector<int> target_twists, const std::vector<Vec>& gens,
                  std::vector<int> gen_degrees, const std::vector<Vec>& extra,
                  const BuchbergerOptions& options = {});

  /// Generators of {v in S^k : sum v_j g_j in <extra>}, sorted in source_order().
  const std::vector<Vec>& kernel() const { return kernel_; }
  /// Cofactors c with v - sum c_j g_j in <extra>, or nullopt when v is not in U.
  std::optional<std::vector<Polynomial>> lift(const Vec& v) const;
  bool contains(const Vec& v) const;

  const ModuleOrder& target_order() const { return target_order_; }
  const ModuleOrder& source_order() const { return source_order_; }

 private:
  RingPtr ring_;
  std::size_t rank_ = 0, ngens_ = 0;
  ModuleOrder target_order_, source_order_;
  GroebnerBasis gb_;
  std::vector<Vec> kernel_;
};

/// Generators of the kernel of S^k -> S^r / <extra>, e_j -> gens[j].
std::vector<Vec> syzygies_of(const RingPtr& ring, const std::vector<int>& target_twists,
                             const std::vector<Vec>& gens, const std::vector<int>& gen_degrees,
                             const std::vector<Vec>& extra = {});

}  // namespace kdg
