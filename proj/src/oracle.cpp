#include "kdg/oracle.hpp"

#include <unordered_map>

#include "kdg/linalg.hpp"

namespace kdg {

namespace {

using Column = std::vector<std::pair<std::uint32_t, Polynomial>>;  // (component, entry)

// Monomial basis of F_d for a free module F with the given twists.
class Piece {
 public:
  Piece(std::size_t nvars, const std::vector<int>& twists, int d) : index_(twists.size()) {
    for (std::size_t c = 0; c < twists.size(); ++c) {
      int e = d - twists[c];
      if (e < 0) continue;
      for (const auto& m : monomials_of_degree(nvars, e)) {
        index_[c].emplace(m, size_);
        basis_.emplace_back(static_cast<std::uint32_t>(c), m);
        ++size_;
      }
    }
  }
  std::size_t size() const { return size_; }
  const std::vector<std::pair<std::uint32_t, Monomial>>& basis() const { return basis_; }

  SparseRow row(const Column& v, const Monomial& mult) const {
    SparseRow out;
    for (const auto& [c, p] : v)
      for (const auto& t : p.terms()) {
        auto it = index_[c].find(t.mono * mult);
        if (it == index_[c].end()) throw std::logic_error("oracle: element leaves its graded piece");
        out.emplace_back(static_cast<std::uint32_t>(it->second), t.coef);
      }
    // entries of different components never collide, and a single polynomial has distinct monomials
    return out;
  }

 private:
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
  std::vector<std::pair<std::uint32_t, Monomial>> basis_;
  std::size_t size_ = 0;
};

std::optional<int> column_degree(const Column& v, const std::vector<int>& twists) {
  for (const auto& [c, p] : v) {
    if (p.is_zero()) continue;
    auto d = p.degree();
    if (!d) throw InhomogeneousInput("oracle needs homogeneous data");
    return *d + twists[c];
  }
  return std::nullopt;
}

std::vector<Column> matrix_columns(const PolyMatrix& m) {
  std::vector<Column> out;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Column col;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) col.emplace_back(static_cast<std::uint32_t>(i), m(i, j));
    out.push_back(std::move(col));
  }
  return out;
}

// Relations of a cokernel-form term plus J·e_c, all as homogeneous columns.
std::vector<Column> relation_columns(const FPModule& t) {
  std::vector<Column> out = matrix_columns(t.relations());
  for (const auto& g : t.base()->ideal())
    for (std::size_t c = 0; c < t.ambient_rank(); ++c) out.push_back({{static_cast<std::uint32_t>(c), g}});
  return out;
}

// Adds every monomial multiple of the columns that lands in the piece.
void add_multiples(SparseEchelon& ech, const Piece& piece, const std::vector<Column>& cols,
                   const std::vector<int>& twists, int d, std::size_t nvars) {
  for (const auto& col : cols) {
    auto e = column_degree(col, twists);
    if (!e || *e > d) continue;
    for (const auto& m : monomials_of_degree(nvars, d - *e)) ech.add(piece.row(col, m));
  }
}

}  // namespace

std::int64_t OracleTable::dim(int i, int degree) const {
  auto it = dims.find(i);
  if (it == dims.end() || degree < start || degree > max_degree) return 0;
  return it->second[static_cast<std::size_t>(degree - start)];
}

int lowest_twist(const Complex& c) {
  int low = kPlusInfinity;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    FPModule t = c.term(i);
    for (int tw : t.twists()) low = std::min(low, tw);
  }
  return low;
}

OracleTable truncation_oracle(const Complex& c, int max_degree, std::optional<int> start) {
  OracleTable table;
  table.max_degree = max_degree;
  if (c.empty()) {
    table.start = start.value_or(0);
    return table;
  }
  int low = lowest_twist(c);
  table.start = start.value_or(low == kPlusInfinity ? 0 : low);
  if (max_degree < table.start)
    throw InputError("oracle degree bound " + std::to_string(max_degree) + " is below the lowest generator degree " +
                     std::to_string(table.start));
  const std::size_t nvars = c.ring()->nvars();
  const Field& field = c.ring()->field();

  std::map<int, std::vector<Column>> rels, diffs;
  for (int i = c.lo(); i <= c.hi(); ++i) {
    rels[i] = relation_columns(c.term(i));
    diffs[i] = matrix_columns(c.differential(i));
  }
  for (int i = c.lo(); i <= c.hi(); ++i) table.dims[i].assign(static_cast<std::size_t>(max_degree - table.start + 1), 0);

  for (int d = table.start; d <= max_degree; ++d) {
    std::map<int, Piece> pieces;
    for (int i = c.lo(); i <= c.hi() + 1; ++i) pieces.emplace(i, Piece(nvars, c.term(i).twists(), d));
    // rank W^i and rank [D_(i-1) | W^i]
    std::map<int, std::size_t> rank_w, rank_dw;
    for (int i = c.lo(); i <= c.hi(); ++i) {
      const Piece& piece = pieces.at(i);
      const auto twists = c.term(i).twists();
      SparseEchelon ech(field);
      add_multiples(ech, piece, rels[i], twists, d, nvars);
      rank_w[i] = ech.rank();
      if (i > c.lo()) {
        const Piece& src = pieces.at(i - 1);
        for (const auto& [comp, mono] : src.basis()) {
          const Column& col = diffs[i - 1][comp];
          if (col.empty()) continue;
          ech.add(piece.row(col, mono));
        }
      }
      rank_dw[i] = ech.rank();
    }
    for (int i = c.lo(); i <= c.hi(); ++i) {
      std::int64_t dim_v = static_cast<std::int64_t>(pieces.at(i).size());
      std::int64_t next = i < c.hi() ? static_cast<std::int64_t>(rank_dw[i + 1]) - static_cast<std::int64_t>(rank_w[i + 1]) : 0;
      std::int64_t h = dim_v - next - static_cast<std::int64_t>(rank_dw[i]);
      table.dims[i][static_cast<std::size_t>(d - table.start)] = h;
    }
  }
  return table;
}

std::optional<std::string> oracle_mismatch(const Complex& c, const OracleTable& table) {
  for (const auto& [i, row] : table.dims) {
    HilbertSeries hs = c.homology_hilbert(i);
    for (int d = table.start; d <= table.max_degree; ++d) {
      std::int64_t expect = row[static_cast<std::size_t>(d - table.start)];
      std::int64_t got = hs.value(d);
      if (expect != got)
        return "H^" + std::to_string(i) + " in internal degree " + std::to_string(d) + ": oracle " +
               std::to_string(expect) + ", symbolic " + std::to_string(got);
    }
  }
  return std::nullopt;
}

std::vector<std::int64_t> oracle_module_dims(const FPModule& m, int start, int max_degree) {
  std::vector<std::int64_t> out;
  const std::size_t nvars = m.ring()->nvars();
  const Field& field = m.ring()->field();
  std::vector<Column> n = relation_columns(FPModule::cokernel(m.base(), m.twists(), m.relations()));
  std::vector<Column> g = matrix_columns(m.generators());
  for (int d = start; d <= max_degree; ++d) {
    Piece piece(nvars, m.twists(), d);
    SparseEchelon ech(field);
    add_multiples(ech, piece, n, m.twists(), d, nvars);
    std::size_t base = ech.rank();
    add_multiples(ech, piece, g, m.twists(), d, nvars);
    out.push_back(static_cast<std::int64_t>(ech.rank() - base));
  }
  return out;
}

std::vector<std::int64_t> oracle_quotient_dims(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                               int max_degree) {
  std::vector<std::int64_t> out;
  std::vector<Column> cols;
  for (const auto& g : gens)
    if (!g.is_zero()) cols.push_back({{0, g}});
  for (int d = 0; d <= max_degree; ++d) {
    Piece piece(ring->nvars(), {0}, d);
    SparseEchelon ech(ring->field());
    add_multiples(ech, piece, cols, {0}, d, ring->nvars());
    out.push_back(static_cast<std::int64_t>(piece.size() - ech.rank()));
  }
  return out;
}

bool oracle_ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens, int max_degree) {
  if (p.is_zero()) return true;
  const RingPtr& ring = p.ring();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  auto row_of = [&](const Polynomial& q) {
    SparseRow row;
    for (const auto& t : q.terms()) {
      auto [it, fresh] = index.emplace(t.mono, static_cast<std::uint32_t>(index.size()));
      row.emplace_back(it->second, t.coef);
    }
    return row;
  };
  SparseEchelon ech(ring->field());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int top = max_degree - g.max_degree();
    Scalar one = ring->field().one();
    for (int e = 0; e <= top; ++e)
      for (const auto& m : monomials_of_degree(ring->nvars(), e)) ech.add(row_of(g.times(m, one)));
  }
  return ech.in_span(row_of(p));
}

}  // namespace kdg
