#ifndef ZG_ZMOD_HPP
#define ZG_ZMOD_HPP

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "zg/errors.hpp"

namespace zg {

// Dense row over Z/n, entries in [0, n).
using Row = std::vector<uint32_t>;

// Sparse matrix over Z/n.  n need not be prime.
struct SparseMatModN {
  uint32_t modulus = 2;
  uint32_t rows = 0;
  uint32_t cols = 0;
  // (row, col, value); value in [1, n), at most one entry per cell.
  std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> entries;

  void validate() const;
  std::vector<Row> to_dense() const;
  static SparseMatModN from_dense(const std::vector<Row>& d, uint32_t cols,
                                  uint32_t modulus);
};

// Canonical row-span representative over Z/n (Howell form): two matrices have
// the same row span iff their forms are identical.  Rows are sorted by pivot
// column; each pivot divides n; entries in pivot columns of earlier rows are
// reduced modulo the pivot.
struct HowellForm {
  uint32_t modulus = 2;
  uint32_t cols = 0;
  std::vector<Row> rows;
  std::vector<uint32_t> pivot_cols;  // one per row, strictly increasing
  // transform[i] expresses rows[i] as a Z/n-combination of the input rows.
  std::vector<Row> transform;

  bool contains(const Row& v) const;
  // Coefficients over the Howell rows with sum equal to v, or nullopt.
  std::optional<Row> express(const Row& v) const;
  // Number of elements of the span.  Throws BudgetError on uint64 overflow.
  uint64_t span_size() const;
};

// Incremental Howell reduction.  Feed rows, then finish().
class HowellBuilder {
 public:
  HowellBuilder(uint32_t modulus, uint32_t cols, bool track = false);
  void add(const Row& r);
  void add_sparse(const std::vector<std::pair<uint32_t, uint32_t>>& ents);
  HowellForm finish();
  // Reduces r in place against the current basis; true iff r reduced to zero.
  // Usable before finish() as a cheap dependence filter.
  bool reduces_to_zero(Row& r) const;
  size_t basis_rank() const { return slots_.size(); }

 private:
  struct Slot {
    uint32_t col;
    Row row;
    Row tr;
  };
  void insert(Row r, Row t);
  uint32_t n_, cols_;
  bool track_;
  uint32_t next_input_ = 0;
  std::vector<int32_t> pivot_slot_;  // col -> slot index or -1
  std::vector<Slot> slots_;
  bool finished_ = false;
};

HowellForm normal_form(const SparseMatModN& m, bool track_transform = true);
HowellForm howell_of_rows(const std::vector<Row>& rows, uint32_t cols,
                          uint32_t modulus, bool track = false);

// Generating set of the right kernel {v : m v = 0 (mod n)}.
std::vector<Row> kernel(const SparseMatModN& m);
std::vector<Row> kernel_of_rows(const std::vector<Row>& rows, uint32_t cols,
                                uint32_t modulus);

// Diagonalisation of a relation matrix over Z/n.  rowspan(A) becomes
// sum_i d_i * (Z/n) * w_i where w_i is row i of vinv; the quotient
// (Z/n)^k / rowspan(A) is the direct sum of Z/d_i.
struct SmithModN {
  std::vector<uint32_t> diag;  // length k, each divides n (n for free coords)
  std::vector<Row> v;          // k x k, invertible over Z/n
  std::vector<Row> vinv;
};
SmithModN smith_mod_n(std::vector<Row> rel, uint32_t k, uint32_t modulus);

// Invariant-factor presentation of span(zgens)/span(bgens) inside (Z/n)^cols.
struct AbelianStructure {
  uint32_t modulus = 2;
  uint32_t cols = 0;
  std::vector<uint32_t> factors;  // d_1 | d_2 | ..., each > 1
  std::vector<Row> lifts;         // ambient representative per factor

  uint64_t order() const;
  // Coordinates of an ambient vector in (+) Z/d_i, or nullopt if the vector
  // is not in span(zgens).  Vectors in span(bgens) map to zero.
  std::optional<std::vector<uint32_t>> project(const Row& ambient) const;
  bool is_trivial() const { return factors.empty(); }

  // internals used by project(); populated by subquotient()
  HowellForm z_form;
  std::vector<Row> vmat;          // k x k
  std::vector<uint32_t> alldiag;  // per z_form row
  std::vector<uint32_t> kept;     // indices of factors kept (d > 1)
};

AbelianStructure subquotient(const std::vector<Row>& zgens,
                             const std::vector<Row>& bgens, uint32_t cols,
                             uint32_t modulus);

// Small helpers shared across modules.
uint32_t mod_reduce(int64_t v, uint32_t n);
int64_t xgcd(int64_t a, int64_t b, int64_t& x, int64_t& y);
uint32_t gcd_u32(uint32_t a, uint32_t b);
// Unit u (mod n) with v = u * gcd(v, n) (mod n).
uint32_t unit_part(uint32_t v, uint32_t n);
uint32_t inverse_mod(uint32_t u, uint32_t n);

}  // namespace zg

#endif
