#pragma once

// The catalogue of minuscule varieties with cyclic Picard group, the splitting
// test each one reduces to, and the recomputed classification table.

#include "minusplit/schubert.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace minusplit {

/// A concrete model G/P_node of a named variety.
struct VarietyModel {
  std::string name;
  CartanType type = CartanType::A;
  int rank = 0;
  int node = 0;
};

/// Accepts P<m>, Gr(k,n) (or Grs), S<n>, Q<m>, OP2, FV (or Freudenthal), LG(n).
/// Throws std::invalid_argument for anything else.
VarietyModel parse_variety(std::string_view name);

/// Human-readable name of G/P_node ("Gr(2,5)", "Q6", "S5", ...).
std::string describe_variety(CartanType type, int rank, int node);

enum class SplitTest { Plane, Wedge };

std::string to_string(SplitTest t);

struct TestPlan {
  std::string variety;
  std::string x2;  // verdict string of the X2 it reduces to
  SplitTest test = SplitTest::Plane;
  /// Empty for minuscule varieties; for odd quadrics, the even quadric whose
  /// X2 is used.
  std::string via;
};

/// Which test decides splitting on G/P_node. Minuscule nodes use their own
/// X2; the odd quadric Q_{2n+1} = B_{n+1}/P_1 (n >= 2) reduces to its
/// hyperplane section Q_{2n} = D_{n+1}/P_1. Throws std::domain_error for
/// other non-minuscule nodes.
TestPlan reduction_table(RootSystemPtr rs, int node);

struct TableRow {
  std::string variety;
  std::string group;
  std::string x2;
  std::string criterion;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// The reference table: seven minuscule families plus two odd-quadric rows.
std::vector<TableRow> expected_table();

struct TableRowCheck {
  TableRow expected;
  TableRow computed;
  std::vector<std::string> instances;  // e.g. "A4 node 2 = Gr(2,5): P2 wedge P2 along line"
  bool pass = false;
};

/// Recomputes every row from the engine over its family of instances.
std::vector<TableRowCheck> check_table();

/// Just the recomputed rows (equal to expected_table() when all pass).
std::vector<TableRow> regenerate_table();

}  // namespace minusplit
