#include "minusplit/classification.hpp"

#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace minusplit {

namespace {

struct Instance {
  CartanType type;
  int rank;
  int node;
};

struct Family {
  std::string variety;
  std::string group;
  std::vector<Instance> instances;
};

std::vector<Family> families() {
  std::vector<Family> f;
  {
    Family p{"P^{n-1}", "SL(n), n>=3", {}};
    for (int n = 3; n <= 8; ++n) {
      p.instances.push_back({CartanType::A, n - 1, 1});
      p.instances.push_back({CartanType::A, n - 1, n - 1});
    }
    f.push_back(p);
  }
  {
    Family g{"Gr(k,n), 1<k<n-1", "SL(n), n>=4", {}};
    for (int n = 4; n <= 8; ++n)
      for (int k = 2; k < n - 1; ++k) g.instances.push_back({CartanType::A, n - 1, k});
    f.push_back(g);
  }
  {
    Family s{"spinor variety S_n", "SO(2n), n>=3", {}};
    for (int n = 3; n <= 6; ++n) s.instances.push_back({CartanType::D, n, n});
    f.push_back(s);
  }
  f.push_back({"quadric Q4", "SO(6)", {{CartanType::D, 3, 1}, {CartanType::A, 3, 2}}});
  {
    Family q{"quadric Q_{2n}, n>=3", "SO(2n+2)", {}};
    for (int n = 3; n <= 5; ++n) q.instances.push_back({CartanType::D, n + 1, 1});
    f.push_back(q);
  }
  f.push_back({"Cayley plane OP2", "E6", {{CartanType::E, 6, 6}, {CartanType::E, 6, 1}}});
  f.push_back({"Freudenthal variety", "E7", {{CartanType::E, 7, 7}}});
  f.push_back({"quadric Q5", "SO(7)", {{CartanType::B, 3, 1}}});
  {
    Family q{"quadric Q_{2n+1}, n>=3", "SO(2n+3)", {}};
    for (int n = 3; n <= 5; ++n) q.instances.push_back({CartanType::B, n + 1, 1});
    f.push_back(q);
  }
  return f;
}

std::string criterion_for(const std::string& x2) {
  if (x2 == kVerdictPlane) return "V splits <=> V|P2 splits";
  if (x2 == kVerdictWedge) return "V splits <=> V|(P2 wedge P2) splits";
  return "none";
}

}  // namespace

std::string to_string(SplitTest t) { return t == SplitTest::Plane ? "P2 test" : "wedge test"; }

std::string describe_variety(CartanType type, int n, int node) {
  std::ostringstream os;
  switch (type) {
    case CartanType::A:
      if (node == 1 || node == n) os << "P" << n;
      else os << "Gr(" << node << "," << n + 1 << ")";
      break;
    case CartanType::B:
      if (node == 1) os << "Q" << 2 * n - 1;
      else if (node == n) os << "S" << n + 1;
      else os << "B" << n << "/P" << node;
      break;
    case CartanType::C:
      if (node == 1) os << "P" << 2 * n - 1;
      else if (node == n) os << "LG(" << n << ")";
      else os << "C" << n << "/P" << node;
      break;
    case CartanType::D:
      if (node == 1) os << "Q" << 2 * n - 2;
      else if (node == n || node == n - 1) os << "S" << n;
      else os << "D" << n << "/P" << node;
      break;
    case CartanType::E:
      if (n == 6 && (node == 1 || node == 6)) os << "OP2";
      else if (n == 7 && node == 7) os << "FV";
      else os << "E" << n << "/P" << node;
      break;
  }
  return os.str();
}

VarietyModel parse_variety(std::string_view text) {
  std::string s(text);
  std::smatch m;
  auto bad = [&]() -> VarietyModel { throw std::invalid_argument("unknown variety '" + s + "'"); };
  if (std::regex_match(s, m, std::regex(R"(P\^?(\d+))"))) {
    const int n = std::stoi(m[1]);
    if (n < 2) return bad();
    return {s, CartanType::A, n, 1};
  }
  if (std::regex_match(s, m, std::regex(R"(Grs?\((\d+),\s*(\d+)\))"))) {
    const int k = std::stoi(m[1]);
    const int n = std::stoi(m[2]);
    if (k < 1 || k >= n) return bad();
    return {s, CartanType::A, n - 1, k};
  }
  if (std::regex_match(s, m, std::regex(R"(S_?(\d+))"))) {
    const int n = std::stoi(m[1]);
    if (n < 3) return bad();
    return {s, CartanType::D, n, n};
  }
  if (std::regex_match(s, m, std::regex(R"(Q_?(\d+))"))) {
    const int d = std::stoi(m[1]);
    if (d % 2 == 0 && d >= 4) return {s, CartanType::D, d / 2 + 1, 1};
    if (d % 2 == 1 && d >= 5) return {s, CartanType::B, (d + 1) / 2, 1};
    return bad();
  }
  if (std::regex_match(s, m, std::regex(R"(LG\((\d+)\))"))) {
    const int n = std::stoi(m[1]);
    if (n < 2) return bad();
    return {s, CartanType::C, n, n};
  }
  if (s == "OP2") return {s, CartanType::E, 6, 6};
  if (s == "FV" || s == "Freudenthal") return {s, CartanType::E, 7, 7};
  return bad();
}

TestPlan reduction_table(RootSystemPtr rs, int node) {
  TestPlan plan;
  plan.variety = describe_variety(rs->type(), rs->rank(), node);
  X2Report report;
  if (is_minuscule(*rs, node)) {
    report = classify_x2(rs, node);
  } else if (rs->type() == CartanType::B && node == 1 && rs->rank() >= 3) {
    plan.via = describe_variety(CartanType::D, rs->rank(), 1);
    report = classify_x2(build_root_system(CartanType::D, rs->rank()), 1);
  } else {
    throw std::domain_error("no splitting test for " + plan.variety +
                            ": node is neither minuscule nor an odd quadric");
  }
  plan.x2 = report.verdict;
  if (report.verdict == kVerdictPlane) plan.test = SplitTest::Plane;
  else if (report.verdict == kVerdictWedge) plan.test = SplitTest::Wedge;
  else throw std::logic_error("unexpected X2 structure for " + plan.variety);
  return plan;
}

std::vector<TableRow> expected_table() {
  const std::string plane = kVerdictPlane;
  const std::string wedge = kVerdictWedge;
  return {
      {"P^{n-1}", "SL(n), n>=3", plane, criterion_for(plane)},
      {"Gr(k,n), 1<k<n-1", "SL(n), n>=4", wedge, criterion_for(wedge)},
      {"spinor variety S_n", "SO(2n), n>=3", plane, criterion_for(plane)},
      {"quadric Q4", "SO(6)", wedge, criterion_for(wedge)},
      {"quadric Q_{2n}, n>=3", "SO(2n+2)", plane, criterion_for(plane)},
      {"Cayley plane OP2", "E6", plane, criterion_for(plane)},
      {"Freudenthal variety", "E7", plane, criterion_for(plane)},
      {"quadric Q5", "SO(7)", wedge, criterion_for(wedge)},
      {"quadric Q_{2n+1}, n>=3", "SO(2n+3)", plane, criterion_for(plane)},
  };
}

std::vector<TableRowCheck> check_table() {
  const auto expected = expected_table();
  const auto fams = families();
  std::vector<TableRowCheck> out;
  for (std::size_t r = 0; r < fams.size(); ++r) {
    const Family& fam = fams[r];
    TableRowCheck check;
    check.expected = expected[r];
    check.computed = {fam.variety, fam.group, "", ""};
    bool uniform = true;
    for (const Instance& inst : fam.instances) {
      const RootSystemPtr rs = build_root_system(inst.type, inst.rank);
      const TestPlan plan = reduction_table(rs, inst.node);
      std::ostringstream os;
      os << rs->label() << " node " << inst.node << " = " << plan.variety;
      if (!plan.via.empty()) os << " via " << plan.via;
      os << ": " << plan.x2;
      check.instances.push_back(os.str());
      if (check.computed.x2.empty()) check.computed.x2 = plan.x2;
      else if (check.computed.x2 != plan.x2) uniform = false;
    }
    if (!uniform) check.computed.x2 = "mixed";
    check.computed.criterion = criterion_for(check.computed.x2);
    check.pass = check.computed == check.expected;
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<TableRow> regenerate_table() {
  std::vector<TableRow> rows;
  for (auto& c : check_table()) rows.push_back(c.computed);
  return rows;
}

}  // namespace minusplit
