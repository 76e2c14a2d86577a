#include "ade/report.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <stdexcept>

#include "json.hpp"

#include "ade/characters.hpp"
#include "ade/dual.hpp"
#include "ade/fourier.hpp"
#include "ade/mckay.hpp"
#include "ade/su2.hpp"
#include "ade/table_oracle.hpp"

namespace ade {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

std::string perm_str(const std::vector<int>& p) {
  bool id = true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) id = false;
  if (id) return "id";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

long expected_order(DiagramType type) {
  switch (type.family) {
    case Family::A: return type.rank + 1;
    case Family::D: return 4L * type.rank - 8;
    case Family::E: return type.rank == 6 ? 24 : type.rank == 7 ? 48 : 120;
  }
  return -1;
}

bool wants(Section have, Section s) { return have == Section::All || have == s; }

}  // namespace

Section parse_section(const std::string& text) {
  if (text == "groups") return Section::Groups;
  if (text == "characters") return Section::Characters;
  if (text == "mckay") return Section::McKay;
  if (text == "dual") return Section::Dual;
  if (text == "fourier") return Section::Fourier;
  if (text == "all") return Section::All;
  throw std::invalid_argument("unknown report section: " + text);
}

bool TypeReport::verdict() const {
  for (const auto& c : checks)
    if (!c.informational && !c.pass) return false;
  return true;
}

TypeReport run_type(DiagramType type, Section section, const ReportOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const double float_tol = opt.tolerance > 0 ? opt.tolerance : 1e-8;
  const double ortho_tol = opt.tolerance > 0 ? opt.tolerance : 1e-9;

  TypeReport rep;
  rep.type = type;
  auto add = [&rep](std::string name, bool pass, double dev, std::string witness,
                    bool informational = false) {
    rep.checks.push_back({std::move(name), pass, informational, dev, std::move(witness)});
  };

  const Diagram d = make_diagram(type);
  const CartanData C = make_cartan(d);
  const FiniteSubgroup G = build_group(type);
  rep.group_order = G.order();

  // built on demand; fourier needs the whole chain
  std::optional<CharacterTable> T;
  std::optional<McKayGraph> M;
  std::optional<DualData> dual;
  auto table = [&]() -> const CharacterTable& {
    if (!T) T = character_table(G);
    return *T;
  };
  auto mckay = [&]() -> const McKayGraph& {
    if (!M) M = mckay_graph(G, table());
    return *M;
  };
  auto labeling = [&]() -> const DualData& {
    if (!dual) dual = build_dual(G, d);
    return *dual;
  };

  if (wants(section, Section::Groups)) {
    const long want = expected_order(type);
    add("group_order", G.order() == want, std::abs(static_cast<double>(G.order() - want)),
        "order " + std::to_string(G.order()) + " (expected " + std::to_string(want) + ")");

    const OracleComparison cmp = compare_with_oracle(G);
    if (!cmp.applicable)
      add("oracle_equivalence", true, 0.0,
          "skipped: order " + std::to_string(G.order()) + " exceeds the quadratic-oracle cap 48",
          true);
    else
      add("oracle_equivalence", cmp.all_pass(), 0.0,
          std::string("brute-force table pass: classes ") + (cmp.classes_match ? "ok" : "DIFFER") +
              ", center " + (cmp.center_matches ? "ok" : "DIFFER") + ", abelianization " +
              (cmp.abelianization_matches ? "ok" : "DIFFER"));
  }

  if (wants(section, Section::Characters)) {
    const CharacterTable& tab = table();
    add("char_row_orthogonality", tab.max_row_orthogonality_error <= ortho_tol,
        tab.max_row_orthogonality_error,
        "max deviation " + fmt("%.2e", tab.max_row_orthogonality_error) + " (tolerance " +
            fmt("%.0e", ortho_tol) + ")");
    add("char_col_orthogonality", tab.max_col_orthogonality_error <= ortho_tol,
        tab.max_col_orthogonality_error,
        "max deviation " + fmt("%.2e", tab.max_col_orthogonality_error) + " (tolerance " +
            fmt("%.0e", ortho_tol) + ")");
    long sq = 0;
    for (int dim : tab.dims) sq += static_cast<long>(dim) * dim;
    add("dims_square_sum", sq == G.order(), std::abs(static_cast<double>(sq - G.order())),
        "sum of squared dims " + std::to_string(sq) + " over " + std::to_string(tab.num_irreps()) +
            " irreps, group order " + std::to_string(G.order()));
  }

  if (wants(section, Section::McKay)) {
    const McKayGraph& g = mckay();
    add("mckay_integral_symmetric", g.symmetric && g.max_integrality_error <= 1e-6,
        g.max_integrality_error,
        std::string("tensor multiplicities ") + (g.symmetric ? "symmetric" : "NOT symmetric") +
            ", integrality deviation " + fmt("%.2e", g.max_integrality_error) +
            " (rounding guard 1e-06)");
    try {
      correspondence_map(G, table(), d, C, g, labeling());
      add("mckay_affine_isomorphism", true, 0.0,
          "graph isomorphism onto the affine diagram with vertex 0 on the trivial character and "
          "dims equal to marks");
    } catch (const std::logic_error& e) {
      add("mckay_affine_isomorphism", false, 1.0, e.what());
    }
  }

  if (wants(section, Section::Dual)) {
    const StatementReport r = verify_statements(G, d, labeling());
    add("dual_bijection", r.bijective, r.bijective ? 0.0 : 1.0,
        "vertices onto nontrivial classes, " + std::to_string(d.rank) + " of " +
            std::to_string(G.num_classes() - 1));
    add("dual_ends_special", r.ends_special, r.ends_special ? 0.0 : 1.0,
        "diagram ends carry the special generator classes in order");
    add("dual_center_class", r.center_minus_identity, r.center_minus_identity ? 0.0 : 1.0,
        type.family == Family::A ? "vacuous for A types"
                                 : "degree-3 vertex carries the class of -I");
    add("dual_branch_powers", r.branch_progressions, r.branch_progressions ? 0.0 : 1.0,
        type.family == Family::A ? "vertex v carries the class of x^{v+1}"
                                 : "k-th vertex of each branch carries the class of g^k, closing "
                                   "at -I");
    std::string viol;
    for (const auto& p : r.commuting_violations)
      viol += " (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
    add("dual_branch_commuting", r.branch_commuting,
        static_cast<double>(r.commuting_violations.size()),
        r.branch_commuting
            ? "same branch exactly when commuting representatives exist"
            : "commuting representatives across distinct branches at pairs" + viol +
                  " (mutually inverse classes)");
    add("dual_edge_translate", r.edge_translate && r.translate_symmetric,
        static_cast<double>(r.translate_diff.size()),
        "edges match the commuting-special-translate predicate exactly");

    const MumfordResult m = find_mumford(G, d, labeling(), d.order);
    add("mumford_representatives", m.found && m.generates_group, m.found ? 0.0 : 1.0,
        m.found ? "reps satisfy the squared-product relations and generate; " +
                      std::to_string(m.nodes) + " search nodes"
                : "no representative assignment found");

    const PresentationReport p = verify_presentation(G, d, labeling());
    add("presentation_relations", p.all_pass(), p.all_pass() ? 0.0 : 1.0,
        p.pattern + " in the group, quotient relations hold, both generate");
  }

  if (wants(section, Section::Fourier)) {
    const std::vector<int> irrep_of = correspondence_map(G, table(), d, C, mckay(), labeling());

    const HeadlineResult h = headline_identity(G, table(), d, C, labeling(), irrep_of, float_tol);
    add("det_vs_cartan_phase", h.pass, h.deviation,
        "max deviation " + fmt("%.2e", h.deviation) + " (tolerance " + fmt("%.0e", float_tol) +
            "), alignment sigma=" + perm_str(h.sigma) + " tau=" + perm_str(h.tau) + " of " +
            std::to_string(h.automorphisms) + " diagram symmetries");

    if (type.family == Family::A) {
      const double dev = cyclic_fourier_deviation(G, table(), d, labeling(), irrep_of);
      add("fourier_cyclic", dev <= float_tol, dev,
          "discrete Fourier matrix deviation " + fmt("%.2e", dev) + " (tolerance " +
              fmt("%.0e", float_tol) + ")");
    }

    const BoundReport b = inverse_bound_report(d, C);
    add("cartan_inverse_positive", b.all_positive, b.all_positive ? 0.0 : 1.0,
        "every entry of the inverse Cartan matrix is strictly positive");
    add("cartan_inverse_bound", b.offdiagonal_pass, 0.0,
        "min off-diagonal slack " + b.min_offdiagonal_slack.str() +
            (b.sharp ? " (sharp)" : "") + "; diagonal slack " + b.min_diagonal_slack.str() +
            " (diagonal informational)");

    const double ndev = neumann_deviation(d, C, 400);
    add("neumann_series", true, ndev,
        "deviation " + fmt("%.2e", ndev) + " from the exact inverse after 400 terms", true);

    const AbelianizationReport a = abelianization_report(G, C);
    add("abelianization_order", a.order_matches, 0.0,
        "abelianization order " + std::to_string(a.ab_order) + ", det C " + a.determinant.str());
    add("abelianization_exponent", a.exponent_matches, 0.0,
        "abelianization exponent " + std::to_string(a.ab_exponent) + ", det C " +
            a.determinant.str());

    const ProbeResult pr =
        transform_order_probe(G, table(), d, labeling(), irrep_of, opt.max_probe_power);
    add("transform_order_probe", true, 0.0,
        pr.finite ? "scalar at power " + std::to_string(pr.order) + ", magnitude " +
                        fmt("%.6f", pr.scalar_magnitude)
                  : "no scalar power up to " + std::to_string(opt.max_probe_power),
        true);
  }

  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string render_text(const TypeReport& rep) {
  std::string out = "== " + rep.type.name() + "  group order " + std::to_string(rep.group_order) +
                    "  [" + fmt("%.1f", rep.elapsed_ms) + " ms]\n";
  int failed = 0, info = 0;
  for (const auto& c : rep.checks) {
    const char* tag = c.informational ? "info" : (c.pass ? "pass" : "FAIL");
    if (c.informational) ++info;
    else if (!c.pass) ++failed;
    out += "  " + std::string(tag) + "  ";
    out += c.name;
    if (c.name.size() < 26) out += std::string(26 - c.name.size(), ' ');
    out += "  " + c.witness + "\n";
  }
  out += "  verdict: " + std::string(rep.verdict() ? "PASS" : "FAIL") + " (" +
         std::to_string(rep.checks.size()) + " checks, " + std::to_string(failed) + " failed, " +
         std::to_string(info) + " informational)\n";
  return out;
}

namespace {

nlohmann::ordered_json json_object(const TypeReport& rep) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["deviation"] = c.deviation;
    jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  nlohmann::ordered_json j;
  j["type"] = rep.type.name();
  j["group_order"] = rep.group_order;
  j["checks"] = std::move(checks);
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

}  // namespace

std::string render_json(const TypeReport& rep) { return json_object(rep).dump(2) + "\n"; }

std::string render_json(const std::vector<TypeReport>& reps) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reps) arr.push_back(json_object(r));
  return arr.dump(2) + "\n";
}

}  // namespace ade
