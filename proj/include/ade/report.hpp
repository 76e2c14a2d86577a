#ifndef ADE_REPORT_HPP
#define ADE_REPORT_HPP

// Check runner behind the CLI: builds whatever a report section needs for
// one diagram type, runs the named checks, and renders the results as text
// or a stable-key JSON object.

#include <string>
#include <vector>

#include "ade/dynkin.hpp"

namespace ade {

enum class Section { Groups, Characters, McKay, Dual, Fourier, All };

// accepts "groups", "characters", "mckay", "dual", "fourier", "all";
// throws std::invalid_argument otherwise
Section parse_section(const std::string& text);

struct CheckResult {
  std::string name;
  bool pass;
  bool informational;  // reported but never fails a run (exploratory or
                       // skipped checks)
  double deviation;    // 0.0 for exact checks that hold
  std::string witness;
};

struct TypeReport {
  DiagramType type;
  long group_order;
  std::vector<CheckResult> checks;
  double elapsed_ms;

  // false when any non-informational check fails
  bool verdict() const;
};

struct ReportOptions {
  // pass threshold for the floating-point checks; negative keeps each
  // check's own default (orthogonality 1e-9, identity checks 1e-8)
  double tolerance = -1.0;
  long max_probe_power = 10000;
};

TypeReport run_type(DiagramType type, Section section, const ReportOptions& opt);

std::string render_text(const TypeReport& rep);
std::string render_json(const TypeReport& rep);          // one object, stable keys
std::string render_json(const std::vector<TypeReport>& reps);  // array of objects

}  // namespace ade

#endif  // ADE_REPORT_HPP
