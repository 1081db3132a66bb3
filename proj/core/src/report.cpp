#include "fairdiv/report.hpp"

namespace fairdiv {

SolveReport make_report(const Instance& inst, Allocation allocation,
                        std::string algorithm,
                        std::map<std::string, std::string> parameters) {
  SolveReport report;
  report.algorithm = std::move(algorithm);
  report.parameters = std::move(parameters);
  report.allocation = std::move(allocation);
  report.social_welfare = social_welfare(inst, report.allocation);
  report.ef1 = is_ef1(inst, report.allocation);
  return report;
}

}  // namespace fairdiv
