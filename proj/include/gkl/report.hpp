#pragma once

#include <string>

#include "gkl/alpha.hpp"
#include "gkl/analysis.hpp"
#include "gkl/simulate.hpp"
#include "gkl/verify.hpp"

namespace gkl {

/// Structured-document (JSON) and CSV renderings of results. All output is
/// byte-stable: fixed key order, fixed float formatting, no clocks.

std::string alpha_report(const AlphaConstant& alpha);

std::string simulation_report(const std::string& ring_text,
                              const SimulationOutcome& outcome);

/// Full analyzer document: intervals, segments, solid tree with closure
/// flags and gaps, audit verdicts. Degenerate (uniform) rings get explicit
/// markers instead of a hierarchy.
std::string analysis_report(const Ring& config, const AlphaConstant& alpha);

std::string campaign_report_document(const CampaignReport& report);

/// CSV with header ring,n,k,bound,applicable,erosion_steps,verdict.
std::string campaign_csv(const CampaignReport& report);

std::string killing_report_document(const std::vector<KillingVerdict>& runs);

std::string fibonacci_report_document(
    const std::vector<FibonacciKillVerdict>& runs);

std::string solids_report_document(const SolidsAuditReport& report);

std::string tightness_report_document(const TightnessProfile& profile);

/// CSV with header k,worst_T,worst_n,samples followed by '#'-prefixed
/// summary lines with the fitted slopes.
std::string tightness_csv(const TightnessProfile& profile);

/// Fixed-precision float rendering used across reports ("%.6f" trimmed of
/// trailing zeros, "%.17g" for full precision where required).
std::string format_double(double value, int precision);

}  // namespace gkl
