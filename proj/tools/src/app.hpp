#pragma once

#include <iosfwd>
#include <string>

#include "report.hpp"
#include "suite.hpp"

namespace ibistk::cli {

/// Full analysis of one group: chain, primitivity, spectrum, IBIS verdict,
/// witnesses, and the matroid summary for IBIS actions of moderate degree.
AnalysisReport analyze_group(const PermGroup& g, const RunConfig& cfg);

CtReport ct_group(const PermGroup& g, const RunConfig& cfg);

/// Resolves --group / --catalog into a group; exactly one must be given.
PermGroup resolve_source(const std::string& group_path,
                         const std::string& catalog_name, const RunConfig& cfg);

std::string catalog_listing();

// Command entry points; return the process exit code
// (0 complete, 2 capped/incomplete, 1 error).
int run_analyze(const std::string& group_path, const std::string& catalog_name,
                const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_ct(const std::string& group_path, const std::string& catalog_name,
           const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_catalog(const RunConfig& cfg, std::ostream& out);
int run_verify(const std::string& suite_name, const RunConfig& cfg,
               std::ostream& out, std::ostream& err);

} // namespace ibistk::cli
