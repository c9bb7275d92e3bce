#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tamejl/identities.hpp"
#include "tamejl/roots.hpp"
#include "tamejl/sweep.hpp"

namespace tamejl::cli {

enum class Format { Tsv, Json };

/// Reads the key=value sweep config. Blank lines and text after '#' are ignored.
/// Keys: q_list, n_max, w_samples, w_seed, t_max, a_max, strict, mutation.
/// Unknown keys or unparsable values raise MalformedConfig.
GridSpec parse_config(std::istream& in);
GridSpec load_config(const std::string& path);

std::string render_classify(const ExtensionModel& X, const std::vector<RootOrbit>& orbits,
                            Format format);
std::string render_report(const Instance& inst, const Report& report, Format format);
std::string render_summary(const SweepSummary& summary, Format format);

/// Entry point shared by the executable and the tests. Returns the exit code:
/// 0 when everything passes, 1 on an identity failure, 2 on bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tamejl::cli
