#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aqg/instance.hpp"
#include "aqg/oneparam.hpp"
#include "aqg/report.hpp"
#include "aqg/suq2.hpp"

namespace aqg {

struct SuiteConfig {
    int degree = 6;
    std::optional<Rational> q_override;  // suq2 only
    std::vector<Qc> z_grid;              // empty means the default grid
    ToleranceCfg tol;
    int jobs = 1;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& s);

// Runs one named suite (or "all") and returns the canonical report: entries
// sorted by id, config echoed. Structural errors from derivation stages
// become failing entries rather than exceptions.
Report run_suite(const Instance& inst, const std::string& suite, const SuiteConfig& cfg);

namespace detail {

// One report entry produced by one (possibly expensive) closure; suites are
// lists of these so --jobs can fan them out.
using EntryTask = std::function<CheckEntry()>;

std::vector<CheckEntry> run_tasks(const std::vector<EntryTask>& tasks, int jobs);

// Exact-check accumulator: tracks the worst offender over a loop.
struct Worst {
    bool ok = true;
    double mag = 0.0;
    std::string witness;
    void feed(bool zero, double magnitude, const std::string& w);
    CheckEntry entry(std::string id, std::string anchor) const;
};

CheckEntry exact_entry(std::string id, std::string anchor, bool exact_zero, double magnitude,
                       std::optional<std::string> witness = {});

std::vector<EntryTask> finite_hopf_tasks(FinitePipeline& pipe);
std::vector<EntryTask> finite_haar_tasks(FinitePipeline& pipe);
std::vector<EntryTask> finite_modular_tasks(FinitePipeline& pipe, const SuiteConfig& cfg);
std::vector<EntryTask> finite_oneparam_tasks(FinitePipeline& pipe, const SuiteConfig& cfg,
                                             const std::vector<Qc>& grid);
std::vector<EntryTask> finite_identities_tasks(FinitePipeline& pipe, const SuiteConfig& cfg,
                                               const std::vector<Qc>& grid);
std::vector<EntryTask> finite_duality_tasks(FinitePipeline& pipe, const SuiteConfig& cfg,
                                            const std::vector<Qc>& grid);

}  // namespace detail

}  // namespace aqg

namespace aqg::suq2 {

std::vector<aqg::detail::EntryTask> hopf_tasks(Engine& eng, int degree);
std::vector<aqg::detail::EntryTask> haar_tasks(Engine& eng, int degree,
                                               const ToleranceCfg& tol);
std::vector<aqg::detail::EntryTask> modular_tasks(Engine& eng, int degree,
                                                  const std::vector<Qc>& grid);
std::vector<aqg::detail::EntryTask> oneparam_tasks(Engine& eng, int degree,
                                                   const std::vector<Qc>& grid);
std::vector<aqg::detail::EntryTask> identities_tasks(Engine& eng, int degree,
                                                     const std::vector<Qc>& grid,
                                                     const ToleranceCfg& tol);
std::vector<aqg::detail::EntryTask> duality_tasks(Engine& eng, int degree,
                                                  const std::vector<Qc>& grid);

}  // namespace aqg::suq2
