#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cloneseek {

enum class Tier { Low, Medium, High, Excluded };

std::string tier_name(Tier tier);

struct ProjectMeta {
    std::string project_id;
    std::int64_t stars = 0;
    std::int64_t forks = 0;
    std::int64_t watchers = 0;
    Tier tier = Tier::Excluded;
};

struct MetricQuartiles {
    double q1 = 0, median = 0, q3 = 0;
};

struct QuartileTable {
    MetricQuartiles stars, forks, watchers;
};

/// Linear interpolation between closest ranks. Throws TooFewProjects when
/// fewer than 4 projects are given.
QuartileTable compute_quartiles(const std::vector<ProjectMeta>& projects);

/// High iff all three metrics > q3; low iff all ≤ q1; medium iff all in
/// (q1, q3]; otherwise excluded.
Tier assign_tier(const ProjectMeta& project, const QuartileTable& quartiles);

/// CSV in: project_id,stars,forks,watchers (header required).
std::vector<ProjectMeta> read_project_metadata_csv(const std::string& path);

/// CSV out: input columns plus a tier column.
void write_tiered_csv(const std::vector<ProjectMeta>& projects,
                      const std::string& out_path);

/// Convenience: quartiles over the full set, then per-project assignment.
std::vector<ProjectMeta> tier_projects(std::vector<ProjectMeta> projects);

}  // namespace cloneseek
