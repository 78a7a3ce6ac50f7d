#include "cloneseek/tiering.hpp"

#include <algorithm>
#include <fstream>

#include "cloneseek/csv.hpp"
#include "cloneseek/errors.hpp"

namespace cloneseek {

std::string tier_name(Tier tier) {
    switch (tier) {
        case Tier::Low: return "low";
        case Tier::Medium: return "medium";
        case Tier::High: return "high";
        case Tier::Excluded: return "excluded";
    }
    return "excluded";
}

namespace {

double percentile(std::vector<double>& sorted, double p) {
    // Linear interpolation between closest ranks over sorted values.
    double pos = p * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

MetricQuartiles metric_quartiles(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return {percentile(values, 0.25), percentile(values, 0.50),
            percentile(values, 0.75)};
}

}  // namespace

QuartileTable compute_quartiles(const std::vector<ProjectMeta>& projects) {
    if (projects.size() < 4) {
        throw TooFewProjects("need at least 4 projects, got " +
                             std::to_string(projects.size()));
    }
    std::vector<double> stars, forks, watchers;
    for (const ProjectMeta& p : projects) {
        stars.push_back(static_cast<double>(p.stars));
        forks.push_back(static_cast<double>(p.forks));
        watchers.push_back(static_cast<double>(p.watchers));
    }
    return {metric_quartiles(std::move(stars)), metric_quartiles(std::move(forks)),
            metric_quartiles(std::move(watchers))};
}

Tier assign_tier(const ProjectMeta& p, const QuartileTable& q) {
    auto s = static_cast<double>(p.stars);
    auto f = static_cast<double>(p.forks);
    auto w = static_cast<double>(p.watchers);
    if (s > q.stars.q3 && f > q.forks.q3 && w > q.watchers.q3) return Tier::High;
    if (s <= q.stars.q1 && f <= q.forks.q1 && w <= q.watchers.q1) return Tier::Low;
    if (s > q.stars.q1 && s <= q.stars.q3 && f > q.forks.q1 && f <= q.forks.q3 &&
        w > q.watchers.q1 && w <= q.watchers.q3) {
        return Tier::Medium;
    }
    return Tier::Excluded;
}

std::vector<ProjectMeta> read_project_metadata_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open metadata file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty metadata file: " + path);
    std::vector<std::string> header = csv::split_row(line);
    if (header.size() < 4 || header[0] != "project_id" || header[1] != "stars" ||
        header[2] != "forks" || header[3] != "watchers") {
        throw ConfigError("metadata header must be project_id,stars,forks,watchers");
    }
    std::vector<ProjectMeta> projects;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields = csv::split_row(line);
        if (fields.size() < 4) {
            throw SchemaError(line_no, "expected 4 metadata fields");
        }
        ProjectMeta p;
        p.project_id = fields[0];
        try {
            p.stars = std::stoll(fields[1]);
            p.forks = std::stoll(fields[2]);
            p.watchers = std::stoll(fields[3]);
        } catch (const std::exception&) {
            throw SchemaError(line_no, "non-numeric metric");
        }
        projects.push_back(std::move(p));
    }
    return projects;
}

void write_tiered_csv(const std::vector<ProjectMeta>& projects,
                      const std::string& out_path) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw IoError("cannot open for write: " + out_path);
    out << "project_id,stars,forks,watchers,tier\n";
    for (const ProjectMeta& p : projects) {
        out << csv::join_row({p.project_id, std::to_string(p.stars),
                              std::to_string(p.forks), std::to_string(p.watchers),
                              tier_name(p.tier)})
            << '\n';
    }
    if (!out) throw IoError("write failed: " + out_path);
}

std::vector<ProjectMeta> tier_projects(std::vector<ProjectMeta> projects) {
    QuartileTable q = compute_quartiles(projects);
    for (ProjectMeta& p : projects) p.tier = assign_tier(p, q);
    return projects;
}

}  // namespace cloneseek
