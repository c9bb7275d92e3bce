#include "tamejl/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "tamejl/arith.hpp"
#include "tamejl/error.hpp"

namespace tamejl {

void validate_grid(const GridSpec& grid)
{
    for (auto q : grid.q_list) {
        validate_params({q, 1, 1, 0});
    }
    if (grid.n_max < 0 || grid.t_max < 0 || grid.a_max < 0 || grid.w_samples < 0) {
        throw Error(ErrorKind::InvalidParams, "grid bounds must be nonnegative");
    }
}

void SweepSummary::merge(const SweepSummary& other)
{
    extensions += other.extensions;
    instances += other.instances;
    orbits += other.orbits;
    orbit_passes += other.orbit_passes;
    orbit_failures += other.orbit_failures;
    aggregate_failures += other.aggregate_failures;
    instance_failures += other.instance_failures;
    relaxed_instances += other.relaxed_instances;
    relaxed_failures += other.relaxed_failures;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<std::int64_t> sample_w(const GridSpec& grid, std::int64_t q, std::int64_t e,
                                   std::int64_t f)
{
    const std::int64_t qf_minus_1 = arith::checked_pow(q, f, std::int64_t{1} << 61) - 1;
    std::set<std::int64_t> picked;
    const std::int64_t available = qf_minus_1 - 1;
    const std::int64_t wanted = std::min(grid.w_samples, available);
    std::seed_seq seq{grid.w_seed, static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(e),
                      static_cast<std::uint64_t>(f)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> dist(1, qf_minus_1 - 1);
    while (static_cast<std::int64_t>(picked.size()) < wanted) picked.insert(dist(rng));
    std::vector<std::int64_t> out{0};
    out.insert(out.end(), picked.begin(), picked.end());
    return out;
}

std::vector<ExtensionParams> grid_extensions(const GridSpec& grid)
{
    std::vector<ExtensionParams> out;
    for (auto q : grid.q_list) {
        const std::int64_t p = arith::smallest_prime_factor(q);
        for (std::int64_t n = 1; n <= grid.n_max; ++n) {
            for (std::int64_t e = 1; e <= n; ++e) {
                if (n % e != 0 || e % p == 0) continue;
                const std::int64_t f = n / e;
                for (auto w : sample_w(grid, q, e, f)) out.push_back({q, e, f, w});
            }
        }
    }
    return out;
}

void for_each_instance(const GridSpec& grid, const std::function<void(const Instance&)>& visit)
{
    validate_grid(grid);
    for (const auto& params : grid_extensions(grid)) {
        const auto ctx = make_context(params);
        const auto shapes = enumerate_shapes(ctx->X, grid.t_max, grid.a_max);
        for (const auto& A : enumerate_csa(params.n())) {
            for (const auto& shape : shapes) visit(make_instance(ctx, A, shape, grid.mutation));
        }
    }
}

std::string format_tower(const ExtensionModel& X, const TowerShape& shape)
{
    std::ostringstream os;
    for (std::int64_t k = 0; k < shape.t(); ++k) {
        if (k) os << ',';
        const SubfieldHandle H = shape.subgroups[static_cast<std::size_t>(k)];
        if (H == X.gamma_E()) {
            os << 'E';
        } else if (H == X.gamma_F()) {
            os << 'F';
        } else {
            os << "mask:" << std::hex << H.cosets << std::dec;
        }
    }
    return os.str();
}

std::string format_levels(const TowerShape& shape)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < shape.levels.size(); ++k) {
        if (k) os << ',';
        os << shape.levels[k];
    }
    return os.str();
}

namespace {

SubfieldHandle parse_token(const ExtensionModel& X, const std::string& token)
{
    if (token == "E") return X.gamma_E();
    if (token == "F") return X.gamma_F();
    if (token.rfind("mask:", 0) == 0) {
        try {
            std::size_t used = 0;
            const auto mask = std::stoull(token.substr(5), &used, 16);
            if (used == token.size() - 5) return {mask};
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::InvalidParams, "bad mask token '" + token + "'");
    }
    std::int64_t e = 0;
    std::int64_t f = 0;
    char tail = 0;
    if (std::sscanf(token.c_str(), "e%ldf%ld%c", &e, &f, &tail) == 2) {
        std::vector<SubfieldHandle> hits;
        for (const auto& H : enumerate_subfields(X)) {
            if (subfield_invariants(X, H) == FieldInvariants{e, f}) hits.push_back(H);
        }
        if (hits.size() == 1) return hits.front();
        throw Error(ErrorKind::InvalidParams,
                    "token '" + token + "' matches " + std::to_string(hits.size())
                        + " subfields; use mask:<hex>");
    }
    throw Error(ErrorKind::InvalidParams, "unknown tower token '" + token + "'");
}

}  // namespace

TowerShape parse_tower(const ExtensionModel& X, const std::vector<std::string>& tokens,
                       const std::vector<std::int64_t>& levels)
{
    if (tokens.size() != levels.size()) {
        throw Error(ErrorKind::InvalidParams, "tower has " + std::to_string(tokens.size())
                                                  + " subfields but "
                                                  + std::to_string(levels.size()) + " levels");
    }
    TowerShape shape;
    for (const auto& token : tokens) shape.subgroups.push_back(parse_token(X, token));
    shape.subgroups.push_back(X.gamma_F());
    shape.levels = levels;
    return shape;
}

InstanceCoords coords_of(const Instance& inst)
{
    return {inst.X().params(), inst.A, format_tower(inst.X(), inst.shape),
            format_levels(inst.shape)};
}

namespace {

struct Task {
    std::shared_ptr<const ExtensionContext> ctx;
    CsaParams A;
    const TowerShape* shape;
};

struct TaskResult {
    std::int64_t orbits = 0;
    std::int64_t orbit_failures = 0;
    bool aggregate_pass = true;
    bool pass = true;
    std::optional<FailureRecord> failure;
};

TaskResult run_task(const Task& task, Mutation mutation)
{
    TaskResult out;
    const Instance inst = make_instance(task.ctx, task.A, *task.shape, mutation);
    Report report;
    try {
        report = verify_instance(inst);
    } catch (const Error& err) {
        out.pass = false;
        out.aggregate_pass = false;
        out.failure = FailureRecord{coords_of(inst), {}, err.what()};
        return out;
    }
    out.orbits = static_cast<std::int64_t>(report.verdicts.size());
    std::vector<OrbitVerdict> failing;
    for (const auto& v : report.verdicts) {
        if (!v.pass) failing.push_back(v);
    }
    out.orbit_failures = static_cast<std::int64_t>(failing.size());
    out.aggregate_pass = report.aggregate_pass && report.products_consistent;
    out.pass = report.pass;
    if (!out.pass) out.failure = FailureRecord{coords_of(inst), std::move(failing), report.error};
    return out;
}

}  // namespace

SweepSummary sweep(const GridSpec& grid, unsigned jobs, std::size_t max_failure_rows)
{
    validate_grid(grid);
    SweepSummary summary;

    std::vector<std::shared_ptr<const ExtensionContext>> contexts;
    std::vector<std::vector<TowerShape>> shapes;
    std::vector<Task> tasks;
    const auto extensions = grid_extensions(grid);
    contexts.reserve(extensions.size());
    shapes.reserve(extensions.size());
    for (const auto& params : extensions) {
        contexts.push_back(make_context(params));
        shapes.push_back(enumerate_shapes(contexts.back()->X, grid.t_max, grid.a_max));
    }
    for (std::size_t x = 0; x < contexts.size(); ++x) {
        for (const auto& A : enumerate_csa(contexts[x]->X.n())) {
            for (const auto& shape : shapes[x]) tasks.push_back({contexts[x], A, &shape});
        }
    }
    summary.extensions = static_cast<std::int64_t>(contexts.size());

    std::vector<TaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = run_task(tasks[i], grid.mutation);
        }
    };
    const unsigned threads = std::max(1U, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const TaskResult& r = results[i];
        const bool relaxed = grid.strict && tasks[i].shape->t() == 0 && tasks[i].ctx->X.e() > 1;
        summary.instances += 1;
        summary.orbits += r.orbits;
        summary.orbit_failures += r.orbit_failures;
        summary.orbit_passes += r.orbits - r.orbit_failures;
        if (!r.aggregate_pass) summary.aggregate_failures += 1;
        if (!r.pass) summary.instance_failures += 1;
        if (relaxed) {
            summary.relaxed_instances += 1;
            if (!r.pass) summary.relaxed_failures += 1;
        }
        if (r.failure && summary.failures.size() < max_failure_rows) {
            summary.failures.push_back(*r.failure);
        }
    }
    return summary;
}

}  // namespace tamejl
