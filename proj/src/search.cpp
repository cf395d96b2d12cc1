#include <edl/search.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <thread>

namespace edl {

namespace {

constexpr int kCheckpointVersion = 1;

int bits(VertexSet s) { return std::popcount(s); }

// Per-task constants derived from the constraints.
struct Plan {
    int n = 0;
    SearchConstraints c;
    Objective objective = Objective::max_size;
    SearchMode mode = SearchMode::full;
    VertexSet all = 0;
    VertexSet class2 = 0;
    int min_out = 0;
    int min_in = 0;
    std::array<int, kMaxSearchOrder> total_cap{};
    std::vector<std::vector<VertexSet>> candidates;   // per vertex, ascending
    bool leaf_caps = false;
    bool propagate = false;
    bool distance_prune = false;
    bool radius_prune = false;
};

Plan make_plan(const SearchTask & task)
{
    Plan p;
    p.n = task.n;
    p.c = task.constraints;
    p.objective = task.objective;
    p.mode = task.mode;
    p.all = first_n(task.n);
    const int n = task.n;
    const auto & c = task.constraints;
    if (c.bipartite)
        p.class2 = p.all & ~first_n(c.bipartite->first);
    const bool pruned = task.mode != SearchMode::full;
    p.leaf_caps = pruned;
    p.propagate = task.mode == SearchMode::backtracking;
    p.distance_prune = p.propagate && c.rad_out_eq.has_value();
    p.radius_prune = p.propagate && c.rad2_eq.has_value() && c.strong;
    p.min_out = c.strong ? 1 : 0;
    p.min_in = c.strong ? 1 : 0;

    p.candidates.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        VertexSet allowed = p.all & ~bit(v);
        int out_max = n - 1;
        int total_max = 2 * (n - 1);
        if (c.bipartite) {
            VertexSet opposite = ((p.class2 >> v) & 1U) ? (p.all & ~p.class2) : p.class2;
            allowed &= opposite;
            out_max = bits(opposite);
            total_max = 2 * bits(opposite);
        }
        if (c.rad_out_eq) {
            const int r = *c.rad_out_eq;
            // A vertex of outdegree n-1 has out-eccentricity 1.
            if (r >= 2)
                out_max = std::min(out_max, n - 2);
            if (c.strong) {
                // Layers 2..r of a finite out-eccentricity miss the out-neighbourhood.
                out_max = std::min(out_max, n - r);
                // Proposition-level total-degree caps only drive BACKTRACKING.
                if (r >= 2 && p.propagate)
                    total_max = std::min(total_max, 2 * (n - 1) - (2 * r - 3));
                if (c.bipartite) {
                    const int opposite = bits(allowed);
                    out_max = std::min(out_max, opposite - (r - 1) / 2);
                    if (r % 2 == 0 && r >= 4 && p.propagate)
                        total_max = std::min(total_max, 2 * opposite - (r - 2));
                }
            }
        }
        if (c.rad2_eq && c.strong)
            total_max = std::min(total_max, 2 * n - *c.rad2_eq);
        p.total_cap[v] = total_max;

        const int lo = pruned ? p.min_out : 0;
        const int hi = pruned ? std::min(out_max, total_max - p.min_in) : n - 1;
        auto & list = p.candidates[v];
        const VertexSet universe = pruned ? allowed : (p.all & ~bit(v));
        // Ascending enumeration of the subsets of `universe`.
        VertexSet sub = 0;
        do {
            int k = bits(sub);
            if (k >= lo && k <= hi)
                list.push_back(sub);
            sub = (sub - universe) & universe;
        } while (sub != 0);
    }
    return p;
}

struct ShardResult {
    std::uint64_t candidates = 0;
    PruningStats stats;
    std::optional<std::int64_t> value;
    std::uint64_t labeled = 0;
    std::map<std::string, std::uint64_t> classes;   // canonical adjacency string -> labelled count
};

void add_stats(PruningStats & into, const PruningStats & s)
{
    into.nodes += s.nodes;
    into.pruned_degree += s.pruned_degree;
    into.pruned_distance += s.pruned_distance;
    into.rejected_degree += s.rejected_degree;
    into.rejected_strong += s.rejected_strong;
    into.rejected_distance += s.rejected_distance;
    into.feasible += s.feasible;
}

bool better(Objective o, std::int64_t a, std::int64_t b)
{
    return o == Objective::min_wiener ? a < b : a > b;
}

void fold(ShardResult & into, const ShardResult & s, Objective o)
{
    into.candidates += s.candidates;
    add_stats(into.stats, s.stats);
    if (! s.value)
        return;
    if (o == Objective::count_extremal) {
        into.value = into.value.value_or(0) + *s.value;
    }
    else if (! into.value || better(o, *s.value, *into.value)) {
        into.value = s.value;
        into.labeled = 0;
        into.classes.clear();
    }
    else if (*s.value != *into.value)
        return;
    into.labeled += s.labeled;
    for (const auto & [key, count] : s.classes)
        into.classes[key] += count;
}

DenseDigraph from_key(int n, const std::string & key)
{
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (key[static_cast<std::size_t>(i * n + j)] == '1')
                rows[i] |= bit(j);
    return DenseDigraph::from_rows(rows);
}

class Worker {
public:
    Worker(const Plan & plan, const std::function<void(const DenseDigraph &)> * visit) : p_(plan), visit_(visit) {}

    ShardResult run_shard(std::size_t index)
    {
        result_ = ShardResult{};
        indeg_.fill(0);
        dfs_row(0, p_.candidates[0][index]);
        return std::move(result_);
    }

private:
    void set_row(int k, VertexSet row)
    {
        rows_[k] = row;
        const std::size_t base = std::size_t{1} << k;
        for (std::size_t s = 0; s < base; ++s)
            union_[base | s] = union_[s] | row;
    }

    bool degrees_ok(int k) const
    {
        for (int v = 0; v < p_.n; ++v) {
            int out = v <= k ? bits(rows_[v]) : p_.min_out;
            if (out + indeg_[v] > p_.total_cap[v])
                return false;
        }
        return true;
    }

    // Out-eccentricity of v in the digraph formed by rows 0..k (later rows empty).
    int partial_ecc(int v, VertexSet known) const
    {
        VertexSet reached = bit(v), frontier = reached;
        int level = 0;
        while (true) {
            VertexSet next = union_[frontier & known] & ~reached;
            if (! next)
                break;
            ++level;
            reached |= next;
            frontier = next;
        }
        return reached == p_.all ? level : kUnreachable;
    }

    bool distance_violated(int k) const
    {
        const int r = *p_.c.rad_out_eq;
        const VertexSet known = first_n(k + 1);
        for (int v = 0; v <= k; ++v)
            if (partial_ecc(v, known) < r)
                return true;
        return false;
    }

    // Rows 0..n-2 fixed, last row unknown but non-empty. Distances in the
    // partial digraph bound the final ones from above, and the last vertex
    // reaches x within one step more than any other vertex does.
    bool radius_violated() const
    {
        const int n = p_.n;
        const int last = n - 1;
        const VertexSet known = first_n(last);
        std::array<std::array<int, kMaxSearchOrder>, kMaxSearchOrder> dist{};
        std::array<int, kMaxSearchOrder> ecc{};
        for (int u = 0; u < last; ++u) {
            dist[u].fill(kUnreachable);
            dist[u][u] = 0;
            VertexSet reached = bit(u), frontier = reached;
            int level = 0;
            while (true) {
                VertexSet next = union_[frontier & known] & ~reached;
                if (! next)
                    break;
                ++level;
                reached |= next;
                for (VertexSet s = next; s; s &= s - 1)
                    dist[u][std::countr_zero(s)] = level;
                frontier = next;
            }
            ecc[u] = reached == p_.all ? level : kUnreachable;
        }
        const int target = *p_.c.rad2_eq;
        int worst_out = 0;
        for (int u = 0; u < last; ++u)
            worst_out = std::max(worst_out, ecc[u]);
        for (int v = 0; v < n; ++v) {
            int in_bound = 0;
            for (int u = 0; u < last && in_bound != kUnreachable; ++u)
                if (u != v)
                    in_bound = std::max(in_bound, dist[u][v] == kUnreachable ? kUnreachable : dist[u][v] + (v == last ? 0 : 1));
            int out_bound = v == last ? (worst_out == kUnreachable ? kUnreachable : worst_out + 1) : ecc[v];
            if (in_bound != kUnreachable && out_bound != kUnreachable && in_bound + out_bound < target)
                return true;
        }
        return false;
    }

    void dfs_row(int k, VertexSet row)
    {
        ++result_.stats.nodes;
        for (VertexSet s = row; s; s &= s - 1)
            ++indeg_[std::countr_zero(s)];
        set_row(k, row);
        if (p_.propagate && ! degrees_ok(k))
            ++result_.stats.pruned_degree;
        else if (p_.distance_prune && k + 1 < p_.n && distance_violated(k))
            ++result_.stats.pruned_distance;
        else if (p_.radius_prune && k + 2 == p_.n && radius_violated())
            ++result_.stats.pruned_distance;
        else if (k + 1 == p_.n)
            leaf();
        else if (p_.propagate && k + 2 == p_.n)
            last_row();
        else
            for (VertexSet next : p_.candidates[k + 1])
                dfs_row(k + 1, next);
        for (VertexSet s = row; s; s &= s - 1)
            --indeg_[std::countr_zero(s)];
    }

    // The last row must supply every missing in-arc and avoid saturated vertices.
    void last_row()
    {
        const int last = p_.n - 1;
        if (indeg_[last] < p_.min_in) {
            result_.stats.pruned_degree += p_.candidates[last].size();
            return;
        }
        VertexSet required = 0, saturated = 0;
        for (int v = 0; v < last; ++v) {
            if (indeg_[v] < p_.min_in)
                required |= bit(v);
            if (bits(rows_[v]) + indeg_[v] >= p_.total_cap[v])
                saturated |= bit(v);
        }
        const int out_room = p_.total_cap[last] - indeg_[last];
        for (VertexSet next : p_.candidates[last]) {
            if ((next & required) != required || (next & saturated) || bits(next) > out_room) {
                ++result_.stats.pruned_degree;
                continue;
            }
            dfs_row(last, next);
        }
    }

    void leaf()
    {
        ++result_.candidates;
        const int n = p_.n;
        const auto & c = p_.c;

        if (c.bipartite)
            for (int v = 0; v < n; ++v) {
                VertexSet same = ((p_.class2 >> v) & 1U) ? p_.class2 : (p_.all & ~p_.class2);
                if (rows_[v] & same) {
                    ++result_.stats.rejected_degree;
                    return;
                }
            }
        if (p_.leaf_caps)
            for (int v = 0; v < n; ++v)
                if (bits(rows_[v]) + indeg_[v] > p_.total_cap[v] || indeg_[v] < p_.min_in) {
                    ++result_.stats.rejected_degree;
                    return;
                }

        std::array<VertexSet, kMaxSearchOrder + 1> layer{};
        std::array<int, kMaxSearchOrder> ecc_out{};
        VertexSet unreached = 0;
        std::int64_t wiener = 0;
        int rad_out = kUnreachable;
        int max_ecc = 0;
        for (int v = 0; v < n; ++v) {
            VertexSet reached = bit(v), frontier = reached;
            int level = 0;
            while (true) {
                VertexSet next = union_[frontier] & ~reached;
                if (! next)
                    break;
                ++level;
                reached |= next;
                layer[level] |= next;
                wiener += static_cast<std::int64_t>(level) * bits(next);
                frontier = next;
            }
            if (reached != p_.all) {
                if (c.strong) {
                    ++result_.stats.rejected_strong;
                    return;
                }
                unreached |= p_.all & ~reached;
                ecc_out[v] = kUnreachable;
                continue;
            }
            ecc_out[v] = level;
            if (c.rad_out_eq && level < *c.rad_out_eq) {
                ++result_.stats.rejected_distance;
                return;
            }
            rad_out = std::min(rad_out, level);
            max_ecc = std::max(max_ecc, level);
        }
        const bool strong = unreached == 0;

        if (c.rad_out_eq && rad_out != *c.rad_out_eq) {
            ++result_.stats.rejected_distance;
            return;
        }
        if (c.diameter_eq && (! strong || max_ecc != *c.diameter_eq)) {
            ++result_.stats.rejected_distance;
            return;
        }
        if (c.rad2_eq) {
            int rad2 = kUnreachable;
            for (int v = 0; v < n; ++v) {
                if (ecc_out[v] == kUnreachable || ((unreached >> v) & 1U))
                    continue;
                int ecc_in = 0;
                for (int level = n - 1; level >= 1; --level)
                    if ((layer[level] >> v) & 1U) {
                        ecc_in = level;
                        break;
                    }
                rad2 = std::min(rad2, ecc_out[v] + ecc_in);
            }
            if (rad2 != *c.rad2_eq) {
                ++result_.stats.rejected_distance;
                return;
            }
        }

        ++result_.stats.feasible;
        DenseDigraph d;
        auto digraph = [&]() -> const DenseDigraph & {
            if (d.order() == 0)
                d = DenseDigraph::from_rows(std::span<const VertexSet>(rows_.data(), static_cast<std::size_t>(n)));
            return d;
        };
        if (visit_)
            (*visit_)(digraph());

        std::int64_t value = 1;
        if (p_.objective == Objective::max_size) {
            value = 0;
            for (int v = 0; v < n; ++v)
                value += bits(rows_[v]);
        }
        else if (p_.objective == Objective::min_wiener)
            value = wiener;

        if (p_.objective == Objective::count_extremal)
            result_.value = result_.value.value_or(0) + 1;
        else if (! result_.value || better(p_.objective, value, *result_.value)) {
            result_.value = value;
            result_.labeled = 0;
            result_.classes.clear();
        }
        else if (value != *result_.value)
            return;
        ++result_.labeled;
        ++result_.classes[adjacency_string(canonical_form(digraph()))];
    }

    const Plan & p_;
    const std::function<void(const DenseDigraph &)> * visit_;
    ShardResult result_;
    std::array<VertexSet, kMaxSearchOrder> rows_{};
    std::array<int, kMaxSearchOrder> indeg_{};
    std::array<VertexSet, std::size_t{1} << kMaxSearchOrder> union_{};
};

Json shard_to_json(std::size_t index, const ShardResult & s)
{
    Json classes = Json::array();
    for (const auto & [key, count] : s.classes)
        classes.push_back({key, count});
    return {{"shard", index},
            {"candidates", s.candidates},
            {"pruning", to_json(s.stats)},
            {"value", s.value ? Json(*s.value) : Json(nullptr)},
            {"labeled", s.labeled},
            {"classes", classes}};
}

PruningStats stats_from_json(const Json & j)
{
    PruningStats p;
    p.nodes = j.at("nodes").get<std::uint64_t>();
    p.pruned_degree = j.at("pruned_degree").get<std::uint64_t>();
    p.pruned_distance = j.at("pruned_distance").get<std::uint64_t>();
    p.rejected_degree = j.at("rejected_degree").get<std::uint64_t>();
    p.rejected_strong = j.at("rejected_strong").get<std::uint64_t>();
    p.rejected_distance = j.at("rejected_distance").get<std::uint64_t>();
    p.feasible = j.at("feasible").get<std::uint64_t>();
    return p;
}

ShardResult shard_from_json(const Json & j, int n)
{
    ShardResult s;
    s.candidates = j.at("candidates").get<std::uint64_t>();
    s.stats = stats_from_json(j.at("pruning"));
    if (! j.at("value").is_null())
        s.value = j.at("value").get<std::int64_t>();
    s.labeled = j.at("labeled").get<std::uint64_t>();
    for (const auto & entry : j.at("classes")) {
        auto key = entry.at(0).get<std::string>();
        if (key.size() != static_cast<std::size_t>(n * n) || key.find_first_not_of("01") != std::string::npos)
            throw ParseError("checkpoint corruption: malformed class key", 0);
        s.classes[key] = entry.at(1).get<std::uint64_t>();
    }
    return s;
}

void save_checkpoint(const std::string & path, const SearchTask & task, std::size_t shard_count,
                     const std::vector<std::optional<ShardResult>> & done)
{
    Json completed = Json::array();
    for (std::size_t i = 0; i < done.size(); ++i)
        if (done[i])
            completed.push_back(shard_to_json(i, *done[i]));
    Json j = {{"version", kCheckpointVersion}, {"task", to_json(task)}, {"shards", shard_count}, {"completed", completed}};
    std::filesystem::path target(path);
    if (target.has_parent_path())
        std::filesystem::create_directories(target.parent_path());
    const std::string tmp = path + ".tmp";
    write_file(tmp, j.dump(1) + "\n");
    std::filesystem::rename(tmp, target);
}

void load_checkpoint(const std::string & path, const SearchTask & task, std::size_t shard_count,
                     std::vector<std::optional<ShardResult>> & done)
{
    if (! std::filesystem::exists(path))
        return;
    Json j;
    try {
        j = Json::parse(read_file(path));
        if (j.at("version").get<int>() != kCheckpointVersion)
            throw ParseError("checkpoint corruption: unsupported version", 0);
        if (j.at("task") != to_json(task))
            throw DomainError("checkpoint " + path + " belongs to a different task");
        if (j.at("shards").get<std::size_t>() != shard_count)
            throw ParseError("checkpoint corruption: shard count mismatch", 0);
        for (const auto & entry : j.at("completed")) {
            auto index = entry.at("shard").get<std::size_t>();
            if (index >= shard_count || done[index])
                throw ParseError("checkpoint corruption: bad shard index", 0);
            done[index] = shard_from_json(entry, task.n);
        }
    }
    catch (const Json::exception & e) {
        throw ParseError(std::string("checkpoint corruption in ") + path + ": " + e.what(), 0);
    }
}

void require(bool ok, const std::string & what)
{
    if (! ok)
        throw DomainError(what);
}

} // namespace

std::string objective_name(Objective o)
{
    switch (o) {
    case Objective::max_size: return "MAX_SIZE";
    case Objective::min_wiener: return "MIN_WIENER";
    case Objective::count_extremal: return "COUNT_EXTREMAL";
    }
    throw DomainError("unknown objective");
}

namespace {

std::string normalise(const std::string & name)
{
    std::string out = name;
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) {
        return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
    });
    return out;
}

} // namespace

Objective parse_objective(const std::string & name)
{
    for (auto o : {Objective::max_size, Objective::min_wiener, Objective::count_extremal})
        if (objective_name(o) == normalise(name))
            return o;
    throw DomainError("unknown objective '" + name + "'");
}

std::string mode_name(SearchMode m)
{
    switch (m) {
    case SearchMode::full: return "FULL";
    case SearchMode::row_capped: return "ROW_CAPPED";
    case SearchMode::backtracking: return "BACKTRACKING";
    }
    throw DomainError("unknown mode");
}

SearchMode parse_mode(const std::string & name)
{
    for (auto m : {SearchMode::full, SearchMode::row_capped, SearchMode::backtracking})
        if (mode_name(m) == normalise(name))
            return m;
    throw DomainError("unknown search mode '" + name + "'");
}

void validate_task(const SearchTask & task)
{
    const auto & c = task.constraints;
    require(task.n >= 2, "search needs n >= 2");
    if (task.n > kMaxSearchOrder)
        throw LimitError("exhaustive search supports n <= " + std::to_string(kMaxSearchOrder));
    if (task.mode == SearchMode::full && task.n * (task.n - 1) > kMaxFullArcBits)
        throw LimitError("FULL mode supports at most " + std::to_string(kMaxFullArcBits) + " arc slots (n <= 5)");
    require(! (c.rad_out_eq && c.rad2_eq), "rad_out_eq and rad2_eq are mutually exclusive");
    require(! c.rad_out_eq || *c.rad_out_eq >= 1, "rad_out_eq must be positive");
    require(! c.rad2_eq || *c.rad2_eq >= 2, "rad2_eq must be at least 2");
    require(! c.diameter_eq || *c.diameter_eq >= 1, "diameter_eq must be positive");
    if (c.bipartite)
        require(c.bipartite->first >= 1 && c.bipartite->second >= 1 && c.bipartite->first + c.bipartite->second == task.n,
                "bipartite class sizes must be positive and sum to n");
    require(task.objective != Objective::min_wiener || c.strong, "MIN_WIENER needs the strong constraint");
    require(task.threads >= 1, "threads must be positive");
}

// Some proper 2-colouring of the underlying graph has a class of `size` vertices.
static bool has_class_split(const DenseDigraph & d, int size)
{
    const int n = d.order();
    std::vector<int> colour(static_cast<std::size_t>(n), -1);
    std::vector<bool> reachable(static_cast<std::size_t>(n) + 1, false);
    reachable[0] = true;
    for (int root = 0; root < n; ++root) {
        if (colour[root] >= 0)
            continue;
        int count[2] = {0, 0};
        std::vector<int> stack{root};
        colour[root] = 0;
        while (! stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++count[colour[v]];
            for (VertexSet nb = d.out_row(v) | d.in_row(v); nb; nb &= nb - 1) {
                const int w = std::countr_zero(nb);
                if (colour[w] < 0) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                }
                else if (colour[w] == colour[v])
                    return false;
            }
        }
        std::vector<bool> next(reachable.size(), false);
        for (int k = 0; k <= n; ++k)
            if (reachable[k])
                for (int side : {count[0], count[1]})
                    if (k + side <= n)
                        next[k + side] = true;
        reachable = std::move(next);
    }
    return reachable[size];
}

bool satisfies(const DenseDigraph & d, const SearchConstraints & c)
{
    if (c.bipartite) {
        if (c.bipartite->first + c.bipartite->second != d.order() || ! has_class_split(d, c.bipartite->first))
            return false;
    }
    const auto m = metric_summary(d);
    if (c.strong && ! m.strong)
        return false;
    if (c.rad_out_eq && m.rad_out != *c.rad_out_eq)
        return false;
    if (c.rad2_eq && m.rad2 != *c.rad2_eq)
        return false;
    if (c.diameter_eq && m.diameter != *c.diameter_eq)
        return false;
    return true;
}

std::optional<std::string> checkpoint_location(const SearchTask & task)
{
    const char * dir = std::getenv("EDL_CHECKPOINT_DIR");
    if (dir && *dir) {
        std::string name = task.checkpoint_path
            ? std::filesystem::path(*task.checkpoint_path).filename().string()
            : "search-" + certificate_hash(ExtremalCertificate{DenseDigraph(task.n), {}, task.constraints, task.n, 0, ""})
                + "-" + objective_name(task.objective) + "-" + mode_name(task.mode) + ".json";
        return (std::filesystem::path(dir) / name).string();
    }
    return task.checkpoint_path;
}

SearchReport enumerate(const SearchTask & task)
{
    validate_task(task);
    const auto start = std::chrono::steady_clock::now();
    const Plan plan = make_plan(task);
    const std::size_t shard_count = plan.candidates[0].size();

    std::vector<std::optional<ShardResult>> done(shard_count);
    const auto checkpoint = checkpoint_location(task);
    if (checkpoint)
        load_checkpoint(*checkpoint, task, shard_count, done);
    std::uint64_t resumed = static_cast<std::uint64_t>(std::count_if(done.begin(), done.end(), [](const auto & s) { return s.has_value(); }));

    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < shard_count; ++i)
        if (! done[i])
            pending.push_back(i);

    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::exception_ptr failure;
    auto work = [&]() {
        try {
            Worker worker(plan, nullptr);
            while (true) {
                std::size_t slot = next.fetch_add(1);
                if (slot >= pending.size())
                    break;
                ShardResult r = worker.run_shard(pending[slot]);
                std::lock_guard lock(mutex);
                done[pending[slot]] = std::move(r);
                if (checkpoint)
                    save_checkpoint(*checkpoint, task, shard_count, done);
            }
        }
        catch (...) {
            std::lock_guard lock(mutex);
            if (! failure)
                failure = std::current_exception();
            next = pending.size();
        }
    };
    const int threads = std::max(1, std::min<int>(task.threads, static_cast<int>(std::max<std::size_t>(pending.size(), 1))));
    if (threads == 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    ShardResult total;
    for (const auto & s : done)
        fold(total, *s, task.objective);

    SearchReport report;
    report.task = task;
    report.candidates_examined = total.candidates;
    report.extremal_value = total.value;
    report.extremal_labeled_count = total.labeled;
    report.pruning = total.stats;
    report.shards = shard_count;
    report.shards_resumed = resumed;
    for (const auto & [key, count] : total.classes)
        report.iso_classes.push_back(make_certificate(from_key(task.n, key), task.n, task.constraints, count));
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::uint64_t for_each_feasible(const SearchTask & task, const std::function<void(const DenseDigraph &)> & visit)
{
    SearchTask t = task;
    t.objective = Objective::max_size;
    validate_task(t);
    const Plan plan = make_plan(t);
    Worker worker(plan, &visit);
    std::uint64_t examined = 0;
    for (std::size_t i = 0; i < plan.candidates[0].size(); ++i)
        examined += worker.run_shard(i).candidates;
    return examined;
}

std::vector<IsoClass> classify_extremal(const std::vector<DenseDigraph> & witnesses)
{
    for (const auto & w : witnesses)
        if (w.order() != witnesses.front().order())
            throw DomainError("classify_extremal needs digraphs of one order");
    return classify_isomorphism(witnesses);
}

std::string certificate_hash(const ExtremalCertificate & cert)
{
    // 64-bit FNV-1a over the serialized digraph, metrics and constraints.
    std::string content = to_adm(cert.digraph) + to_json(cert.metrics).dump() + to_json(cert.constraints).dump()
        + std::to_string(cert.n);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : content) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ExtremalCertificate make_certificate(const DenseDigraph & d, int n, const SearchConstraints & c, std::uint64_t labeled_count)
{
    ExtremalCertificate cert{d, metric_summary(d), c, n, labeled_count, ""};
    cert.hash = certificate_hash(cert);
    return cert;
}

WitnessCheck verify_witness(const ExtremalCertificate & cert)
{
    WitnessCheck out;
    auto fail = [&](const std::string & field) {
        out.ok = false;
        out.mismatches.push_back(field);
    };
    if (cert.digraph.order() != cert.n)
        fail("n");
    const auto m = metric_summary(cert.digraph);
    const auto stored = to_json(cert.metrics);
    const auto fresh = to_json(m);
    for (auto it = fresh.begin(); it != fresh.end(); ++it)
        if (! stored.contains(it.key()) || stored.at(it.key()) != it.value())
            fail("metrics." + it.key());
    if (! satisfies(cert.digraph, cert.constraints))
        fail("constraints");
    if (certificate_hash(cert) != cert.hash)
        fail("hash");
    return out;
}

Json to_json(const SearchConstraints & c)
{
    Json j;
    j["strong"] = c.strong;
    j["bipartite"] = c.bipartite ? Json::array({c.bipartite->first, c.bipartite->second}) : Json(nullptr);
    j["rad_out_eq"] = c.rad_out_eq ? Json(*c.rad_out_eq) : Json(nullptr);
    j["rad2_eq"] = c.rad2_eq ? Json(*c.rad2_eq) : Json(nullptr);
    j["diameter_eq"] = c.diameter_eq ? Json(*c.diameter_eq) : Json(nullptr);
    return j;
}

SearchConstraints constraints_from_json(const Json & j)
{
    SearchConstraints c;
    c.strong = j.at("strong").get<bool>();
    if (! j.at("bipartite").is_null())
        c.bipartite = std::pair{j.at("bipartite").at(0).get<int>(), j.at("bipartite").at(1).get<int>()};
    auto opt = [&](const char * key) -> std::optional<int> {
        if (j.at(key).is_null())
            return std::nullopt;
        return j.at(key).get<int>();
    };
    c.rad_out_eq = opt("rad_out_eq");
    c.rad2_eq = opt("rad2_eq");
    c.diameter_eq = opt("diameter_eq");
    return c;
}

Json to_json(const SearchTask & task)
{
    return {{"n", task.n},
            {"constraints", to_json(task.constraints)},
            {"objective", objective_name(task.objective)},
            {"mode", mode_name(task.mode)}};
}

SearchTask task_from_json(const Json & j)
{
    SearchTask t;
    t.n = j.at("n").get<int>();
    t.constraints = constraints_from_json(j.at("constraints"));
    t.objective = parse_objective(j.at("objective").get<std::string>());
    t.mode = parse_mode(j.at("mode").get<std::string>());
    return t;
}

Json to_json(const PruningStats & p)
{
    return {{"nodes", p.nodes},
            {"pruned_degree", p.pruned_degree},
            {"pruned_distance", p.pruned_distance},
            {"rejected_degree", p.rejected_degree},
            {"rejected_strong", p.rejected_strong},
            {"rejected_distance", p.rejected_distance},
            {"feasible", p.feasible}};
}

Json to_json(const ExtremalCertificate & cert)
{
    return {{"adm", to_adm(cert.digraph)},
            {"n", cert.n},
            {"labeled_count", cert.labeled_count},
            {"constraints", to_json(cert.constraints)},
            {"metrics", to_json(cert.metrics)},
            {"hash", cert.hash}};
}

ExtremalCertificate certificate_from_json(const Json & j)
{
    try {
        ExtremalCertificate cert;
        cert.digraph = parse_adm(j.at("adm").get<std::string>());
        cert.n = j.at("n").get<int>();
        cert.labeled_count = j.at("labeled_count").get<std::uint64_t>();
        cert.constraints = constraints_from_json(j.at("constraints"));
        cert.metrics = metric_summary_from_json(j.at("metrics"));
        cert.hash = j.at("hash").get<std::string>();
        return cert;
    }
    catch (const Json::exception & e) {
        throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
    }
}

Json to_json(const SearchReport & report, bool include_timing)
{
    Json classes = Json::array();
    for (const auto & cert : report.iso_classes)
        classes.push_back(to_json(cert));
    Json j;
    j["task"] = to_json(report.task);
    j["candidates_examined"] = report.candidates_examined;
    j["extremal_value"] = report.extremal_value ? Json(*report.extremal_value) : Json(nullptr);
    j["extremal_labeled_count"] = report.extremal_labeled_count;
    j["iso_class_count"] = report.iso_classes.size();
    j["iso_classes"] = classes;
    if (include_timing)
        j["wall_time_ms"] = report.wall_time_ms;
    j["pruning"] = to_json(report.pruning);
    j["shards"] = report.shards;
    return j;
}

} // namespace edl
