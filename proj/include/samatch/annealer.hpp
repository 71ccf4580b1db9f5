#pragma once

// Simulated annealing over alignment states: greedy seeding, the
// add/remove/swap neighborhood, incremental fitness with subsumption
// propagation, geometric cooling, and restart chains.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "samatch/alignment.hpp"
#include "samatch/alignment_state.hpp"
#include "samatch/errors.hpp"
#include "samatch/similarity_matrix.hpp"
#include "samatch/structural.hpp"

namespace samatch {

struct SAConfig {
    double initial_temperature = 1.0;
    double cooling_rate = 0.95;
    // 0 selects the size-scaled default 50 * max(|O1|, |O2|)
    std::size_t iterations_per_temperature = 0;
    double min_temperature = 1e-4;
    std::uint64_t seed = 42;
    std::size_t restarts = 3;
    double extraction_threshold = 0.5;

    void validate() const {
        if (!(initial_temperature > 0.0)) throw ConfigError("initial temperature must be > 0");
        if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
            throw ConfigError("cooling rate must be in (0,1)");
        if (!(min_temperature > 0.0)) throw ConfigError("min temperature must be > 0");
        if (!(min_temperature < initial_temperature))
            throw ConfigError("min temperature must be below the initial temperature");
        if (restarts == 0) throw ConfigError("restarts must be >= 1");
    }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
}

// Deterministic RNG helpers; identical draws for identical seeds on every
// platform (no distribution objects from <random>).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {}

    std::uint64_t next() {
        // xorshift* variant over splitmix-initialized state
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // unbiased integer in [0, n)
    std::size_t index(std::size_t n) {
        const std::uint64_t bound = ~0ull - ~0ull % n;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= bound);
        return static_cast<std::size_t>(draw % n);
    }

private:
    std::uint64_t state_;
};

// Metropolis rule: improving or neutral moves always pass, worsening moves
// pass with probability exp(delta / temperature).
inline bool accept_move(double delta, double temperature, double unit_draw) {
    if (delta >= 0.0) return true;
    return unit_draw < std::exp(delta / temperature);
}

enum class MoveKind { Add, Remove, Swap };

struct MoveDecision {
    MoveKind kind;
    EntityId e1 = 0, e2 = 0;      // Add/Swap: the pair to insert
    std::size_t remove_idx = 0;   // Remove/Swap: index of the pair to drop
};

// Fitness bookkeeping plus the SA loop. Static (state-independent) pair
// scores are memoized; the dynamic part is the subsumption boost, which is
// re-propagated to dependent pairs after every move.
class Annealer {
public:
    Annealer(const SimilarityCache& cache, const SimilarityMatrix& sims)
        : cache_(cache), sims_(sims), candidates_(sims.entries_by_score_desc()) {}

    const SimilarityCache& cache() const { return cache_; }
    const SimilarityMatrix& sims() const { return sims_; }

    double static_score(EntityId e1, EntityId e2) const {
        const std::uint64_t k = (static_cast<std::uint64_t>(e1) << 32) | e2;
        auto it = static_memo_.find(k);
        if (it != static_memo_.end()) return it->second;
        const double v = static_similarity(e1, e2, cache_);
        static_memo_.emplace(k, v);
        return v;
    }

    // Fitness of one pair against the state's cached parent fitnesses.
    double pair_fitness(EntityId e1, EntityId e2, const AlignmentState& st) const {
        double f = static_score(e1, e2);
        if (cache_.o1().kind(e1) == EntityKind::Class) {
            const StructuralContext ctx{cache_, &sims_, &st};
            f = std::max(f, subsumption_boost(e1, e2, ctx));
        }
        return f;
    }

    // Recomputes every pair fitness from scratch (recursive solve in
    // dependency order) and refreshes the cached total.
    void full_refresh(AlignmentState& st) const {
        const std::vector<double> solved = solve_all(st);
        for (std::size_t i = 0; i < solved.size(); ++i) st.set_fitness(i, solved[i]);
        st.resum();
    }

    // Greedy one-to-one seeding by descending candidate score.
    AlignmentState greedy_initial() const {
        AlignmentState st;
        for (const auto& c : candidates_)
            if (!st.matched1(c.e1) && !st.matched2(c.e2)) st.add(c.e1, c.e2, 0.0);
        full_refresh(st);
        return st;
    }

    struct Journal {
        std::vector<AlignmentState::Pair> added;
        std::vector<AlignmentState::Pair> removed;
        std::vector<std::pair<EntityId, double>> touched;  // keyed by e1, old fitness
        std::unordered_set<EntityId> touched_keys;

        void clear() {
            added.clear();
            removed.clear();
            touched.clear();
            touched_keys.clear();
        }
    };

    // Picks a random legal move. Falls back across move kinds when the drawn
    // kind has no legal instance; throws NoMoveAvailable only for an empty
    // state over an empty candidate set.
    MoveDecision select_move(const AlignmentState& st, Rng& rng) const {
        const double r = rng.unit();
        std::array<MoveKind, 3> order;
        if (r < 0.5)
            order = {MoveKind::Add, MoveKind::Swap, MoveKind::Remove};
        else if (r < 0.7)
            order = {MoveKind::Remove, MoveKind::Add, MoveKind::Swap};
        else
            order = {MoveKind::Swap, MoveKind::Add, MoveKind::Remove};
        for (const MoveKind kind : order) {
            std::optional<MoveDecision> d;
            switch (kind) {
                case MoveKind::Add: d = try_add(st, rng); break;
                case MoveKind::Remove: d = try_remove(st, rng); break;
                case MoveKind::Swap: d = try_swap(st, rng); break;
            }
            if (d) return *d;
        }
        throw NoMoveAvailable("no move available: empty state over empty candidate set");
    }

    void apply(AlignmentState& st, const MoveDecision& d, Journal& journal) const {
        switch (d.kind) {
            case MoveKind::Add:
                apply_add(st, d.e1, d.e2, journal);
                break;
            case MoveKind::Remove:
                apply_remove(st, d.remove_idx, journal);
                break;
            case MoveKind::Swap:
                apply_remove(st, d.remove_idx, journal);
                apply_add(st, d.e1, d.e2, journal);
                break;
        }
    }

    void rollback(AlignmentState& st, const Journal& journal) const {
        for (auto it = journal.added.rbegin(); it != journal.added.rend(); ++it) {
            const auto idx = st.index_of1(it->e1);
            st.remove_at(*idx);
        }
        for (auto it = journal.removed.rbegin(); it != journal.removed.rend(); ++it)
            st.add(it->e1, it->e2, it->fitness);
        for (auto it = journal.touched.rbegin(); it != journal.touched.rend(); ++it) {
            const auto idx = st.index_of1(it->first);
            if (idx) st.set_fitness(*idx, it->second);
        }
    }

    // One annealing chain from the greedy seed.
    AlignmentState run_chain(const SAConfig& config, std::uint64_t chain_seed,
                             std::size_t iterations) const {
        AlignmentState st = greedy_initial();
        if (candidates_.empty()) return st;

        Rng rng(chain_seed);
        Journal journal;
        double temperature = config.initial_temperature;
        while (temperature > config.min_temperature) {
            for (std::size_t k = 0; k < iterations; ++k) {
                const MoveDecision d = select_move(st, rng);
                const double before = st.cached_fitness();
                journal.clear();
                apply(st, d, journal);
                const double delta = st.cached_fitness() - before;
                if (!accept_move(delta, temperature, rng.unit())) rollback(st, journal);
            }
            temperature *= config.cooling_rate;
            st.resum();
        }
        return st;
    }

    // Best final state over independent restart chains (earlier chain wins
    // ties), fully reproducible for a fixed seed.
    AlignmentState run(const SAConfig& config) const {
        config.validate();
        const std::size_t iterations =
            config.iterations_per_temperature > 0
                ? config.iterations_per_temperature
                : 50 * std::max(cache_.o1().size(), cache_.o2().size());

        AlignmentState best;
        bool have_best = false;
        for (std::size_t chain = 0; chain < config.restarts; ++chain) {
            AlignmentState st = run_chain(config, derive_seed(config.seed, chain), iterations);
            full_refresh(st);
            if (!have_best || st.cached_fitness() > best.cached_fitness()) {
                best = std::move(st);
                have_best = true;
            }
        }
        return best;
    }

private:
    std::optional<MoveDecision> try_add(const AlignmentState& st, Rng& rng) const {
        if (candidates_.empty()) return std::nullopt;
        for (int attempt = 0; attempt < 32; ++attempt) {
            const auto& c = candidates_[rng.index(candidates_.size())];
            if (!st.matched1(c.e1) && !st.matched2(c.e2))
                return MoveDecision{MoveKind::Add, c.e1, c.e2, 0};
        }
        // deterministic sweep from a random offset
        const std::size_t start = rng.index(candidates_.size());
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            const auto& c = candidates_[(start + i) % candidates_.size()];
            if (!st.matched1(c.e1) && !st.matched2(c.e2))
                return MoveDecision{MoveKind::Add, c.e1, c.e2, 0};
        }
        return std::nullopt;
    }

    std::optional<MoveDecision> try_remove(const AlignmentState& st, Rng& rng) const {
        if (st.empty()) return std::nullopt;
        return MoveDecision{MoveKind::Remove, 0, 0, rng.index(st.size())};
    }

    // Replaces the partner of one side of a random pair with a different,
    // currently free candidate.
    std::optional<MoveDecision> try_swap(const AlignmentState& st, Rng& rng) const {
        if (st.empty()) return std::nullopt;
        const std::size_t idx = rng.index(st.size());
        const auto pair = st.pair_at(idx);
        const bool keep_side1 = rng.unit() < 0.5;
        for (int side_attempt = 0; side_attempt < 2; ++side_attempt) {
            const bool keep1 = side_attempt == 0 ? keep_side1 : !keep_side1;
            const auto& options = keep1 ? sims_.candidates_for1(pair.e1)
                                        : sims_.candidates_for2(pair.e2);
            if (options.empty()) continue;
            auto pick = [&](EntityId partner) -> std::optional<MoveDecision> {
                if (keep1) {
                    if (partner == pair.e2 || st.matched2(partner)) return std::nullopt;
                    return MoveDecision{MoveKind::Swap, pair.e1, partner, idx};
                }
                if (partner == pair.e1 || st.matched1(partner)) return std::nullopt;
                return MoveDecision{MoveKind::Swap, partner, pair.e2, idx};
            };
            for (int attempt = 0; attempt < 16; ++attempt)
                if (auto d = pick(options[rng.index(options.size())])) return d;
            const std::size_t start = rng.index(options.size());
            for (std::size_t i = 0; i < options.size(); ++i)
                if (auto d = pick(options[(start + i) % options.size()])) return d;
        }
        return std::nullopt;
    }

    void apply_add(AlignmentState& st, EntityId e1, EntityId e2, Journal& journal) const {
        const double f = pair_fitness(e1, e2, st);
        st.add(e1, e2, f);
        journal.added.push_back({e1, e2, f});
        propagate_from(st, e1, e2, journal);
    }

    void apply_remove(AlignmentState& st, std::size_t idx, Journal& journal) const {
        const AlignmentState::Pair removed = st.remove_at(idx);
        journal.removed.push_back(removed);
        propagate_from(st, removed.e1, removed.e2, journal);
    }

    // Re-propagates boosts below a changed pair until the dependent values
    // settle (subclass DAG, so the fixpoint is reached quickly).
    void propagate_from(AlignmentState& st, EntityId e1, EntityId e2, Journal& journal) const {
        std::deque<std::size_t> queue;
        std::unordered_set<std::size_t> queued;
        auto enqueue_children = [&](EntityId a, EntityId b) {
            if (cache_.o1().kind(a) != EntityKind::Class) return;
            const auto& sub2 = cache_.o2().subclasses(b);
            for (const EntityId c1 : cache_.o1().subclasses(a)) {
                const auto idx = st.index_of1(c1);
                if (!idx) continue;
                if (!std::binary_search(sub2.begin(), sub2.end(), st.pair_at(*idx).e2)) continue;
                if (queued.insert(*idx).second) queue.push_back(*idx);
            }
        };
        enqueue_children(e1, e2);
        while (!queue.empty()) {
            const std::size_t idx = queue.front();
            queue.pop_front();
            queued.erase(idx);
            const auto pair = st.pair_at(idx);
            const double fresh = pair_fitness(pair.e1, pair.e2, st);
            if (fresh == pair.fitness) continue;
            if (journal.touched_keys.insert(pair.e1).second)
                journal.touched.emplace_back(pair.e1, pair.fitness);
            st.set_fitness(idx, fresh);
            enqueue_children(pair.e1, pair.e2);
        }
    }

    // Dependency-ordered fitness for every pair in the state.
    std::vector<double> solve_all(const AlignmentState& st) const {
        const std::size_t n = st.size();
        std::vector<double> value(n, 0.0);
        std::vector<char> state(n, 0);  // 0 fresh, 1 visiting, 2 done

        auto solve = [&](auto&& self, std::size_t i) -> double {
            if (state[i] == 2) return value[i];
            if (state[i] == 1)
                throw Error("subsumption dependency cycle in alignment state");
            state[i] = 1;
            const auto& pair = st.pair_at(i);
            double f = static_score(pair.e1, pair.e2);
            if (cache_.o1().kind(pair.e1) == EntityKind::Class) {
                const auto& sup2 = cache_.o2().superclasses(pair.e2);
                for (const EntityId s1 : cache_.o1().superclasses(pair.e1)) {
                    const auto pidx = st.index_of1(s1);
                    if (!pidx) continue;
                    if (!std::binary_search(sup2.begin(), sup2.end(), st.pair_at(*pidx).e2))
                        continue;
                    f = std::max(f, self(self, *pidx));
                }
            }
            state[i] = 2;
            value[i] = f;
            return f;
        };
        for (std::size_t i = 0; i < n; ++i) solve(solve, i);
        return value;
    }

    const SimilarityCache& cache_;
    const SimilarityMatrix& sims_;
    std::vector<SimilarityMatrix::Entry> candidates_;
    mutable std::unordered_map<std::uint64_t, double> static_memo_;
};

// Total state fitness recomputed from scratch: the sum over pairs of the
// combined similarity against this state.
inline double state_fitness(const AlignmentState& state, const SimilarityCache& cache,
                            const SimilarityMatrix& sims) {
    Annealer engine(cache, sims);
    AlignmentState copy = state;
    engine.full_refresh(copy);
    return copy.cached_fitness();
}

// One random legal move applied to a copy of the state; per-pair fitness and
// the cached total are refreshed in the result.
inline AlignmentState propose_move(const AlignmentState& state, const SimilarityCache& cache,
                                   const SimilarityMatrix& sims, Rng& rng) {
    Annealer engine(cache, sims);
    AlignmentState next = state;
    Annealer::Journal journal;
    engine.apply(next, engine.select_move(next, rng), journal);
    return next;
}

// Runs the configured annealing chains and returns the best final state.
inline AlignmentState anneal(const SimilarityCache& cache, const SimilarityMatrix& sims,
                             const SAConfig& config) {
    return Annealer(cache, sims).run(config);
}

// Pairs whose combined similarity reaches the threshold become equivalence
// correspondences, sorted by entity IRIs.
inline Alignment extract_alignment(const AlignmentState& state, const SimilarityCache& cache,
                                   double threshold) {
    Alignment out;
    out.onto1 = cache.o1().ontology_iri().empty() ? cache.o1().id() : cache.o1().ontology_iri();
    out.onto2 = cache.o2().ontology_iri().empty() ? cache.o2().id() : cache.o2().ontology_iri();
    for (const auto& pair : state.pairs()) {
        if (pair.fitness >= threshold)
            out.add({cache.o1().iri(pair.e1), cache.o2().iri(pair.e2), "=",
                     std::clamp(pair.fitness, 0.0, 1.0)});
    }
    out.sort_by_entities();
    return out;
}

}  // namespace samatch
