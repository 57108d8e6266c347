#include "krecon/kset.hpp"

#include <algorithm>
#include <string>

#include "krecon/errors.hpp"

namespace krecon {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

std::string set_to_string(std::span<const Vertex> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

KSetInstance::KSetInstance(int n, int k, bool complete) : n_(n), k_(k), complete_(complete) {
    if (n < 0) throw InvalidParameter("vertex count must be non-negative");
    if (k < 2) throw InvalidParameter("subset size k must be at least 2, got " + std::to_string(k));
    if (k > n) throw InvalidParameter("subset size k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    binom_ = Binomial(n, k);
    if (binom_(n, k) == Binomial::kSaturated) throw InvalidParameter("C(n, k) does not fit in 64 bits");
}

void KSetInstance::validate_set(std::span<const Vertex> s) const {
    if (static_cast<int>(s.size()) != k_)
        throw InvalidParameter("set " + set_to_string(s) + " does not have exactly k=" + std::to_string(k_) +
                               " vertices");
    for (Vertex v : s)
        if (v < 0 || v >= n_) throw InvalidParameter("vertex id out of range in set " + set_to_string(s));
    if (!is_sorted_unique(s)) throw InvalidParameter("set " + set_to_string(s) + " is not sorted and distinct");
}

void KSetInstance::finalize() {
    sort_unique(connected_);
    sort_unique(disconnected_);
    const std::uint64_t total = subset_count();
    if (!connected_.empty() && connected_.back() >= total) throw InvalidParameter("rank out of range");
    if (!disconnected_.empty() && disconnected_.back() >= total) throw InvalidParameter("rank out of range");
    if (complete_ && !disconnected_.empty())
        throw InvalidParameter("complete instances store the connected family only");
    std::vector<std::uint64_t> both;
    std::set_intersection(connected_.begin(), connected_.end(), disconnected_.begin(), disconnected_.end(),
                          std::back_inserter(both));
    if (!both.empty())
        throw InvalidParameter("set " + set_to_string(unrank(both.front())) + " is both connected and disconnected");
    dense_.clear();
    if (complete_ && total <= kDenseLimit) {
        dense_.assign((total + 63) / 64, 0);
        for (std::uint64_t r : connected_) dense_[r >> 6] |= std::uint64_t{1} << (r & 63);
    }
}

KSetInstance KSetInstance::complete(int n, int k, std::span<const VertexSet> connected) {
    KSetInstance inst(n, k, true);
    inst.connected_.reserve(connected.size());
    for (const auto& s : connected) {
        inst.validate_set(s);
        inst.connected_.push_back(inst.rank(s));
    }
    inst.finalize();
    return inst;
}

KSetInstance KSetInstance::partial(int n, int k, std::span<const VertexSet> connected,
                                   std::span<const VertexSet> disconnected) {
    KSetInstance inst(n, k, false);
    for (const auto& s : connected) {
        inst.validate_set(s);
        inst.connected_.push_back(inst.rank(s));
    }
    for (const auto& s : disconnected) {
        inst.validate_set(s);
        inst.disconnected_.push_back(inst.rank(s));
    }
    inst.finalize();
    return inst;
}

KSetInstance KSetInstance::from_ranks(int n, int k, bool complete, std::vector<std::uint64_t> connected,
                                      std::vector<std::uint64_t> disconnected) {
    KSetInstance inst(n, k, complete);
    inst.connected_ = std::move(connected);
    inst.disconnected_ = std::move(disconnected);
    inst.finalize();
    return inst;
}

std::size_t KSetInstance::disconnected_count() const {
    if (!complete_) return disconnected_.size();
    return static_cast<std::size_t>(subset_count() - connected_.size());
}

std::uint64_t KSetInstance::rank(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += binom_(sorted[i], static_cast<int>(i) + 1);
    return r;
}

VertexSet KSetInstance::unrank(std::uint64_t r) const {
    VertexSet out(k_);
    int hi = n_ - 1;
    for (int i = k_ - 1; i >= 0; --i) {
        Vertex c = hi;
        while (binom_(c, i + 1) > r) --c;
        out[i] = c;
        r -= binom_(c, i + 1);
        hi = c - 1;
    }
    return out;
}

Membership KSetInstance::classify_rank(std::uint64_t r) const {
    if (complete_) {
        if (!dense_.empty())
            return (dense_[r >> 6] >> (r & 63)) & 1u ? Membership::Connected : Membership::Disconnected;
        return std::binary_search(connected_.begin(), connected_.end(), r) ? Membership::Connected
                                                                          : Membership::Disconnected;
    }
    if (std::binary_search(connected_.begin(), connected_.end(), r)) return Membership::Connected;
    if (std::binary_search(disconnected_.begin(), disconnected_.end(), r)) return Membership::Disconnected;
    return Membership::Unlisted;
}

Membership KSetInstance::classify(std::span<const Vertex> s) const {
    validate_set(s);
    return classify_rank(rank(s));
}

std::vector<VertexSet> KSetInstance::connected_sets() const {
    std::vector<VertexSet> out;
    out.reserve(connected_.size());
    for (std::uint64_t r : connected_) out.push_back(unrank(r));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> KSetInstance::disconnected_sets() const {
    std::vector<VertexSet> out;
    if (complete_) {
        for_each_subset(n_, k_, [&](std::span<const Vertex> s) {
            if (classify_rank(rank(s)) == Membership::Disconnected) out.emplace_back(s.begin(), s.end());
        });
        return out;
    }
    out.reserve(disconnected_.size());
    for (std::uint64_t r : disconnected_) out.push_back(unrank(r));
    std::sort(out.begin(), out.end());
    return out;
}

void ProbeLedger::record_layer_single(std::uint64_t probes, std::uint64_t bound) {
    ++layer_single_calls;
    if (probes > bound) ++layer_single_violations;
    if (bound > 0) worst_layer_single_ratio = std::max(worst_layer_single_ratio, double(probes) / double(bound));
}

void ProbeLedger::record_build_layering(std::uint64_t probes, std::uint64_t bound) {
    ++build_layering_calls;
    if (probes > bound) ++build_layering_violations;
    if (bound > 0)
        worst_build_layering_ratio = std::max(worst_build_layering_ratio, double(probes) / double(bound));
}

bool Oracle::is_connected(std::span<const Vertex> s) {
    scratch_.assign(s.begin(), s.end());
    std::sort(scratch_.begin(), scratch_.end());
    ++probes_;
    switch (inst_->classify(scratch_)) {
        case Membership::Connected: return true;
        case Membership::Disconnected: return false;
        case Membership::Unlisted: break;
    }
    throw ContractError("probe of unlisted k-set in a partial instance");
}

KSetInstance connected_ksets(const Graph& g, int k) {
    if (k < 2 || k > g.n())
        throw InvalidParameter("k=" + std::to_string(k) + " outside [2, n=" + std::to_string(g.n()) + "]");
    const Binomial binom(g.n(), k);
    std::vector<std::uint64_t> ranks;
    for_each_subset(g.n(), k, [&](std::span<const Vertex> s) {
        if (induces_connected(s, [&](Vertex a, Vertex b) { return g.has_edge(a, b); })) {
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < s.size(); ++i) r += binom(s[i], static_cast<int>(i) + 1);
            ranks.push_back(r);
        }
    });
    return KSetInstance::from_ranks(g.n(), k, true, std::move(ranks));
}

bool is_consistent(const Graph& g, const KSetInstance& inst) {
    if (g.n() != inst.n())
        throw InvalidParameter("graph has " + std::to_string(g.n()) + " vertices, instance has " +
                               std::to_string(inst.n()));
    auto adjacent = [&](Vertex a, Vertex b) { return g.has_edge(a, b); };
    if (!inst.is_complete()) {
        for (std::uint64_t r : inst.connected_ranks())
            if (!induces_connected(inst.unrank(r), adjacent)) return false;
        for (std::uint64_t r : inst.disconnected_ranks())
            if (induces_connected(inst.unrank(r), adjacent)) return false;
        return true;
    }
    return for_each_subset(g.n(), inst.k(), [&](std::span<const Vertex> s) {
        const bool listed = inst.classify_rank(inst.rank(s)) == Membership::Connected;
        return listed == induces_connected(s, adjacent);
    });
}

VertexSet neighborhood_of_set(Oracle& oracle, std::span<const Vertex> t) {
    const KSetInstance& inst = oracle.instance();
    if (!inst.is_complete()) throw InvalidParameter("neighborhood_of_set needs a complete instance");
    const VertexSet ts = sorted_set(t);
    if (static_cast<int>(ts.size()) != inst.k() || ts.size() != t.size())
        throw InvalidParameter("t must contain exactly k distinct vertices");
    if (inst.classify(ts) != Membership::Connected) throw InvalidParameter("t is not a connected k-set");
    VertexSet out;
    VertexSet probe(ts.size());
    for (Vertex v = 0; v < inst.n(); ++v) {
        if (contains(ts, v)) continue;
        for (std::size_t drop = 0; drop < ts.size(); ++drop) {
            probe = ts;
            probe[drop] = v;
            if (oracle.is_connected(probe)) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

VertexSet neighborhood_of_set(const KSetInstance& inst, std::span<const Vertex> t) {
    Oracle oracle(inst);
    return neighborhood_of_set(oracle, t);
}

}  // namespace krecon
