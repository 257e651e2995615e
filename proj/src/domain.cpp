#include "valgebra/domain.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

#include "valgebra/errors.hpp"

namespace valgebra {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::context_mismatch: return "context mismatch";
        case ErrorKind::instance_mismatch: return "instance mismatch";
        case ErrorKind::order_violation: return "order violation";
        case ErrorKind::projection_domain: return "projection domain";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::null_argument: return "null argument";
        case ErrorKind::not_reducible: return "not reducible";
        case ErrorKind::not_invertible: return "not invertible";
        case ErrorKind::undefined_projection: return "undefined projection";
        case ErrorKind::composition_undefined: return "composition undefined";
        case ErrorKind::domination_violation: return "domination violation";
        case ErrorKind::invalid_value: return "invalid value";
        case ErrorKind::not_positive_definite: return "not positive definite";
        case ErrorKind::parse_error: return "parse error";
    }
    return "error";
}

namespace {

std::atomic<std::uint64_t> next_context_id{1};

void canonicalize_blocks(std::vector<Block>& blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

// Partition lattice ops on raw block lists (context-free helpers).

std::vector<Block> partition_join_blocks(const std::vector<Block>& p, const std::vector<Block>& q) {
    std::vector<Block> out;
    for (const auto& a : p) {
        for (const auto& b : q) {
            Block inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) out.push_back(std::move(inter));
        }
    }
    canonicalize_blocks(out);
    return out;
}

// Meet: connected components of the overlap graph whose nodes are the blocks
// of both partitions, joined when they intersect. Union-find over the nodes.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<Block> partition_meet_blocks(const std::vector<Block>& p, const std::vector<Block>& q) {
    const int np = static_cast<int>(p.size());
    const int nq = static_cast<int>(q.size());
    UnionFind uf(np + nq);
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < nq; ++j) {
            Block inter;
            std::set_intersection(p[i].begin(), p[i].end(), q[j].begin(), q[j].end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) uf.unite(i, np + j);
        }
    }
    std::vector<Block> out;
    std::vector<int> root_slot(np + nq, -1);
    std::set<int> seen;
    for (int i = 0; i < np + nq; ++i) {
        int r = uf.find(i);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        const Block& src = i < np ? p[i] : q[i - np];
        auto& dst = out[root_slot[r]];
        dst.insert(dst.end(), src.begin(), src.end());
    }
    for (auto& b : out) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    canonicalize_blocks(out);
    return out;
}

bool blocks_leq(const std::vector<Block>& coarse, const std::vector<Block>& fine) {
    // coarse <= fine iff every block of fine is contained in a block of coarse
    for (const auto& f : fine) {
        bool contained = false;
        for (const auto& c : coarse) {
            if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) return false;
    }
    return true;
}

void enumerate_partitions_rec(const std::vector<int>& atoms, std::size_t i,
                              std::vector<Block>& current, std::vector<std::vector<Block>>& out) {
    if (i == atoms.size()) {
        out.push_back(current);
        return;
    }
    // index loop: recursion below grows and shrinks `current`
    const std::size_t existing = current.size();
    for (std::size_t k = 0; k < existing; ++k) {
        current[k].push_back(atoms[i]);
        enumerate_partitions_rec(atoms, i + 1, current, out);
        current[k].pop_back();
    }
    current.push_back({atoms[i]});
    enumerate_partitions_rec(atoms, i + 1, current, out);
    current.pop_back();
}

} // namespace

int LatticeContext::variable_id(const std::string& name) const {
    for (std::size_t i = 0; i < variable_names.size(); ++i)
        if (variable_names[i] == name) return static_cast<int>(i);
    return -1;
}

ContextPtr make_subset_context(std::vector<std::string> names, std::vector<int> cardinalities) {
    if (names.size() != cardinalities.size())
        fail(ErrorKind::invalid_value, "one cardinality per variable required");
    for (int c : cardinalities)
        if (c < 0) fail(ErrorKind::invalid_value, "negative cardinality");
    auto ctx = std::make_shared<LatticeContext>();
    ctx->kind = LatticeKind::subset;
    ctx->variable_names = std::move(names);
    ctx->cardinalities = std::move(cardinalities);
    ctx->is_modular = true;
    ctx->is_distributive = true;
    ctx->id = next_context_id.fetch_add(1);
    return ctx;
}

ContextPtr make_partition_context(std::vector<int> atoms) {
    std::sort(atoms.begin(), atoms.end());
    if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
        fail(ErrorKind::invalid_value, "duplicate atom in universe");
    if (atoms.empty()) fail(ErrorKind::invalid_value, "empty universe");
    auto ctx = std::make_shared<LatticeContext>();
    ctx->kind = LatticeKind::partition;
    ctx->atoms = std::move(atoms);
    ctx->id = next_context_id.fetch_add(1);
    ctx->is_modular = false;
    ctx->is_distributive = false;
    if (ctx->atoms.size() <= 5) {
        // establish the flags by exhaustive triple checks
        std::vector<std::vector<Block>> all;
        std::vector<Block> cur;
        enumerate_partitions_rec(ctx->atoms, 0, cur, all);
        for (auto& p : all) canonicalize_blocks(p);
        bool modular = true, distributive = true;
        for (const auto& x : all) {
            for (const auto& y : all) {
                for (const auto& z : all) {
                    if (blocks_leq(y, z) || blocks_leq(z, y)) {
                        // modular law needs z <= y
                        const auto& lo = blocks_leq(y, z) ? y : z;  // lo <= hi
                        const auto& hi = blocks_leq(y, z) ? z : y;
                        if (partition_meet_blocks(hi, partition_join_blocks(x, lo)) !=
                            partition_join_blocks(partition_meet_blocks(x, hi), lo))
                            modular = false;
                    }
                    if (partition_meet_blocks(x, partition_join_blocks(y, z)) !=
                        partition_join_blocks(partition_meet_blocks(x, y),
                                              partition_meet_blocks(x, z)))
                        distributive = false;
                }
                if (!modular && !distributive) break;
            }
            if (!modular && !distributive) break;
        }
        ctx->is_modular = modular;
        ctx->is_distributive = distributive;
    }
    return ctx;
}

Domain Domain::subset(ContextPtr ctx, std::vector<int> variables) {
    if (!ctx || ctx->kind != LatticeKind::subset)
        fail(ErrorKind::context_mismatch, "subset domain needs a subset context");
    std::sort(variables.begin(), variables.end());
    variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
    for (int v : variables)
        if (v < 0 || v >= static_cast<int>(ctx->variable_count()))
            fail(ErrorKind::invalid_value, "variable id outside context");
    Domain d(std::move(ctx));
    d.vars_ = std::move(variables);
    return d;
}

Domain Domain::partition(ContextPtr ctx, std::vector<Block> blocks) {
    if (!ctx || ctx->kind != LatticeKind::partition)
        fail(ErrorKind::context_mismatch, "partition domain needs a partition context");
    canonicalize_blocks(blocks);
    std::vector<int> covered;
    for (const auto& b : blocks) {
        if (b.empty()) fail(ErrorKind::invalid_value, "empty block");
        covered.insert(covered.end(), b.begin(), b.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != ctx->atoms)
        fail(ErrorKind::invalid_value, "blocks must partition the universe");
    Domain d(std::move(ctx));
    d.blocks_ = std::move(blocks);
    return d;
}

std::size_t Domain::cell_count() const {
    if (kind() == LatticeKind::partition) return blocks_.size();
    std::size_t n = 1;
    for (int v : vars_) {
        int c = ctx_->cardinalities[static_cast<std::size_t>(v)];
        if (c <= 0) fail(ErrorKind::unsupported, "continuous variable has no cells");
        n *= static_cast<std::size_t>(c);
        if (n > (1u << 20)) fail(ErrorKind::invalid_value, "configuration space too large");
    }
    return n;
}

std::vector<int> Domain::scope_cardinalities() const {
    std::vector<int> out;
    out.reserve(vars_.size());
    for (int v : vars_) out.push_back(ctx_->cardinalities[static_cast<std::size_t>(v)]);
    return out;
}

bool Domain::operator==(const Domain& other) const {
    return ctx_->id == other.ctx_->id && vars_ == other.vars_ && blocks_ == other.blocks_;
}

std::string Domain::to_text() const {
    std::ostringstream os;
    if (kind() == LatticeKind::subset) {
        os << '{';
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) os << ',';
            os << ctx_->variable_names[static_cast<std::size_t>(vars_[i])];
        }
        os << '}';
    } else {
        os << '[';
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) os << ',';
            os << '[';
            for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                if (j) os << ',';
                os << blocks_[i][j];
            }
            os << ']';
        }
        os << ']';
    }
    return os.str();
}

void require_same_context(const Domain& x, const Domain& y) {
    if (x.context()->id != y.context()->id)
        fail(ErrorKind::context_mismatch, "domains belong to different contexts");
}

Domain bottom(const ContextPtr& ctx) {
    if (ctx->kind == LatticeKind::subset) return Domain::subset(ctx, {});
    return Domain::partition(ctx, {ctx->atoms});
}

Domain top(const ContextPtr& ctx) {
    if (ctx->kind == LatticeKind::subset) {
        std::vector<int> all(ctx->variable_count());
        std::iota(all.begin(), all.end(), 0);
        return Domain::subset(ctx, all);
    }
    std::vector<Block> singletons;
    for (int a : ctx->atoms) singletons.push_back({a});
    return Domain::partition(ctx, singletons);
}

Domain join(const Domain& x, const Domain& y) {
    require_same_context(x, y);
    if (x.kind() == LatticeKind::subset) {
        std::vector<int> u;
        std::set_union(x.variables().begin(), x.variables().end(), y.variables().begin(),
                       y.variables().end(), std::back_inserter(u));
        return Domain::subset(x.context(), std::move(u));
    }
    return Domain::partition(x.context(), partition_join_blocks(x.blocks(), y.blocks()));
}

Domain meet(const Domain& x, const Domain& y) {
    require_same_context(x, y);
    if (x.kind() == LatticeKind::subset) {
        std::vector<int> m;
        std::set_intersection(x.variables().begin(), x.variables().end(), y.variables().begin(),
                              y.variables().end(), std::back_inserter(m));
        return Domain::subset(x.context(), std::move(m));
    }
    return Domain::partition(x.context(), partition_meet_blocks(x.blocks(), y.blocks()));
}

bool leq(const Domain& x, const Domain& y) {
    require_same_context(x, y);
    if (x.kind() == LatticeKind::subset)
        return std::includes(y.variables().begin(), y.variables().end(), x.variables().begin(),
                             x.variables().end());
    return blocks_leq(x.blocks(), y.blocks());
}

std::vector<int> cell_parent_map(const Domain& coarse, const Domain& fine) {
    require_same_context(coarse, fine);
    if (!leq(coarse, fine)) fail(ErrorKind::order_violation, "cell_parent_map needs coarse <= fine");
    std::vector<int> parent;
    if (fine.kind() == LatticeKind::partition) {
        parent.reserve(fine.blocks().size());
        for (const auto& f : fine.blocks()) {
            int idx = -1;
            for (std::size_t i = 0; i < coarse.blocks().size(); ++i) {
                const auto& c = coarse.blocks()[i];
                if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
                    idx = static_cast<int>(i);
                    break;
                }
            }
            parent.push_back(idx);
        }
        return parent;
    }
    ConfigSpace fine_space(fine);
    auto map = fine_space.restriction_map(coarse);
    parent.assign(map.begin(), map.end());
    return parent;
}

std::uint32_t refining_map(std::uint32_t subset, const Domain& coarse, const Domain& fine) {
    auto parent = cell_parent_map(coarse, fine);
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (subset >> parent[c] & 1) out |= std::uint32_t(1) << c;
    return out;
}

std::uint32_t coarsening_map(std::uint32_t subset, const Domain& fine, const Domain& coarse) {
    auto parent = cell_parent_map(coarse, fine);
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < parent.size(); ++c)
        if (subset >> c & 1) out |= std::uint32_t(1) << parent[c];
    return out;
}

std::vector<Domain> enumerate_partitions(const ContextPtr& ctx) {
    if (ctx->kind != LatticeKind::partition)
        fail(ErrorKind::unsupported, "enumerate_partitions needs a partition context");
    if (ctx->atoms.size() > 6)
        fail(ErrorKind::unsupported, "partition enumeration limited to small universes");
    std::vector<std::vector<Block>> all;
    std::vector<Block> cur;
    enumerate_partitions_rec(ctx->atoms, 0, cur, all);
    std::vector<Domain> out;
    out.reserve(all.size());
    for (auto& blocks : all) out.push_back(Domain::partition(ctx, std::move(blocks)));
    return out;
}

ConfigSpace::ConfigSpace(const Domain& domain) {
    if (domain.kind() != LatticeKind::subset)
        fail(ErrorKind::unsupported, "configuration space needs a subset domain");
    vars_ = domain.variables();
    cards_ = domain.scope_cardinalities();
    for (int c : cards_) {
        if (c <= 0) fail(ErrorKind::unsupported, "continuous variable has no configurations");
        total_ *= static_cast<std::size_t>(c);
    }
    strides_.assign(cards_.size(), 1);
    for (std::size_t i = cards_.size(); i-- > 1;)
        strides_[i - 1] = strides_[i] * static_cast<std::size_t>(cards_[i]);
}

std::vector<int> ConfigSpace::decode(std::size_t index) const {
    std::vector<int> cfg(cards_.size());
    for (std::size_t i = 0; i < cards_.size(); ++i) {
        cfg[i] = static_cast<int>(index / strides_[i]);
        index %= strides_[i];
    }
    return cfg;
}

std::size_t ConfigSpace::encode(const std::vector<int>& config) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < cards_.size(); ++i)
        idx += static_cast<std::size_t>(config[i]) * strides_[i];
    return idx;
}

std::vector<std::size_t> ConfigSpace::restriction_map(const Domain& sub) const {
    ConfigSpace sub_space(sub);
    // position of each sub variable inside our scope
    std::vector<std::size_t> pos;
    for (int v : sub.variables()) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
        if (it == vars_.end() || *it != v)
            fail(ErrorKind::order_violation, "restriction target not a subdomain");
        pos.push_back(static_cast<std::size_t>(it - vars_.begin()));
    }
    std::vector<std::size_t> map(total_);
    std::vector<int> sub_cfg(pos.size());
    for (std::size_t i = 0; i < total_; ++i) {
        auto cfg = decode(i);
        for (std::size_t k = 0; k < pos.size(); ++k) sub_cfg[k] = cfg[pos[k]];
        map[i] = sub_space.encode(sub_cfg);
    }
    return map;
}

} // namespace valgebra
