#include "reconf/cliques.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace reconf {

namespace {

using Words = std::vector<std::uint64_t>;

Words full_set(int n) {
    Words w((n + 63) / 64, ~std::uint64_t{0});
    if (n % 64) w.back() = (std::uint64_t{1} << (n % 64)) - 1;
    if (n == 0) w.clear();
    return w;
}

void intersect_with_row(Words& w, const Graph& g, int v) {
    auto r = g.row(v);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= r[i];
}

bool empty_set(const Words& w) {
    return std::ranges::all_of(w, [](std::uint64_t x) { return x == 0; });
}

int pop_count(const Words& w) {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

template <class F>
void for_each_bit(const Words& w, F f) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t bits = w[i];
        while (bits) {
            f(static_cast<int>(i * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
}

void clear_bit(Words& w, int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
bool test_bit(const Words& w, int v) { return (w[v >> 6] >> (v & 63)) & 1u; }

// Extends the current clique by vertices from cand (all > last member),
// visiting extensions in increasing vertex order.
void extend(const Graph& g, int k, std::vector<int>& current, const Words& cand,
            const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(current.size()) == k) {
        emit(current);
        return;
    }
    for_each_bit(cand, [&](int v) {
        Words next = cand;
        // keep only higher-indexed neighbors of v
        for (int i = 0; i <= v >> 6; ++i) next[i] = i < v >> 6 ? 0 : next[i];
        next[v >> 6] &= ~((std::uint64_t{2} << (v & 63)) - 1);
        intersect_with_row(next, g, v);
        if (pop_count(next) + static_cast<int>(current.size()) + 1 < k) return;
        current.push_back(v);
        extend(g, k, current, next, emit);
        current.pop_back();
    });
}

}  // namespace

Clique::Clique(const Graph& host, std::vector<int> members) : members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        int v = members_[i];
        if (v < 0 || v >= host.vertex_count()) throw ValidationError("clique member out of range");
        if (i > 0) {
            if (members_[i - 1] >= v) throw ValidationError("clique members must be strictly sorted");
            for (std::size_t j = 0; j < i; ++j)
                if (!host.adjacent(members_[j], v))
                    throw ValidationError("clique members " + host.name(members_[j]) + " and " + host.name(v) +
                                          " are not adjacent");
        }
    }
}

bool Clique::contains(int v) const { return std::ranges::binary_search(members_, v); }

std::vector<Clique> enumerate_k_cliques(const Graph& g, int k) {
    std::vector<Clique> out;
    if (k < 0) throw ValidationError("negative clique size");
    std::vector<int> current;
    extend(g, k, current, full_set(g.vertex_count()),
           [&](const std::vector<int>& c) { out.emplace_back(g, c); });
    return out;
}

std::vector<Clique> maximal_cliques(const Graph& g) {
    std::vector<Clique> out;
    std::vector<int> current;
    int n = g.vertex_count();

    std::function<void(Words, Words)> bk = [&](Words cand, Words excl) {
        if (empty_set(cand) && empty_set(excl)) {
            auto sorted = current;  // pivoting visits vertices out of order
            std::ranges::sort(sorted);
            out.emplace_back(g, std::move(sorted));
            return;
        }
        // pivot: vertex of cand|excl with most neighbors in cand
        int pivot = -1, best = -1;
        for (const Words* side : {&cand, &excl})
            for_each_bit(*side, [&](int u) {
                Words tmp = cand;
                intersect_with_row(tmp, g, u);
                int c = pop_count(tmp);
                if (c > best) best = c, pivot = u;
            });
        Words branch = cand;
        if (pivot >= 0) {
            auto r = g.row(pivot);
            for (std::size_t i = 0; i < branch.size(); ++i) branch[i] &= ~r[i];
        }
        for_each_bit(branch, [&](int v) {
            if (!test_bit(cand, v)) return;  // removed by an earlier iteration
            Words nc = cand, ne = excl;
            intersect_with_row(nc, g, v);
            intersect_with_row(ne, g, v);
            current.push_back(v);
            bk(std::move(nc), std::move(ne));
            current.pop_back();
            clear_bit(cand, v);
            excl[v >> 6] |= std::uint64_t{1} << (v & 63);
        });
    };

    bk(full_set(n), Words((n + 63) / 64, 0));
    std::ranges::sort(out);
    return out;
}

int clique_number(const Graph& g) {
    int best = 0;
    for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
    return best;
}

namespace {
std::int64_t count_k(const Graph& g, int k) {
    std::int64_t total = 0;
    std::vector<int> current;
    extend(g, k, current, full_set(g.vertex_count()), [&](const std::vector<int>&) { ++total; });
    return total;
}
}  // namespace

std::int64_t count_k3(const Graph& g) { return count_k(g, 3); }
std::int64_t count_k4(const Graph& g) { return count_k(g, 4); }

}  // namespace reconf
