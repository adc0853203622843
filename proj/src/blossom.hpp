#pragma once
#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

// Maximum-weight matching in a general graph, O(n^3).
// Dual/blossom method; weights are non-negative integers, zero-weight
// pairs are treated as non-edges so the matching never includes them.
class WeightedBlossom {
public:
    explicit WeightedBlossom(int n)
        : n_(n), cap_(2 * n + 8), g_(cap_ * cap_), lab_(cap_), match_(cap_),
          slack_(cap_), st_(cap_), pa_(cap_), s_(cap_), vis_(cap_),
          flower_(cap_), flower_from_(cap_, std::vector<int>(n + 1, 0)) {
        for (int u = 0; u < cap_; ++u)
            for (int v = 0; v < cap_; ++v) g_[u * cap_ + v] = Edge{u, v, 0};
    }

    void set_weight(int u, int v, long long w) { // 1-indexed
        edge(u, v).w = w;
        edge(v, u).w = w;
    }

    // returns total weight; mate(u) gives partner or 0
    long long solve() {
        std::fill(match_.begin(), match_.end(), 0);
        n_x_ = n_;
        long long w_max = 0;
        for (int u = 0; u <= n_; ++u) { st_[u] = u; flower_[u].clear(); }
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, edge(u, v).w);
            }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (matching()) {}
        long long total = 0;
        for (int u = 1; u <= n_; ++u)
            if (match_[u] && match_[u] < u) total += edge(u, match_[u]).w;
        return total;
    }

    int mate(int u) const { return match_[u]; }

private:
    struct Edge { int u, v; long long w; };
    static constexpr long long kInf = std::numeric_limits<long long>::max() >> 1;

    Edge& edge(int u, int v) { return g_[u * cap_ + v]; }
    const Edge& edge(int u, int v) const { return g_[u * cap_ + v]; }

    long long e_delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - e.w * 2; }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(edge(u, x)) < e_delta(edge(slack_[x], x))) slack_[x] = u;
    }
    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (edge(u, x).w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }
    void q_push(int x) {
        if (x <= n_) q_.push_back(x);
        else for (int i : flower_[x]) q_push(i);
    }
    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_) for (int i : flower_[x]) set_st(i, b);
    }
    int get_pr(int b, int xr) {
        int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                                  flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }
    void set_match(int u, int v) {
        match_[u] = edge(u, v).v;
        if (u <= n_) return;
        const Edge& e = edge(u, v);
        int xr = flower_from_[u][e.u];
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }
    void augment(int u, int v) {
        while (true) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }
    int get_lca(int u, int v) {
        for (++tick_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == tick_) return u;
            vis_[u] = tick_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }
    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) { edge(b, x).w = 0; edge(x, b).w = 0; }
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (edge(b, x).w == 0 || e_delta(edge(xs, x)) < e_delta(edge(b, x))) {
                    edge(b, x) = edge(xs, x);
                    edge(x, b) = edge(x, xs);
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }
    void expand_blossom(int b) {
        for (int i : flower_[b]) set_st(i, i);
        int xr = flower_from_[b][edge(b, pa_[b]).u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i], xns = flower_[b][i + 1];
            pa_[xs] = edge(xns, xs).u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (int i = pr + 1; i < static_cast<int>(flower_[b].size()); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }
    bool on_found_edge(const Edge& e) {
        int u = st_[e.u], v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }
    bool matching() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        while (true) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (edge(u, v).w > 0 && st_[u] != st_[v]) {
                        if (e_delta(edge(u, v)) == 0) {
                            if (on_found_edge(edge(u, v))) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            long long d = kInf;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1) d = std::min(d, e_delta(edge(slack_[x], x)));
                    else if (s_[x] == 0) d = std::min(d, e_delta(edge(slack_[x], x)) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0) lab_[b] += d * 2;
                    else if (s_[b] == 1) lab_[b] -= d * 2;
                }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(edge(slack_[x], x)) == 0)
                    if (on_found_edge(edge(slack_[x], x))) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_, cap_, n_x_ = 0, tick_ = 0;
    std::vector<Edge> g_;
    std::vector<long long> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::deque<int> q_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
};
