#include "lrkit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace lrkit {

std::vector<BoundaryTriple> all_boundary_triples(int n, int d) {
    std::vector<Partition> parts;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != d) continue;
        std::vector<int> bits(n);
        for (int i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
        parts.push_back(word_to_partition(BinaryWord{bits}));
    }
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) { return a.parts < b.parts; });
    std::vector<BoundaryTriple> out;
    out.reserve(parts.size() * parts.size() * parts.size());
    for (const auto& mu : parts)
        for (const auto& nu : parts)
            for (const auto& lam : parts) out.push_back({mu, nu, lam});
    return out;
}

std::vector<SkewTableau> enumerate_lr(const BoundaryTriple& b) {
    std::vector<SkewTableau> out;
    Partition outer = complement(b.lam);
    if (!outer.contains(b.mu)) return out;
    SkewShape shape(outer, b.mu);
    if (shape.size() != b.nu.size()) return out;
    const int d = outer.box.d;
    if (shape.size() == 0) {
        out.push_back(SkewTableau(shape, std::vector<std::vector<int>>(d), d));
        return out;
    }
    std::vector<std::vector<int>> rows(d);
    for (int r = 1; r <= d; ++r) rows[r - 1].resize(outer.part(r) - b.mu.part(r), 0);
    std::vector<long long> cnt(d + 1, 0);
    // fill in row-word order: rows bottom to top, right to left within a row
    struct Pos {
        int r, c;  // c is the column inside the rectangle
    };
    std::vector<Pos> order;
    for (int r = 1; r <= d; ++r)
        for (int c = shape.row_end(r); c >= shape.row_begin(r); --c) order.push_back({r, c});
    auto cell = [&](int r, int c) -> int& { return rows[r - 1][c - shape.row_begin(r)]; };
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == order.size()) {
            out.push_back(SkewTableau(shape, rows, d));
            return;
        }
        auto [r, c] = order[k];
        int lo = 1, hi = d;
        if (c < shape.row_end(r)) hi = std::min(hi, cell(r, c + 1));  // weakly increasing rows
        if (r > 1 && shape.contains(r - 1, c)) lo = std::max(lo, cell(r - 1, c) + 1);
        for (int x = lo; x <= hi; ++x) {
            if (cnt[x] >= b.nu.part(x)) continue;                  // content bound
            if (x > 1 && cnt[x] + 1 > cnt[x - 1]) continue;        // ballot prefix
            ++cnt[x];
            cell(r, c) = x;
            self(self, k + 1);
            --cnt[x];
        }
        cell(r, c) = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<Word> yamanouchi_words(const Partition& nu) {
    std::vector<Word> out;
    const int d = nu.box.d;
    const long long len = nu.size();
    std::vector<int> letters;
    std::vector<long long> cnt(d + 1, 0);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<long long>(letters.size()) == len) {
            out.push_back(Word(letters, d));
            return;
        }
        for (int x = 1; x <= d; ++x) {
            if (cnt[x] >= nu.part(x)) continue;
            if (x > 1 && cnt[x] + 1 > cnt[x - 1]) continue;
            ++cnt[x];
            letters.push_back(x);
            self(self);
            letters.pop_back();
            --cnt[x];
        }
    };
    rec(rec);
    return out;
}

long long lr_coefficient(const BoundaryTriple& b) {
    return static_cast<long long>(enumerate_lr(b).size());
}

long long lr_coefficient_via_words(const BoundaryTriple& b) {
    Partition outer = complement(b.lam);
    if (!outer.contains(b.mu)) return 0;
    SkewShape shape(outer, b.mu);
    if (shape.size() != b.nu.size()) return 0;
    long long total = 0;
    for (const Word& w : yamanouchi_words(b.nu)) {
        // does w fill the shape semistandardly?
        try {
            SkewTableau t = tableau_from_row_word(w, shape);
            (void)t;
            ++total;
        } catch (const std::exception&) {
        }
    }
    return total;
}

int thread_cap() {
    if (const char* env = std::getenv("LRKIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

SweepReport verify_symmetry_sweep(int n, int d, const ApplyFn& apply_fn) {
    ApplyFn fn = apply_fn ? apply_fn : [](GroupElement g, const SkewTableau& t) { return apply(g, t); };
    SweepReport report;
    report.n = n;
    report.d = d;
    auto triples = all_boundary_triples(n, d);
    report.triples = static_cast<long long>(triples.size());
    std::mutex m;
    std::atomic<size_t> next{0};
    long long tableaux = 0;
    auto worker = [&] {
        long long local_tableaux = 0;
        std::vector<SweepViolation> local;
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= triples.size()) break;
            const BoundaryTriple& b = triples[k];
            auto set = enumerate_lr(b);
            local_tableaux += static_cast<long long>(set.size());
            std::string triple_name = partition_to_string(b.mu) + "," + partition_to_string(b.nu) + "," +
                                      partition_to_string(b.lam);
            for (GroupElement g : kAllGroupElements) {
                BoundaryTriple target = boundary_action(g, b);
                std::vector<SkewTableau> images;
                bool bad = false;
                for (const auto& t : set) {
                    SkewTableau img = fn(g, t);
                    if (!is_lr_tableau(img) || !(boundary_data(img) == target)) {
                        local.push_back({"image not LR with the dictated boundary", triple_name,
                                         group_element_name(g)});
                        bad = true;
                        break;
                    }
                    images.push_back(img);
                }
                if (bad) continue;
                std::sort(images.begin(), images.end(), [](const SkewTableau& a, const SkewTableau& c) {
                    return a.rows < c.rows;
                });
                if (std::adjacent_find(images.begin(), images.end()) != images.end())
                    local.push_back({"map not injective", triple_name, group_element_name(g)});
                if (static_cast<long long>(set.size()) != lr_coefficient(target))
                    local.push_back({"coefficient changed across the orbit", triple_name, group_element_name(g)});
            }
        }
        std::lock_guard<std::mutex> lock(m);
        tableaux += local_tableaux;
        report.violations.insert(report.violations.end(), local.begin(), local.end());
    };
    int workers = std::max(1, std::min<int>(thread_cap(), static_cast<int>(triples.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    report.tableaux = tableaux;
    std::sort(report.violations.begin(), report.violations.end(),
              [](const SweepViolation& a, const SweepViolation& b) {
                  return std::tie(a.triple, a.op, a.what) < std::tie(b.triple, b.op, b.what);
              });
    return report;
}

std::string report_to_json(const SweepReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["d"] = r.d;
    j["triples"] = r.triples;
    j["tableaux"] = r.tableaux;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"what", v.what}, {"triple", v.triple}, {"op", v.op}});
    return j.dump();
}

std::string report_to_table(const SweepReport& r) {
    std::ostringstream out;
    out << "symmetry sweep n=" << r.n << " d=" << r.d << ": " << r.triples << " triples, " << r.tableaux
        << " tableaux\n";
    if (r.violations.empty()) {
        out << "no violations\n";
    } else {
        out << r.violations.size() << " violations:\n";
        for (const auto& v : r.violations)
            out << "  (" << v.triple << ") op=" << v.op << ": " << v.what << "\n";
    }
    return out.str();
}

}  // namespace lrkit
