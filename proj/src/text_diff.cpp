#include "archslicer/text_diff.hpp"

#include <algorithm>
#include <stdexcept>

namespace archslicer {

namespace {

// Myers greedy shortest-edit-script over the trimmed middle section, filling
// per-line keep masks for the matched lines. When the edit distance exceeds
// `kEditCap` the function leaves the masks empty, which downstream turns into
// a plain full-rewrite hunk: still a valid edit script, just not minimal.
constexpr int kEditCap = 1000;

void myers_masks(const std::vector<std::string>& a, const std::vector<std::string>& b,
                 std::vector<bool>& keep_a, std::vector<bool>& keep_b) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    keep_a.assign(a.size(), false);
    keep_b.assign(b.size(), false);
    if (n == 0 || m == 0) {
        return;
    }

    const int cap = std::min(n + m, kEditCap);
    const int offset = cap;
    std::vector<int> v(static_cast<size_t>(2 * cap + 1), 0);
    // trace[d] holds V restricted to k in [-(d-1), d-1] as it stood before
    // iteration d; slices keep memory quadratic in the edit distance only.
    std::vector<std::vector<int>> trace;

    int found_d = -1;
    for (int d = 0; d <= cap && found_d < 0; ++d) {
        if (d > 0) {
            trace.emplace_back(v.begin() + (offset - (d - 1)), v.begin() + (offset + (d - 1)) + 1);
        } else {
            trace.emplace_back();
        }
        for (int k = -d; k <= d; k += 2) {
            int x;
            if (k == -d || (k != d && v[static_cast<size_t>(offset + k - 1)] <
                                          v[static_cast<size_t>(offset + k + 1)])) {
                x = v[static_cast<size_t>(offset + k + 1)];
            } else {
                x = v[static_cast<size_t>(offset + k - 1)] + 1;
            }
            int y = x - k;
            while (x < n && y < m && a[static_cast<size_t>(x)] == b[static_cast<size_t>(y)]) {
                ++x;
                ++y;
            }
            v[static_cast<size_t>(offset + k)] = x;
            if (x >= n && y >= m) {
                found_d = d;
                break;
            }
        }
    }
    if (found_d < 0) {
        return;
    }

    int x = n;
    int y = m;
    for (int d = found_d; d > 0; --d) {
        const auto& slice = trace[static_cast<size_t>(d)];
        auto at = [&](int k) { return slice[static_cast<size_t>(k + d - 1)]; };
        int k = x - y;
        int prev_k;
        if (k == -d || (k != d && at(k - 1) < at(k + 1))) {
            prev_k = k + 1;
        } else {
            prev_k = k - 1;
        }
        int prev_x = at(prev_k);
        int prev_y = prev_x - prev_k;
        while (x > prev_x && y > prev_y) {
            keep_a[static_cast<size_t>(x - 1)] = true;
            keep_b[static_cast<size_t>(y - 1)] = true;
            --x;
            --y;
        }
        x = prev_x;
        y = prev_y;
    }
    while (x > 0 && y > 0) {
        keep_a[static_cast<size_t>(x - 1)] = true;
        keep_b[static_cast<size_t>(y - 1)] = true;
        --x;
        --y;
    }
}

}  // namespace

std::vector<Hunk> diff_lines(const std::vector<std::string>& old_lines,
                             const std::vector<std::string>& new_lines) {
    const size_t n = old_lines.size();
    const size_t m = new_lines.size();

    size_t prefix = 0;
    while (prefix < n && prefix < m && old_lines[prefix] == new_lines[prefix]) {
        ++prefix;
    }
    size_t suffix = 0;
    while (suffix < n - prefix && suffix < m - prefix &&
           old_lines[n - 1 - suffix] == new_lines[m - 1 - suffix]) {
        ++suffix;
    }

    std::vector<std::string> mid_a(old_lines.begin() + static_cast<long>(prefix),
                                   old_lines.end() - static_cast<long>(suffix));
    std::vector<std::string> mid_b(new_lines.begin() + static_cast<long>(prefix),
                                   new_lines.end() - static_cast<long>(suffix));

    std::vector<bool> keep_a;
    std::vector<bool> keep_b;
    myers_masks(mid_a, mid_b, keep_a, keep_b);

    std::vector<Hunk> hunks;
    size_t i = 0;
    size_t j = 0;
    while (i < mid_a.size() || j < mid_b.size()) {
        if (i < mid_a.size() && j < mid_b.size() && keep_a[i] && keep_b[j]) {
            ++i;
            ++j;
            continue;
        }
        Hunk hunk;
        while (i < mid_a.size() && !keep_a[i]) {
            int line = static_cast<int>(prefix + i) + 1;
            hunk.removed.emplace_back(line, mid_a[i]);
            ++i;
        }
        while (j < mid_b.size() && !keep_b[j]) {
            int line = static_cast<int>(prefix + j) + 1;
            hunk.added.emplace_back(line, mid_b[j]);
            ++j;
        }
        hunk.old_lines = static_cast<int>(hunk.removed.size());
        hunk.new_lines = static_cast<int>(hunk.added.size());
        hunk.old_start = hunk.removed.empty() ? static_cast<int>(prefix + i) : hunk.removed.front().first;
        hunk.new_start = hunk.added.empty() ? static_cast<int>(prefix + j) : hunk.added.front().first;
        hunks.push_back(std::move(hunk));
    }
    return hunks;
}

std::vector<std::string> apply_hunks(const std::vector<std::string>& old_lines,
                                     const std::vector<Hunk>& hunks) {
    // Line numbers are absolute, so the new image can be rebuilt by dropping
    // removed old lines and slotting added lines at their new positions.
    std::vector<bool> removed(old_lines.size() + 1, false);
    std::vector<std::pair<int, const std::string*>> adds;
    for (const auto& hunk : hunks) {
        for (const auto& [line, text] : hunk.removed) {
            if (line < 1 || static_cast<size_t>(line) > old_lines.size()) {
                throw std::out_of_range("apply_hunks: removed line out of range");
            }
            removed[static_cast<size_t>(line)] = true;
        }
        for (const auto& [line, text] : hunk.added) {
            adds.emplace_back(line, &text);
        }
    }
    std::sort(adds.begin(), adds.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    std::vector<std::string> result;
    size_t next_add = 0;
    for (size_t i = 1; i <= old_lines.size() + 1; ++i) {
        while (next_add < adds.size() &&
               adds[next_add].first == static_cast<int>(result.size()) + 1) {
            result.push_back(*adds[next_add].second);
            ++next_add;
        }
        if (i <= old_lines.size() && !removed[i]) {
            result.push_back(old_lines[i - 1]);
        }
    }
    if (next_add != adds.size()) {
        throw std::out_of_range("apply_hunks: added line positions do not fit the image");
    }
    return result;
}

}  // namespace archslicer
