#ifndef ARCHSLICER_TEXT_DIFF_HPP
#define ARCHSLICER_TEXT_DIFF_HPP

#include <string>
#include <utility>
#include <vector>

namespace archslicer {

// One contiguous run of line changes. Line numbers are 1-based: removed lines
// refer to the old image, added lines to the new image.
struct Hunk {
    int old_start = 0;  // first removed line, or the slot after which lines were inserted
    int old_lines = 0;
    int new_start = 0;
    int new_lines = 0;
    std::vector<std::pair<int, std::string>> removed;
    std::vector<std::pair<int, std::string>> added;
};

// Myers line diff grouped into zero-context hunks.
std::vector<Hunk> diff_lines(const std::vector<std::string>& old_lines,
                             const std::vector<std::string>& new_lines);

// Replays hunks over the old image; inverse of diff_lines.
std::vector<std::string> apply_hunks(const std::vector<std::string>& old_lines,
                                     const std::vector<Hunk>& hunks);

}  // namespace archslicer

#endif
