#include "archslicer/vcs.hpp"

#include <algorithm>

#include "archslicer/lexical.hpp"
#include "archslicer/subprocess.hpp"

namespace archslicer {

namespace {

std::vector<std::string> split_nul(const std::string& text) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (start < text.size()) {
        auto pos = text.find('\0', start);
        if (pos == std::string::npos) {
            parts.emplace_back(text.substr(start));
            break;
        }
        parts.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::vector<Hunk> whole_image_hunks(const std::optional<std::string>& pre,
                                    const std::optional<std::string>& post) {
    std::vector<std::string> old_lines = pre ? split_lines(*pre) : std::vector<std::string>{};
    std::vector<std::string> new_lines = post ? split_lines(*post) : std::vector<std::string>{};
    return diff_lines(old_lines, new_lines);
}

}  // namespace

GitRepo::GitRepo(std::string repo_path) : repo_path_(std::move(repo_path)) {
    auto probe = run_command({"git", "-C", repo_path_, "rev-parse", "--git-dir"});
    if (probe.exit_code != 0) {
        throw GitError("not a readable git repository: " + repo_path_);
    }
}

std::string GitRepo::run(const std::vector<std::string>& args, bool allow_failure) const {
    std::vector<std::string> argv = {"git", "-C", repo_path_};
    argv.insert(argv.end(), args.begin(), args.end());
    auto result = run_command(argv);
    if (result.exit_code != 0 && !allow_failure) {
        throw GitError("git " + join(args, " ") + " failed in " + repo_path_ + ": " + result.error);
    }
    return result.exit_code == 0 ? result.output : std::string();
}

std::vector<std::string> GitRepo::rev_list(const WalkOptions& options) const {
    std::vector<std::string> args = {"rev-list", "--topo-order", "--reverse"};
    if (options.since) {
        args.push_back("--since=" + *options.since);
    }
    if (options.until) {
        args.push_back("--until=" + *options.until);
    }
    args.push_back(options.range.value_or("HEAD"));

    std::vector<std::string> argv = {"git", "-C", repo_path_};
    argv.insert(argv.end(), args.begin(), args.end());
    auto result = run_command(argv);
    if (result.exit_code != 0) {
        throw GitError("cannot resolve revision range '" + options.range.value_or("HEAD") +
                       "' in " + repo_path_ + ": " + trim(result.error));
    }

    std::vector<std::string> commits;
    for (auto& line : split_lines(result.output)) {
        if (!line.empty()) {
            commits.push_back(std::move(line));
        }
    }
    return commits;
}

std::string GitRepo::first_parent(const std::string& commit_id) const {
    auto out = run({"rev-list", "--parents", "-n", "1", commit_id});
    auto lines = split_lines(out);
    if (lines.empty()) {
        throw GitError("unknown revision: " + commit_id);
    }
    auto fields = split(trim(lines[0]), ' ');
    return fields.size() >= 2 ? fields[1] : std::string();
}

std::vector<std::string> GitRepo::snapshot_listing(const std::string& commit_id) const {
    auto result = run_command({"git", "-C", repo_path_, "ls-tree", "-r", "-z", "--name-only", commit_id});
    if (result.exit_code != 0) {
        throw GitError("unknown revision: " + commit_id + " in " + repo_path_);
    }
    auto paths = split_nul(result.output);
    std::sort(paths.begin(), paths.end());
    return paths;
}

std::optional<std::string> GitRepo::read_file(const std::string& commit_id,
                                              const std::string& path) const {
    auto result = run_command({"git", "-C", repo_path_, "show", commit_id + ":" + path});
    if (result.exit_code != 0) {
        return std::nullopt;
    }
    return result.output;
}

CommitDelta GitRepo::commit_delta(const std::string& commit_id) const {
    CommitDelta delta;
    delta.commit_id = commit_id;
    delta.parent_id = first_parent(commit_id);

    auto meta = run({"show", "-s", "--format=%ct%n%B", commit_id});
    auto nl = meta.find('\n');
    if (nl != std::string::npos) {
        delta.timestamp = std::strtoll(meta.substr(0, nl).c_str(), nullptr, 10);
        std::string body = meta.substr(nl + 1);
        while (!body.empty() && body.back() == '\n') {
            body.pop_back();
        }
        delta.message = body;
    }

    std::vector<std::string> args = {"diff-tree", "-r", "-M", "-z", "--no-color", "--raw"};
    if (delta.parent_id.empty()) {
        args.push_back("--root");
        args.push_back(commit_id);
    } else {
        args.push_back(delta.parent_id);
        args.push_back(commit_id);
    }
    auto raw = run(args);
    auto fields = split_nul(raw);

    for (size_t i = 0; i < fields.size();) {
        const std::string& header = fields[i];
        if (header.empty() || header[0] != ':') {
            ++i;  // --root prints the commit id as a leading record
            continue;
        }
        auto cols = split(header.substr(1), ' ');
        if (cols.size() < 5 || i + 1 >= fields.size()) {
            ++i;
            continue;
        }
        char status = cols[4].empty() ? '?' : cols[4][0];
        std::string path_a = fields[i + 1];
        std::string path_b;
        if (status == 'R' || status == 'C') {
            if (i + 2 >= fields.size()) {
                break;
            }
            path_b = fields[i + 2];
            i += 3;
        } else {
            i += 2;
        }

        FileDelta file;
        switch (status) {
            case 'A':
            case 'C':
                file.change_kind = ChangeKind::added;
                file.path = status == 'C' ? path_b : path_a;
                break;
            case 'D':
                file.change_kind = ChangeKind::deleted;
                file.path = path_a;
                break;
            case 'R':
                file.change_kind = ChangeKind::renamed;
                file.path = path_b;
                file.old_path = path_a;
                break;
            default:
                file.change_kind = ChangeKind::modified;
                file.path = path_a;
                break;
        }

        // Renames across the source allow-list degrade to plain add/delete.
        if (file.change_kind == ChangeKind::renamed) {
            bool old_src = is_source_file(*file.old_path);
            bool new_src = is_source_file(file.path);
            if (old_src && !new_src) {
                file.change_kind = ChangeKind::deleted;
                file.path = *file.old_path;
                file.old_path.reset();
            } else if (!old_src && new_src) {
                file.change_kind = ChangeKind::added;
                file.old_path.reset();
            } else if (!old_src && !new_src) {
                continue;
            }
        } else if (!is_source_file(file.path)) {
            continue;
        }

        const std::string& pre_path = file.old_path ? *file.old_path : file.path;
        if (file.change_kind != ChangeKind::added && !delta.parent_id.empty()) {
            file.pre_image = read_file(delta.parent_id, pre_path);
        }
        if (file.change_kind != ChangeKind::deleted) {
            file.post_image = read_file(commit_id, file.path);
        }
        file.hunks = whole_image_hunks(file.pre_image, file.post_image);
        delta.files.push_back(std::move(file));
    }
    return delta;
}

std::vector<CommitDelta> walk_commits(const std::string& repo_path, const WalkOptions& options) {
    GitRepo repo(repo_path);
    std::vector<CommitDelta> deltas;
    for (const auto& commit : repo.rev_list(options)) {
        deltas.push_back(repo.commit_delta(commit));
    }
    return deltas;
}

bool is_structural_candidate(const CommitDelta& delta) {
    for (const auto& file : delta.files) {
        if (is_module_descriptor_path(file.path) ||
            (file.old_path && is_module_descriptor_path(*file.old_path))) {
            return true;
        }
        if (file.change_kind != ChangeKind::modified) {
            return true;
        }
        Language lang = language_of(file.path);
        for (const auto& hunk : file.hunks) {
            for (const auto& [line, text] : hunk.removed) {
                if (touches_structure(text, lang)) {
                    return true;
                }
            }
            for (const auto& [line, text] : hunk.added) {
                if (touches_structure(text, lang)) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::vector<std::string> load_snapshot_listing(const std::string& repo_path,
                                               const std::string& commit_id) {
    GitRepo repo(repo_path);
    return repo.snapshot_listing(commit_id);
}

}  // namespace archslicer
