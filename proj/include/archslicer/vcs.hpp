#ifndef ARCHSLICER_VCS_HPP
#define ARCHSLICER_VCS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "archslicer/common.hpp"
#include "archslicer/text_diff.hpp"

namespace archslicer {

class GitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ChangeKind { added, deleted, modified, renamed };

struct FileDelta {
    std::string path;
    ChangeKind change_kind = ChangeKind::modified;
    std::optional<std::string> old_path;    // present iff renamed
    std::vector<Hunk> hunks;
    std::optional<std::string> pre_image;   // absent iff added
    std::optional<std::string> post_image;  // absent iff deleted
};

// One commit's source-relevant changes against its first parent. Only .java
// and .kt deltas are materialized; other paths never carry the metric.
struct CommitDelta {
    std::string commit_id;
    std::string parent_id;  // empty for a root commit (diffed against the empty tree)
    std::int64_t timestamp = 0;
    std::string message;
    std::vector<FileDelta> files;
};

struct WalkOptions {
    std::optional<std::string> range;  // git revision range; absent -> full history of HEAD
    std::optional<std::string> since;
    std::optional<std::string> until;
};

// Thin subprocess wrapper around one repository's git object store.
class GitRepo {
public:
    explicit GitRepo(std::string repo_path);

    const std::string& path() const { return repo_path_; }

    // Commit ids oldest-first in topological order; merge commits included.
    std::vector<std::string> rev_list(const WalkOptions& options) const;

    std::string first_parent(const std::string& commit_id) const;

    // Complete sorted file listing of the tree at the revision.
    std::vector<std::string> snapshot_listing(const std::string& commit_id) const;

    // Blob content at revision; nullopt when the path does not exist there.
    std::optional<std::string> read_file(const std::string& commit_id, const std::string& path) const;

    CommitDelta commit_delta(const std::string& commit_id) const;

private:
    std::string run(const std::vector<std::string>& args, bool allow_failure = false) const;

    std::string repo_path_;
};

std::vector<CommitDelta> walk_commits(const std::string& repo_path, const WalkOptions& options);

// Conservative filter for commits worth running the metric on: descriptor
// edits, added/deleted/renamed source files, or modified files whose hunks
// touch a package, import, or type/method signature line.
bool is_structural_candidate(const CommitDelta& delta);

std::vector<std::string> load_snapshot_listing(const std::string& repo_path,
                                               const std::string& commit_id);

}  // namespace archslicer

#endif
