#ifndef ARCHSLICER_COMMON_HPP
#define ARCHSLICER_COMMON_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace archslicer {

// Non-fatal findings collected while processing a commit. Operations that can
// emit them take an optional sink; a null sink drops the message.
using Diagnostics = std::vector<std::string>;

inline void diag(Diagnostics* sink, std::string message) {
    if (sink != nullptr) {
        sink->push_back(std::move(message));
    }
}

enum class Language { java, kotlin };

inline bool ends_with(std::string_view text, std::string_view suffix) {
    return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

inline bool is_java_file(std::string_view path) {
    return ends_with(path, ".java");
}

inline bool is_kotlin_file(std::string_view path) {
    return ends_with(path, ".kt");
}

inline bool is_source_file(std::string_view path) {
    return is_java_file(path) || is_kotlin_file(path);
}

inline bool is_module_descriptor_path(std::string_view path) {
    return path == "module-info.java" || ends_with(path, "/module-info.java");
}

inline Language language_of(std::string_view path) {
    return is_kotlin_file(path) ? Language::kotlin : Language::java;
}

// Last path segment ("a/b/C.java" -> "C.java").
std::string path_basename(std::string_view path);

// Directory part without trailing slash; empty for a bare filename.
std::string path_dirname(std::string_view path);

// File stem ("a/b/C.java" -> "C").
std::string path_stem(std::string_view path);

std::vector<std::string> split(std::string_view text, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::vector<std::string> split_lines(std::string_view text);

std::string trim(std::string_view text);

}  // namespace archslicer

#endif
