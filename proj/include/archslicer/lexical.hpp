#ifndef ARCHSLICER_LEXICAL_HPP
#define ARCHSLICER_LEXICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "archslicer/common.hpp"

namespace archslicer {

enum class ImportKind { plain, wildcard, static_member, inner_class };

struct ImportRecord {
    std::string raw;
    ImportKind kind = ImportKind::plain;
    std::vector<std::string> segments;
    std::string file;
    int line = 0;

    // Dotted path of the segments ("a.b.C", "a.b.*").
    std::string qualified() const { return join(segments, "."); }
    // Dotted path without the terminal segment.
    std::string package_path() const;
    const std::string& terminal() const { return segments.back(); }
};

enum class DirectiveOp { Requires, RequiresTransitive, Exports, Opens, Provides, Uses };

struct Directive {
    DirectiveOp op = DirectiveOp::Requires;
    std::string target;
    std::vector<std::string> qualifier;  // "to"/"with" clause
};

struct ModuleDescriptor {
    std::string module_name;
    bool is_open = false;
    std::vector<Directive> directives;
};

struct MethodSpan {
    std::string name;
    int start_line = 0;
    int end_line = 0;
    std::string signature_text;
};

// Replaces // and /*..*/ comments with spaces, preserving every line break so
// downstream line numbers stay valid. String and char literals are protected.
std::string strip_comments(const std::string& source, Diagnostics* diags = nullptr);

std::vector<ImportRecord> extract_imports(const std::string& source, Language language,
                                          const std::string& file = {},
                                          Diagnostics* diags = nullptr);

std::optional<ModuleDescriptor> parse_module_descriptor(const std::string& source,
                                                        Diagnostics* diags = nullptr);

std::optional<std::string> extract_package(const std::string& source,
                                           Diagnostics* diags = nullptr);

std::vector<MethodSpan> extract_methods(const std::string& source, Language language,
                                        Diagnostics* diags = nullptr);

// Top-level type names declared in a Kotlin file (class/interface/object/enum).
std::vector<std::string> extract_kotlin_type_names(const std::string& source);

// True when the line looks like a type or method signature declaration.
bool is_signature_line(const std::string& line, Language language);

// True when the line is a package, import, or signature line; drives the
// structural-candidate commit filter.
bool touches_structure(const std::string& line, Language language);

const char* to_string(DirectiveOp op);
const char* to_string(ImportKind kind);

}  // namespace archslicer

#endif
